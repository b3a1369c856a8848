#pragma once

#include <complex>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinchain {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Gate2 = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};

/// Rejected input: malformed chain specs, mismatched dimensions, bad windows.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical certificate that the computation relies on did not hold.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LeakageTooLarge : public NumericalError {
 public:
  LeakageTooLarge(double leakage, double threshold)
      : NumericalError("subspace is not invariant: leakage " + short_number(leakage) + " exceeds " +
                       short_number(threshold)),
        leakage_(leakage) {}

  double leakage() const { return leakage_; }

 private:
  static std::string short_number(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
  }

  double leakage_;
};

}  // namespace spinchain
