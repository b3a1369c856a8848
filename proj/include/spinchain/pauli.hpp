#pragma once

#include <Eigen/Dense>

#include "spinchain/types.hpp"

namespace spinchain::pauli {

// Single-spin conventions.
//
// Basis order is |0> then |1>; |1> is the excited (spin-up) state and the
// raising operator takes |0> to |1>:
//
//   sigma_plus = [[0,0],[1,0]],  sigma_minus = [[0,1],[0,0]]
//
// sigma_y and sigma_z are fixed so that sigma_pm = (sigma_x +- i sigma_y)/2
// holds together with the Pauli algebra sigma_x sigma_y = i sigma_z. That
// forces sigma_z|1> = +|1> and sigma_z|0> = -|0>.

inline constexpr int kGround = 0;
inline constexpr int kExcited = 1;

inline Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

inline Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Eigen::Matrix2cd sigma_y() {
  Eigen::Matrix2cd m;
  m << 0.0, kI, -kI, 0.0;
  return m;
}

inline Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd m;
  m << -1.0, 0.0, 0.0, 1.0;
  return m;
}

inline Eigen::Matrix2cd sigma_plus() { return 0.5 * (sigma_x() + kI * sigma_y()); }

inline Eigen::Matrix2cd sigma_minus() { return 0.5 * (sigma_x() - kI * sigma_y()); }

}  // namespace spinchain::pauli
