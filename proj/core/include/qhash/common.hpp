/*
 * Copyright (c) Contributors to the qhash-lab project.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef QHASH_COMMON_HPP
#define QHASH_COMMON_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qhash {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Tolerance admitted when validating a value at construction time.
inline constexpr double construction = 1e-10;
/// Tolerance used by assertions and audits.
inline constexpr double assertion = 1e-9;
/// Tolerance for probability tables, which are sums of exact inputs.
inline constexpr double distribution = 1e-12;
}  // namespace tol

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A numerical routine produced a result that fails its own residual or
/// positivity check. Maps to process exit code 4.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A security or consistency bound that must hold mathematically was found
/// violated. Maps to process exit code 3.
class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace qhash

#endif  // QHASH_COMMON_HPP
