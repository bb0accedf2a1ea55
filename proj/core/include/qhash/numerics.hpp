/*
 * Copyright (c) Contributors to the qhash-lab project.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef QHASH_NUMERICS_HPP
#define QHASH_NUMERICS_HPP

#include <vector>

#include "qhash/common.hpp"

namespace qhash {

/// True if ||a - a^dagger||_max is within the given tolerance.
bool is_hermitian(const Matrix& a, double tolerance = tol::construction);

/// (a + a^dagger)/2. Applied before every eigensolve to kill drift.
Matrix hermitize(const Matrix& a);

/// Kronecker product. Dimensions multiply.
Matrix tensor_product(const Matrix& a, const Matrix& b);
Vector tensor_product(const Vector& a, const Vector& b);

/// Partial trace of an operator on a tensor product of subsystems with the
/// given dimensions, keeping the subsystems listed in `keep` (ascending
/// order in the result). Trace is preserved.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep);

struct EigenPair {
  double value = 0.0;
  Vector vector;
};

/// Largest eigenvalue and a corresponding unit eigenvector of a Hermitian
/// matrix. The residual ||m v - lambda v|| is checked against
/// tol::assertion; a violation raises NumericalError rather than trusting
/// the backend routine.
EigenPair max_eigenpair(const Matrix& m);

/// Full ascending spectrum of a Hermitian matrix (residual-checked on the
/// extremes).
RealVector hermitian_spectrum(const Matrix& m);

/// Schatten p-norm (singular value p-norm) for p >= 1; p = infinity gives
/// the operator norm. p = 1 is the trace norm.
double schatten_norm(const Matrix& m, double p);

/// Trace norm ||m||_1, specialised for speed when m is Hermitian.
double trace_norm(const Matrix& m);

/// The d^2 x d^2 operator exchanging the two tensor factors of dimension d.
Matrix swap_operator(int d);

struct CotlarSteinAudit {
  double lambda_max = 0.0;  ///< largest eigenvalue of the projector sum
  double delta = 0.0;       ///< max pairwise overlap magnitude
  double bound = 0.0;       ///< 1 + (n-1) * delta
  bool holds = false;
};

/// For unit vectors psi_i, checks lambda_max(sum_i |psi_i><psi_i|) against
/// the near-orthogonality bound 1 + (n-1) * max_{i != j} |<psi_i|psi_j>|.
CotlarSteinAudit cotlar_stein_audit(const std::vector<Vector>& vectors);

}  // namespace qhash

#endif  // QHASH_NUMERICS_HPP
