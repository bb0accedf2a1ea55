/*
 * Copyright (c) Contributors to the qhash-lab project.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qhash/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qhash {

bool is_hermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

Vector tensor_product(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  require(m.rows() == m.cols(), "partial_trace: matrix must be square");
  Eigen::Index total = 1;
  for (int d : dims) {
    require(d > 0, "partial_trace: dimensions must be positive");
    total *= d;
  }
  require(total == m.rows(), "partial_trace: dimensions do not match matrix");

  const int parts = static_cast<int>(dims.size());
  std::vector<bool> kept(parts, false);
  for (int k : keep) {
    require(k >= 0 && k < parts, "partial_trace: keep index out of range");
    kept[k] = true;
  }

  Eigen::Index keep_dim = 1, trace_dim = 1;
  std::vector<int> keep_idx, trace_idx;
  for (int i = 0; i < parts; ++i) {
    if (kept[i]) {
      keep_dim *= dims[i];
      keep_idx.push_back(i);
    } else {
      trace_dim *= dims[i];
      trace_idx.push_back(i);
    }
  }

  // Strides of each subsystem in the flat row-major multi-index.
  std::vector<Eigen::Index> stride(parts, 1);
  for (int i = parts - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  auto offset_of = [&](const std::vector<int>& subsystems,
                       Eigen::Index flat) {
    Eigen::Index offset = 0;
    for (int i = static_cast<int>(subsystems.size()) - 1; i >= 0; --i) {
      const int s = subsystems[i];
      offset += (flat % dims[s]) * stride[s];
      flat /= dims[s];
    }
    return offset;
  };

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (Eigen::Index r = 0; r < keep_dim; ++r) {
    const Eigen::Index row_base = offset_of(keep_idx, r);
    for (Eigen::Index c = 0; c < keep_dim; ++c) {
      const Eigen::Index col_base = offset_of(keep_idx, c);
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < trace_dim; ++t) {
        const Eigen::Index off = offset_of(trace_idx, t);
        sum += m(row_base + off, col_base + off);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

EigenPair max_eigenpair(const Matrix& m) {
  require(is_hermitian(m), "max_eigenpair: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success)
    throw NumericalError("max_eigenpair: eigensolver failed to converge");
  const Eigen::Index last = m.rows() - 1;
  EigenPair pair;
  pair.value = solver.eigenvalues()(last);
  pair.vector = solver.eigenvectors().col(last);
  const double residual = (m * pair.vector - pair.value * pair.vector).norm();
  const double scale = std::max(1.0, std::abs(pair.value));
  if (residual > tol::assertion * scale)
    throw NumericalError("max_eigenpair: residual check failed");
  return pair;
}

RealVector hermitian_spectrum(const Matrix& m) {
  require(is_hermitian(m), "hermitian_spectrum: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success)
    throw NumericalError("hermitian_spectrum: eigensolver failed to converge");
  const RealVector values = solver.eigenvalues();
  // Residual check on the extreme eigenpairs only.
  for (Eigen::Index idx : {Eigen::Index{0}, m.rows() - 1}) {
    const Vector v = solver.eigenvectors().col(idx);
    const double residual = (m * v - values(idx) * v).norm();
    const double scale = std::max(1.0, std::abs(values(idx)));
    if (residual > tol::assertion * scale)
      throw NumericalError("hermitian_spectrum: residual check failed");
  }
  return values;
}

namespace {

RealVector singular_values(const Matrix& m) {
  if (m.rows() == m.cols() && is_hermitian(m)) {
    RealVector values = hermitian_spectrum(m).cwiseAbs();
    std::sort(values.data(), values.data() + values.size());
    return values;
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  RealVector values = svd.singularValues();
  std::sort(values.data(), values.data() + values.size());
  return values;
}

}  // namespace

double schatten_norm(const Matrix& m, double p) {
  require(p >= 1.0, "schatten_norm: p must be >= 1");
  const RealVector sv = singular_values(m);
  if (std::isinf(p)) return sv(sv.size() - 1);
  if (p == 1.0) return sv.sum();
  double total = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) total += std::pow(sv(i), p);
  return std::pow(total, 1.0 / p);
}

double trace_norm(const Matrix& m) { return schatten_norm(m, 1.0); }

Matrix swap_operator(int d) {
  require(d >= 1, "swap_operator: dimension must be positive");
  Matrix s = Matrix::Zero(static_cast<Eigen::Index>(d) * d,
                          static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

CotlarSteinAudit cotlar_stein_audit(const std::vector<Vector>& vectors) {
  require(!vectors.empty(), "cotlar_stein_audit: empty vector set");
  const Eigen::Index dim = vectors.front().size();
  for (const Vector& v : vectors) {
    require(v.size() == dim, "cotlar_stein_audit: mixed dimensions");
    require(std::abs(v.norm() - 1.0) <= tol::construction,
            "cotlar_stein_audit: vectors must be unit norm");
  }

  const int n = static_cast<int>(vectors.size());
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Vector& v : vectors) sum += v * v.adjoint();

  CotlarSteinAudit audit;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      audit.delta =
          std::max(audit.delta, std::abs(vectors[i].dot(vectors[j])));
  audit.lambda_max = max_eigenpair(sum).value;
  audit.bound = 1.0 + (n - 1) * audit.delta;
  audit.holds = audit.lambda_max <= audit.bound + tol::assertion;
  return audit;
}

}  // namespace qhash
