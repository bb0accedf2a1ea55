/*
 * Copyright (c) Contributors to the qhash-lab project.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef QHASH_STATES_HPP
#define QHASH_STATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qhash/common.hpp"
#include "qhash/numerics.hpp"

namespace qhash {

/// Unit-norm pure state. Norm is validated at construction.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

  Complex inner(const StateVector& other) const {
    return amplitudes_.dot(other.amplitudes_);
  }

 private:
  Vector amplitudes_;
};

/// Positive semidefinite operator with trace at most one. Subnormalized
/// states are allowed; `pure` and `maximally_mixed` build the common cases.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  double trace() const { return entries_.trace().real(); }

 private:
  Matrix entries_;
};

/// Classical probability distribution over an explicit label alphabet.
class Distribution {
 public:
  Distribution(std::vector<std::string> labels, std::vector<double> weights);

  static Distribution uniform(std::vector<std::string> labels);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int i) const { return weights_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

/// Classical-quantum state: classical label x paired with a subnormalized
/// quantum block rho_x; the block traces sum to one.
class CqState {
 public:
  CqState(std::vector<std::string> labels, std::vector<Matrix> blocks);

  /// Ensemble of pure states with the given weights. Remembers the pure
  /// representation, which enables exact Gram-matrix computations.
  static CqState pure_ensemble(std::vector<std::string> labels,
                               std::vector<double> weights,
                               std::vector<StateVector> states);

  int size() const { return static_cast<int>(labels_.size()); }
  int dim() const { return static_cast<int>(blocks_.front().rows()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const Matrix& block(int i) const { return blocks_[i]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  double weight(int i) const { return blocks_[i].trace().real(); }

  /// Marginal on the quantum side: rho_E = sum_x rho_x.
  Matrix side_info() const;

  /// Largest classical weight, max_x Tr[rho_x].
  double max_weight() const;

  bool is_pure_ensemble() const { return pure_states_.has_value(); }
  const std::vector<StateVector>& pure_states() const {
    return *pure_states_;
  }

  /// New cq state with every block pushed through the channel
  /// rho -> sum_k K_k rho K_k^dagger.
  CqState apply_channel(const std::vector<Matrix>& kraus) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Matrix> blocks_;
  std::optional<std::vector<StateVector>> pure_states_;
};

/// Nonnegative joint probability table p(x, y) over explicit alphabets.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> x_labels,
                    std::vector<std::string> y_labels, RealMatrix table);

  /// Table with numeric labels "0", "1", ... on both axes.
  static JointDistribution from_table(const RealMatrix& table);

  int x_size() const { return static_cast<int>(x_labels_.size()); }
  int y_size() const { return static_cast<int>(y_labels_.size()); }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }
  const RealMatrix& table() const { return table_; }
  double prob(int x, int y) const { return table_(x, y); }

  std::vector<double> x_marginal() const;
  std::vector<double> y_marginal() const;

 private:
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  RealMatrix table_;
};

/// Half the l1 distance between two distributions over the same alphabet;
/// equals max_S p(S) - q(S).
double statistical_distance(const Distribution& p, const Distribution& q);

/// Unhalved trace norm ||a - b||_1. This is the convention used by the
/// extractor definitions; the halved variant is exposed separately.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance_halved(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qhash

#endif  // QHASH_STATES_HPP
