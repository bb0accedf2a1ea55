/*
 * Copyright (c) Contributors to the qhash-lab project.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef QHASH_RANDOM_HPP
#define QHASH_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "qhash/common.hpp"

namespace qhash {

/// Counter-based 64-bit mixer (splitmix64). Used to derive independent
/// per-point seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

/// Deterministic random source. All draws are built from raw 64-bit output
/// of a fixed algorithm, so streams are reproducible byte-for-byte across
/// standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = splitmix64_state(state_);
    return mix(state_);
  }

  /// Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound).
  std::uint64_t uniform_int(std::uint64_t bound) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = two_pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex gaussian_complex() { return Complex(gaussian(), gaussian()); }

  /// Haar-random unit vector of the given dimension.
  Vector unit_vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gaussian_complex();
    v.normalize();
    return v;
  }

  /// Random density matrix from the Hilbert-Schmidt ensemble, trace one.
  Matrix density_matrix(int dim) {
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) g(r, c) = gaussian_complex();
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
  }

  /// Probability vector drawn uniformly from the simplex.
  std::vector<double> simplex(int count) {
    std::vector<double> w(count);
    double total = 0.0;
    for (auto& x : w) {
      x = -std::log(1.0 - uniform());
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

 private:
  static std::uint64_t splitmix64_state(std::uint64_t s) {
    return s + 0x9e3779b97f4a7c15ULL;
  }
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qhash

#endif  // QHASH_RANDOM_HPP
