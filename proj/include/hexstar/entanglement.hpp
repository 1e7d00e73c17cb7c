// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "hexstar/hamiltonian.hpp"
#include "hexstar/hilbert.hpp"

namespace hexstar {

/// Bit i of `mask` set means site i belongs to part B.
struct Bipartition {
  std::uint32_t mask = 0;

  int size_b() const { return std::popcount(mask); }
  int size_a() const { return kSites - size_b(); }
  Bipartition complement() const { return {~mask & kAllDown}; }
};

inline constexpr double kSchmidtTolerance = 1e-10;

/// Packs the bits of `f` selected by `select` into the low bits, keeping order.
constexpr std::uint32_t gather_bits(Config f, std::uint32_t select) {
  std::uint32_t out = 0;
  int k = 0;
  for (int i = 0; i < kSites; ++i) {
    if ((select >> i) & 1u) {
      out |= ((f >> i) & 1u) << k;
      ++k;
    }
  }
  return out;
}

/// 2^N_A x 2^N_B matrix with entry (a, b) = psi(f) for the configuration f
/// whose A bits read a and B bits read b.
template <typename Scalar>
Matrix<Scalar> coefficient_matrix(const State<Scalar>& state, Bipartition p) {
  const State<Scalar> full = embed(state);
  const std::uint32_t b_mask = p.mask & kAllDown;
  const std::uint32_t a_mask = ~b_mask & kAllDown;
  Matrix<Scalar> c = Matrix<Scalar>::Zero(Eigen::Index{1} << p.size_a(),
                                          Eigen::Index{1} << p.size_b());
  for (Config f = 0; f < static_cast<Config>(kFullDim); ++f) {
    c(gather_bits(f, a_mask), gather_bits(f, b_mask)) = full.amplitudes[f];
  }
  return c;
}

/// Number of singular values above tolerance * sigma_max.
template <typename Scalar>
int schmidt_number(const State<Scalar>& state, Bipartition p,
                   double tolerance = kSchmidtTolerance) {
  const Matrix<Scalar> c = coefficient_matrix(state, p);
  const Eigen::VectorXd sigma = Eigen::BDCSVD<Matrix<Scalar>>(c).singularValues();
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  return static_cast<int>((sigma.array() > tolerance * sigma[0]).count());
}

struct EntanglementScan {
  /// Masks 1 .. 2^11 - 1 (site 11 always in A); one rank per mask.
  std::vector<std::uint32_t> masks;
  std::vector<int> ranks;
  int min_rank = 0;
  std::uint32_t argmin_mask = 0;

  bool entangled() const { return min_rank >= 2; }
};

EntanglementScan scan_entanglement(const ComplexState& state,
                                   double tolerance = kSchmidtTolerance);

}  // namespace hexstar
