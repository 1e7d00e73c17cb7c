// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "hexstar/hilbert.hpp"
#include "hexstar/lattice.hpp"

namespace hexstar {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using PairTable = Eigen::Matrix<Scalar, kSites, kSites>;

using RationalMatrix = Matrix<Rational>;

/// Power-law XXZ model in units of J.
struct ModelParams {
  double alpha = 6.0;
  double jz_over_j = 1.0;

  /// Throws UsageError for non-positive or non-finite alpha, non-finite Jz/J.
  void validate() const;
  bool is_heisenberg() const { return jz_over_j == 1.0; }
  /// alpha when it is an even positive integer (exact rational couplings exist).
  std::optional<int> even_alpha() const;
};

/// (a / r_ij)^alpha = distance_sq(i, j)^(-alpha/2). Throws UsageError if i == j.
double coupling(const Geometry& geometry, int i, int j, double alpha);

/// Exact (a / r_ij)^alpha for even integer alpha.
Rational exact_coupling(const Geometry& geometry, int i, int j, int alpha);

PairTable<double> coupling_table(const Geometry& geometry, double alpha);
PairTable<Rational> exact_coupling_table(const Geometry& geometry, int alpha);

/// Sector matrix of  constant + sum_{i<j} [ xy_ij (sx_i sx_j + sy_i sy_j) + zz_ij sz_i sz_j ]
/// in Pauli units: the exchange term contributes 2 xy_ij between configurations
/// that differ by swapping an up/down pair on (i, j).
template <typename Scalar>
Matrix<Scalar> assemble_pair_operator(const SectorBasis& basis, const PairTable<Scalar>& xy,
                                      const PairTable<Scalar>& zz,
                                      const Scalar& constant = Scalar(0)) {
  const int d = basis.size();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const Config f = basis[a];
    Scalar diagonal = constant;
    for (int i = 0; i < kSites; ++i) {
      const bool down_i = (f >> i) & 1u;
      for (int j = i + 1; j < kSites; ++j) {
        const bool down_j = (f >> j) & 1u;
        if (down_i == down_j) {
          diagonal += zz(i, j);
        } else {
          diagonal -= zz(i, j);
          const Config swapped = f ^ (Config{1} << i) ^ (Config{1} << j);
          out(basis.index(swapped), a) += Scalar(2) * xy(i, j);
        }
      }
    }
    out(a, a) += diagonal;
  }
  return out;
}

/// The Hamiltonian of one spin-projection sector, in units of J.
struct SectorHamiltonian {
  int M = 0;
  Eigen::MatrixXd matrix;
  /// Same matrix in exact arithmetic; present when alpha is an even integer
  /// and exact assembly was requested.
  std::optional<RationalMatrix> exact;
};

enum class ExactMode { Auto, Never, Always };

/// Throws UsageError for ExactMode::Always with a non-even alpha.
SectorHamiltonian build_sector_hamiltonian(int M, const ModelParams& params,
                                           ExactMode mode = ExactMode::Never);

/// Total spin squared S^2 (hbar = 1) restricted to sector M.
Eigen::MatrixXd heisenberg_casimir(int M);

}  // namespace hexstar
