// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/hamiltonian.hpp"

#include <cmath>

namespace hexstar {

void ModelParams::validate() const {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw UsageError("interaction exponent alpha must be positive");
  }
  if (!std::isfinite(jz_over_j)) throw UsageError("Jz/J must be finite");
}

std::optional<int> ModelParams::even_alpha() const {
  if (alpha > 0.0 && alpha <= 1000.0 && alpha == std::floor(alpha) &&
      static_cast<long>(alpha) % 2 == 0) {
    return static_cast<int>(alpha);
  }
  return std::nullopt;
}

double coupling(const Geometry& geometry, int i, int j, double alpha) {
  if (i == j) throw UsageError("coupling requires two distinct sites");
  return std::pow(static_cast<double>(geometry.distance_sq(i, j)), -alpha / 2.0);
}

Rational exact_coupling(const Geometry& geometry, int i, int j, int alpha) {
  if (i == j) throw UsageError("coupling requires two distinct sites");
  if (alpha <= 0 || alpha % 2 != 0) throw UsageError("exact couplings need an even alpha");
  boost::multiprecision::cpp_int denominator =
      boost::multiprecision::pow(boost::multiprecision::cpp_int(geometry.distance_sq(i, j)),
                                 static_cast<unsigned>(alpha / 2));
  return Rational(1) / Rational(denominator);
}

PairTable<double> coupling_table(const Geometry& geometry, double alpha) {
  PairTable<double> table = PairTable<double>::Zero();
  for (int i = 0; i < kSites; ++i) {
    for (int j = 0; j < kSites; ++j) {
      if (i != j) table(i, j) = coupling(geometry, i, j, alpha);
    }
  }
  return table;
}

PairTable<Rational> exact_coupling_table(const Geometry& geometry, int alpha) {
  PairTable<Rational> table;
  for (int i = 0; i < kSites; ++i) {
    for (int j = 0; j < kSites; ++j) {
      table(i, j) = i == j ? Rational(0) : exact_coupling(geometry, i, j, alpha);
    }
  }
  return table;
}

SectorHamiltonian build_sector_hamiltonian(int M, const ModelParams& params, ExactMode mode) {
  params.validate();
  const auto& basis = sector_basis(M);
  static const Geometry geometry = build_geometry();

  SectorHamiltonian h;
  h.M = M;
  const PairTable<double> c = coupling_table(geometry, params.alpha);
  h.matrix = assemble_pair_operator<double>(basis, c, PairTable<double>(params.jz_over_j * c));

  const auto even = params.even_alpha();
  if (mode == ExactMode::Always && !even) {
    throw UsageError("exact assembly requires an even integer alpha");
  }
  if (mode != ExactMode::Never && even) {
    const PairTable<Rational> exact = exact_coupling_table(geometry, *even);
    // Every finite double is a dyadic rational, so this conversion is exact.
    const Rational jz(params.jz_over_j);
    PairTable<Rational> exact_zz = exact;
    for (int i = 0; i < kSites; ++i) {
      for (int j = 0; j < kSites; ++j) exact_zz(i, j) *= jz;
    }
    h.exact = assemble_pair_operator<Rational>(basis, exact, exact_zz);
  }
  return h;
}

Eigen::MatrixXd heisenberg_casimir(int M) {
  // S^2 = 3N/4 + sum_{i<j} (sigma_i . sigma_j) / 2
  PairTable<double> half = PairTable<double>::Constant(0.5);
  half.diagonal().setZero();
  return assemble_pair_operator<double>(sector_basis(M), half, half, 0.75 * kSites);
}

}  // namespace hexstar
