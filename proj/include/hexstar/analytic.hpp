// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include <Eigen/Core>

#include "hexstar/hamiltonian.hpp"
#include "hexstar/hilbert.hpp"

namespace hexstar {

// Closed form of the two-dimensional (A2g, M = 5) block, in the basis
// e_outer = 6^{-1/2} sum of the six single-down outer configurations and
// e_inner likewise for the inner ring.

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

/// Single-down configuration for site k.
constexpr Config single_down(int site) { return Config{1} << site; }

RealState e_outer();
RealState e_inner();

struct M5Block {
  double alpha = 6.0;
  double jz_over_j = 1.0;
  /// Units of J, basis (e_outer, e_inner).
  Eigen::Matrix2d matrix;
  /// |E_+ - E_-| from the kappa expression.
  double delta_e = 0.0;
  /// True when e_outer carries the larger weight in the lower eigenvector.
  bool outer_dominates_lower = false;
};

M5Block m5_block(double alpha, double jz_over_j);

/// Zeroth- and first-order coefficient matrices: H/J = h0 + (Jz/J) h1.
std::pair<Eigen::Matrix2d, Eigen::Matrix2d> m5_coefficients(double alpha);

/// sqrt(kappa0 + kappa1 * Jz/J * (Jz/J - 2))
double m5_delta_e_kappa(double alpha, double jz_over_j);

/// Same closed form in exact arithmetic; alpha must be an even integer.
Matrix2<Rational> exact_m5_block(int alpha, const Rational& jz_over_j);

/// (kappa0, kappa1) as exact rationals for even alpha.
std::pair<Rational, Rational> exact_m5_kappa(int alpha);

/// <e_a|H|e_b> for a sector-5 matrix (any scalar type). The 1/6 factor keeps
/// the result exact for rational input.
template <typename Scalar>
Matrix2<Scalar> restrict_to_m5_block(const Matrix<Scalar>& sector5) {
  const auto& basis = sector_basis(5);
  Matrix2<Scalar> out = Matrix2<Scalar>::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Scalar sum(0);
      for (int i = 0; i < kRingSites; ++i) {
        for (int j = 0; j < kRingSites; ++j) {
          sum += sector5(basis.index(single_down(a * kRingSites + i)),
                         basis.index(single_down(b * kRingSites + j)));
        }
      }
      out(a, b) = sum / Scalar(6);
    }
  }
  return out;
}

/// Entrywise equality; Eigen's operator== does not compose with
/// multiprecision scalars.
template <typename Scalar>
bool exactly_equal(const Matrix2<Scalar>& a, const Matrix2<Scalar>& b) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// (|S=6, M=5>, |A2g, S=5, M=5>) = ((e_o + e_i)/sqrt2, (-e_o + e_i)/sqrt2).
std::pair<RealState, RealState> heisenberg_m5_eigenstates();

enum class M5Initial { Outer, Symmetric };

/// Per-configuration probabilities of an outer and of an inner single-down
/// outcome, from the 2x2 closed form.
struct M5Probabilities {
  Eigen::VectorXd times;
  Eigen::VectorXd outer;
  Eigen::VectorXd inner;
};

M5Probabilities m5_probabilities(M5Initial initial, double alpha, double jz_over_j,
                                 const Eigen::VectorXd& times);

}  // namespace hexstar
