// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/analytic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hexstar/errors.hpp"

namespace hexstar {
namespace {

// Powers of the distance factors entering the block: p2 = 2^{-a},
// r3 = 3^{-a/2}, r7 = 7^{-a/2}. The formulas are written once over a generic
// scalar so the float and exact paths cannot drift apart.
template <typename Scalar>
struct Powers {
  Scalar p2, r3, r7;
};

template <typename Scalar>
std::pair<Matrix2<Scalar>, Matrix2<Scalar>> coefficients(const Powers<Scalar>& x) {
  const Scalar one(1), p3 = x.r3 * x.r3;
  Matrix2<Scalar> h0, h1;
  h0(0, 0) = Scalar(4) * p3 + Scalar(4) * x.r3 + Scalar(2) * x.p2 * x.r3;
  h0(0, 1) = Scalar(4) * (one + x.p2 + x.r7);
  h0(1, 0) = h0(0, 1);
  h0(1, 1) = Scalar(4) + Scalar(4) * x.r3 + Scalar(2) * x.p2;
  h1(0, 0) = Scalar(14) + Scalar(11) * x.p2 + Scalar(2) * p3 + Scalar(8) * x.r3 +
             x.p2 * x.r3 + Scalar(8) * x.r7;
  h1(1, 1) = Scalar(10) + Scalar(9) * x.p2 + Scalar(6) * p3 + Scalar(8) * x.r3 +
             Scalar(3) * x.p2 * x.r3 + Scalar(8) * x.r7;
  h1(0, 1) = h1(1, 0) = Scalar(0);
  return {h0, h1};
}

template <typename Scalar>
std::pair<Scalar, Scalar> kappa(const Powers<Scalar>& x) {
  const Scalar p3 = x.r3 * x.r3, p7 = x.r7 * x.r7, p9 = p3 * p3;
  const Scalar p4 = x.p2 * x.p2;
  const Scalar k0 = Scalar(80) +
                    Scalar(16) * x.p2 * (Scalar(9) + p3 * x.r3 - p3 - x.r3 + Scalar(8) * x.r7) +
                    Scalar(4) * p4 * (Scalar(17) + p3 - Scalar(2) * x.r3) - Scalar(32) * p3 +
                    Scalar(64) * p7 + Scalar(128) * x.r7 + Scalar(16) * p9;
  // 4^{1-a} 9^{-a} (2^{1+a} + 3^{a/2} - 3^a (1 + 2^{1+a}))^2, rewritten with
  // negative powers: divide the bracket by 2^a 3^a.
  const Scalar bracket = Scalar(2) * p3 + x.p2 * x.r3 - x.p2 - Scalar(2);
  const Scalar k1 = Scalar(4) * bracket * bracket;
  return {k0, k1};
}

Powers<double> float_powers(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw UsageError("alpha must be positive");
  return {std::pow(2.0, -alpha), std::pow(3.0, -alpha / 2), std::pow(7.0, -alpha / 2)};
}

Powers<Rational> exact_powers(int alpha) {
  if (alpha <= 0 || alpha % 2 != 0) throw UsageError("exact closed form needs an even alpha");
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  const auto half = static_cast<unsigned>(alpha / 2);
  return {Rational(1) / Rational(pow(cpp_int(2), static_cast<unsigned>(alpha))),
          Rational(1) / Rational(pow(cpp_int(3), half)),
          Rational(1) / Rational(pow(cpp_int(7), half))};
}

RealState ring_state(int ring) {
  RealState s = basis_state<double>(single_down(ring * kRingSites), 5);
  s.amplitudes.setZero();
  const auto& basis = sector_basis(5);
  for (int k = 0; k < kRingSites; ++k) {
    s.amplitudes[basis.index(single_down(ring * kRingSites + k))] = 1.0 / std::sqrt(6.0);
  }
  return s;
}

}  // namespace

RealState e_outer() { return ring_state(0); }
RealState e_inner() { return ring_state(1); }

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> m5_coefficients(double alpha) {
  return coefficients(float_powers(alpha));
}

double m5_delta_e_kappa(double alpha, double jz_over_j) {
  const auto [k0, k1] = kappa(float_powers(alpha));
  return std::sqrt(k0 + k1 * jz_over_j * (jz_over_j - 2.0));
}

M5Block m5_block(double alpha, double jz_over_j) {
  if (!std::isfinite(jz_over_j)) throw UsageError("Jz/J must be finite");
  const auto [h0, h1] = m5_coefficients(alpha);
  M5Block out;
  out.alpha = alpha;
  out.jz_over_j = jz_over_j;
  out.matrix = h0 + jz_over_j * h1;
  out.delta_e = m5_delta_e_kappa(alpha, jz_over_j);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(out.matrix);
  const Eigen::Vector2d lower = solver.eigenvectors().col(0);
  out.outer_dominates_lower = std::abs(lower[0]) > std::abs(lower[1]);
  return out;
}

Matrix2<Rational> exact_m5_block(int alpha, const Rational& jz_over_j) {
  const auto [h0, h1] = coefficients(exact_powers(alpha));
  Matrix2<Rational> out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out(a, b) = h0(a, b) + jz_over_j * h1(a, b);
  }
  return out;
}

std::pair<Rational, Rational> exact_m5_kappa(int alpha) { return kappa(exact_powers(alpha)); }

std::pair<RealState, RealState> heisenberg_m5_eigenstates() {
  const RealState o = e_outer(), i = e_inner();
  RealState sym = o, anti = o;
  sym.amplitudes = (o.amplitudes + i.amplitudes) / std::numbers::sqrt2;
  anti.amplitudes = (i.amplitudes - o.amplitudes) / std::numbers::sqrt2;
  return {sym, anti};
}

M5Probabilities m5_probabilities(M5Initial initial, double alpha, double jz_over_j,
                                 const Eigen::VectorXd& times) {
  const M5Block block = m5_block(alpha, jz_over_j);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(block.matrix);
  const Eigen::Matrix2d& v = solver.eigenvectors();
  Eigen::Vector2d psi0 = initial == M5Initial::Outer ? Eigen::Vector2d(1.0, 0.0)
                                                     : Eigen::Vector2d(1.0, 1.0).normalized();
  const Eigen::Vector2d coeffs = v.transpose() * psi0;

  M5Probabilities out;
  out.times = times;
  out.outer.resize(times.size());
  out.inner.resize(times.size());
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    Eigen::Vector2cd psi = Eigen::Vector2cd::Zero();
    for (int n = 0; n < 2; ++n) {
      const std::complex<double> phase =
          std::polar(1.0, -2.0 * std::numbers::pi * solver.eigenvalues()[n] * times[k]);
      psi += phase * coeffs[n] * v.col(n).cast<std::complex<double>>();
    }
    // Each ring amplitude is shared equally by six configurations.
    out.outer[k] = std::norm(psi[0]) / 6.0;
    out.inner[k] = std::norm(psi[1]) / 6.0;
  }
  return out;
}

}  // namespace hexstar
