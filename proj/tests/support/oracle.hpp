// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference constructions. Nothing here calls the library's
// assembly code: positions come from trigonometry, the Hamiltonian from
// explicit 2x2 Pauli matrices acting on the 4096-dim space.

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include <Eigen/Core>

namespace oracle {

constexpr int kN = 12;
constexpr int kDim = 1 << kN;

inline std::array<Eigen::Vector2d, kN> positions() {
  std::array<Eigen::Vector2d, kN> r;
  const double deg = std::numbers::pi / 180.0;
  for (int k = 0; k < 6; ++k) {
    const double outer = (90.0 + 60.0 * k) * deg;
    const double inner = (60.0 * k) * deg;
    r[k] = std::sqrt(3.0) * Eigen::Vector2d(std::cos(outer), std::sin(outer));
    r[6 + k] = Eigen::Vector2d(std::cos(inner), std::sin(inner));
  }
  return r;
}

inline Eigen::MatrixXd couplings(double alpha) {
  const auto r = positions();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(kN, kN);
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      if (i != j) c(i, j) = std::pow((r[i] - r[j]).norm(), -alpha);
    }
  }
  return c;
}

using Op = Eigen::Matrix2cd;

// Local basis: index 0 = up (bit clear), index 1 = down (bit set).
inline Op pauli_x() { Op m; m << 0, 1, 1, 0; return m; }
inline Op pauli_y() {
  Op m;
  m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  return m;
}
inline Op pauli_z() { Op m; m << 1, 0, 0, -1; return m; }

inline Eigen::VectorXcd apply_site(const Op& op, int site, const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(kDim);
  for (int f = 0; f < kDim; ++f) {
    const int b = (f >> site) & 1;
    const int base = f & ~(1 << site);
    for (int b2 = 0; b2 < 2; ++b2) out[base | (b2 << site)] += op(b2, b) * psi[f];
  }
  return out;
}

/// H psi with H = sum_{i<j} c_ij [J (X X + Y Y) + Jz Z Z], J = 1.
inline Eigen::VectorXcd apply_hamiltonian(const Eigen::VectorXcd& psi, double alpha, double jz) {
  const Eigen::MatrixXd c = couplings(alpha);
  const Op x = pauli_x(), y = pauli_y(), z = pauli_z();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(kDim);
  for (int i = 0; i < kN; ++i) {
    for (int j = i + 1; j < kN; ++j) {
      out += c(i, j) * (apply_site(x, i, apply_site(x, j, psi)) +
                        apply_site(y, i, apply_site(y, j, psi)) +
                        jz * apply_site(z, i, apply_site(z, j, psi)));
    }
  }
  return out;
}

/// Ascending configurations with 6 - M bits set.
inline std::vector<int> sector_configs(int M) {
  std::vector<int> out;
  for (int f = 0; f < kDim; ++f) {
    if (std::popcount(static_cast<unsigned>(f)) == 6 - M) out.push_back(f);
  }
  return out;
}

inline Eigen::MatrixXd sector_matrix(int M, double alpha, double jz) {
  const auto configs = sector_configs(M);
  const auto n = static_cast<Eigen::Index>(configs.size());
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(kDim);
    e[configs[b]] = 1.0;
    const Eigen::VectorXcd col = apply_hamiltonian(e, alpha, jz);
    for (Eigen::Index a = 0; a < n; ++a) h(a, b) = col[configs[a]].real();
  }
  return h;
}

inline double binomial(int n, int k) {
  double c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// Reference integers for the 12-site star. Column order:
// A1g, A2g, E2g, B1u, B2u, E1u (E entries count copies of the 2-dim irrep).

/// Rows |M| = 6, 5, ..., 0.
inline constexpr std::array<std::array<int, 6>, 7> kIrrepCounts = {{
    {0, 1, 0, 0, 0, 0},
    {0, 2, 2, 1, 1, 2},
    {3, 9, 12, 5, 5, 10},
    {14, 24, 36, 19, 19, 36},
    {35, 50, 85, 40, 40, 80},
    {56, 76, 132, 66, 66, 132},
    {70, 90, 156, 76, 76, 150},
}};
inline constexpr std::array<int, 6> kIrrepTotals = {286, 414, 690, 338, 338, 670};

/// Rows S = 6, 5, ..., 0.
inline constexpr std::array<std::array<int, 6>, 7> kMultiplets = {{
    {0, 1, 0, 0, 0, 0},
    {0, 1, 2, 1, 1, 2},
    {3, 7, 10, 4, 4, 8},
    {11, 15, 24, 14, 14, 26},
    {21, 26, 49, 21, 21, 44},
    {21, 26, 47, 26, 26, 52},
    {14, 14, 24, 10, 10, 18},
}};

inline const std::map<int, int> kXxzHistogram = {{1, 312}, {2, 838}, {4, 527}};
inline const std::map<int, int> kHeisenbergHistogram = {
    {1, 48}, {2, 42},  {3, 99},  {5, 89},  {6, 99},  {7, 54}, {9, 18},
    {10, 93}, {11, 3}, {13, 1}, {14, 50}, {18, 18}, {22, 4}};

/// Spectral support sizes for M = 6, 5, ..., 0.
inline constexpr std::array<int, 7> kSupportXiXxz = {1, 2, 9, 24, 50, 76, 48};
inline constexpr std::array<int, 7> kSupportChiHeisenberg = {1, 2, 9, 24, 50, 76, 90};

}  // namespace oracle
