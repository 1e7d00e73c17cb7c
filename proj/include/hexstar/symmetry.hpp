// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hexstar/hamiltonian.hpp"
#include "hexstar/hilbert.hpp"
#include "hexstar/lattice.hpp"

namespace hexstar {

/// D(g) on sector M as a signed index map: D(g) e_i = sign * e_{target[i]}.
struct SectorAction {
  std::vector<int> target;
  int sign = 1;
};

SectorAction sector_action(const GroupElement& g, int M);

/// Actions of all d6h() elements on sector M, cached.
const std::vector<SectorAction>& sector_actions(int M);

/// Trace of D(g) on sector M: parity times the number of fixed configurations.
double sector_character(const GroupElement& g, int M);

inline constexpr int kNumSectors = 2 * kMaxM + 1;

/// Multiplicity of each irrep in each sector. E-type entries count copies of
/// the two-dimensional irrep (printed "2x n").
struct IrrepCountTable {
  std::array<std::array<int, kNumSectors>, kNumIrreps> counts{};

  int count(Irrep r, int M) const { return counts[index_of(r)][M + kMaxM]; }
  int total(Irrep r) const;
  /// sum over irreps of dim * count; equals the sector dimension.
  int states_in_sector(int M) const;
};

/// n_rho(M) = (1/24) sum_g chi_rho(g) chi_M(g). Throws NumericalError if a
/// projection is not an integer to 1e-9.
IrrepCountTable irrep_counts(const std::vector<GroupElement>& group = d6h());

/// Number of spin-S multiplets per irrep for the Heisenberg point:
/// n_rho(M = S) - n_rho(M = S + 1).
struct MultipletTable {
  std::array<std::array<int, kMaxM + 1>, kNumIrreps> counts{};

  int count(Irrep r, int S) const { return counts[index_of(r)][S]; }
  /// sum over irreps of dim * count; equals C(12, 6-S) - C(12, 5-S).
  int multiplets_with_spin(int S) const;
};

/// Throws NumericalError on a negative difference.
MultipletTable multiplet_counts(const IrrepCountTable& table);

/// P_rho X = (dim rho / 24) sum_g chi_rho(g) D(g) X for sector-M column vectors.
template <typename Derived>
Matrix<typename Derived::Scalar> apply_irrep_projector(Irrep r, int M,
                                                       const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto& group = d6h();
  const auto& actions = sector_actions(M);
  const auto& table = character_table();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(x.rows(), x.cols());
  for (std::size_t k = 0; k < group.size(); ++k) {
    const int chi = table.character(r, group[k].cls);
    if (chi == 0) continue;
    const double factor = static_cast<double>(chi * actions[k].sign);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out.row(actions[k].target[i]) += Scalar(factor) * x.row(i);
    }
  }
  out *= Scalar(static_cast<double>(table.dimension(r)) / kGroupOrder);
  return out;
}

/// Dense projector onto irrep r within sector M.
Eigen::MatrixXd irrep_projector(Irrep r, int M);

/// Projects a sector or full-space state onto irrep r (sector by sector for
/// full-space states).
template <typename Scalar>
State<Scalar> project_irrep(Irrep r, const State<Scalar>& state) {
  State<Scalar> out = state;
  if (state.sector) {
    out.amplitudes = apply_irrep_projector(r, *state.sector, state.amplitudes);
    return out;
  }
  for (int M = -kMaxM; M <= kMaxM; ++M) {
    const auto& basis = sector_basis(M);
    auto component = project_sector(state, M).state;
    component.amplitudes = apply_irrep_projector(r, M, component.amplitudes);
    for (int i = 0; i < basis.size(); ++i) out.amplitudes[basis[i]] = component.amplitudes[i];
  }
  return out;
}

/// Per-class eigenvalues lambda_c with g psi = lambda_c psi (one
/// representative g per class, all elements checked).
struct ClassSignature {
  std::array<std::complex<double>, kNumClasses> eigenvalues{};
  bool eigenstate = false;
  /// The one-dimensional irrep whose character row matches, if any.
  std::optional<Irrep> irrep;
};

ClassSignature classify_state(const ComplexState& state);
ClassSignature classify_factorized_state(const StateSpec& spec);

struct SymmetryLabel {
  Irrep irrep = Irrep::A1g;
  std::optional<int> spin;
  /// ||P_rho v||^2 for the assigned irrep.
  double weight = 0.0;
};

inline constexpr double kLabelThreshold = 0.999;

/// Assigns the irrep with ||P_rho v||^2 > 0.999 and, when `casimir` is given,
/// the spin S with <v|S^2|v> = S(S+1) within 1e-6. Throws NumericalError when
/// no irrep (or spin) qualifies.
SymmetryLabel label_eigenvector(const Eigen::VectorXd& v, int M,
                                const Eigen::MatrixXd* casimir = nullptr);

/// A degenerate eigenspace rotated so that each column carries one irrep
/// (and one spin when `casimir` is given), ordered by (irrep, S).
struct AdaptedCluster {
  Eigen::MatrixXd basis;
  std::vector<SymmetryLabel> labels;
};

AdaptedCluster adapt_cluster(const Eigen::MatrixXd& eigenspace, int M,
                             const Eigen::MatrixXd* casimir = nullptr);

}  // namespace hexstar
