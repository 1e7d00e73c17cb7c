// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "hexstar/errors.hpp"

namespace hexstar {

SectorAction sector_action(const GroupElement& g, int M) {
  const auto& basis = sector_basis(M);
  SectorAction action;
  action.sign = g.parity;
  action.target.resize(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    action.target[i] = basis.index(permute_config(g.perm, basis[i]));
  }
  return action;
}

const std::vector<SectorAction>& sector_actions(int M) {
  require_sector(M);
  static const std::array<std::vector<SectorAction>, kNumSectors> cache = [] {
    std::array<std::vector<SectorAction>, kNumSectors> all;
    for (int m = -kMaxM; m <= kMaxM; ++m) {
      for (const auto& g : d6h()) all[m + kMaxM].push_back(sector_action(g, m));
    }
    return all;
  }();
  return cache[M + kMaxM];
}

double sector_character(const GroupElement& g, int M) {
  const auto& basis = sector_basis(M);
  int fixed = 0;
  for (Config f : basis.configs()) fixed += permute_config(g.perm, f) == f ? 1 : 0;
  return static_cast<double>(g.parity * fixed);
}

int IrrepCountTable::total(Irrep r) const {
  return std::accumulate(counts[index_of(r)].begin(), counts[index_of(r)].end(), 0);
}

int IrrepCountTable::states_in_sector(int M) const {
  int states = 0;
  for (Irrep r : kIrreps) states += character_table().dimension(r) * count(r, M);
  return states;
}

IrrepCountTable irrep_counts(const std::vector<GroupElement>& group) {
  const auto& table = character_table();
  IrrepCountTable out;
  for (int M = -kMaxM; M <= kMaxM; ++M) {
    std::vector<double> chi_sector;
    chi_sector.reserve(group.size());
    for (const auto& g : group) chi_sector.push_back(sector_character(g, M));
    for (Irrep r : kIrreps) {
      double sum = 0.0;
      for (std::size_t k = 0; k < group.size(); ++k) {
        sum += table.character(r, group[k].cls) * chi_sector[k];
      }
      const double n = sum / static_cast<double>(group.size());
      const double rounded = std::round(n);
      if (std::abs(n - rounded) > 1e-9 || rounded < 0) {
        throw NumericalError("non-integer multiplicity " + std::to_string(n) + " for " +
                             std::string(irrep_name(r)) + " in sector M=" + std::to_string(M));
      }
      out.counts[index_of(r)][M + kMaxM] = static_cast<int>(rounded);
    }
  }
  return out;
}

int MultipletTable::multiplets_with_spin(int S) const {
  int total = 0;
  for (Irrep r : kIrreps) total += character_table().dimension(r) * count(r, S);
  return total;
}

MultipletTable multiplet_counts(const IrrepCountTable& table) {
  MultipletTable out;
  for (Irrep r : kIrreps) {
    for (int S = 0; S <= kMaxM; ++S) {
      const int above = S < kMaxM ? table.count(r, S + 1) : 0;
      const int n = table.count(r, S) - above;
      if (n < 0) {
        throw NumericalError("negative multiplet count for " + std::string(irrep_name(r)) +
                             " at S=" + std::to_string(S));
      }
      out.counts[index_of(r)][S] = n;
    }
  }
  return out;
}

Eigen::MatrixXd irrep_projector(Irrep r, int M) {
  const int d = sector_basis(M).size();
  return apply_irrep_projector(r, M, Eigen::MatrixXd::Identity(d, d));
}

ClassSignature classify_state(const ComplexState& state) {
  ClassSignature sig;
  const double norm2 = state.amplitudes.squaredNorm();
  if (norm2 == 0.0) throw UsageError("cannot classify a zero state");

  const auto& group = d6h();
  std::array<bool, kNumClasses> seen{};
  sig.eigenstate = true;
  for (const auto& g : group) {
    const auto image = act_permutation(g, state);
    const std::complex<double> lambda = state.amplitudes.dot(image.amplitudes) / norm2;
    const double residual = (image.amplitudes - lambda * state.amplitudes).norm();
    if (residual > 1e-10 * std::sqrt(norm2)) {
      sig.eigenstate = false;
      continue;
    }
    const int c = index_of(g.cls);
    if (!seen[c]) {
      sig.eigenvalues[c] = lambda;
      seen[c] = true;
    } else if (std::abs(sig.eigenvalues[c] - lambda) > 1e-10) {
      sig.eigenstate = false;
    }
  }
  if (!sig.eigenstate) return sig;

  const auto& table = character_table();
  for (Irrep r : kIrreps) {
    if (table.dimension(r) != 1) continue;
    bool match = true;
    for (ConjugacyClass c : kClasses) {
      match = match && std::abs(sig.eigenvalues[index_of(c)] -
                                static_cast<double>(table.character(r, c))) < 1e-10;
    }
    if (match) sig.irrep = r;
  }
  return sig;
}

ClassSignature classify_factorized_state(const StateSpec& spec) {
  return classify_state(build_initial_state(spec));
}

namespace {

std::optional<int> spin_from_casimir(double s2) {
  // S(S+1) = s2  =>  S = (-1 + sqrt(1 + 4 s2)) / 2
  const double s = (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * s2))) / 2.0;
  const double rounded = std::round(s);
  if (std::abs(rounded * (rounded + 1.0) - s2) > 1e-6) return std::nullopt;
  return static_cast<int>(rounded);
}

}  // namespace

SymmetryLabel label_eigenvector(const Eigen::VectorXd& v, int M, const Eigen::MatrixXd* casimir) {
  const double norm2 = v.squaredNorm();
  SymmetryLabel label;
  bool found = false;
  for (Irrep r : kIrreps) {
    const double w = apply_irrep_projector(r, M, v).squaredNorm() / norm2;
    if (w > kLabelThreshold) {
      label.irrep = r;
      label.weight = w;
      found = true;
    }
  }
  if (!found) {
    throw NumericalError("eigenvector in sector M=" + std::to_string(M) +
                         " has no dominant irrep (accidental degeneracy?)");
  }
  if (casimir != nullptr) {
    const double s2 = v.dot(*casimir * v) / norm2;
    label.spin = spin_from_casimir(s2);
    if (!label.spin) {
      throw NumericalError("eigenvector <S^2> = " + std::to_string(s2) +
                           " is not of the form S(S+1)");
    }
  }
  return label;
}

AdaptedCluster adapt_cluster(const Eigen::MatrixXd& eigenspace, int M,
                             const Eigen::MatrixXd* casimir) {
  const Eigen::Index k = eigenspace.cols();
  AdaptedCluster out;
  if (k == 1) {
    out.basis = eigenspace;
    out.labels.push_back(label_eigenvector(eigenspace.col(0), M, casimir));
    return out;
  }

  // Distinct weights per irrep: eigenvectors of W^T (sum_r w_r P_r) W are
  // irrep-pure because the eigenspace is D6h-invariant.
  Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(eigenspace.rows(), k);
  for (Irrep r : kIrreps) {
    weighted += (index_of(r) + 1.0) * apply_irrep_projector(r, M, eigenspace);
  }
  Eigen::MatrixXd reduced = eigenspace.transpose() * weighted;
  reduced = (reduced + reduced.transpose()).eval() / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> split(reduced);
  Eigen::MatrixXd basis = eigenspace * split.eigenvectors();

  if (casimir != nullptr) {
    // Within each irrep block, diagonalize S^2.
    const Eigen::VectorXd& keys = split.eigenvalues();
    Eigen::Index start = 0;
    while (start < k) {
      Eigen::Index stop = start + 1;
      while (stop < k && std::abs(keys[stop] - keys[start]) < 0.5) ++stop;
      const Eigen::MatrixXd block = basis.middleCols(start, stop - start);
      Eigen::MatrixXd s2 = block.transpose() * (*casimir) * block;
      s2 = (s2 + s2.transpose()).eval() / 2.0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spins(s2);
      basis.middleCols(start, stop - start) = block * spins.eigenvectors();
      start = stop;
    }
  }

  std::vector<SymmetryLabel> labels;
  for (Eigen::Index c = 0; c < k; ++c) {
    labels.push_back(label_eigenvector(basis.col(c), M, casimir));
  }
  std::vector<Eigen::Index> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::pair(index_of(labels[a].irrep), labels[a].spin.value_or(-1)) <
           std::pair(index_of(labels[b].irrep), labels[b].spin.value_or(-1));
  });
  out.basis.resize(eigenspace.rows(), k);
  for (Eigen::Index c = 0; c < k; ++c) {
    out.basis.col(c) = basis.col(order[c]);
    out.labels.push_back(labels[order[c]]);
  }
  return out;
}

}  // namespace hexstar
