// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hexstar/errors.hpp"
#include "hexstar/parallel.hpp"

namespace hexstar {
namespace {

// Makes the largest-magnitude component positive (first one on ties).
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  if (v[at] < 0) v = -v;
}

Eigen::VectorXd sector_eigenvalues(int M, const ModelParams& params) {
  const auto h = build_sector_hamiltonian(M, params);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed in sector M=" + std::to_string(M));
  }
  return solver.eigenvalues();
}

}  // namespace

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXd& ascending, double tolerance) {
  std::vector<Cluster> clusters;
  for (Eigen::Index k = 0; k < ascending.size(); ++k) {
    if (clusters.empty() || ascending[k] - ascending[k - 1] >= tolerance) {
      clusters.push_back({static_cast<int>(k), 1, ascending[k]});
    } else {
      ++clusters.back().size;
    }
  }
  for (auto& c : clusters) c.energy = ascending.segment(c.begin, c.size).mean();
  return clusters;
}

double clustering_tolerance(const Eigen::VectorXd& ascending, double tol_deg) {
  if (ascending.size() == 0) return tol_deg;
  const double width = ascending[ascending.size() - 1] - ascending[0];
  if (width > 0) return tol_deg * width;
  return tol_deg * std::max(std::abs(ascending[0]), 1.0);
}

SpectrumResult diagonalize_sector(int M, const ModelParams& params,
                                  const SpectrumOptions& options) {
  const auto h = build_sector_hamiltonian(M, params);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver did not converge in sector M=" << M << " (alpha=" << params.alpha
        << ", Jz/J=" << params.jz_over_j << ")";
    throw NumericalError(msg.str());
  }

  SpectrumResult out;
  out.M = M;
  out.params = params;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  out.tolerance = clustering_tolerance(out.eigenvalues, options.tol_deg);
  out.clusters = cluster_eigenvalues(out.eigenvalues, out.tolerance);

  const double h_norm = std::max(out.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
  const Eigen::MatrixXd residual =
      h.matrix * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
  if (residual.colwise().norm().maxCoeff() > 1e-9 * h_norm) {
    throw NumericalError("eigenpair residual too large in sector M=" + std::to_string(M));
  }

  if (options.label) {
    std::optional<Eigen::MatrixXd> casimir;
    if (params.is_heisenberg()) casimir = heisenberg_casimir(M);
    out.labels.resize(out.eigenvalues.size());
    for (const auto& c : out.clusters) {
      auto adapted = adapt_cluster(out.eigenvectors.middleCols(c.begin, c.size), M,
                                   casimir ? &*casimir : nullptr);
      out.eigenvectors.middleCols(c.begin, c.size) = adapted.basis;
      for (int k = 0; k < c.size; ++k) out.labels[c.begin + k] = adapted.labels[k];
    }
  }
  for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) fix_sign(out.eigenvectors.col(k));
  return out;
}

int DegeneracyHistogram::total_states() const {
  int total = 0;
  for (const auto& [dim, count] : bins) total += dim * count;
  return total;
}

DegeneracyHistogram degeneracy_histogram(const ModelParams& params, double tol_deg) {
  params.validate();
  std::array<Eigen::VectorXd, kMaxM + 1> per_sector;
  parallel_for(kMaxM + 1, [&](int M) { per_sector[M] = sector_eigenvalues(M, params); });

  std::vector<double> all;
  all.reserve(kFullDim);
  for (int M = 0; M <= kMaxM; ++M) {
    const int copies = M == 0 ? 1 : 2;
    for (int c = 0; c < copies; ++c) {
      all.insert(all.end(), per_sector[M].data(), per_sector[M].data() + per_sector[M].size());
    }
  }
  std::sort(all.begin(), all.end());
  const Eigen::VectorXd sorted = Eigen::Map<const Eigen::VectorXd>(all.data(), all.size());

  DegeneracyHistogram out;
  out.tolerance = clustering_tolerance(sorted, tol_deg);
  const auto clusters = cluster_eigenvalues(sorted, out.tolerance);
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    ++out.bins[clusters[k].size];
    if (k == 0) continue;
    const double gap =
        sorted[clusters[k].begin] - sorted[clusters[k - 1].begin + clusters[k - 1].size - 1];
    out.min_gap = std::min(out.min_gap, gap);
    if (gap < 10.0 * out.tolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "clusters at E/J=" << clusters[k - 1].energy << " and " << clusters[k].energy
          << " are separated by " << gap << " < 10 * tol_deg";
      out.warnings.push_back(msg.str());
    }
  }
  return out;
}

GroundState ground_state(const ModelParams& params, double tol_deg) {
  params.validate();
  std::array<Eigen::VectorXd, kMaxM + 1> per_sector;
  parallel_for(kMaxM + 1, [&](int M) { per_sector[M] = sector_eigenvalues(M, params); });

  double lowest = std::numeric_limits<double>::infinity();
  double highest = -std::numeric_limits<double>::infinity();
  for (const auto& ev : per_sector) {
    lowest = std::min(lowest, ev.minCoeff());
    highest = std::max(highest, ev.maxCoeff());
  }
  const double tol = highest > lowest ? tol_deg * (highest - lowest)
                                      : tol_deg * std::max(std::abs(lowest), 1.0);

  GroundState out;
  out.jz_over_j = params.jz_over_j;
  out.energy = lowest;
  out.M = -1;
  for (int M = 0; M <= kMaxM; ++M) {
    const int in_sector =
        static_cast<int>((per_sector[M].array() - lowest < tol).count());
    out.degeneracy += in_sector * (M == 0 ? 1 : 2);
    if (in_sector > 0) out.M = M;
  }

  // Only the ground cluster needs a symmetry-adapted basis.
  const auto spectrum = diagonalize_sector(out.M, params, {tol_deg, false});
  std::optional<Eigen::MatrixXd> casimir;
  if (params.is_heisenberg()) casimir = heisenberg_casimir(out.M);
  const auto& ground = spectrum.clusters.front();
  const auto adapted = adapt_cluster(spectrum.eigenvectors.middleCols(0, ground.size), out.M,
                                     casimir ? &*casimir : nullptr);
  out.vector = adapted.basis.col(0);
  fix_sign(out.vector);
  out.label = adapted.labels.front();
  return out;
}

std::vector<GroundState> ground_state_scan(double alpha, std::span<const double> jz_grid,
                                           double tol_deg) {
  std::vector<GroundState> out;
  out.reserve(jz_grid.size());
  for (double jz : jz_grid) out.push_back(ground_state({alpha, jz}, tol_deg));
  return out;
}

std::optional<double> locate_crossover(double alpha, double lo, double hi, double resolution) {
  auto key = [alpha](double jz) {
    const auto gs = ground_state({alpha, jz});
    return std::pair(gs.M, index_of(gs.label.irrep));
  };
  const auto left = key(lo);
  if (key(hi) == left) return std::nullopt;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (key(mid) == left) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<OverlapPoint> heisenberg_overlap_scan(double alpha, std::span<const double> jz_grid) {
  auto m0_ground = [alpha](double jz) {
    const auto h = build_sector_hamiltonian(0, {alpha, jz});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed for M=0");
    return Eigen::VectorXd(solver.eigenvectors().col(0));
  };
  const Eigen::VectorXd reference = m0_ground(1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spin(heisenberg_casimir(0));

  std::vector<OverlapPoint> out;
  for (double jz : jz_grid) {
    OverlapPoint p;
    p.jz_over_j = jz;
    const Eigen::VectorXd v = m0_ground(jz);
    p.overlap = std::pow(reference.dot(v), 2);
    const Eigen::VectorXd coords = spin.eigenvectors().transpose() * v;
    for (Eigen::Index k = 0; k < coords.size(); ++k) {
      const double s = (-1.0 + std::sqrt(1.0 + 4.0 * spin.eigenvalues()[k])) / 2.0;
      const int S = std::clamp(static_cast<int>(std::lround(s)), 0, kMaxM);
      p.spin_weights[S] += coords[k] * coords[k];
    }
    out.push_back(p);
  }
  return out;
}

IsingGround ising_degeneracy(double jz_over_j) {
  const Geometry geometry = build_geometry();
  IsingGround out;
  out.energy = std::numeric_limits<double>::infinity();
  std::vector<double> energies(kFullDim, 0.0);
  for (int f = 0; f < kFullDim; ++f) {
    double e = 0.0;
    for (int i = 0; i < kSites; ++i) {
      for (int j = i + 1; j < kSites; ++j) {
        if (geometry.distance_sq(i, j) != 1) continue;
        const bool aligned = ((f >> i) & 1) == ((f >> j) & 1);
        e += aligned ? jz_over_j : -jz_over_j;
      }
    }
    energies[f] = e;
    out.energy = std::min(out.energy, e);
  }
  // Energies are integer multiples of Jz/J, so exact comparison is safe.
  out.degeneracy = static_cast<int>(std::count(energies.begin(), energies.end(), out.energy));
  return out;
}

}  // namespace hexstar
