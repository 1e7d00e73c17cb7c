// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hexstar/hamiltonian.hpp"
#include "hexstar/symmetry.hpp"

namespace hexstar {

/// Relative degeneracy tolerance: clusters merge eigenvalues closer than
/// kDefaultTolDeg times the spectral width.
inline constexpr double kDefaultTolDeg = 1e-8;

struct SpectrumOptions {
  double tol_deg = kDefaultTolDeg;
  bool label = true;
};

/// Run of equal eigenvalues [begin, begin + size).
struct Cluster {
  int begin = 0;
  int size = 0;
  double energy = 0.0;
};

/// Groups ascending eigenvalues whose consecutive gaps are below `tolerance`.
std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXd& ascending, double tolerance);

/// Absolute clustering tolerance for a spectrum: tol_deg * (max - min), or
/// tol_deg * max(|lambda|, 1) for a single level.
double clustering_tolerance(const Eigen::VectorXd& ascending, double tol_deg);

struct SpectrumResult {
  int M = 0;
  ModelParams params;
  /// Ascending, units of J.
  Eigen::VectorXd eigenvalues;
  /// Orthonormal columns; inside each degenerate cluster the basis is
  /// symmetry adapted and ordered by (irrep, S).
  Eigen::MatrixXd eigenvectors;
  std::vector<Cluster> clusters;
  /// One label per eigenvector when labelling was requested; S is set for
  /// the Heisenberg point only.
  std::vector<SymmetryLabel> labels;
  double tolerance = 0.0;
};

/// Dense symmetric eigendecomposition of one sector. Throws NumericalError if
/// the eigensolver fails or a residual check does not hold.
SpectrumResult diagonalize_sector(int M, const ModelParams& params,
                                  const SpectrumOptions& options = {});

/// Eigenspace dimension -> number of eigenspaces over the full 4096-dim
/// space. Eigenvalues of sector -M are taken from sector M (exact spin-flip
/// pairing) and then clustered globally.
struct DegeneracyHistogram {
  std::map<int, int> bins;
  double tolerance = 0.0;
  /// Smallest gap between distinct clusters.
  double min_gap = 0.0;
  /// Set when two clusters are closer than 10 * tolerance.
  std::vector<std::string> warnings;

  int total_states() const;
};

DegeneracyHistogram degeneracy_histogram(const ModelParams& params,
                                         double tol_deg = kDefaultTolDeg);

struct GroundState {
  double jz_over_j = 0.0;
  double energy = 0.0;
  /// Dimension of the ground eigenspace over all sectors.
  int degeneracy = 0;
  /// Sector the representative vector was taken from: the largest M >= 0
  /// containing a ground state.
  int M = 0;
  SymmetryLabel label;
  /// Representative ground vector in sector M.
  Eigen::VectorXd vector;
};

GroundState ground_state(const ModelParams& params, double tol_deg = kDefaultTolDeg);

std::vector<GroundState> ground_state_scan(double alpha, std::span<const double> jz_grid,
                                           double tol_deg = kDefaultTolDeg);

/// Bisects [lo, hi] for the Jz/J where the ground-state (|M|, irrep) changes.
/// Returns nullopt if both ends carry the same label.
std::optional<double> locate_crossover(double alpha, double lo, double hi,
                                       double resolution = 1e-7);

struct OverlapPoint {
  double jz_over_j = 0.0;
  /// |<Psi_GS^H | Psi_GS>|^2 with the Heisenberg ground state at the same alpha.
  double overlap = 0.0;
  /// Weight of the M = 0 ground vector in each total-spin subspace S = 0..6.
  std::array<double, kMaxM + 1> spin_weights{};
};

std::vector<OverlapPoint> heisenberg_overlap_scan(double alpha, std::span<const double> jz_grid);

/// Nearest-neighbour Ising limit (J = 0, only distance_sq = 1 pairs), by
/// enumerating all 4096 diagonal energies.
struct IsingGround {
  double energy = 0.0;
  int degeneracy = 0;
};

IsingGround ising_degeneracy(double jz_over_j);

}  // namespace hexstar
