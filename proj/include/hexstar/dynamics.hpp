// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hexstar/hilbert.hpp"
#include "hexstar/spectrum.hpp"

namespace hexstar {

/// Uniform grid on [0, t_max] in units of h/J.
struct TimeGrid {
  double t_max = 1.0;
  int steps = 2001;

  void validate() const;
  double at(int k) const;
  Eigen::VectorXd values() const;
};

inline constexpr double kDefaultTolSupport = 1e-10;

/// Part of the spectrum reached by an initial sector state. Each degenerate
/// cluster contributes the projection of psi0 onto that whole eigenspace.
struct SpectralSupport {
  int M = 0;
  /// Indices into SpectrumResult::clusters.
  std::vector<int> clusters;
  /// Energies of the supporting clusters.
  Eigen::VectorXd energies;
  /// Unnormalized projections u_c = P_c psi0, one column per cluster.
  Eigen::MatrixXcd components;
  /// Orthonormal columns spanning the support (u_c / |u_c|).
  Eigen::MatrixXcd basis;
  /// |psi0|^2 of the state the support was built from.
  double weight = 0.0;
  /// Absolute tolerance used to resolve energy differences.
  double energy_tolerance = 0.0;

  int delta0() const { return static_cast<int>(clusters.size()); }
  Eigen::MatrixXcd projector() const { return basis * basis.adjoint(); }
};

/// `psi0` must be a state on sector spectrum.M. A cluster is kept when
/// |P_c psi0| / |psi0| exceeds `tol_support`.
SpectralSupport spectral_support(const ComplexState& psi0, const SpectrumResult& spectrum,
                                 double tol_support = kDefaultTolSupport);

struct Trajectory {
  int M = 0;
  Eigen::VectorXd times;
  /// probs(f, k): rescaled probability of sector outcome f at times[k].
  Eigen::MatrixXd probs;
};

/// Rescaled outcome probabilities in the sector of `support`.
Trajectory evolve_probabilities(const SpectralSupport& support, const TimeGrid& grid);

/// Convenience: projects a full-space `psi0` onto sector M (or takes it as
/// is when it already lives there), diagonalizes and evolves.
Trajectory evolve_probabilities(const ComplexState& psi0, const ModelParams& params, int M,
                                const TimeGrid& grid, double tol_deg = kDefaultTolDeg,
                                double tol_support = kDefaultTolSupport);

/// Outcomes grouped by P0|c_f> equal up to a unit-modulus factor.
struct EquiprobabilityClasses {
  std::vector<std::vector<int>> classes;
  int count() const { return static_cast<int>(classes.size()); }
};

EquiprobabilityClasses equiprobability_classes(const SpectralSupport& support,
                                               double tolerance = 1e-8);

struct FrequencyCount {
  /// delta0 (delta0 - 1) / 2
  long formula = 0;
  /// Distinct positive differences E_c - E_c' resolved at the support's
  /// energy tolerance.
  long distinct = 0;
  /// Ascending distinct frequencies (units of J/h).
  std::vector<double> frequencies;
};

FrequencyCount frequency_count(const SpectralSupport& support);

/// |<psi0|psi(t)>|^2 for the normalized sector component.
Eigen::VectorXd return_probability(const SpectralSupport& support, const TimeGrid& grid);

inline constexpr double kCollapseThreshold = 0.1;

struct CollapseMetrics {
  /// Outcome with the largest probability at t = 0.
  int initial_outcome = 0;
  double initial_probability = 0.0;
  /// First time the initial outcome drops below the threshold, if it starts
  /// above it.
  std::optional<double> collapse_time;
  /// Outcomes whose maximum over time exceeds twice the third-largest maximum.
  std::vector<int> dominant;
  /// Largest probability reached by any non-dominant outcome.
  double tail_max = 0.0;
  /// Largest probability of any outcome over the whole window.
  double max_probability = 0.0;
};

CollapseMetrics collapse_metrics(const Trajectory& trajectory,
                                 double threshold = kCollapseThreshold);

enum class Regime { Constant, Sinusoidal, Collapse, Aperiodic };

std::string_view regime_name(Regime regime);

Regime classify_regime(const FrequencyCount& frequencies, const CollapseMetrics& collapse);

/// Everything reported for one (state, params, M) run.
struct DynamicsReport {
  SpectralSupport support;
  Trajectory trajectory;
  EquiprobabilityClasses classes;
  FrequencyCount frequencies;
  CollapseMetrics collapse;
  Regime regime = Regime::Constant;
};

DynamicsReport run_dynamics(const ComplexState& psi0, const ModelParams& params, int M,
                            const TimeGrid& grid, double tol_deg = kDefaultTolDeg,
                            double tol_support = kDefaultTolSupport);

}  // namespace hexstar
