// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "hexstar/errors.hpp"

namespace hexstar {
namespace {

using cplx = std::complex<double>;

ComplexState sector_component(const ComplexState& psi0, int M) {
  if (psi0.is_full()) return project_sector(psi0, M).state;
  if (*psi0.sector != M) {
    throw UsageError("initial state lives in sector " + std::to_string(*psi0.sector) +
                     ", not " + std::to_string(M));
  }
  return psi0;
}

// phases(c, k) = exp(-i 2 pi E_c t_k)
Eigen::MatrixXcd phase_matrix(const Eigen::VectorXd& energies, const Eigen::VectorXd& times) {
  Eigen::MatrixXcd phases(energies.size(), times.size());
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    for (Eigen::Index c = 0; c < energies.size(); ++c) {
      phases(c, k) = std::polar(1.0, -2.0 * std::numbers::pi * energies[c] * times[k]);
    }
  }
  return phases;
}

}  // namespace

void TimeGrid::validate() const {
  if (!std::isfinite(t_max) || t_max < 0.0) throw UsageError("t_max must be non-negative");
  if (steps < 1) throw UsageError("time grid needs at least one step");
}

double TimeGrid::at(int k) const {
  return steps == 1 ? 0.0 : t_max * static_cast<double>(k) / (steps - 1);
}

Eigen::VectorXd TimeGrid::values() const {
  validate();
  Eigen::VectorXd t(steps);
  for (int k = 0; k < steps; ++k) t[k] = at(k);
  return t;
}

SpectralSupport spectral_support(const ComplexState& psi0, const SpectrumResult& spectrum,
                                 double tol_support) {
  const ComplexState psi = sector_component(psi0, spectrum.M);
  SpectralSupport out;
  out.M = spectrum.M;
  out.weight = psi.amplitudes.squaredNorm();
  out.energy_tolerance = spectrum.tolerance;
  if (out.weight == 0.0) {
    throw UsageError("initial state has no component in sector M=" + std::to_string(spectrum.M));
  }
  const double scale = std::sqrt(out.weight);

  std::vector<Eigen::VectorXcd> kept;
  std::vector<double> energies;
  for (std::size_t c = 0; c < spectrum.clusters.size(); ++c) {
    const auto& cl = spectrum.clusters[c];
    const auto v = spectrum.eigenvectors.middleCols(cl.begin, cl.size);
    const Eigen::VectorXcd coeffs = v.transpose().cast<cplx>() * psi.amplitudes;
    if (coeffs.norm() / scale <= tol_support) continue;
    kept.push_back(v.cast<cplx>() * coeffs);
    energies.push_back(cl.energy);
    out.clusters.push_back(static_cast<int>(c));
  }

  const Eigen::Index d = psi.amplitudes.size();
  out.components.resize(d, static_cast<Eigen::Index>(kept.size()));
  out.basis.resize(d, static_cast<Eigen::Index>(kept.size()));
  out.energies = Eigen::Map<const Eigen::VectorXd>(energies.data(), energies.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    out.components.col(c) = kept[c];
    out.basis.col(c) = kept[c].normalized();
  }
  return out;
}

Trajectory evolve_probabilities(const SpectralSupport& support, const TimeGrid& grid) {
  Trajectory out;
  out.M = support.M;
  out.times = grid.values();
  const Eigen::MatrixXcd amplitudes =
      support.components * phase_matrix(support.energies, out.times);
  out.probs = amplitudes.cwiseAbs2() / support.weight;
  return out;
}

Trajectory evolve_probabilities(const ComplexState& psi0, const ModelParams& params, int M,
                                const TimeGrid& grid, double tol_deg, double tol_support) {
  const auto spectrum = diagonalize_sector(M, params, {tol_deg, false});
  return evolve_probabilities(spectral_support(psi0, spectrum, tol_support), grid);
}

EquiprobabilityClasses equiprobability_classes(const SpectralSupport& support,
                                               double tolerance) {
  // P0|c_f> = B B^+ e_f, and B has orthonormal columns, so comparing the rows
  // of B (conjugated) compares the projected outcome vectors.
  const Eigen::MatrixXcd& rows = support.basis;
  const Eigen::Index d = rows.rows();
  EquiprobabilityClasses out;
  std::vector<int> owner(d, -1);
  for (Eigen::Index f = 0; f < d; ++f) {
    if (owner[f] >= 0) continue;
    owner[f] = static_cast<int>(out.classes.size());
    out.classes.push_back({static_cast<int>(f)});
    const auto a = rows.row(f);
    const double na = a.norm();
    for (Eigen::Index g = f + 1; g < d; ++g) {
      if (owner[g] >= 0) continue;
      const auto b = rows.row(g);
      if (std::abs(b.norm() - na) > tolerance) continue;
      cplx phase(1.0, 0.0);
      const cplx overlap = b.conjugate().dot(a);
      if (std::abs(overlap) > 0.0) phase = overlap / std::abs(overlap);
      if ((a - phase * b).norm() <= tolerance) {
        owner[g] = owner[f];
        out.classes.back().push_back(static_cast<int>(g));
      }
    }
  }
  return out;
}

FrequencyCount frequency_count(const SpectralSupport& support) {
  FrequencyCount out;
  const long n = support.delta0();
  out.formula = n * (n - 1) / 2;
  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(out.formula));
  for (long a = 0; a < n; ++a) {
    for (long b = a + 1; b < n; ++b) {
      diffs.push_back(std::abs(support.energies[b] - support.energies[a]));
    }
  }
  std::sort(diffs.begin(), diffs.end());
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (k == 0 || diffs[k] - diffs[k - 1] >= support.energy_tolerance) {
      out.frequencies.push_back(diffs[k]);
    }
  }
  out.distinct = static_cast<long>(out.frequencies.size());
  return out;
}

Eigen::VectorXd return_probability(const SpectralSupport& support, const TimeGrid& grid) {
  const Eigen::VectorXd times = grid.values();
  Eigen::VectorXd weights(support.delta0());
  for (int c = 0; c < support.delta0(); ++c) {
    weights[c] = support.components.col(c).squaredNorm() / support.weight;
  }
  const Eigen::VectorXcd amplitude =
      phase_matrix(support.energies, times).transpose() * weights.cast<cplx>();
  return amplitude.cwiseAbs2();
}

CollapseMetrics collapse_metrics(const Trajectory& trajectory, double threshold) {
  CollapseMetrics out;
  const Eigen::MatrixXd& p = trajectory.probs;
  if (p.size() == 0) return out;
  Eigen::Index initial = 0;
  out.initial_probability = p.col(0).maxCoeff(&initial);
  out.initial_outcome = static_cast<int>(initial);
  if (out.initial_probability >= threshold) {
    for (Eigen::Index k = 1; k < p.cols(); ++k) {
      if (p(initial, k) < threshold) {
        out.collapse_time = trajectory.times[k];
        break;
      }
    }
  }

  const Eigen::VectorXd peaks = p.rowwise().maxCoeff();
  out.max_probability = peaks.maxCoeff();
  std::vector<double> sorted(peaks.data(), peaks.data() + peaks.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double third = sorted.size() >= 3 ? sorted[2] : 0.0;
  for (Eigen::Index f = 0; f < peaks.size(); ++f) {
    if (sorted.size() >= 3 && peaks[f] > 2.0 * third) {
      out.dominant.push_back(static_cast<int>(f));
    } else {
      out.tail_max = std::max(out.tail_max, peaks[f]);
    }
  }
  return out;
}

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::Constant: return "constant";
    case Regime::Sinusoidal: return "sinusoidal";
    case Regime::Collapse: return "collapse";
    case Regime::Aperiodic: return "aperiodic";
  }
  return "unknown";
}

Regime classify_regime(const FrequencyCount& frequencies, const CollapseMetrics& collapse) {
  if (frequencies.distinct == 0) return Regime::Constant;
  if (frequencies.distinct == 1) return Regime::Sinusoidal;
  if (collapse.collapse_time) return Regime::Collapse;
  return Regime::Aperiodic;
}

DynamicsReport run_dynamics(const ComplexState& psi0, const ModelParams& params, int M,
                            const TimeGrid& grid, double tol_deg, double tol_support) {
  DynamicsReport out;
  const auto spectrum = diagonalize_sector(M, params, {tol_deg, false});
  out.support = spectral_support(psi0, spectrum, tol_support);
  out.trajectory = evolve_probabilities(out.support, grid);
  out.classes = equiprobability_classes(out.support);
  out.frequencies = frequency_count(out.support);
  out.collapse = collapse_metrics(out.trajectory);
  out.regime = classify_regime(out.frequencies, out.collapse);
  return out;
}

}  // namespace hexstar
