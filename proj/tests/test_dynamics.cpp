// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "hexstar/dynamics.hpp"
#include "support/oracle.hpp"

using namespace hexstar;

namespace {

const ModelParams kXxz{6.0, -3.0};
const ModelParams kHeis{6.0, 1.0};

SpectralSupport support_for(const StateSpec& spec, const ModelParams& params, int M) {
  const auto spectrum = diagonalize_sector(M, params, {kDefaultTolDeg, false});
  return spectral_support(build_initial_state(spec), spectrum);
}

}  // namespace

TEST_CASE("time grid") {
  const TimeGrid grid{1.0, 2001};
  CHECK(grid.at(0) == 0.0);
  CHECK(grid.at(2000) == 1.0);
  CHECK(grid.values().size() == 2001);
  CHECK_THROWS(TimeGrid{1.0, 0}.values());
}

TEST_CASE("trajectory invariants") {
  const TimeGrid grid{1.0, 301};
  for (int M : {5, 4, 2, 0}) {
    const auto tr = evolve_probabilities(support_for(StateSpec::xi(), kXxz, M), grid);
    CHECK(tr.probs.minCoeff() >= 0.0);
    CHECK(tr.probs.maxCoeff() <= 1.0 + 1e-12);
    CHECK((tr.probs.colwise().sum().array() - 1.0).abs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("sector weights are conserved in time") {
  const ComplexState xi = build_initial_state(StateSpec::xi());
  const TimeGrid grid{1.0, 101};
  Eigen::VectorXd total = Eigen::VectorXd::Zero(grid.steps);
  for (int M = -kMaxM; M <= kMaxM; ++M) {
    const auto spectrum = diagonalize_sector(M, kXxz, {kDefaultTolDeg, false});
    const auto support = spectral_support(xi, spectrum);
    const auto tr = evolve_probabilities(support, grid);
    const Eigen::VectorXd unscaled = tr.probs.colwise().sum().transpose() * support.weight;
    CHECK((unscaled.array() - support.weight).abs().maxCoeff() < 1e-10);
    total += unscaled;
  }
  CHECK((total.array() - 1.0).abs().maxCoeff() < 1e-10);
}

TEST_CASE("full state and normalized sector component give the same trajectory") {
  const ComplexState chi = build_initial_state(StateSpec::chi());
  const TimeGrid grid{0.5, 201};
  for (int M : {4, 1}) {
    const auto from_full = evolve_probabilities(chi, kHeis, M, grid);
    const ComplexState part = normalized(project_sector(chi, M).state);
    const auto from_part = evolve_probabilities(part, kHeis, M, grid);
    CHECK((from_full.probs - from_part.probs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("equiprobable outcomes agree pointwise") {
  const TimeGrid grid{1.0, 1000};
  for (int M : {5, 4, 3}) {
    const auto support = support_for(StateSpec::xi(), kXxz, M);
    const auto classes = equiprobability_classes(support);
    const auto tr = evolve_probabilities(support, grid);
    for (const auto& cls : classes.classes) {
      for (int f : cls) {
        CHECK((tr.probs.row(f) - tr.probs.row(cls.front())).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("spin-flipped outcomes mirror each other for xi") {
  const TimeGrid grid{1.0, 201};
  for (int M : {5, 3}) {
    const auto plus = evolve_probabilities(support_for(StateSpec::xi(), kXxz, M), grid);
    const auto minus = evolve_probabilities(support_for(StateSpec::xi(), kXxz, -M), grid);
    const auto& from = sector_basis(M);
    const auto& to = sector_basis(-M);
    double err = 0.0;
    for (int f = 0; f < from.size(); ++f) {
      const int g = to.index(from[f] ^ kAllDown);
      err = std::max(err, (plus.probs.row(f) - minus.probs.row(g)).cwiseAbs().maxCoeff());
    }
    CHECK(err < 1e-10);
  }
}

TEST_CASE("support and frequency bounds") {
  const auto counts = irrep_counts();
  for (int M = 0; M <= kMaxM; ++M) {
    for (const auto& [spec, params] :
         {std::pair{StateSpec::xi(), kXxz}, std::pair{StateSpec::chi(), kHeis}}) {
      const auto support = support_for(spec, params, M);
      CHECK(support.delta0() <= counts.count(Irrep::A2g, M));
      const auto p0 = support.projector();
      CHECK((p0 * p0 - p0).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((p0 - p0.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      const auto freq = frequency_count(support);
      CHECK(freq.distinct <= freq.formula);
    }
  }
}

TEST_CASE("support sizes and classes for the two-ring states") {
  for (int M = 0; M <= kMaxM; ++M) {
    CAPTURE(M);
    const auto xi = support_for(StateSpec::xi(), kXxz, M);
    CHECK(xi.delta0() == oracle::kSupportXiXxz[kMaxM - M]);
    const auto chi = support_for(StateSpec::chi(), kHeis, M);
    CHECK(chi.delta0() == oracle::kSupportChiHeisenberg[kMaxM - M]);
    CHECK(equiprobability_classes(chi).count() == chi.delta0());
  }
  const auto xi5 = equiprobability_classes(support_for(StateSpec::xi(), kXxz, 5));
  REQUIRE(xi5.count() == 2);
  CHECK(xi5.classes[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(xi5.classes[1] == std::vector<int>{6, 7, 8, 9, 10, 11});
  CHECK(equiprobability_classes(support_for(StateSpec::xi(), kXxz, 4)).count() == 9);
  CHECK(frequency_count(support_for(StateSpec::xi(), kXxz, 5)).formula == 1);
}

TEST_CASE("xi under the Heisenberg model stays uniform") {
  const TimeGrid grid{1.0, 201};
  for (int M : {6, 3, 0}) {
    const auto support = support_for(StateSpec::xi(), kHeis, M);
    CHECK(support.delta0() == 1);
    const auto tr = evolve_probabilities(support, grid);
    CHECK((tr.probs.array() - 1.0 / sector_dimension(M)).abs().maxCoeff() < 1e-10);
    CHECK((return_probability(support, grid).array() - 1.0).abs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("return probability starts at one") {
  const auto support = support_for(StateSpec::chi(), kHeis, 0);
  const auto p = return_probability(support, {1.0, 101});
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.maxCoeff() <= 1.0 + 1e-12);
}

TEST_CASE("chi in the M = 0 sector starts on its first outcome") {
  const auto tr = evolve_probabilities(support_for(StateSpec::chi(), kHeis, 0), {0.1, 11});
  CHECK(tr.probs(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tr.probs.col(0).tail(tr.probs.rows() - 1).maxCoeff() < 1e-12);
}

TEST_CASE("regimes") {
  const TimeGrid grid{1.0, 501};
  auto regime = [&](const StateSpec& spec, const ModelParams& params, int M) {
    const auto r = run_dynamics(build_initial_state(spec), params, M, grid);
    return r.regime;
  };
  CHECK(regime(StateSpec::xi(), kXxz, 6) == Regime::Constant);
  CHECK(regime(StateSpec::xi(), kXxz, 5) == Regime::Sinusoidal);
  CHECK(regime(StateSpec::chi(), kHeis, 4) == Regime::Aperiodic);
  CHECK(regime(StateSpec::xi(), kHeis, 2) == Regime::Constant);
  CHECK(regime(StateSpec::chi(), kHeis, 0) == Regime::Collapse);
  CHECK(regime_name(Regime::Sinusoidal) == "sinusoidal");
}

TEST_CASE("collapse metrics on a synthetic trajectory") {
  Trajectory tr;
  tr.times = Eigen::VectorXd::LinSpaced(4, 0.0, 3.0);
  tr.probs.resize(4, 4);
  tr.probs << 0.9, 0.5, 0.05, 0.01,
              0.1, 0.3, 0.45, 0.30,
              0.0, 0.1, 0.30, 0.40,
              0.0, 0.1, 0.20, 0.29;
  const auto m = collapse_metrics(tr);
  CHECK(m.initial_outcome == 0);
  REQUIRE(m.collapse_time);
  CHECK(*m.collapse_time == 2.0);
  CHECK(m.dominant == std::vector<int>{0});
  CHECK(m.tail_max == doctest::Approx(0.45));
}
