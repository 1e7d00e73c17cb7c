// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hexstar/symmetry.hpp"
#include "support/oracle.hpp"

using namespace hexstar;

TEST_CASE("irrep multiplicities per sector") {
  const auto counts = irrep_counts();
  for (int M = -kMaxM; M <= kMaxM; ++M) {
    const auto& row = oracle::kIrrepCounts[kMaxM - std::abs(M)];
    for (Irrep r : kIrreps) {
      CAPTURE(M);
      CHECK(counts.count(r, M) == row[index_of(r)]);
    }
    CHECK(counts.states_in_sector(M) == sector_dimension(M));
  }
  for (Irrep r : kIrreps) CHECK(counts.total(r) == oracle::kIrrepTotals[index_of(r)]);
}

TEST_CASE("multiplet counts by the difference rule") {
  const auto multiplets = multiplet_counts(irrep_counts());
  for (int S = 0; S <= kMaxM; ++S) {
    for (Irrep r : kIrreps) {
      CHECK(multiplets.count(r, S) == oracle::kMultiplets[kMaxM - S][index_of(r)]);
    }
    const int expected = static_cast<int>(oracle::binomial(12, 6 - S) -
                                          (S < kMaxM ? oracle::binomial(12, 5 - S) : 0));
    CHECK(multiplets.multiplets_with_spin(S) == expected);
  }
}

TEST_CASE("irrep projectors resolve the identity") {
  for (int M : {4, 3}) {
    const int d = sector_dimension(M);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
    std::vector<Eigen::MatrixXd> p;
    for (Irrep r : kIrreps) p.push_back(irrep_projector(r, M));
    for (int a = 0; a < kNumIrreps; ++a) {
      CHECK((p[a] * p[a] - p[a]).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((p[a] - p[a].transpose()).cwiseAbs().maxCoeff() < 1e-12);
      const int dim = character_table().dimension(kIrreps[a]);
      CHECK(p[a].trace() == doctest::Approx(dim * irrep_counts().count(kIrreps[a], M)));
      for (int b = a + 1; b < kNumIrreps; ++b) {
        CHECK((p[a] * p[b]).cwiseAbs().maxCoeff() < 1e-12);
      }
      sum += p[a];
    }
    CHECK((sum - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("two-ring product states transform as A2g") {
  for (const auto& spec : {StateSpec::xi(), StateSpec::chi(),
                           StateSpec::zeta(spinor_from_bloch(0.3, 1.1),
                                           spinor_from_bloch(2.0, -0.4))}) {
    const auto sig = classify_factorized_state(spec);
    CHECK(sig.eigenstate);
    REQUIRE(sig.irrep);
    CHECK(*sig.irrep == Irrep::A2g);
    const auto projected = project_irrep(Irrep::A2g, build_initial_state(spec));
    CHECK((projected.amplitudes - build_initial_state(spec).amplitudes).norm() < 1e-12);
  }
  const auto single = classify_state(to_complex(basis_state<double>(1)));
  CHECK_FALSE(single.eigenstate);
}

TEST_CASE("fully polarized state is A2g") {
  const auto label = label_eigenvector(Eigen::VectorXd::Ones(1), 6);
  CHECK(label.irrep == Irrep::A2g);
}
