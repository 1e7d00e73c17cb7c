// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <map>

#include "hexstar/spectrum.hpp"
#include "support/oracle.hpp"

using namespace hexstar;

TEST_CASE("clustering") {
  Eigen::VectorXd v(6);
  v << 0.0, 1e-12, 1.0, 2.0, 2.0 + 1e-11, 2.0 + 2e-11;
  const auto clusters = cluster_eigenvalues(v, 1e-9);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].size == 2);
  CHECK(clusters[1].size == 1);
  CHECK(clusters[2].size == 3);
  CHECK(clustering_tolerance(v, 1e-8) == doctest::Approx(2e-8));
  Eigen::VectorXd single(1);
  single << -5.0;
  CHECK(clustering_tolerance(single, 1e-8) == doctest::Approx(5e-8));
}

TEST_CASE("degeneracy histograms") {
  const auto xxz = degeneracy_histogram({6.0, -3.0});
  CHECK(xxz.bins == oracle::kXxzHistogram);
  CHECK(xxz.total_states() == kFullDim);
  const auto heis = degeneracy_histogram({6.0, 1.0});
  CHECK(heis.bins == oracle::kHeisenbergHistogram);
  CHECK(heis.warnings.empty());
}

TEST_CASE("spectra of M and -M coincide") {
  for (int M : {1, 3, 5}) {
    const auto plus = diagonalize_sector(M, {6.0, -3.0}, {kDefaultTolDeg, false});
    const auto minus = diagonalize_sector(-M, {6.0, -3.0}, {kDefaultTolDeg, false});
    const double scale = plus.eigenvalues.cwiseAbs().maxCoeff();
    CHECK((plus.eigenvalues - minus.eigenvalues).cwiseAbs().maxCoeff() < 1e-10 * scale);
  }
}

TEST_CASE("labelled XXZ spectrum reproduces the block sizes") {
  const auto counts = irrep_counts();
  for (int M : {6, 5, 4, 3, 2}) {
    const auto spectrum = diagonalize_sector(M, {6.0, -3.0});
    std::map<Irrep, int> seen;
    for (const auto& l : spectrum.labels) ++seen[l.irrep];
    for (Irrep r : kIrreps) {
      CAPTURE(M);
      CHECK(seen[r] == character_table().dimension(r) * counts.count(r, M));
    }
    // Eigenvectors inside a cluster share one irrep for this anisotropy.
    for (const auto& c : spectrum.clusters) {
      for (int k = c.begin; k < c.begin + c.size; ++k) {
        CHECK(spectrum.labels[k].irrep == spectrum.labels[c.begin].irrep);
      }
    }
  }
}

TEST_CASE("Heisenberg labels give the multiplet counts") {
  const auto multiplets = multiplet_counts(irrep_counts());
  for (int S = 1; S <= kMaxM; ++S) {
    const auto spectrum = diagonalize_sector(S, {6.0, 1.0});
    std::map<Irrep, int> top;
    for (const auto& c : spectrum.clusters) {
      for (int k = c.begin; k < c.begin + c.size; ++k) {
        REQUIRE(spectrum.labels[k].spin);
        CHECK(*spectrum.labels[k].spin == *spectrum.labels[c.begin].spin);
        if (*spectrum.labels[k].spin == S) ++top[spectrum.labels[k].irrep];
      }
    }
    for (Irrep r : kIrreps) {
      CAPTURE(S);
      CHECK(top[r] == character_table().dimension(r) * multiplets.count(r, S));
    }
  }
}

TEST_CASE("eigenvectors are orthonormal and deterministic") {
  const auto a = diagonalize_sector(3, {6.0, -3.0});
  const auto b = diagonalize_sector(3, {6.0, -3.0});
  const Eigen::Index d = a.eigenvectors.cols();
  CHECK((a.eigenvectors.transpose() * a.eigenvectors - Eigen::MatrixXd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("ground state on both sides of the crossover") {
  const auto ferro = ground_state({6.0, -3.0});
  CHECK(ferro.degeneracy == 2);
  CHECK(ferro.M == 6);
  CHECK(ferro.label.irrep == Irrep::A2g);
  const auto anti = ground_state({6.0, 1.0});
  CHECK(anti.degeneracy == 1);
  CHECK(anti.M == 0);
  CHECK(anti.label.irrep == Irrep::A1g);
  REQUIRE(anti.label.spin);
  CHECK(*anti.label.spin == 0);
}

TEST_CASE("overlap with the Heisenberg ground state") {
  const std::vector<double> grid = {1.0, 0.0};
  const auto points = heisenberg_overlap_scan(6.0, grid);
  CHECK(points[0].overlap == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(points[0].spin_weights[0] == doctest::Approx(1.0).epsilon(1e-10));
  double total = 0.0;
  for (double w : points[1].spin_weights) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(points[1].spin_weights[1] < 1e-12);
}

TEST_CASE("nearest-neighbour Ising limit") {
  CHECK(ising_degeneracy(1.0).degeneracy == 730);
  CHECK(ising_degeneracy(-1.0).degeneracy == 2);
  CHECK(ising_degeneracy(0.0).degeneracy == kFullDim);
}
