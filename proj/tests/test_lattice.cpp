// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Geometry>

#include "hexstar/lattice.hpp"
#include "support/oracle.hpp"

using namespace hexstar;

TEST_CASE("geometry matches trigonometric construction") {
  const Geometry g = build_geometry();
  const auto r = oracle::positions();
  std::set<int> seen;
  for (int i = 0; i < kSites; ++i) {
    CHECK((g.positions.col(i) - r[i]).norm() < 1e-14);
    for (int j = 0; j < kSites; ++j) {
      CHECK(std::abs(g.distance_sq(i, j) - (r[i] - r[j]).squaredNorm()) < 1e-12);
      if (i != j) seen.insert(g.distance_sq(i, j));
    }
  }
  CHECK(seen == std::set<int>{1, 3, 4, 7, 9, 12});
  CHECK(g.distance_sq(0, 8) == 1);
  CHECK(g.distance_sq(0, 7) == 1);
  CHECK(g.distance_sq(0, 3) == 12);
  CHECK(g.distance_sq(6, 9) == 4);
}

TEST_CASE("group axioms") {
  const auto& group = d6h();
  REQUIRE(group.size() == kGroupOrder);
  CHECK(group[0].rotation.isIdentity());
  const auto table = multiplication_table(group);
  for (int a = 0; a < kGroupOrder; ++a) {
    int inverses = 0;
    for (int b = 0; b < kGroupOrder; ++b) {
      REQUIRE(table(a, b) >= 0);
      if (table(a, b) == 0) ++inverses;
      for (int c = 0; c < kGroupOrder; ++c) {
        CHECK(table(table(a, b), c) == table(a, table(b, c)));
      }
    }
    CHECK(inverses == 1);
    CHECK(table(0, a) == a);
    CHECK(table(a, 0) == a);
  }
}

TEST_CASE("site permutation is a homomorphism and preserves geometry") {
  const auto& group = d6h();
  const Geometry geometry = build_geometry();
  for (const auto& a : group) {
    CHECK(a.parity == permutation_sign(a.perm));
    for (int i = 0; i < kSites; ++i) {
      const Eigen::Vector3d ri(geometry.positions(0, i), geometry.positions(1, i), 0.0);
      const Eigen::Vector3d image = a.rotation * ri;
      CHECK(std::abs(image.x() - geometry.positions(0, a.perm[i])) < 1e-12);
      CHECK(std::abs(image.y() - geometry.positions(1, a.perm[i])) < 1e-12);
    }
    for (const auto& b : group) {
      const GroupElement ab = compose(a, b);
      for (int i = 0; i < kSites; ++i) CHECK(ab.perm[i] == a.perm[b.perm[i]]);
      CHECK(ab.parity == a.parity * b.parity);
    }
  }
}

TEST_CASE("conjugacy classes from the table agree with the labels") {
  const auto& group = d6h();
  const auto partition = conjugacy_partition(group);
  REQUIRE(partition.size() == kNumClasses);
  std::multiset<int> sizes;
  for (const auto& cls : partition) {
    sizes.insert(static_cast<int>(cls.size()));
    for (int k : cls) CHECK(group[k].cls == group[cls.front()].cls);
    CHECK(static_cast<int>(cls.size()) == class_size(group[cls.front()].cls));
  }
  CHECK(sizes == std::multiset<int>{1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("representative permutations") {
  const auto& group = d6h();
  const Eigen::Matrix3d c6 =
      Eigen::AngleAxisd(std::numbers::pi / 3, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const int k6 = find_element(group, c6);
  REQUIRE(k6 >= 0);
  CHECK(group[k6].cls == ConjugacyClass::C6);
  CHECK(group[k6].perm == Permutation{1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6});
  CHECK(group[k6].parity == 1);

  const Eigen::Matrix3d c2x = Eigen::Vector3d(1, -1, -1).asDiagonal();
  const int kx = find_element(group, c2x);
  REQUIRE(kx >= 0);
  CHECK(group[kx].cls == ConjugacyClass::C2p);
  CHECK(group[kx].perm == Permutation{3, 2, 1, 0, 5, 4, 6, 11, 10, 9, 8, 7});
  CHECK(group[kx].parity == -1);

  const int ki = find_element(group, -Eigen::Matrix3d::Identity());
  REQUIRE(ki >= 0);
  CHECK(group[ki].perm == Permutation{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8});
  CHECK(group[ki].parity == 1);
}

TEST_CASE("character rows are orthonormal over the group") {
  const auto& group = d6h();
  const auto& table = character_table();
  for (Irrep r : kIrreps) {
    CHECK(table.character(r, ConjugacyClass::E) == table.dimension(r));
    CHECK(table.character(r, ConjugacyClass::SigmaH) == table.dimension(r));
    for (Irrep s : kIrreps) {
      int sum = 0;
      for (const auto& g : group) sum += table.character(r, g.cls) * table.character(s, g.cls);
      CHECK(sum == (r == s ? kGroupOrder : 0));
    }
  }
}

TEST_CASE("permutation helpers") {
  const Permutation cyc{1, 2, 3, 4, 5, 0, 6, 7, 8, 9, 10, 11};
  CHECK(permutation_sign(cyc) == -1);
  const Permutation inv = inverse(cyc);
  for (int i = 0; i < kSites; ++i) CHECK(inv[cyc[i]] == i);
}
