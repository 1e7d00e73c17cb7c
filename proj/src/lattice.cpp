// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include <Eigen/Geometry>

#include "hexstar/errors.hpp"

namespace hexstar {
namespace {

constexpr double kMatchTol = 1e-9;

Eigen::Matrix3d rotation_z(double radians) {
  return Eigen::AngleAxisd(radians, Eigen::Vector3d::UnitZ()).toRotationMatrix();
}

double degrees_mod(double radians, double period) {
  double deg = radians * 180.0 / std::numbers::pi;
  deg = std::fmod(deg, period);
  if (deg < 0) deg += period;
  if (period - deg < 1e-6) deg = 0.0;
  return deg;
}

struct Classification {
  ConjugacyClass cls;
  double key;  // orders elements within a class
};

// Proper rotations are classified by axis and angle; improper ones through
// the proper rotation -R, using S3 = I*C6, S6 = I*C3, sigma_h = I*C2,
// sigma_d = I*C2', sigma_v = I*C2''.
Classification classify(const Eigen::Matrix3d& rotation) {
  const bool proper = rotation.determinant() > 0;
  const Eigen::Matrix3d r = proper ? rotation : Eigen::Matrix3d(-rotation);

  ConjugacyClass cls;
  double key;
  if (std::abs(r(2, 2) - 1.0) < kMatchTol) {
    key = degrees_mod(std::atan2(r(1, 0), r(0, 0)), 360.0);
    const int step = static_cast<int>(std::lround(key / 60.0)) % 6;
    switch (step) {
      case 0: cls = ConjugacyClass::E; break;
      case 1:
      case 5: cls = ConjugacyClass::C6; break;
      case 2:
      case 4: cls = ConjugacyClass::C3; break;
      default: cls = ConjugacyClass::C2; break;
    }
  } else {
    // Two-fold rotation about an in-plane axis n: r = 2 n n^T - 1.
    const Eigen::Matrix3d nn = (r + Eigen::Matrix3d::Identity()) / 2.0;
    Eigen::Index col;
    nn.diagonal().maxCoeff(&col);
    const Eigen::Vector3d n = nn.col(col).normalized();
    key = degrees_mod(std::atan2(n.y(), n.x()), 180.0);
    const int step = static_cast<int>(std::lround(key / 30.0)) % 6;
    // Even steps are axes through inner-ring sites (site 6 lies on +x).
    cls = (step % 2 == 0) ? ConjugacyClass::C2p : ConjugacyClass::C2pp;
  }
  if (proper) return {cls, key};

  switch (cls) {
    case ConjugacyClass::E: return {ConjugacyClass::I, key};
    case ConjugacyClass::C6: return {ConjugacyClass::S3, key};
    case ConjugacyClass::C3: return {ConjugacyClass::S6, key};
    case ConjugacyClass::C2: return {ConjugacyClass::SigmaH, key};
    case ConjugacyClass::C2p: return {ConjugacyClass::SigmaD, key};
    default: return {ConjugacyClass::SigmaV, key};
  }
}

Permutation site_permutation(const Geometry& geometry, const Eigen::Matrix3d& rotation) {
  const Eigen::Matrix2d planar = rotation.topLeftCorner<2, 2>();
  Permutation perm{};
  for (int i = 0; i < kSites; ++i) {
    const Eigen::Vector2d image = planar * geometry.positions.col(i);
    int target = -1;
    for (int j = 0; j < kSites; ++j) {
      if ((geometry.positions.col(j) - image).norm() < kMatchTol) {
        target = j;
        break;
      }
    }
    if (target < 0) {
      throw NumericalError("group element does not map site " + std::to_string(i) +
                           " onto a lattice site");
    }
    perm[i] = target;
  }
  return perm;
}

GroupElement make_element(const Geometry& geometry, const Eigen::Matrix3d& rotation) {
  GroupElement g;
  g.rotation = rotation;
  g.perm = site_permutation(geometry, rotation);
  g.parity = permutation_sign(g.perm);
  g.cls = classify(rotation).cls;
  for (int i = 0; i < kSites; ++i) {
    for (int j = 0; j < kSites; ++j) {
      if (geometry.distance_sq(g.perm[i], g.perm[j]) != geometry.distance_sq(i, j)) {
        throw NumericalError("group element does not preserve pair distances");
      }
    }
  }
  return g;
}

}  // namespace

Geometry build_geometry() {
  Geometry geometry;
  const double outer_radius = std::sqrt(3.0);
  for (int k = 0; k < kRingSites; ++k) {
    const double outer_angle = (90.0 + 60.0 * k) * std::numbers::pi / 180.0;
    const double inner_angle = (60.0 * k) * std::numbers::pi / 180.0;
    geometry.positions.col(k) << outer_radius * std::cos(outer_angle),
        outer_radius * std::sin(outer_angle);
    geometry.positions.col(kRingSites + k) << std::cos(inner_angle), std::sin(inner_angle);
  }
  for (int i = 0; i < kSites; ++i) {
    for (int j = 0; j < kSites; ++j) {
      const double d2 = (geometry.positions.col(i) - geometry.positions.col(j)).squaredNorm();
      const long rounded = std::lround(d2);
      if (std::abs(d2 - static_cast<double>(rounded)) > kMatchTol) {
        throw NumericalError("non-integer squared distance in hexagram geometry");
      }
      geometry.distance_sq(i, j) = static_cast<int>(rounded);
    }
  }
  return geometry;
}

std::string_view class_label(ConjugacyClass c) {
  static constexpr std::array<std::string_view, kNumClasses> labels = {
      "E", "2C6", "2C3", "C2", "3C2'", "3C2''", "I", "2S3", "2S6", "sigma_h", "3sigma_d",
      "3sigma_v"};
  return labels[index_of(c)];
}

std::string_view class_name(ConjugacyClass c) {
  static constexpr std::array<std::string_view, kNumClasses> names = {
      "E", "C6", "C3", "C2", "C2p", "C2pp", "I", "S3", "S6", "sigma_h", "sigma_d", "sigma_v"};
  return names[index_of(c)];
}

int class_size(ConjugacyClass c) {
  static constexpr std::array<int, kNumClasses> sizes = {1, 2, 2, 1, 3, 3, 1, 2, 2, 1, 3, 3};
  return sizes[index_of(c)];
}

int permutation_sign(const Permutation& perm) {
  std::array<bool, kSites> seen{};
  int sign = 1;
  for (int start = 0; start < kSites; ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation inverse(const Permutation& perm) {
  Permutation inv{};
  for (int i = 0; i < kSites; ++i) inv[perm[i]] = i;
  return inv;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  GroupElement ab;
  ab.rotation = a.rotation * b.rotation;
  for (int i = 0; i < kSites; ++i) ab.perm[i] = a.perm[b.perm[i]];
  ab.parity = a.parity * b.parity;
  ab.cls = classify(ab.rotation).cls;
  return ab;
}

std::vector<GroupElement> build_group(const Geometry& geometry) {
  const std::array<Eigen::Matrix3d, 3> generators = {
      rotation_z(std::numbers::pi / 3.0),
      Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal().toDenseMatrix(),
      Eigen::Matrix3d(-Eigen::Matrix3d::Identity())};

  std::vector<Eigen::Matrix3d> elements = {Eigen::Matrix3d::Identity()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      const Eigen::Matrix3d product = gen * elements[head];
      const bool known = std::any_of(elements.begin(), elements.end(), [&](const auto& m) {
        return (m - product).cwiseAbs().maxCoeff() < kMatchTol;
      });
      if (!known) elements.push_back(product);
    }
    if (elements.size() > static_cast<std::size_t>(kGroupOrder)) {
      throw NumericalError("generator closure exceeded the order of D6h");
    }
  }
  if (elements.size() != static_cast<std::size_t>(kGroupOrder)) {
    throw NumericalError("generator closure did not produce 24 elements");
  }

  std::sort(elements.begin(), elements.end(), [](const auto& a, const auto& b) {
    const auto ca = classify(a);
    const auto cb = classify(b);
    return std::tie(ca.cls, ca.key) < std::tie(cb.cls, cb.key);
  });

  std::vector<GroupElement> group;
  group.reserve(kGroupOrder);
  for (const auto& m : elements) group.push_back(make_element(geometry, m));
  return group;
}

const std::vector<GroupElement>& d6h() {
  static const std::vector<GroupElement> group = build_group(build_geometry());
  return group;
}

int find_element(const std::vector<GroupElement>& group, const Eigen::Matrix3d& rotation) {
  for (std::size_t k = 0; k < group.size(); ++k) {
    if ((group[k].rotation - rotation).cwiseAbs().maxCoeff() < kMatchTol) {
      return static_cast<int>(k);
    }
  }
  return -1;
}

Eigen::Matrix<int, kGroupOrder, kGroupOrder> multiplication_table(
    const std::vector<GroupElement>& group) {
  Eigen::Matrix<int, kGroupOrder, kGroupOrder> table;
  for (int a = 0; a < kGroupOrder; ++a) {
    for (int b = 0; b < kGroupOrder; ++b) {
      table(a, b) = find_element(group, group[a].rotation * group[b].rotation);
    }
  }
  return table;
}

std::vector<std::vector<int>> conjugacy_partition(const std::vector<GroupElement>& group) {
  const auto table = multiplication_table(group);
  const int n = static_cast<int>(group.size());
  int identity = -1;
  for (int a = 0; a < n && identity < 0; ++a) {
    bool neutral = true;
    for (int b = 0; b < n; ++b) neutral = neutral && table(a, b) == b;
    if (neutral) identity = a;
  }
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table(a, b) == identity) inv[a] = b;
    }
  }

  std::vector<int> assigned(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (assigned[a] >= 0) continue;
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      const int conj = table(table(g, a), inv[g]);
      if (assigned[conj] < 0) {
        assigned[conj] = static_cast<int>(classes.size());
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

std::string_view irrep_name(Irrep r) {
  static constexpr std::array<std::string_view, kNumIrreps> names = {"A1g", "A2g", "E2g",
                                                                     "B1u", "B2u", "E1u"};
  return names[index_of(r)];
}

const CharacterTable& character_table() {
  // Columns: E 2C6 2C3 C2 3C2' 3C2'' I 2S3 2S6 sigma_h 3sigma_d 3sigma_v
  static const CharacterTable table{
      {1, 1, 2, 1, 1, 2},
      {{
          {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          {1, 1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1},
          {2, -1, -1, 2, 0, 0, 2, -1, -1, 2, 0, 0},
          {1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1},
          {1, -1, 1, -1, -1, 1, -1, 1, -1, 1, 1, -1},
          {2, 1, -1, -2, 0, 0, -2, -1, 1, 2, 0, 0},
      }}};
  return table;
}

}  // namespace hexstar
