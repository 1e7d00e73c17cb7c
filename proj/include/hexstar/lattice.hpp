// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace hexstar {

inline constexpr int kSites = 12;
inline constexpr int kRingSites = 6;
inline constexpr int kGroupOrder = 24;
inline constexpr int kNumClasses = 12;
inline constexpr int kNumIrreps = 6;

using Positions = Eigen::Matrix<double, 2, kSites>;
using SiteTable = Eigen::Matrix<int, kSites, kSites>;

/// Hexagram of twelve sites in the (x, y) plane, lengths in units of the
/// nearest-neighbour distance a. Sites 0..5 form the outer ring (star tips),
/// sites 6..11 the inner hexagon.
struct Geometry {
  Positions positions;
  /// Squared pair distances in units of a^2; always one of {0,1,3,4,7,9,12}.
  SiteTable distance_sq;
  double nn_distance = 1.0;
};

Geometry build_geometry();

enum class ConjugacyClass { E, C6, C3, C2, C2p, C2pp, I, S3, S6, SigmaH, SigmaD, SigmaV };

inline constexpr std::array<ConjugacyClass, kNumClasses> kClasses = {
    ConjugacyClass::E,  ConjugacyClass::C6,   ConjugacyClass::C3,     ConjugacyClass::C2,
    ConjugacyClass::C2p, ConjugacyClass::C2pp, ConjugacyClass::I,     ConjugacyClass::S3,
    ConjugacyClass::S6, ConjugacyClass::SigmaH, ConjugacyClass::SigmaD, ConjugacyClass::SigmaV};

inline constexpr int index_of(ConjugacyClass c) { return static_cast<int>(c); }

/// Column header label, e.g. "3C2'" or "2S6".
std::string_view class_label(ConjugacyClass c);
/// Short ASCII name without the size prefix, e.g. "C2p".
std::string_view class_name(ConjugacyClass c);
int class_size(ConjugacyClass c);

using Permutation = std::array<int, kSites>;

/// Sign of a site permutation from its cycle decomposition.
int permutation_sign(const Permutation& perm);

Permutation inverse(const Permutation& perm);

/// One D6h operation. `perm[i]` is the site that site i is carried to; the
/// orthogonal 3x3 `rotation` is kept so that operations with the same planar
/// permutation (e.g. E and sigma_h) remain distinct group elements.
struct GroupElement {
  Eigen::Matrix3d rotation;
  Permutation perm;
  int parity = 1;
  ConjugacyClass cls = ConjugacyClass::E;
};

/// Product a*b: apply b first, then a.
GroupElement compose(const GroupElement& a, const GroupElement& b);

/// All 24 elements of D6h as signed permutations of the sites, identity first.
/// Throws NumericalError if some element fails to map the site set onto itself.
std::vector<GroupElement> build_group(const Geometry& geometry);

/// Process-wide immutable copy of build_group(build_geometry()).
const std::vector<GroupElement>& d6h();

/// Index of the element of `group` with the given rotation, or -1.
int find_element(const std::vector<GroupElement>& group, const Eigen::Matrix3d& rotation);

/// 24x24 table: entry (a, b) is the index of compose(group[a], group[b]).
Eigen::Matrix<int, kGroupOrder, kGroupOrder> multiplication_table(
    const std::vector<GroupElement>& group);

/// Conjugacy classes computed from the multiplication table alone, each a
/// sorted list of element indices; ordered by smallest member.
std::vector<std::vector<int>> conjugacy_partition(const std::vector<GroupElement>& group);

enum class Irrep { A1g, A2g, E2g, B1u, B2u, E1u };

inline constexpr std::array<Irrep, kNumIrreps> kIrreps = {Irrep::A1g, Irrep::A2g, Irrep::E2g,
                                                          Irrep::B1u, Irrep::B2u, Irrep::E1u};

inline constexpr int index_of(Irrep r) { return static_cast<int>(r); }

std::string_view irrep_name(Irrep r);

/// The six D6h irreps with chi(sigma_h) = dim; the other six cannot occur
/// for spins confined to the plane.
struct CharacterTable {
  std::array<int, kNumIrreps> dimensions;
  std::array<std::array<int, kNumClasses>, kNumIrreps> characters;

  int dimension(Irrep r) const { return dimensions[index_of(r)]; }
  int character(Irrep r, ConjugacyClass c) const { return characters[index_of(r)][index_of(c)]; }
};

const CharacterTable& character_table();

}  // namespace hexstar
