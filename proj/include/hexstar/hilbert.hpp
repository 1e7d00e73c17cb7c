// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hexstar/errors.hpp"
#include "hexstar/lattice.hpp"

namespace hexstar {

/// Configuration index f: bit i set means site i is spin down (along -z).
using Config = std::uint32_t;

inline constexpr int kFullDim = 1 << kSites;
inline constexpr Config kAllDown = kFullDim - 1;
inline constexpr int kMaxM = kSites / 2;

constexpr int spin_projection(Config f) { return kMaxM - std::popcount(f); }

constexpr int sector_dimension(int M) {
  if (M < -kMaxM || M > kMaxM) return 0;
  const int k = kMaxM + M;
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * (kSites - i) / (i + 1);
  return static_cast<int>(c);
}

inline void require_sector(int M) {
  if (M < -kMaxM || M > kMaxM) {
    throw UsageError("spin projection M=" + std::to_string(M) + " outside [-6, 6]");
  }
}

/// Configurations with fixed total spin projection M, by ascending f.
class SectorBasis {
 public:
  explicit SectorBasis(int M);

  int M() const { return m_; }
  int size() const { return static_cast<int>(configs_.size()); }
  Config operator[](int index) const { return configs_[index]; }
  const std::vector<Config>& configs() const { return configs_; }
  /// Sector-local index of f, or -1 when f is in another sector.
  int index(Config f) const { return index_[f]; }

 private:
  int m_;
  std::vector<Config> configs_;
  std::vector<int> index_;
};

/// Cached immutable basis of sector M; throws UsageError if |M| > 6.
const SectorBasis& sector_basis(int M);

/// Image of configuration f under a site permutation: the spin at site i
/// moves to site perm[i].
constexpr Config permute_config(const Permutation& perm, Config f) {
  Config image = 0;
  for (int i = 0; i < kSites; ++i) {
    if ((f >> i) & 1u) image |= Config{1} << perm[i];
  }
  return image;
}

/// Amplitudes over the full 4096-dim configuration space (sector empty) or
/// over one sector basis.
template <typename Scalar>
struct State {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  std::optional<int> sector;
  Vector amplitudes;

  bool is_full() const { return !sector.has_value(); }
  Config config(int index) const {
    return sector ? sector_basis(*sector)[index] : static_cast<Config>(index);
  }
  double norm() const { return amplitudes.norm(); }
};

using RealState = State<double>;
using ComplexState = State<std::complex<double>>;

template <typename Scalar>
State<Scalar> basis_state(Config f, std::optional<int> sector = std::nullopt) {
  State<Scalar> s;
  s.sector = sector;
  if (sector) {
    const auto& basis = sector_basis(*sector);
    if (basis.index(f) < 0) throw UsageError("configuration not in requested sector");
    s.amplitudes = State<Scalar>::Vector::Zero(basis.size());
    s.amplitudes[basis.index(f)] = Scalar(1);
  } else {
    s.amplitudes = State<Scalar>::Vector::Zero(kFullDim);
    s.amplitudes[f] = Scalar(1);
  }
  return s;
}

/// Signed permutation action: |f> -> parity(g) |g.f>.
template <typename Scalar>
State<Scalar> act_permutation(const GroupElement& g, const State<Scalar>& state) {
  State<Scalar> out;
  out.sector = state.sector;
  out.amplitudes = State<Scalar>::Vector::Zero(state.amplitudes.size());
  const Scalar sign(static_cast<double>(g.parity));
  if (state.sector) {
    const auto& basis = sector_basis(*state.sector);
    for (int i = 0; i < basis.size(); ++i) {
      out.amplitudes[basis.index(permute_config(g.perm, basis[i]))] = sign * state.amplitudes[i];
    }
  } else {
    for (int f = 0; f < kFullDim; ++f) {
      out.amplitudes[permute_config(g.perm, static_cast<Config>(f))] =
          sign * state.amplitudes[f];
    }
  }
  return out;
}

/// Global spin flip (pi rotation about e_x in spin space, up to the phase
/// (-i)^12 = 1): amplitude of f moves to f ^ 4095, sector M goes to -M.
template <typename Scalar>
State<Scalar> spin_flip(const State<Scalar>& state) {
  State<Scalar> out;
  out.amplitudes = State<Scalar>::Vector::Zero(state.amplitudes.size());
  if (state.sector) {
    out.sector = -*state.sector;
    const auto& from = sector_basis(*state.sector);
    const auto& to = sector_basis(-*state.sector);
    for (int i = 0; i < from.size(); ++i) {
      out.amplitudes[to.index(from[i] ^ kAllDown)] = state.amplitudes[i];
    }
  } else {
    for (int f = 0; f < kFullDim; ++f) out.amplitudes[f ^ kAllDown] = state.amplitudes[f];
  }
  return out;
}

template <typename Scalar>
struct SectorComponent {
  State<Scalar> state;  ///< unnormalized restriction to the sector
  double weight = 0.0;  ///< squared norm of the restriction
};

template <typename Scalar>
SectorComponent<Scalar> project_sector(const State<Scalar>& full, int M) {
  if (!full.is_full()) throw UsageError("project_sector expects a full-space state");
  const auto& basis = sector_basis(M);
  SectorComponent<Scalar> out;
  out.state.sector = M;
  out.state.amplitudes.resize(basis.size());
  for (int i = 0; i < basis.size(); ++i) out.state.amplitudes[i] = full.amplitudes[basis[i]];
  out.weight = out.state.amplitudes.squaredNorm();
  return out;
}

/// Inverse of project_sector: zero-padded copy in the full space.
template <typename Scalar>
State<Scalar> embed(const State<Scalar>& sector_state) {
  if (sector_state.is_full()) return sector_state;
  const auto& basis = sector_basis(*sector_state.sector);
  State<Scalar> out;
  out.amplitudes = State<Scalar>::Vector::Zero(kFullDim);
  for (int i = 0; i < basis.size(); ++i) out.amplitudes[basis[i]] = sector_state.amplitudes[i];
  return out;
}

template <typename Scalar>
State<Scalar> normalized(State<Scalar> state) {
  const double n = state.norm();
  if (n == 0.0) throw NumericalError("cannot normalize a zero state");
  state.amplitudes /= n;
  return state;
}

template <typename Scalar>
ComplexState to_complex(const State<Scalar>& state) {
  ComplexState out;
  out.sector = state.sector;
  out.amplitudes = state.amplitudes.template cast<std::complex<double>>();
  return out;
}

/// Single-particle state c_up |up_z> + c_down |down_z>.
using Spinor = Eigen::Vector2cd;

/// Spinor at polar angle theta, azimuth phi on the Bloch sphere.
Spinor spinor_from_bloch(double theta, double phi);

inline const Spinor kUpZ = Spinor(1.0, 0.0);
inline const Spinor kDownZ = Spinor(0.0, 1.0);
inline const Spinor kUpX = Spinor(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);

/// Initial states: xi (all up along x), chi (outer up along x, inner up
/// along z), a zeta(outer, inner) two-ring product, or one configuration.
struct StateSpec {
  enum class Kind { Xi, Chi, Zeta, Configuration };

  Kind kind = Kind::Xi;
  Spinor outer = kUpX;
  Spinor inner = kUpX;
  Config config = 0;

  static StateSpec xi();
  static StateSpec chi();
  /// Throws UsageError unless both spinors have unit norm.
  static StateSpec zeta(const Spinor& outer, const Spinor& inner);
  static StateSpec configuration(Config f);

  /// Parses "xi", "chi", "zeta:theta_o,phi_o,theta_i,phi_i" (radians) or
  /// "config:f".
  static StateSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Full-space product state with one spinor per site.
ComplexState product_state(const std::array<Spinor, kSites>& spinors);

ComplexState build_initial_state(const StateSpec& spec);

}  // namespace hexstar
