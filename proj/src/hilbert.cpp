// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexstar/hilbert.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace hexstar {

SectorBasis::SectorBasis(int M) : m_(M), index_(kFullDim, -1) {
  require_sector(M);
  configs_.reserve(sector_dimension(M));
  for (int f = 0; f < kFullDim; ++f) {
    if (spin_projection(static_cast<Config>(f)) == M) {
      index_[f] = static_cast<int>(configs_.size());
      configs_.push_back(static_cast<Config>(f));
    }
  }
}

const SectorBasis& sector_basis(int M) {
  require_sector(M);
  static const std::array<SectorBasis, 2 * kMaxM + 1> bases = [] {
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
      return std::array<SectorBasis, sizeof...(I)>{SectorBasis(static_cast<int>(I) - kMaxM)...};
    }(std::make_index_sequence<2 * kMaxM + 1>{});
  }();
  return bases[M + kMaxM];
}

Spinor spinor_from_bloch(double theta, double phi) {
  return Spinor(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
}

StateSpec StateSpec::xi() { return StateSpec{Kind::Xi, kUpX, kUpX, 0}; }

StateSpec StateSpec::chi() { return StateSpec{Kind::Chi, kUpX, kUpZ, 0}; }

StateSpec StateSpec::zeta(const Spinor& outer, const Spinor& inner) {
  if (std::abs(outer.norm() - 1.0) > 1e-12 || std::abs(inner.norm() - 1.0) > 1e-12) {
    throw UsageError("zeta spinors must be normalized");
  }
  return StateSpec{Kind::Zeta, outer, inner, 0};
}

StateSpec StateSpec::configuration(Config f) {
  if (f >= static_cast<Config>(kFullDim)) {
    throw UsageError("configuration index must lie in [0, 4095]");
  }
  return StateSpec{Kind::Configuration, kUpZ, kUpZ, f};
}

namespace {

double parse_number(const std::string& token, std::string_view context) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed == 0 || consumed != token.size() || !std::isfinite(value)) {
    throw UsageError("invalid number '" + token + "' in state spec '" + std::string(context) +
                     "'");
  }
  return value;
}

}  // namespace

StateSpec StateSpec::parse(std::string_view text) {
  if (text == "xi") return xi();
  if (text == "chi") return chi();

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("unknown state spec '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, colon);
  std::vector<std::string> args;
  std::stringstream rest{std::string(text.substr(colon + 1))};
  for (std::string token; std::getline(rest, token, ',');) args.push_back(token);

  if (head == "config") {
    if (args.size() != 1) throw UsageError("config state spec takes one integer");
    const double f = parse_number(args[0], text);
    if (f != std::floor(f) || f < 0 || f >= kFullDim) {
      throw UsageError("configuration index must be an integer in [0, 4095]");
    }
    return configuration(static_cast<Config>(f));
  }
  if (head == "zeta") {
    if (args.size() != 4) {
      throw UsageError("zeta state spec takes theta_outer,phi_outer,theta_inner,phi_inner");
    }
    std::array<double, 4> angles{};
    for (int k = 0; k < 4; ++k) angles[k] = parse_number(args[k], text);
    return zeta(spinor_from_bloch(angles[0], angles[1]), spinor_from_bloch(angles[2], angles[3]));
  }
  throw UsageError("unknown state spec '" + std::string(text) + "'");
}

std::string StateSpec::to_string() const {
  switch (kind) {
    case Kind::Xi: return "xi";
    case Kind::Chi: return "chi";
    case Kind::Configuration: return "config:" + std::to_string(config);
    case Kind::Zeta: break;
  }
  auto angles = [](const Spinor& s) {
    const double theta = 2.0 * std::acos(std::min(1.0, std::abs(s[0])));
    const double phi = std::abs(s[1]) > 0 ? std::arg(s[1]) - std::arg(s[0]) : 0.0;
    return std::pair{theta, phi};
  };
  const auto [to, po] = angles(outer);
  const auto [ti, pi] = angles(inner);
  std::ostringstream os;
  os.precision(17);
  os << "zeta:" << to << ',' << po << ',' << ti << ',' << pi;
  return os.str();
}

ComplexState product_state(const std::array<Spinor, kSites>& spinors) {
  ComplexState out;
  out.amplitudes.resize(kFullDim);
  for (int f = 0; f < kFullDim; ++f) {
    std::complex<double> amp = 1.0;
    for (int i = 0; i < kSites; ++i) amp *= spinors[i][(f >> i) & 1];
    out.amplitudes[f] = amp;
  }
  return out;
}

ComplexState build_initial_state(const StateSpec& spec) {
  if (spec.kind == StateSpec::Kind::Configuration) {
    return basis_state<std::complex<double>>(spec.config);
  }
  std::array<Spinor, kSites> spinors;
  for (int i = 0; i < kSites; ++i) spinors[i] = i < kRingSites ? spec.outer : spec.inner;
  return product_state(spinors);
}

}  // namespace hexstar
