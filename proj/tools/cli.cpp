// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexstar/analytic.hpp"
#include "hexstar/dynamics.hpp"
#include "hexstar/entanglement.hpp"
#include "hexstar/errors.hpp"
#include "hexstar/spectrum.hpp"
#include "hexstar/symmetry.hpp"

namespace hexstar::cli {
namespace {

using json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, std::string>> kCommandHelp = {
    {"symmetry-tables", "irrep counts per (irrep, M) and multiplets per (irrep, S)"},
    {"spectrum", "eigenvalues with degeneracy and symmetry labels"},
    {"degeneracy", "histogram of degenerate-cluster dimensions"},
    {"ground-scan", "ground state over a Jz/J grid"},
    {"dynamics", "outcome probabilities after a quench, with statistics"},
    {"return-prob", "probability of returning to the initial state"},
    {"schmidt", "Schmidt numbers over all bipartitions"},
    {"analytic-m5", "closed-form two-level block in the M=5 sector"},
    {"geometry", "site positions and pair couplings"}};

const std::vector<std::string> kCommands = [] {
  std::vector<std::string> names;
  for (const auto& [name, help] : kCommandHelp) names.push_back(name);
  return names;
}();

std::string num(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string spin_text(const std::optional<int>& spin) {
  return spin ? std::to_string(*spin) : std::string();
}

// Count cell for an irrep: two-dimensional irreps print as "2xn".
std::string count_cell(Irrep r, int n) {
  return character_table().dimension(r) == 2 ? "2x" + std::to_string(n) : std::to_string(n);
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + tmp.string() + " for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path);
  }
}

struct Emitted {
  std::string main;
  /// Written to <output>.json next to a CSV when an output path is given.
  std::optional<std::string> sidecar;
};

std::vector<int> selected_sectors(const RunConfig& c) {
  if (c.sector) return {*c.sector};
  std::vector<int> all;
  for (int M = -kMaxM; M <= kMaxM; ++M) all.push_back(M);
  return all;
}

ModelParams params_of(const RunConfig& c) { return {c.alpha, c.jz_over_j}; }

TimeGrid grid_of(const RunConfig& c) { return {c.t_max, c.t_steps}; }

std::string csv_header(const RunConfig& c, const std::string& columns) {
  return "# " + c.describe() + "\n" + columns + "\n";
}

std::string finish_json(const json& j) { return j.dump(2) + "\n"; }

Emitted symmetry_tables(const RunConfig& c) {
  const auto counts = irrep_counts();
  const auto multiplets = multiplet_counts(counts);
  if (c.format == "json") {
    json j;
    for (Irrep r : kIrreps) {
      json row;
      for (int M = -kMaxM; M <= kMaxM; ++M) row[std::to_string(M)] = counts.count(r, M);
      row["total"] = counts.total(r);
      j["irrep_counts"][std::string(irrep_name(r))] = row;
      json spins;
      for (int S = 0; S <= kMaxM; ++S) spins[std::to_string(S)] = multiplets.count(r, S);
      j["multiplets"][std::string(irrep_name(r))] = spins;
    }
    return {finish_json(j), {}};
  }
  std::ostringstream s;
  s << csv_header(c, "table,irrep,label,count");
  for (Irrep r : kIrreps) {
    for (int M = -kMaxM; M <= kMaxM; ++M) {
      s << "irrep_counts," << irrep_name(r) << ",M=" << M << ','
        << count_cell(r, counts.count(r, M)) << '\n';
    }
    s << "irrep_counts," << irrep_name(r) << ",total," << count_cell(r, counts.total(r)) << '\n';
  }
  for (Irrep r : kIrreps) {
    for (int S = 0; S <= kMaxM; ++S) {
      s << "multiplets," << irrep_name(r) << ",S=" << S << ','
        << count_cell(r, multiplets.count(r, S)) << '\n';
    }
  }
  return {s.str(), {}};
}

Emitted spectrum(const RunConfig& c) {
  const auto params = params_of(c);
  json j = json::array();
  std::ostringstream s;
  s << csv_header(c, "M,index,energy,cluster,irrep,S,irrep_weight");
  for (int M : selected_sectors(c)) {
    const auto result = diagonalize_sector(M, params, {c.tol_deg, true});
    for (std::size_t k = 0; k < result.clusters.size(); ++k) {
      const auto& cl = result.clusters[k];
      for (int n = cl.begin; n < cl.begin + cl.size; ++n) {
        const auto& label = result.labels[n];
        if (c.format == "json") {
          json row = {{"M", M},
                      {"index", n},
                      {"energy", result.eigenvalues[n]},
                      {"cluster", k},
                      {"irrep", irrep_name(label.irrep)}};
          if (label.spin) row["S"] = *label.spin;
          j.push_back(row);
        } else {
          s << M << ',' << n << ',' << num(result.eigenvalues[n]) << ',' << k << ','
            << irrep_name(label.irrep) << ',' << spin_text(label.spin) << ','
            << num(label.weight) << '\n';
        }
      }
    }
  }
  return {c.format == "json" ? finish_json(j) : s.str(), {}};
}

Emitted degeneracy(const RunConfig& c, std::ostream& err) {
  const auto h = degeneracy_histogram(params_of(c), c.tol_deg);
  for (const auto& w : h.warnings) err << "warning: " << w << '\n';
  if (c.format == "json") {
    json j;
    for (const auto& [dim, count] : h.bins) j["histogram"][std::to_string(dim)] = count;
    j["total_states"] = h.total_states();
    j["tolerance"] = h.tolerance;
    j["min_gap"] = h.min_gap;
    j["warnings"] = h.warnings;
    return {finish_json(j), {}};
  }
  std::ostringstream s;
  s << csv_header(c, "dimension,count");
  for (const auto& [dim, count] : h.bins) s << dim << ',' << count << '\n';
  return {s.str(), {}};
}

Emitted ground_scan(const RunConfig& c) {
  std::vector<double> grid(c.jz_points);
  for (int k = 0; k < c.jz_points; ++k) {
    grid[k] = c.jz_points == 1 ? c.jz_min
                               : c.jz_min + (c.jz_max - c.jz_min) * k / (c.jz_points - 1);
  }
  const auto states = ground_state_scan(c.alpha, grid, c.tol_deg);
  const auto overlaps = heisenberg_overlap_scan(c.alpha, grid);
  if (c.format == "json") {
    json j = json::array();
    for (std::size_t k = 0; k < grid.size(); ++k) {
      j.push_back({{"jz_over_j", grid[k]},
                   {"energy", states[k].energy},
                   {"degeneracy", states[k].degeneracy},
                   {"M", states[k].M},
                   {"irrep", irrep_name(states[k].label.irrep)},
                   {"m0_overlap_with_heisenberg", overlaps[k].overlap},
                   {"m0_spin_weights", overlaps[k].spin_weights}});
    }
    return {finish_json(j), {}};
  }
  std::ostringstream s;
  s << csv_header(c, "jz_over_j,energy,degeneracy,M,irrep,m0_overlap_with_heisenberg");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    s << num(grid[k]) << ',' << num(states[k].energy) << ',' << states[k].degeneracy << ','
      << states[k].M << ',' << irrep_name(states[k].label.irrep) << ','
      << num(overlaps[k].overlap) << '\n';
  }
  return {s.str(), {}};
}

json dynamics_stats(const DynamicsReport& r, int M) {
  json classes = json::array();
  for (const auto& cls : r.classes.classes) classes.push_back(cls);
  json collapse = {{"initial_outcome", r.collapse.initial_outcome},
                   {"initial_probability", r.collapse.initial_probability},
                   {"dominant", r.collapse.dominant},
                   {"tail_max", r.collapse.tail_max},
                   {"max_probability", r.collapse.max_probability}};
  collapse["collapse_time"] =
      r.collapse.collapse_time ? json(*r.collapse.collapse_time) : json(nullptr);
  return {{"M", M},
          {"dimension", sector_dimension(M)},
          {"sector_weight", r.support.weight},
          {"delta0", r.support.delta0()},
          {"N_p", r.classes.count()},
          {"N_nu_formula", r.frequencies.formula},
          {"N_nu_distinct", r.frequencies.distinct},
          {"regime", regime_name(r.regime)},
          {"classes", classes},
          {"collapse", collapse}};
}

Emitted dynamics(const RunConfig& c) {
  const ComplexState psi0 = build_initial_state(StateSpec::parse(c.state));
  const auto params = params_of(c);
  const auto grid = grid_of(c);
  if (c.format == "csv") {
    if (!c.sector) throw UsageError("dynamics --format csv needs a single --sector");
    const int M = *c.sector;
    const auto report = run_dynamics(psi0, params, M, grid, c.tol_deg, c.tol_support);
    std::ostringstream s;
    std::string columns = "t";
    for (int f = 0; f < sector_dimension(M); ++f) columns += ",p_" + std::to_string(f);
    s << csv_header(c, columns);
    const auto& tr = report.trajectory;
    for (Eigen::Index k = 0; k < tr.times.size(); ++k) {
      s << num(tr.times[k]);
      for (Eigen::Index f = 0; f < tr.probs.rows(); ++f) s << ',' << num(tr.probs(f, k));
      s << '\n';
    }
    return {s.str(), finish_json(dynamics_stats(report, M))};
  }
  json j = json::array();
  for (int M : selected_sectors(c)) {
    if (project_sector(psi0, M).weight == 0.0) {
      j.push_back({{"M", M}, {"sector_weight", 0.0}});
      continue;
    }
    j.push_back(dynamics_stats(run_dynamics(psi0, params, M, grid, c.tol_deg, c.tol_support), M));
  }
  return {finish_json(j), {}};
}

Emitted return_prob(const RunConfig& c) {
  const ComplexState psi0 = build_initial_state(StateSpec::parse(c.state));
  const auto grid = grid_of(c);
  std::vector<int> sectors;
  std::vector<Eigen::VectorXd> series;
  for (int M : selected_sectors(c)) {
    if (project_sector(psi0, M).weight == 0.0) continue;
    const auto spectrum = diagonalize_sector(M, params_of(c), {c.tol_deg, false});
    series.push_back(return_probability(spectral_support(psi0, spectrum, c.tol_support), grid));
    sectors.push_back(M);
  }
  const Eigen::VectorXd times = grid.values();
  if (c.format == "json") {
    json j;
    j["t"] = std::vector<double>(times.data(), times.data() + times.size());
    for (std::size_t k = 0; k < sectors.size(); ++k) {
      j["p_return"][std::to_string(sectors[k])] =
          std::vector<double>(series[k].data(), series[k].data() + series[k].size());
    }
    return {finish_json(j), {}};
  }
  std::string columns = "t";
  for (int M : sectors) columns += ",M=" + std::to_string(M);
  std::ostringstream s;
  s << csv_header(c, columns);
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    s << num(times[k]);
    for (const auto& p : series) s << ',' << num(p[k]);
    s << '\n';
  }
  return {s.str(), {}};
}

Emitted schmidt(const RunConfig& c) {
  ComplexState state;
  if (c.state == "groundstate") {
    const auto gs = ground_state(params_of(c), c.tol_deg);
    RealState v;
    v.sector = gs.M;
    v.amplitudes = gs.vector;
    state = embed(to_complex(v));
  } else {
    state = build_initial_state(StateSpec::parse(c.state));
  }
  state = normalized(state);
  const auto scan = scan_entanglement(state);
  if (c.format == "json") {
    json j = {{"min_rank", scan.min_rank},
              {"argmin_mask", scan.argmin_mask},
              {"entangled", scan.entangled()},
              {"ranks", scan.ranks}};
    return {finish_json(j), {}};
  }
  std::ostringstream s;
  s << csv_header(c, "mask,size_a,size_b,schmidt_number");
  for (std::size_t k = 0; k < scan.masks.size(); ++k) {
    const Bipartition p{scan.masks[k]};
    s << p.mask << ',' << p.size_a() << ',' << p.size_b() << ',' << scan.ranks[k] << '\n';
  }
  return {s.str(), {}};
}

Emitted analytic_m5(const RunConfig& c) {
  const M5Block block = m5_block(c.alpha, c.jz_over_j);
  const auto h = build_sector_hamiltonian(5, params_of(c), ExactMode::Auto);
  const Eigen::Matrix2d engine = restrict_to_m5_block(h.matrix);
  const double diff = (engine - block.matrix).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(engine);
  const double engine_gap = solver.eigenvalues()[1] - solver.eigenvalues()[0];

  std::optional<bool> exact_match;
  std::vector<std::string> exact_entries;
  if (h.exact) {
    const auto numeric = restrict_to_m5_block(*h.exact);
    const auto closed = exact_m5_block(*params_of(c).even_alpha(), Rational(c.jz_over_j));
    exact_match = exactly_equal(numeric, closed);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) exact_entries.push_back(numeric(a, b).str());
    }
  }

  std::vector<std::pair<std::string, std::string>> rows = {
      {"h_outer_outer", num(block.matrix(0, 0))},
      {"h_outer_inner", num(block.matrix(0, 1))},
      {"h_inner_inner", num(block.matrix(1, 1))},
      {"delta_e", num(block.delta_e)},
      {"outer_dominates_lower", block.outer_dominates_lower ? "true" : "false"},
      {"engine_max_abs_diff", num(diff)},
      {"engine_delta_e", num(engine_gap)},
  };
  if (exact_match) {
    rows.emplace_back("exact_h_outer_outer", exact_entries[0]);
    rows.emplace_back("exact_h_outer_inner", exact_entries[1]);
    rows.emplace_back("exact_h_inner_inner", exact_entries[3]);
    rows.emplace_back("exact_match", *exact_match ? "true" : "false");
  }
  if (c.format == "json") {
    json j;
    for (const auto& [k, v] : rows) j[k] = v;
    return {finish_json(j), {}};
  }
  std::ostringstream s;
  s << csv_header(c, "quantity,value");
  for (const auto& [k, v] : rows) s << k << ',' << v << '\n';
  return {s.str(), {}};
}

Emitted geometry(const RunConfig& c) {
  const Geometry g = build_geometry();
  if (c.format == "json") {
    json j;
    for (int i = 0; i < kSites; ++i) {
      j["sites"].push_back({{"site", i},
                            {"x", g.positions(0, i)},
                            {"y", g.positions(1, i)},
                            {"ring", i < kRingSites ? "outer" : "inner"}});
      std::vector<int> row(kSites);
      for (int k = 0; k < kSites; ++k) row[k] = g.distance_sq(i, k);
      j["distance_sq"].push_back(row);
    }
    return {finish_json(j), {}};
  }
  std::ostringstream s;
  s << csv_header(c, "site,x,y,ring");
  for (int i = 0; i < kSites; ++i) {
    s << i << ',' << num(g.positions(0, i)) << ',' << num(g.positions(1, i)) << ','
      << (i < kRingSites ? "outer" : "inner") << '\n';
  }
  return {s.str(), {}};
}

Emitted dispatch(const RunConfig& c, std::ostream& err) {
  if (c.command == "symmetry-tables") return symmetry_tables(c);
  if (c.command == "spectrum") return spectrum(c);
  if (c.command == "degeneracy") return degeneracy(c, err);
  if (c.command == "ground-scan") return ground_scan(c);
  if (c.command == "dynamics") return dynamics(c);
  if (c.command == "return-prob") return return_prob(c);
  if (c.command == "schmidt") return schmidt(c);
  if (c.command == "analytic-m5") return analytic_m5(c);
  if (c.command == "geometry") return geometry(c);
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    throw UsageError("unknown command '" + command + "'");
  }
  params_of(*this).validate();
  if (sector) require_sector(*sector);
  if (!std::isfinite(t_max) || t_max < 0) throw UsageError("--t-max must be non-negative");
  if (t_steps < 1) throw UsageError("--t-steps must be at least 1");
  if (!(tol_deg > 0) || !(tol_support > 0)) throw UsageError("tolerances must be positive");
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  if (jz_points < 1 || !std::isfinite(jz_min) || !std::isfinite(jz_max) || jz_min > jz_max) {
    throw UsageError("invalid Jz/J grid");
  }
  if (command == "dynamics" || command == "return-prob" ||
      (command == "schmidt" && state != "groundstate")) {
    StateSpec::parse(state);
  }
}

std::string RunConfig::describe() const {
  std::ostringstream s;
  s << "hexstar " << command << " alpha=" << num(alpha) << " jz_over_j=" << num(jz_over_j)
    << " state=" << state << " sector=" << (sector ? std::to_string(*sector) : "all")
    << " t_max=" << num(t_max) << " t_steps=" << t_steps << " tol_deg=" << num(tol_deg)
    << " tol_support=" << num(tol_support) << " format=" << format;
  if (command == "ground-scan") {
    s << " jz_min=" << num(jz_min) << " jz_max=" << num(jz_max) << " jz_points=" << jz_points;
  }
  return s.str();
}

void run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const Emitted e = dispatch(config, err);
  if (config.output.empty()) {
    out << e.main;
    return;
  }
  write_atomically(config.output, e.main);
  if (e.sidecar) write_atomically(config.output + ".json", *e.sidecar);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string sector = "all";

  CLI::App app("Exact diagonalization and quench dynamics of a 12-site two-ring spin star",
               "hexstar");
  app.require_subcommand(1);
  app.add_option("--alpha", config.alpha, "interaction exponent (coupling 1/d^alpha)");
  app.add_option("--jz-over-j", config.jz_over_j, "anisotropy Jz/J");
  app.add_option("--state", config.state,
                 "xi | chi | zeta:theta_o,phi_o,theta_i,phi_i | config:f | groundstate");
  app.add_option("--sector", sector, "spin projection M in [-6, 6] or 'all'");
  app.add_option("--t-max", config.t_max, "end of the time window (h/J)");
  app.add_option("--t-steps", config.t_steps, "number of time points");
  app.add_option("--tol-deg", config.tol_deg, "relative degeneracy tolerance");
  app.add_option("--tol-support", config.tol_support, "spectral support threshold");
  app.add_option("--output", config.output, "output file (default: stdout)");
  app.add_option("--format", config.format, "csv | json");
  app.add_option("--jz-min", config.jz_min, "ground-scan grid start");
  app.add_option("--jz-max", config.jz_max, "ground-scan grid end");
  app.add_option("--jz-points", config.jz_points, "ground-scan grid size");
  for (const auto& [name, help] : kCommandHelp) app.add_subcommand(name, help)->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("hexstar");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hexstar: " << e.what() << '\n';
    return kUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (sector != "all") {
      std::size_t used = 0;
      int M = 0;
      try {
        M = std::stoi(sector, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != sector.size()) {
        throw UsageError("--sector must be an integer or 'all'");
      }
      config.sector = M;
    }
    run(config, out, err);
    return kOk;
  } catch (const UsageError& e) {
    err << "hexstar: usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    err << "hexstar: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const IoError& e) {
    err << "hexstar: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "hexstar: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hexstar::cli
