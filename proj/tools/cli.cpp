// Copyright 2026 The entrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "entrack/boundaries.hpp"
#include "entrack/error.hpp"
#include "entrack/export.hpp"
#include "entrack/rmt.hpp"
#include "entrack/scenarios.hpp"
#include "entrack/spectral.hpp"

namespace entrack::cli {

namespace fs = std::filesystem;

namespace {

struct Common {
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  bool json = false;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c, bool needs_seed) {
  auto* seed = sub->add_option("--seed", c.seed, "RNG seed (u64)");
  if (needs_seed) seed->required();
  sub->add_option("--out", c.out, "Output directory")->capture_default_str();
  sub->add_flag("--json", c.json, "Also write a JSON file with embedded boundary curves");
  sub->add_option("--threads", c.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "entrack";
  for (const auto& a : args) s += " " + a;
  return s;
}

/// Collects the run's files and manifest.
class Run {
 public:
  Run(const Common& c, std::string command) : dir_(c.out) {
    manifest_.command = std::move(command);
    manifest_.version = ENTRACK_VERSION;
    manifest_.started = io::utc_timestamp();
    if (c.seed) manifest_.seeds.push_back(*c.seed);
    fs::create_directories(dir_);
  }

  void config(std::string key, std::string value) {
    manifest_.config.emplace_back(std::move(key), std::move(value));
  }
  void result(std::string key, std::string value) {
    manifest_.results.emplace_back(std::move(key), std::move(value));
  }
  void seeds(const std::vector<std::uint64_t>& s) {
    for (auto v : s)
      if (std::find(manifest_.seeds.begin(), manifest_.seeds.end(), v) == manifest_.seeds.end())
        manifest_.seeds.push_back(v);
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const fs::path path = dir_ / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    body(f);
    f.close();
    if (!f) throw Error("failed writing " + path.string());
    manifest_.outputs.push_back(path);
  }

  void finish(std::ostream& out) {
    manifest_.finished = io::utc_timestamp();
    io::write_manifest(dir_, manifest_);
    for (const auto& p : manifest_.outputs) out << "wrote " << p.string() << '\n';
    out << "wrote " << (dir_ / "manifest.json").string() << '\n';
  }

 private:
  fs::path dir_;
  io::RunManifest manifest_;
};

std::vector<boundaries::BoundaryCurve> overlay_curves(const Trajectory& t) {
  using boundaries::CurveName;
  std::vector<boundaries::BoundaryCurve> out;
  if (t.points.empty()) return out;
  const double alpha = static_cast<double>(t.points.front().alpha);
  const double beta = static_cast<double>(t.points.front().beta);
  std::vector<CurveName> names = {CurveName::F1, CurveName::F2, CurveName::F3,
                                  CurveName::ExactUpper, CurveName::G1, CurveName::G3};
  if (alpha > 1.0) names.push_back(CurveName::FlexibleE), names.push_back(CurveName::FlexibleGap);
  if (t.scenario == "shor") names.push_back(CurveName::FShor), names.push_back(CurveName::GShor);
  for (CurveName c : names) {
    const boundaries::CurveParams p{alpha, beta, 1.0, 2};
    out.push_back(boundaries::sample_curve(c, p, boundaries::default_grid(c, p, 200)));
  }
  return out;
}

void write_trajectory(Run& run, const Common& c, const Trajectory& t) {
  const std::span<const Trajectory> one(&t, 1);
  run.write("trajectory.csv", [&](std::ostream& o) { io::write_trajectory_csv(o, one); });
  if (c.json) {
    const auto curves = overlay_curves(t);
    run.write("trajectory.json", [&](std::ostream& o) { o << io::trajectory_json(one, curves); });
  }
  for (const auto& [k, v] : t.config) run.config(k, v);
  run.seeds(t.seeds);
  run.result("points", std::to_string(t.points.size()));
}

std::string fmt(double v) { return io::format_double(v); }

// --- subcommands -------------------------------------------------------------------

struct AdiabaticArgs {
  Common common;
  std::string instance;
  int partitions = 3;
  double s_step = 0.1;
};

int cmd_adiabatic(const AdiabaticArgs& a, const std::string& command, std::ostream& out) {
  const ECInstance inst = ECInstance::load(a.instance);
  AdiabaticOptions opts{a.s_step, a.partitions, *a.common.seed, a.common.threads};
  Run run(a.common, command);
  run.config("instance", fs::path(a.instance).filename().string());
  const Trajectory t = adiabatic_trajectory(inst, opts);
  write_trajectory(run, a.common, t);
  run.finish(out);
  return kExitOk;
}

struct GroverArgs {
  Common common;
  std::string instance;
};

int cmd_grover(const GroverArgs& a, const std::string& command, std::ostream& out) {
  const ECInstance inst = ECInstance::load(a.instance);
  Run run(a.common, command);
  run.config("instance", fs::path(a.instance).filename().string());
  const GroverResult r = grover_ec_trajectory(inst, *a.common.seed);
  write_trajectory(run, a.common, r.trajectory);
  run.result("iterations", std::to_string(r.iterations));
  run.result("success_probability", fmt(r.success_probability));
  run.finish(out);
  out << "success probability " << fmt(r.success_probability) << " after " << r.iterations
      << " iterations\n";
  return kExitOk;
}

struct ShorArgs {
  Common common;
  std::uint64_t N = 15;
  std::uint64_t a = 7;
};

int cmd_shor(const ShorArgs& s, const std::string& command, std::ostream& out) {
  ShorConfig cfg{s.N, s.a, *s.common.seed};
  cfg.validate();
  Run run(s.common, command);
  const ShorResult r = shor_trajectory(cfg);
  write_trajectory(run, s.common, r.trajectory);
  std::string factors;
  for (auto f : r.factors) factors += (factors.empty() ? "" : " ") + std::to_string(f);
  std::string bits;
  for (int b : r.bits) bits += static_cast<char>('0' + b);
  run.result("success", r.success ? "true" : "false");
  run.result("factors", factors);
  run.result("short_circuit", r.short_circuit ? "true" : "false");
  run.result("bits", bits);
  run.result("measured", std::to_string(r.measured));
  run.result("order", r.order ? std::to_string(*r.order) : "");
  run.result("failure", r.failure);
  run.finish(out);
  if (r.success) out << "factors " << factors << '\n';
  else out << "no factors: " << r.failure << '\n';
  return kExitOk;
}

struct PrimesArgs {
  Common common;
  int n = 14;
  bool qft = false;
};

int cmd_primes(const PrimesArgs& p, const std::string& command, std::ostream& out) {
  Run run(p.common, command);
  const Trajectory t = prime_trajectory(p.n, p.qft);
  write_trajectory(run, p.common, t);
  run.finish(out);
  return kExitOk;
}

struct MpdArgs {
  Common common;
  std::size_t alpha = 10000;
  double ratio = 0.5;
  double sigma = 1.0;
  std::size_t samples = 10;
  int bins = 100;
};

int cmd_rmt_mpd(const MpdArgs& m, const std::string& command, std::ostream& out) {
  if (!(m.ratio > 0.0 && m.ratio <= 1.0)) throw InvalidInput("--ratio must lie in (0, 1]");
  const auto beta = static_cast<std::size_t>(std::llround(static_cast<double>(m.alpha) / m.ratio));
  rmt::EnsembleConfig cfg{m.alpha, beta, 0.0, m.sigma, m.samples, *m.common.seed};
  cfg.validate();
  Run run(m.common, command);
  run.config("alpha", std::to_string(m.alpha));
  run.config("beta", std::to_string(beta));
  run.config("ratio", fmt(m.ratio));
  run.config("sigma", fmt(m.sigma));
  run.config("samples", std::to_string(m.samples));
  run.config("bins", std::to_string(m.bins));
  const auto spectra = rmt::sample_wishart(cfg, rmt::WishartMethod::Auto, m.common.threads);
  const double true_ratio = static_cast<double>(m.alpha) / static_cast<double>(beta);
  const auto edges = boundaries::mpd_edges(m.sigma, true_ratio);
  const double hi = 1.1 * edges.upper;
  const double width = hi / m.bins;
  std::vector<double> counts(static_cast<std::size_t>(m.bins), 0.0);
  double total = 0.0, above = 0.0;
  for (const auto& s : spectra)
    for (double v : s.values) {
      total += 1.0;
      if (v > 1.1 * edges.upper) above += 1.0;
      const auto b = std::min<std::size_t>(counts.size() - 1, static_cast<std::size_t>(v / width));
      counts[b] += 1.0;
    }
  io::Table table{{"bin_lo", "bin_hi", "center", "density", "mpd_density"}, {}};
  for (int b = 0; b < m.bins; ++b) {
    const double lo = b * width, c = lo + 0.5 * width;
    table.rows.push_back({lo, lo + width, c, counts[b] / (total * width),
                          boundaries::mpd_density(c, m.sigma, true_ratio)});
  }
  run.write("mpd.csv", [&](std::ostream& o) { io::write_table_csv(o, table); });
  const double ks = rmt::mpd_ks(spectra, m.sigma, true_ratio);
  run.result("ks", fmt(ks));
  run.result("lambda_minus", fmt(edges.lower));
  run.result("lambda_plus", fmt(edges.upper));
  run.result("fraction_above_1.1_lambda_plus", fmt(above / total));
  run.finish(out);
  out << "KS distance " << fmt(ks) << '\n';
  return kExitOk;
}

struct DominantArgs {
  Common common;
  std::size_t alpha = 100;
  std::size_t beta = 200;
  double gamma_max = 2.0;
  double gamma_step = 0.25;
  std::size_t samples = 500;
};

int cmd_rmt_dominant(const DominantArgs& d, const std::string& command, std::ostream& out) {
  if (!(d.gamma_step > 0.0) || d.gamma_max < 0.0) throw InvalidInput("invalid gamma grid");
  rmt::EnsembleConfig{d.alpha, d.beta, 0.0, 1.0, d.samples, 0}.validate();
  std::vector<double> grid;
  const auto steps = static_cast<long>(std::floor(d.gamma_max / d.gamma_step + 1e-9));
  for (long k = 0; k <= steps; ++k) grid.push_back(k * d.gamma_step);
  Run run(d.common, command);
  run.config("alpha", std::to_string(d.alpha));
  run.config("beta", std::to_string(d.beta));
  run.config("gamma_max", fmt(d.gamma_max));
  run.config("gamma_step", fmt(d.gamma_step));
  run.config("samples", std::to_string(d.samples));
  const auto sweep =
      rmt::dominant_sweep(d.alpha, d.beta, grid, d.samples, *d.common.seed, d.common.threads);
  const double lp = boundaries::mpd_edges(1.0, static_cast<double>(d.alpha) / d.beta).upper;
  io::Table table{{"gamma", "mean_lambda0", "std_error", "alpha_gamma2", "lambda_plus", "reference"},
                  {}};
  for (const auto& p : sweep) {
    const double ag2 = static_cast<double>(d.alpha) * p.gamma * p.gamma;
    table.rows.push_back({p.gamma, p.mean_lambda0, p.std_error, ag2, lp, std::max(ag2, lp)});
  }
  run.write("dominant.csv", [&](std::ostream& o) { io::write_table_csv(o, table); });
  run.finish(out);
  return kExitOk;
}

struct PageArgs {
  Common common;
  std::size_t alpha = 128;
  std::vector<std::size_t> betas = {128, 256, 512};
  std::size_t samples = 30;
};

int cmd_rmt_page(const PageArgs& p, const std::string& command, std::ostream& out) {
  Run run(p.common, command);
  run.config("alpha", std::to_string(p.alpha));
  std::string betas;
  for (auto b : p.betas) betas += (betas.empty() ? "" : " ") + std::to_string(b);
  run.config("betas", betas);
  run.config("samples", std::to_string(p.samples));
  io::Table rows{{"beta", "sample", "entropy", "page_entropy"}, {}};
  io::Table summary{{"beta", "mean_entropy", "std_error", "page_entropy", "relative_error"}, {}};
  const RngStream root(*p.common.seed);
  for (std::size_t i = 0; i < p.betas.size(); ++i) {
    const std::size_t beta = p.betas[i];
    const auto est = rmt::page_mc(p.alpha, beta, p.samples, root.split(beta).seed(), p.common.threads);
    const double page = boundaries::page_entropy(static_cast<double>(p.alpha), static_cast<double>(beta));
    for (std::size_t k = 0; k < est.values.size(); ++k)
      rows.rows.push_back({static_cast<double>(beta), static_cast<double>(k), est.values[k], page});
    summary.rows.push_back({static_cast<double>(beta), est.mean, est.std_error, page,
                            std::abs(est.mean - page) / page});
  }
  run.write("page.csv", [&](std::ostream& o) { io::write_table_csv(o, rows); });
  run.write("page_summary.csv", [&](std::ostream& o) { io::write_table_csv(o, summary); });
  run.finish(out);
  return kExitOk;
}

struct ConditionalArgs {
  Common common;
  std::size_t alpha = 64;
  std::size_t beta = 64;
  std::size_t samples = 3000;
  std::size_t bins = 10;
};

int cmd_rmt_conditional(const ConditionalArgs& c, const std::string& command, std::ostream& out) {
  Run run(c.common, command);
  run.config("alpha", std::to_string(c.alpha));
  run.config("beta", std::to_string(c.beta));
  run.config("samples", std::to_string(c.samples));
  run.config("bins", std::to_string(c.bins));
  const auto draws =
      rmt::decentralized_draws(c.alpha, c.beta, c.samples, *c.common.seed, 0.0, 1.0, c.common.threads);
  const auto bins = rmt::conditional_bins(draws, c.alpha, c.beta, c.bins);
  const double a = static_cast<double>(c.alpha), b = static_cast<double>(c.beta);
  io::Table dt{{"target", "lambda0", "entropy", "gap", "renyi_2", "flexible_E", "flexible_gap"}, {}};
  for (const auto& d : draws)
    dt.rows.push_back({d.target, d.lambda0, d.entropy, d.gap, d.renyi2,
                       boundaries::flexible_E(d.lambda0, a, b),
                       boundaries::flexible_gap(d.lambda0, a, b)});
  io::Table bt{{"bin_lo", "bin_hi", "center", "count", "mean_entropy", "flexible_E"}, {}};
  for (const auto& x : bins)
    bt.rows.push_back({x.lo, x.hi, x.center, static_cast<double>(x.count), x.mean_entropy, x.flexible});
  run.write("draws.csv", [&](std::ostream& o) { io::write_table_csv(o, dt); });
  run.write("conditional.csv", [&](std::ostream& o) { io::write_table_csv(o, bt); });
  run.finish(out);
  return kExitOk;
}

struct BoundaryArgs {
  Common common;
  std::string curve;
  double alpha = 0.0;
  double beta = 0.0;
  double sigma = 1.0;
  int degree = 2;
  int grid = 200;
};

int cmd_boundary(const BoundaryArgs& b, const std::string& command, std::ostream& out) {
  const auto name = boundaries::parse_curve_name(b.curve);
  if (!name) throw InvalidInput("unknown curve '" + b.curve + "'");
  const boundaries::CurveParams params{b.alpha, b.beta, b.sigma, b.degree};
  const auto curve =
      boundaries::sample_curve(*name, params, boundaries::default_grid(*name, params, b.grid));
  Run run(b.common, command);
  run.config("curve", b.curve);
  run.config("alpha", fmt(b.alpha));
  run.config("beta", fmt(b.beta));
  run.config("sigma", fmt(b.sigma));
  run.config("degree", std::to_string(b.degree));
  run.config("grid", std::to_string(b.grid));
  run.write("boundary.csv", [&](std::ostream& o) { io::write_curve_csv(o, curve); });
  if (b.common.json)
    run.write("boundary.json", [&](std::ostream& o) {
      o << io::trajectory_json({}, std::span<const boundaries::BoundaryCurve>(&curve, 1));
    });
  if (curve.page_endpoint) run.result("page_endpoint", fmt(*curve.page_endpoint));
  run.result("samples", std::to_string(curve.samples.size()));
  run.finish(out);
  return kExitOk;
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  const auto rows = io::read_trajectory_csv(in);
  std::size_t bad = 0;
  for (const auto& r : rows) {
    const bool ok = tight_contained(r.lambda0, r.entropy, r.alpha) && r.gap >= 0.0 &&
                    r.alpha <= r.beta;
    if (!ok) {
      ++bad;
      err << "violation: " << r.scenario << " '" << r.label << "' lambda0 = " << fmt(r.lambda0)
          << " E = " << fmt(r.entropy) << " gap = " << fmt(r.gap) << '\n';
    }
  }
  out << rows.size() << " rows, " << bad << " violations\n";
  return bad == 0 ? kExitOk : kExitFailure;
}

struct MakeInstanceArgs {
  int n = 10;
  int clauses = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_make_instance(const MakeInstanceArgs& m, std::ostream& out) {
  const ECInstance inst = generate_instance(m.n, m.seed, m.clauses);
  std::ofstream f(m.out);
  if (!f) throw Error("cannot write " + m.out);
  inst.write(f);
  out << "wrote " << m.out << " (" << inst.clauses.size() << " clauses, solution "
      << solution_bits(*inst.known_solution, inst.n) << ")\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement trajectories of quantum algorithms", "entrack"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ENTRACK_VERSION);

  AdiabaticArgs adiabatic;
  auto* s_ad = app.add_subcommand("adiabatic", "Adiabatic Exact Cover ground-state trajectory");
  s_ad->add_option("--instance", adiabatic.instance, "Instance file")->required()->check(CLI::ExistingFile);
  s_ad->add_option("--partitions", adiabatic.partitions, "Random half-splits")
      ->check(CLI::Range(1, 64))->capture_default_str();
  s_ad->add_option("--s-step", adiabatic.s_step, "Interpolation step")->capture_default_str();
  add_common(s_ad, adiabatic.common, true);

  GroverArgs grover;
  auto* s_gr = app.add_subcommand("grover", "Grover search for an Exact Cover instance");
  s_gr->add_option("--instance", grover.instance, "Instance file")->required()->check(CLI::ExistingFile);
  add_common(s_gr, grover.common, true);

  ShorArgs shor;
  auto* s_sh = app.add_subcommand("shor", "Semi-classical Shor factoring");
  s_sh->add_option("--N", shor.N, "Number to factor")->required();
  s_sh->add_option("--a", shor.a, "Base")->required();
  add_common(s_sh, shor.common, true);

  PrimesArgs primes;
  auto* s_pr = app.add_subcommand("primes", "k-almost prime states and their unions");
  s_pr->add_option("--n", primes.n, "Even qubit count")->required();
  s_pr->add_flag("--qft", primes.qft, "Add points after a full-register QFT");
  add_common(s_pr, primes.common, false);

  auto* s_rmt = app.add_subcommand("rmt", "Random-matrix experiments");
  s_rmt->require_subcommand(1);
  MpdArgs mpd;
  auto* s_mpd = s_rmt->add_subcommand("mpd", "Wishart spectrum histogram against the MPD");
  s_mpd->add_option("--alpha", mpd.alpha)->required();
  s_mpd->add_option("--ratio", mpd.ratio, "alpha / beta")->required();
  s_mpd->add_option("--sigma", mpd.sigma)->capture_default_str();
  s_mpd->add_option("--samples", mpd.samples)->check(CLI::PositiveNumber)->capture_default_str();
  s_mpd->add_option("--bins", mpd.bins)->check(CLI::Range(1, 100000))->capture_default_str();
  add_common(s_mpd, mpd.common, true);

  DominantArgs dom;
  auto* s_dom = s_rmt->add_subcommand("dominant", "Mean dominant eigenvalue against entry mean");
  s_dom->add_option("--alpha", dom.alpha)->capture_default_str();
  s_dom->add_option("--beta", dom.beta)->capture_default_str();
  s_dom->add_option("--gamma-max", dom.gamma_max)->capture_default_str();
  s_dom->add_option("--gamma-step", dom.gamma_step)->capture_default_str();
  s_dom->add_option("--samples", dom.samples)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(s_dom, dom.common, true);

  PageArgs page;
  auto* s_page = s_rmt->add_subcommand("page", "Random-state entropies against the Page value");
  s_page->add_option("--alpha", page.alpha)->capture_default_str();
  s_page->add_option("--betas", page.betas)->delimiter(',')->capture_default_str();
  s_page->add_option("--samples", page.samples)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(s_page, page.common, true);

  ConditionalArgs cond;
  auto* s_cond = s_rmt->add_subcommand("conditional", "Entropy binned by dominant eigenvalue");
  s_cond->add_option("--alpha", cond.alpha)->capture_default_str();
  s_cond->add_option("--beta", cond.beta)->capture_default_str();
  s_cond->add_option("--samples", cond.samples)->check(CLI::PositiveNumber)->capture_default_str();
  s_cond->add_option("--bins", cond.bins)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(s_cond, cond.common, true);

  BoundaryArgs bnd;
  std::vector<std::string> curve_names;
  for (auto c : boundaries::all_curves()) curve_names.emplace_back(boundaries::curve_name(c));
  auto* s_bnd = app.add_subcommand("boundary", "Sample a boundary curve");
  s_bnd->add_option("--curve", bnd.curve)->required()->check(CLI::IsMember(curve_names));
  s_bnd->add_option("--alpha", bnd.alpha);
  s_bnd->add_option("--beta", bnd.beta);
  s_bnd->add_option("--sigma", bnd.sigma)->capture_default_str();
  s_bnd->add_option("--degree", bnd.degree)->capture_default_str();
  s_bnd->add_option("--grid", bnd.grid, "Number of grid points")->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  add_common(s_bnd, bnd.common, false);

  std::string validate_file;
  auto* s_val = app.add_subcommand("validate", "Re-check tight containment of a trajectory CSV");
  s_val->add_option("file", validate_file)->required()->check(CLI::ExistingFile);
  s_val->group("");

  MakeInstanceArgs mk;
  auto* s_mk = app.add_subcommand("make-instance", "Generate a unique-solution Exact Cover instance");
  s_mk->add_option("--n", mk.n)->required();
  s_mk->add_option("--clauses", mk.clauses, "Fixed clause count (0: grow until unique)");
  s_mk->add_option("--seed", mk.seed)->required();
  s_mk->add_option("--out", mk.out)->required();
  s_mk->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = join_args(args);
  try {
    if (*s_ad) return cmd_adiabatic(adiabatic, command, out);
    if (*s_gr) return cmd_grover(grover, command, out);
    if (*s_sh) return cmd_shor(shor, command, out);
    if (*s_pr) return cmd_primes(primes, command, out);
    if (*s_mpd) return cmd_rmt_mpd(mpd, command, out);
    if (*s_dom) return cmd_rmt_dominant(dom, command, out);
    if (*s_page) return cmd_rmt_page(page, command, out);
    if (*s_cond) return cmd_rmt_conditional(cond, command, out);
    if (*s_bnd) return cmd_boundary(bnd, command, out);
    if (*s_val) return cmd_validate(validate_file, out, err);
    if (*s_mk) return cmd_make_instance(mk, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace entrack::cli
