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

#include "entrack/boundaries.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entrack/error.hpp"
#include "entrack/numerics.hpp"

namespace entrack::boundaries {

namespace {

using std::numbers::ln2;
using std::numbers::pi;

[[noreturn]] void domain_error(const char* fn, const char* what, double value) {
  std::ostringstream os;
  os << fn << ": " << what << " (got " << value << ")";
  throw DomainError(os.str());
}

void require_lambda0(const char* fn, double l) {
  if (!(l > 0.0 && l <= 1.0)) domain_error(fn, "lambda0 must lie in (0, 1]", l);
}

void require_alpha(const char* fn, double alpha) {
  if (!(alpha >= 2.0)) domain_error(fn, "alpha must be at least 2", alpha);
}

void require_dims(const char* fn, double alpha, double beta) {
  if (!(alpha >= 1.0)) domain_error(fn, "alpha must be at least 1", alpha);
  if (!(beta >= alpha)) domain_error(fn, "beta must be at least alpha", beta);
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double f1(double l) {
  require_lambda0("f1", l);
  return -xlogx(l) - xlogx(1.0 - l);
}

double f2(double l) {
  require_lambda0("f2", l);
  return -std::log(l);
}

bool f2_attained(double l) {
  if (!(l > 0.0 && l <= 1.0)) return false;
  const double w = 1.0 / l;
  return std::abs(w - std::round(w)) <= 1e-9;
}

double f3(double l, double alpha) {
  require_alpha("f3", alpha);
  if (!(l >= 1.0 / alpha - 1e-15 && l <= 1.0)) domain_error("f3", "need 1/alpha <= lambda0 <= 1", l);
  return (1.0 - l) * std::log(alpha) + f1(l);
}

double exact_upper(double l, double alpha) {
  require_alpha("exact_upper", alpha);
  if (!(l >= 1.0 / alpha - 1e-15 && l <= 1.0))
    domain_error("exact_upper", "need 1/alpha <= lambda0 <= 1", l);
  if (l >= 1.0) return 0.0;
  const double rest = 1.0 - l;
  return -xlogx(l) - rest * std::log(rest / (alpha - 1.0));
}

MpdEdges mpd_edges(double sigma, double ratio) {
  if (!(sigma > 0.0)) domain_error("mpd_edges", "sigma must be positive", sigma);
  if (!(ratio > 0.0)) domain_error("mpd_edges", "ratio must be positive", ratio);
  const double s2 = sigma * sigma;
  const double r = std::sqrt(ratio);
  return {s2 * (1.0 - r) * (1.0 - r), s2 * (1.0 + r) * (1.0 + r)};
}

double mpd_density(double x, double sigma, double ratio) {
  const auto [lo, hi] = mpd_edges(sigma, ratio);
  if (x <= lo || x >= hi || x <= 0.0) return 0.0;
  return std::sqrt((hi - x) * (x - lo)) / (2.0 * pi * sigma * sigma * ratio * x);
}

double mpd_atom(double ratio) {
  if (!(ratio > 0.0)) domain_error("mpd_atom", "ratio must be positive", ratio);
  return ratio > 1.0 ? 1.0 - 1.0 / ratio : 0.0;
}

double mpd_moment(int d, double sigma, double ratio) {
  const auto [lo, hi] = mpd_edges(sigma, ratio);
  auto f = [&](double x) { return std::pow(x, d) * mpd_density(x, sigma, ratio); };
  return integrate(f, lo, hi, 1e-13 * std::pow(hi, d)).value;
}

double flexible_E(double l, double alpha, double beta) {
  require_lambda0("flexible_E", l);
  require_dims("flexible_E", alpha, beta);
  if (l >= 1.0) return 0.0;
  const double rest = 1.0 - l;
  return rest * (std::log(alpha) - std::log(rest) - alpha / (2.0 * beta)) - xlogx(l);
}

double e_half(double alpha, double beta) {
  require_dims("e_half", alpha, beta);
  return 0.5 * std::log(alpha) - alpha / (4.0 * beta) + ln2;
}

double page_entropy(double alpha, double beta) {
  require_dims("page_entropy", alpha, beta);
  return std::log(alpha) - alpha / (2.0 * beta);
}

double flexible_domain_start(double alpha, double beta) {
  require_dims("flexible_domain_start", alpha, beta);
  const double r = 1.0 + std::sqrt(alpha / beta);
  return r * r / alpha;
}

double flexible_E_quadrature(double l, double alpha, double beta) {
  require_lambda0("flexible_E_quadrature", l);
  require_dims("flexible_E_quadrature", alpha, beta);
  if (l >= 1.0) return 0.0;
  const double ratio = alpha / beta;
  const double s2 = (1.0 - l) / alpha;
  const auto [lo, hi] = mpd_edges(std::sqrt(s2), ratio);
  // -alpha * int x ln x dnu(x), with the 1/x of the density cancelled.
  auto f = [&](double x) {
    return x > 0.0 ? std::log(x) * std::sqrt(std::max(0.0, (hi - x) * (x - lo))) : 0.0;
  };
  const double scale = hi * hi * (std::abs(std::log(hi)) + 1.0);
  const double integral = integrate(f, lo, hi, 1e-14 * scale).value;
  return -alpha / (2.0 * pi * s2 * ratio) * integral - xlogx(l);
}

double f_shor(double x) {
  if (!(x > 0.5 && x <= 1.0)) domain_error("f_shor", "x must lie in (1/2, 1]", x);
  if (x >= 1.0) return 0.0;
  return -xlogx(x) - (1.0 - x) * std::log(x - 0.5);
}

double shor_cluster_entropy(int m) {
  if (m < 0) domain_error("shor_cluster_entropy", "m must be non-negative", m);
  return (m + 2) * ln2 / 2.0;
}

namespace {
void require_open_lambda0(const char* fn, double l) {
  if (!(l > 0.0 && l < 1.0)) domain_error(fn, "lambda0 must lie in (0, 1)", l);
}
}  // namespace

double g1(double l) {
  require_open_lambda0("g1", l);
  return std::log(l) - std::log(1.0 - l);
}

double g3(double l, double alpha) {
  require_open_lambda0("g3", l);
  if (!(alpha >= 1.0)) domain_error("g3", "alpha must be at least 1", alpha);
  return std::log(l) - std::log((1.0 - l) / alpha);
}

double flexible_gap(double l, double alpha, double beta) {
  require_open_lambda0("flexible_gap", l);
  require_dims("flexible_gap", alpha, beta);
  const double r = 1.0 + std::sqrt(alpha / beta);
  return std::log(l) - std::log((1.0 - l) / alpha * r * r);
}

double g_shor(double x) {
  if (!(x > 0.5 && x <= 1.0)) domain_error("g_shor", "x must lie in (1/2, 1]", x);
  return std::log(x) + ln2 - std::log(2.0 * x - 1.0);
}

namespace {

// alpha * int x^d dnu for ratio 1 and sigma^2 = (1 - l)/alpha, from the table.
double renyi_bulk_from_table(double l, double alpha, int degree) {
  const double s2 = (1.0 - l) / alpha;
  const double t = 4.0 * s2;
  const double integral = table_coefficient(degree) * pi * std::pow(t, degree + 1);
  return alpha * integral / (2.0 * pi * s2);
}

void require_renyi_args(const char* fn, double l, double alpha, int degree) {
  require_lambda0(fn, l);
  if (!(alpha >= 1.0)) domain_error(fn, "alpha must be at least 1", alpha);
  if (degree < 1 || degree > 6) domain_error(fn, "supported degrees are 1 (limit) and 2..6", degree);
}

}  // namespace

double renyi_flexible(double l, double alpha, int degree) {
  require_renyi_args("renyi_flexible", l, alpha, degree);
  if (l >= 1.0) return 0.0;
  if (degree == 1) {
    const double rest = 1.0 - l;
    return rest * (std::log(alpha) - std::log(rest) - 0.5) - xlogx(l);
  }
  if (degree == 2) return -std::log((l * l * (alpha + 2.0) - 4.0 * l + 2.0) / alpha);
  const double d = degree;
  return std::log(std::pow(l, d) + renyi_bulk_from_table(l, alpha, degree)) / (1.0 - d);
}

double renyi_flexible_quadrature(double l, double alpha, int degree) {
  require_renyi_args("renyi_flexible_quadrature", l, alpha, degree);
  if (l >= 1.0) return 0.0;
  const double sigma = std::sqrt((1.0 - l) / alpha);
  if (degree == 1) {
    const auto [lo, hi] = mpd_edges(sigma, 1.0);
    auto f = [&](double x) { return x > 0.0 ? x * std::log(x) * mpd_density(x, sigma, 1.0) : 0.0; };
    const double scale = hi * (std::abs(std::log(hi)) + 1.0);
    return -alpha * integrate(f, lo, hi, 1e-14 * scale).value - xlogx(l);
  }
  const double bulk = alpha * mpd_moment(degree, sigma, 1.0);
  return std::log(std::pow(l, degree) + bulk) / (1.0 - degree);
}

// --- sampled curves ----------------------------------------------------------

namespace {

constexpr std::array<std::pair<CurveName, std::string_view>, 13> kCurveNames = {{
    {CurveName::F1, "f1"},
    {CurveName::F2, "f2"},
    {CurveName::F3, "f3"},
    {CurveName::ExactUpper, "exact_upper"},
    {CurveName::FlexibleE, "flexible_E"},
    {CurveName::FShor, "f_shor"},
    {CurveName::G1, "g1"},
    {CurveName::G3, "g3"},
    {CurveName::FlexibleGap, "flexible_gap"},
    {CurveName::GShor, "g_shor"},
    {CurveName::RenyiD1, "renyi_d1"},
    {CurveName::RenyiD2, "renyi_d2"},
    {CurveName::MpdDensity, "mpd_density"},
}};

constexpr std::array<CurveName, 13> kAllCurves = {
    CurveName::F1,         CurveName::F2,     CurveName::F3,      CurveName::ExactUpper,
    CurveName::FlexibleE,  CurveName::FShor,  CurveName::G1,      CurveName::G3,
    CurveName::FlexibleGap, CurveName::GShor, CurveName::RenyiD1, CurveName::RenyiD2,
    CurveName::MpdDensity,
};

struct Domain {
  double lo, hi;
  bool lo_open, hi_open;
  bool contains(double x) const {
    return (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
};

Domain domain_of(CurveName c, const CurveParams& p) {
  switch (c) {
    case CurveName::F1:
    case CurveName::F2:
    case CurveName::FlexibleE:
    case CurveName::RenyiD1:
    case CurveName::RenyiD2:
      return {0.0, 1.0, true, false};
    case CurveName::F3:
    case CurveName::ExactUpper:
      return {1.0 / p.alpha, 1.0, false, false};
    case CurveName::FShor:
    case CurveName::GShor:
      return {0.5, 1.0, true, false};
    case CurveName::G1:
    case CurveName::G3:
    case CurveName::FlexibleGap:
      return {0.0, 1.0, true, true};
    case CurveName::MpdDensity: {
      const auto e = mpd_edges(p.sigma, p.alpha / p.beta);
      return {e.lower, e.upper, false, false};
    }
  }
  throw DomainError("unknown curve");
}

double evaluate(CurveName c, const CurveParams& p, double x) {
  switch (c) {
    case CurveName::F1: return f1(x);
    case CurveName::F2: return f2(x);
    case CurveName::F3: return f3(x, p.alpha);
    case CurveName::ExactUpper: return exact_upper(x, p.alpha);
    case CurveName::FlexibleE: return flexible_E(x, p.alpha, p.beta);
    case CurveName::FShor: return f_shor(x);
    case CurveName::G1: return g1(x);
    case CurveName::G3: return g3(x, p.alpha);
    case CurveName::FlexibleGap: return flexible_gap(x, p.alpha, p.beta);
    case CurveName::GShor: return g_shor(x);
    case CurveName::RenyiD1: return renyi_flexible(x, p.alpha, 1);
    case CurveName::RenyiD2: return renyi_flexible(x, p.alpha, 2);
    case CurveName::MpdDensity: return mpd_density(x, p.sigma, p.alpha / p.beta);
  }
  throw DomainError("unknown curve");
}

void validate_params(CurveName c, const CurveParams& p) {
  switch (c) {
    case CurveName::F3:
    case CurveName::ExactUpper:
      require_alpha(curve_name(c).data(), p.alpha);
      break;
    case CurveName::G3:
      if (!(p.alpha >= 1.0)) domain_error("g3", "alpha must be at least 1", p.alpha);
      break;
    case CurveName::FlexibleE:
    case CurveName::FlexibleGap:
      require_dims(curve_name(c).data(), p.alpha, p.beta);
      break;
    case CurveName::RenyiD1:
    case CurveName::RenyiD2:
      if (!(p.alpha >= 1.0)) domain_error("renyi", "alpha must be at least 1", p.alpha);
      break;
    case CurveName::MpdDensity:
      if (!(p.alpha > 0.0 && p.beta > 0.0)) domain_error("mpd_density", "alpha, beta must be positive", p.alpha);
      mpd_edges(p.sigma, p.alpha / p.beta);
      break;
    default:
      break;
  }
}

}  // namespace

std::optional<CurveName> parse_curve_name(std::string_view name) {
  for (const auto& [c, n] : kCurveNames)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view curve_name(CurveName c) {
  for (const auto& [k, n] : kCurveNames)
    if (k == c) return n;
  return "unknown";
}

std::span<const CurveName> all_curves() { return kAllCurves; }

std::pair<double, double> curve_domain(CurveName c, const CurveParams& params) {
  validate_params(c, params);
  const Domain d = domain_of(c, params);
  return {d.lo, d.hi};
}

BoundaryCurve sample_curve(CurveName c, const CurveParams& params, std::span<const double> grid) {
  validate_params(c, params);
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw InvalidInput("sample_curve: grid must be strictly increasing");

  const Domain dom = domain_of(c, params);
  BoundaryCurve curve{c, params, {}, {}, {}, std::nullopt};
  const double flexible_start =
      c == CurveName::FlexibleE ? flexible_domain_start(params.alpha, params.beta) : 0.0;
  for (double x : grid) {
    if (!dom.contains(x)) {
      curve.clipped.push_back(x);
      continue;
    }
    curve.samples.emplace_back(x, evaluate(c, params, x));
    curve.extrapolated.push_back(c == CurveName::FlexibleE && x < flexible_start);
  }
  if (c == CurveName::FlexibleE) curve.page_endpoint = page_entropy(params.alpha, params.beta);
  return curve;
}

std::vector<double> default_grid(CurveName c, const CurveParams& params, int points) {
  if (points < 2) throw DomainError("default_grid: need at least two points");
  validate_params(c, params);
  const Domain d = domain_of(c, params);
  const double eps = 1e-6 * (d.hi - d.lo);
  const double lo = d.lo_open ? d.lo + eps : d.lo;
  const double hi = d.hi_open ? d.hi - eps : d.hi;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

}  // namespace entrack::boundaries
