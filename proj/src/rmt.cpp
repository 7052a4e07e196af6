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

#include "entrack/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "blas.hpp"
#include "entrack/boundaries.hpp"
#include "entrack/error.hpp"
#include "entrack/parallel.hpp"
#include "entrack/rng.hpp"
#include "entrack/spectral.hpp"

namespace entrack::rmt {

void EnsembleConfig::validate() const {
  if (alpha < 1 || beta < 1) throw DomainError("ensemble dimensions must be positive");
  if (alpha > beta) throw DomainError("ensemble requires alpha <= beta");
  if (samples < 1) throw DomainError("ensemble needs at least one sample");
  if (!(sigma > 0.0)) throw DomainError("ensemble sigma must be positive");
}

namespace {

std::vector<double> direct_sample(const EnsembleConfig& cfg, RngStream& rng, bool trace_normalize) {
  const std::size_t a = cfg.alpha;
  const std::size_t b = cfg.beta;
  std::vector<cplx> x(a * b);
  for (auto& z : x) z = rng.complex_normal(cfg.gamma, cfg.sigma);
  ComplexMatrix y(a, a);
  detail::herk_rows(x.data(), a, b, 1.0 / static_cast<double>(b), y.data().data());
  auto w = eigvalsh(y);
  if (trace_normalize) {
    const double tr = y.trace().real();
    for (double& v : w) v /= tr;
  }
  return w;
}

// Squared singular values of the Laguerre bidiagonal model: for complex
// Gaussian X (alpha x beta, E|x|^2 = 1) the eigenvalues of X X^dagger have
// the law of B B^T with B lower bidiagonal,
//   B_ii = chi_{2(beta - i)} / sqrt 2,  B_{i+1,i} = chi_{2(alpha - 1 - i)} / sqrt 2.
std::vector<double> bidiagonal_sample(const EnsembleConfig& cfg, RngStream& rng,
                                      bool trace_normalize) {
  const std::size_t a = cfg.alpha;
  const double b = static_cast<double>(cfg.beta);
  std::vector<double> d(a), e(a > 0 ? a - 1 : 0);
  for (std::size_t i = 0; i < a; ++i) {
    d[i] = rng.chi(2.0 * (b - static_cast<double>(i))) / std::numbers::sqrt2;
    if (i + 1 < a) e[i] = rng.chi(2.0 * static_cast<double>(a - 1 - i)) / std::numbers::sqrt2;
  }
  std::vector<double> diag(a), off(e.size());
  for (std::size_t i = 0; i < a; ++i) diag[i] = d[i] * d[i] + (i > 0 ? e[i - 1] * e[i - 1] : 0.0);
  for (std::size_t i = 0; i + 1 < a; ++i) off[i] = d[i] * e[i];
  auto w = eigvals_tridiagonal(std::move(diag), std::move(off));
  const double scale = cfg.sigma * cfg.sigma / b;
  double tr = 0.0;
  for (double& v : w) {
    v *= scale;
    tr += v;
  }
  if (trace_normalize)
    for (double& v : w) v /= tr;
  return w;
}

WishartMethod resolve(const EnsembleConfig& cfg, WishartMethod method) {
  if (method == WishartMethod::Bidiagonal && cfg.gamma != 0.0)
    throw DomainError("bidiagonal Wishart model requires zero entry mean");
  if (method != WishartMethod::Auto) return method;
  return (cfg.gamma == 0.0 && cfg.alpha > kBidiagonalThreshold) ? WishartMethod::Bidiagonal
                                                               : WishartMethod::Direct;
}

std::vector<double> draw(const EnsembleConfig& cfg, WishartMethod method, RngStream& rng,
                         bool trace_normalize) {
  return method == WishartMethod::Bidiagonal ? bidiagonal_sample(cfg, rng, trace_normalize)
                                             : direct_sample(cfg, rng, trace_normalize);
}

}  // namespace

std::vector<Spectrum> sample_wishart(const EnsembleConfig& cfg, WishartMethod method,
                                     unsigned threads) {
  cfg.validate();
  const WishartMethod m = resolve(cfg, method);
  const RngStream root(cfg.seed);
  std::vector<Spectrum> out(cfg.samples);
  parallel_for(cfg.samples, threads, [&](std::size_t i) {
    RngStream rng = root.split(i);
    auto w = draw(cfg, m, rng, false);
    clamp_psd(w, 1e-10 * std::max(1.0, w.empty() ? 1.0 : w.front()));
    out[i] = Spectrum{std::move(w), cfg.alpha, cfg.beta};
  });
  return out;
}

Spectrum sample_random_rho(std::size_t alpha, std::size_t beta, std::uint64_t seed, double gamma) {
  EnsembleConfig cfg{alpha, beta, gamma, 1.0, 1, seed};
  cfg.validate();
  RngStream rng(seed);
  auto w = draw(cfg, resolve(cfg, WishartMethod::Auto), rng, true);
  return make_spectrum(std::move(w), alpha, beta);
}

double gamma_for_lambda0(double target) {
  if (!(target >= 0.0 && target < 1.0)) throw DomainError("gamma_for_lambda0: target must be in [0, 1)");
  return std::sqrt(target / (1.0 - target));
}

std::vector<double> esd(std::span<const Spectrum> spectra, std::span<const double> grid) {
  std::vector<double> pooled;
  for (const auto& s : spectra) pooled.insert(pooled.end(), s.values.begin(), s.values.end());
  if (pooled.empty()) throw InvalidInput("esd: no eigenvalues");
  std::sort(pooled.begin(), pooled.end());
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) {
    const auto n = std::upper_bound(pooled.begin(), pooled.end(), x) - pooled.begin();
    out.push_back(static_cast<double>(n) / static_cast<double>(pooled.size()));
  }
  return out;
}

// --- MPD cumulative distribution ---------------------------------------------

namespace {
constexpr int kCdfNodes = 1024;
}

MpdCdf::MpdCdf(double sigma, double ratio) : sigma_(sigma), ratio_(ratio) {
  const auto edges = boundaries::mpd_edges(sigma, ratio);
  lo_ = edges.lower;
  hi_ = edges.upper;
  atom_ = boundaries::mpd_atom(ratio);
  scale_ = 1.0 - atom_;
  theta_nodes_.resize(kCdfNodes + 1);
  cumulative_.resize(kCdfNodes + 1);
  auto density = [this](double x) { return boundaries::mpd_density(x, sigma_, ratio_); };
  double acc = 0.0;
  for (int k = 0; k <= kCdfNodes; ++k) {
    theta_nodes_[k] = std::numbers::pi * k / kCdfNodes;
    if (k > 0) {
      const double x0 = lo_ + 0.5 * (hi_ - lo_) * (1.0 - std::cos(theta_nodes_[k - 1]));
      const double x1 = lo_ + 0.5 * (hi_ - lo_) * (1.0 - std::cos(theta_nodes_[k]));
      acc += integrate(density, x0, x1, 1e-14).value;
    }
    cumulative_[k] = acc;
  }
}

double MpdCdf::theta_of(double x) const {
  const double c = 1.0 - 2.0 * (x - lo_) / (hi_ - lo_);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double MpdCdf::operator()(double x) const {
  if (x < 0.0) return 0.0;
  if (x <= lo_) return atom_;
  if (x >= hi_) return atom_ + cumulative_.back();
  const double theta = theta_of(x);
  const int k = std::min(kCdfNodes - 1, static_cast<int>(theta / std::numbers::pi * kCdfNodes));
  const double xk = lo_ + 0.5 * (hi_ - lo_) * (1.0 - std::cos(theta_nodes_[k]));
  auto density = [this](double t) { return boundaries::mpd_density(t, sigma_, ratio_); };
  const double partial = x > xk ? integrate(density, xk, x, 1e-14).value : 0.0;
  return atom_ + cumulative_[k] + partial;
}

const MpdCdf& mpd_cdf(double sigma, double ratio) {
  static std::mutex mutex;
  static std::map<std::pair<double, double>, std::unique_ptr<MpdCdf>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{sigma, ratio}];
  if (!slot) slot = std::make_unique<MpdCdf>(sigma, ratio);
  return *slot;
}

double mpd_ks(std::span<const Spectrum> spectra, double sigma, double ratio) {
  std::vector<double> pooled;
  for (const auto& s : spectra) pooled.insert(pooled.end(), s.values.begin(), s.values.end());
  if (pooled.empty()) throw InvalidInput("mpd_ks: no eigenvalues");
  std::sort(pooled.begin(), pooled.end());
  const MpdCdf& cdf = mpd_cdf(sigma, ratio);
  const double n = static_cast<double>(pooled.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    const double f = cdf(pooled[i]);
    ks = std::max({ks, std::abs(static_cast<double>(i + 1) / n - f),
                   std::abs(static_cast<double>(i) / n - f)});
  }
  return ks;
}

double two_sample_ks(std::span<const Spectrum> a, std::span<const Spectrum> b) {
  std::vector<double> pa, pb;
  for (const auto& s : a) pa.insert(pa.end(), s.values.begin(), s.values.end());
  for (const auto& s : b) pb.insert(pb.end(), s.values.begin(), s.values.end());
  if (pa.empty() || pb.empty()) throw InvalidInput("two_sample_ks: empty sample");
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  std::size_t i = 0, j = 0;
  double ks = 0.0;
  while (i < pa.size() && j < pb.size()) {
    const double x = std::min(pa[i], pb[j]);
    while (i < pa.size() && pa[i] <= x) ++i;
    while (j < pb.size() && pb[j] <= x) ++j;
    ks = std::max(ks, std::abs(static_cast<double>(i) / pa.size() - static_cast<double>(j) / pb.size()));
  }
  return ks;
}

// --- experiments ---------------------------------------------------------------

namespace {
MeanEstimate summarize(std::vector<double> values) {
  MeanEstimate m;
  const double n = static_cast<double>(values.size());
  for (double v : values) m.mean += v;
  m.mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - m.mean) * (v - m.mean);
  m.std_error = values.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
  m.values = std::move(values);
  return m;
}
}  // namespace

MeanEstimate page_mc(std::size_t alpha, std::size_t beta, std::size_t samples, std::uint64_t seed,
                     unsigned threads) {
  EnsembleConfig{alpha, beta, 0.0, 1.0, samples, seed}.validate();
  const RngStream root(seed);
  std::vector<double> entropies(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    const Spectrum s = sample_random_rho(alpha, beta, root.split(i).next_u64());
    entropies[i] = von_neumann(s);
  });
  return summarize(std::move(entropies));
}

std::vector<SweepPoint> dominant_sweep(std::size_t alpha, std::size_t beta,
                                       std::span<const double> gamma_grid, std::size_t samples,
                                       std::uint64_t seed, unsigned threads) {
  const RngStream root(seed);
  std::vector<SweepPoint> out;
  for (std::size_t g = 0; g < gamma_grid.size(); ++g) {
    EnsembleConfig cfg{alpha, beta, gamma_grid[g], 1.0, samples, root.split(g).next_u64()};
    const auto spectra = sample_wishart(cfg, WishartMethod::Auto, threads);
    std::vector<double> top;
    top.reserve(spectra.size());
    for (const auto& s : spectra) top.push_back(s.lambda0());
    const MeanEstimate m = summarize(std::move(top));
    out.push_back({gamma_grid[g], m.mean, m.std_error});
  }
  return out;
}

std::vector<RhoDraw> decentralized_draws(std::size_t alpha, std::size_t beta, std::size_t samples,
                                         std::uint64_t seed, double target_lo, double target_hi,
                                         unsigned threads) {
  if (!(target_lo >= 0.0 && target_hi <= 1.0 && target_lo < target_hi))
    throw DomainError("decentralized_draws: need 0 <= target_lo < target_hi <= 1");
  const RngStream root(seed);
  std::vector<RhoDraw> out(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    RngStream rng = root.split(i);
    const double t = std::min(target_lo + (target_hi - target_lo) * rng.uniform(), 1.0 - 1e-12);
    const Spectrum s = sample_random_rho(alpha, beta, rng.next_u64(), gamma_for_lambda0(t));
    out[i] = {t, s.lambda0(), von_neumann(s), ent_gap(s), renyi(s, 2.0)};
  });
  return out;
}

std::vector<ConditionalBin> conditional_bins(std::span<const RhoDraw> draws, std::size_t alpha,
                                             std::size_t beta, std::size_t bins) {
  if (bins < 1) throw DomainError("conditional_bins: need at least one bin");
  std::vector<ConditionalBin> out(bins);
  std::vector<double> sums(bins, 0.0);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = static_cast<double>(b) / bins;
    out[b].hi = static_cast<double>(b + 1) / bins;
    out[b].center = 0.5 * (out[b].lo + out[b].hi);
    out[b].count = 0;
    out[b].flexible = boundaries::flexible_E(out[b].center, alpha, beta);
  }
  for (const auto& d : draws) {
    const auto b = std::min(bins - 1, static_cast<std::size_t>(d.lambda0 * bins));
    ++out[b].count;
    sums[b] += d.entropy;
  }
  for (std::size_t b = 0; b < bins; ++b)
    out[b].mean_entropy = out[b].count ? sums[b] / out[b].count : 0.0;
  return out;
}

}  // namespace entrack::rmt
