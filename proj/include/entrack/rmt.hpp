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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "entrack/numerics.hpp"

namespace entrack::rmt {

struct EnsembleConfig {
  std::size_t alpha = 1;
  std::size_t beta = 1;
  double gamma = 0.0;  ///< entry mean (real, so |gamma| is the modulus)
  double sigma = 1.0;  ///< entry standard deviation, E|x - gamma|^2 = sigma^2
  std::size_t samples = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class WishartMethod {
  Auto,        ///< Bidiagonal when gamma == 0 and alpha > kBidiagonalThreshold.
  Direct,      ///< Draw X, form X X^dagger / beta, diagonalise.
  Bidiagonal,  ///< Laguerre bidiagonal model; gamma must be 0.
};

inline constexpr std::size_t kBidiagonalThreshold = 512;

/// Eigenvalues (descending) of Y = X X^dagger / beta per sample. Sample i
/// draws from RngStream(seed).split(i), so results do not depend on `threads`.
std::vector<Spectrum> sample_wishart(const EnsembleConfig& cfg,
                                     WishartMethod method = WishartMethod::Auto,
                                     unsigned threads = 1);

/// rho = Z Z^dagger / Tr(Z Z^dagger) for alpha x beta complex normal Z with
/// entry mean `gamma`.
Spectrum sample_random_rho(std::size_t alpha, std::size_t beta, std::uint64_t seed,
                           double gamma = 0.0);

/// Entry mean that places the dominant eigenvalue of a random rho near
/// `target` (0 <= target < 1). The spike carries alpha gamma^2 of a trace near
/// alpha (gamma^2 + 1), so gamma^2 / (gamma^2 + 1) = target. Targets below the
/// bulk edge (1 + sqrt(alpha / beta))^2 / alpha are not reached.
double gamma_for_lambda0(double target);

/// Empirical spectral distribution of the pooled spectra evaluated on `grid`:
/// fraction of eigenvalues <= x.
std::vector<double> esd(std::span<const Spectrum> spectra, std::span<const double> grid);

/// Cumulative distribution of the Marchenko-Pastur law (atom included),
/// tabulated once by quadrature and refined per query.
class MpdCdf {
 public:
  MpdCdf(double sigma, double ratio);
  double operator()(double x) const;
  double sigma() const noexcept { return sigma_; }
  double ratio() const noexcept { return ratio_; }

 private:
  double theta_of(double x) const;
  double sigma_, ratio_, lo_, hi_, atom_, scale_;
  std::vector<double> theta_nodes_;
  std::vector<double> cumulative_;
};

/// Shared, cached MpdCdf for (sigma, ratio).
const MpdCdf& mpd_cdf(double sigma, double ratio);

/// sup_x |ESD(x) - MPD CDF(x)| over the pooled eigenvalues.
double mpd_ks(std::span<const Spectrum> spectra, double sigma, double ratio);

/// Two-sample Kolmogorov-Smirnov distance between pooled spectra.
double two_sample_ks(std::span<const Spectrum> a, std::span<const Spectrum> b);

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::vector<double> values;
};

/// Monte Carlo mean of the von Neumann entropy of random rho.
MeanEstimate page_mc(std::size_t alpha, std::size_t beta, std::size_t samples, std::uint64_t seed,
                     unsigned threads = 1);

struct SweepPoint {
  double gamma;
  double mean_lambda0;
  double std_error;
};

/// Mean dominant eigenvalue of Y = X X^dagger / beta for each gamma.
std::vector<SweepPoint> dominant_sweep(std::size_t alpha, std::size_t beta,
                                       std::span<const double> gamma_grid, std::size_t samples,
                                       std::uint64_t seed, unsigned threads = 1);

struct RhoDraw {
  double target;
  double lambda0;
  double entropy;
  double gap;
  double renyi2;
};

/// Random rho draws with dominant eigenvalue targets spread uniformly over
/// [target_lo, target_hi).
std::vector<RhoDraw> decentralized_draws(std::size_t alpha, std::size_t beta, std::size_t samples,
                                         std::uint64_t seed, double target_lo = 0.0,
                                         double target_hi = 1.0, unsigned threads = 1);

struct ConditionalBin {
  double lo, hi, center;
  std::size_t count;
  double mean_entropy;
  double flexible;  ///< flexible_E(center)
};

/// Bins draws by lambda0 into `bins` equal bins over [0, 1).
std::vector<ConditionalBin> conditional_bins(std::span<const RhoDraw> draws, std::size_t alpha,
                                             std::size_t beta, std::size_t bins);

}  // namespace entrack::rmt
