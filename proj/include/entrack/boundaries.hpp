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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entrack::boundaries {

// Tight boundaries for the (lambda0, entropy) plane. All entropies in nats.

/// Two non-zero eigenvalues: -l ln l - (1-l) ln(1-l).
double f1(double lambda0);
/// w equal eigenvalues 1/w: -ln lambda0.
double f2(double lambda0);
/// True when 1/lambda0 is within 1e-9 of an integer (where f2 is attained).
bool f2_attained(double lambda0);
/// (1 - lambda0) ln(alpha) + f1(lambda0), the large-alpha form.
double f3(double lambda0, double alpha);
/// Exact maximum: remaining alpha-1 eigenvalues equal.
double exact_upper(double lambda0, double alpha);

// Marchenko-Pastur law with scale sigma and ratio lambda = alpha/beta.

struct MpdEdges {
  double lower;
  double upper;
};
MpdEdges mpd_edges(double sigma, double ratio);
/// Continuous part nu of the law (the atom at 0 for ratio > 1 is separate).
double mpd_density(double x, double sigma, double ratio);
/// Weight of the atom at 0: max(0, 1 - 1/ratio).
double mpd_atom(double ratio);
/// d-th moment of nu, by quadrature.
double mpd_moment(int d, double sigma, double ratio);

/// Flexible (random-matrix) entropy curve for a given dominant eigenvalue.
double flexible_E(double lambda0, double alpha, double beta);
/// flexible_E at lambda0 = 1/2.
double e_half(double alpha, double beta);
/// Page's average entropy ln(alpha) - alpha/(2 beta).
double page_entropy(double alpha, double beta);
/// Left end of the flexible domain: lambda0 = (1 + sqrt(alpha/beta))^2 / alpha.
double flexible_domain_start(double alpha, double beta);
/// The same curve assembled by quadrature over the MPD (independent route).
double flexible_E_quadrature(double lambda0, double alpha, double beta);

/// Shor-specific curves.
double f_shor(double x);
/// Entropy of {1/2} u {2^m copies of 2^-(m+1)} = (m + 2) ln(2) / 2.
double shor_cluster_entropy(int m);

/// Entanglement-gap boundaries.
double g1(double lambda0);
double g3(double lambda0, double alpha);
double flexible_gap(double lambda0, double alpha, double beta);
double g_shor(double x);

/// Flexible Renyi curve for alpha = beta. degree 1 means the d -> 1 limit;
/// supported degrees: 1, 2, 3, 4, 5, 6.
double renyi_flexible(double lambda0, double alpha, int degree);
/// Same, assembled from MPD moments computed by quadrature.
double renyi_flexible_quadrature(double lambda0, double alpha, int degree);

// Sampled curves for export.

enum class CurveName {
  F1, F2, F3, ExactUpper, FlexibleE, FShor, G1, G3, FlexibleGap, GShor,
  RenyiD1, RenyiD2, MpdDensity,
};

std::optional<CurveName> parse_curve_name(std::string_view name);
std::string_view curve_name(CurveName c);
std::span<const CurveName> all_curves();

struct CurveParams {
  double alpha = 0.0;
  double beta = 0.0;
  double sigma = 1.0;
  int degree = 2;
};

struct BoundaryCurve {
  CurveName name;
  CurveParams params;
  std::vector<std::pair<double, double>> samples;  ///< strictly increasing x
  std::vector<double> clipped;                     ///< grid points outside the domain
  std::vector<bool> extrapolated;                  ///< per sample, flexible_E below its domain
  std::optional<double> page_endpoint;             ///< flexible_E as lambda0 -> 0
};

/// Domain [lo, hi] (closed where the curve is finite) of the named curve.
std::pair<double, double> curve_domain(CurveName c, const CurveParams& params);

/// Deterministic samples of the curve on `grid`. Points outside the domain are
/// dropped and listed in `clipped`; the grid must be strictly increasing.
BoundaryCurve sample_curve(CurveName c, const CurveParams& params, std::span<const double> grid);

/// Evenly spaced grid of `points` values inside the curve's domain.
std::vector<double> default_grid(CurveName c, const CurveParams& params, int points);

}  // namespace entrack::boundaries
