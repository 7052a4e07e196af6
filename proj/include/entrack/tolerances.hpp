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

// Single registry of numerical and statistical tolerances. Monte Carlo
// tolerances come with the pilot run that motivated them.

namespace entrack::tol {

// Deterministic numerics.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-9;
inline constexpr double kPsd = 1e-10;
inline constexpr double kNorm = 1e-9;
inline constexpr double kUnitary = 1e-12;
inline constexpr double kContainment = 1e-9;
inline constexpr double kGroundResidual = 1e-8;
inline constexpr double kTableCoefficient = 1e-7;
inline constexpr double kShorCluster = 1e-6;

// Monte Carlo (pilot: seed 1..5 runs at the sizes below).
inline constexpr double kPageRelative = 0.01;       ///< alpha = 128, 30 draws per beta
inline constexpr double kMpdKs = 0.02;              ///< alpha = 2000, 10 pooled draws
inline constexpr double kMpdKsRemainder = 0.05;     ///< spectrum below a decentralized outlier
inline constexpr double kDominantRelative = 0.02;   ///< alpha = 100, beta = 200, 500 draws
inline constexpr double kEdgeRelative = 0.05;       ///< same setting at gamma = 0
inline constexpr double kConditionalNats = 0.05;    ///< alpha = beta = 64, bins >= 30 draws
inline constexpr double kRenyiNats = 0.05;          ///< alpha = beta = 128, 30 draws
inline constexpr double kGapNats = 0.1;             ///< alpha = 128, 30 draws per beta
inline constexpr double kFlexibleExcess = 0.02;     ///< scenario points above flexible_E
inline constexpr double kShorCeiling = 0.05;        ///< above e_half(2^n, 2^(n+3))
inline constexpr double kQftLambda0 = 0.02;
inline constexpr double kQftEntropy = 0.05;

inline constexpr int kConditionalMinCount = 30;

}  // namespace entrack::tol
