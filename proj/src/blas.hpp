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

// Internal BLAS/LAPACK glue. Not installed.

#pragma once

#include <cstddef>

#include "entrack/numerics.hpp"

namespace entrack::detail {

/// Pins OpenBLAS to one internal thread (idempotent). Parallelism is done at
/// the sample level so that results never depend on BLAS thread partitioning.
void ensure_blas_single_threaded();

/// out (rows x rows) = scale * M M^dagger for row-major M (rows x cols).
/// Fills both triangles.
void herk_rows(const cplx* m, std::size_t rows, std::size_t cols, double scale, cplx* out);

}  // namespace entrack::detail
