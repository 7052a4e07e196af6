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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace entrack {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  /// max |M[i][j] - conj(M[j][i])| over all entries; requires a square matrix.
  double max_asymmetry() const;
  cplx trace() const;
  double frobenius_norm() const;

  /// this * other^dagger
  ComplexMatrix gram() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Descending, non-negative eigenvalues of a subsystem density matrix.
struct Spectrum {
  std::vector<double> values;
  std::size_t alpha = 0;
  std::size_t beta = 0;

  double lambda0() const { return values.empty() ? 0.0 : values.front(); }
  double lambda1() const { return values.size() < 2 ? 0.0 : values[1]; }
  double sum() const;
};

enum class EigenMethod { Auto, Jacobi, Lapack };

/// Largest size routed to the Jacobi solver by EigenMethod::Auto.
inline constexpr std::size_t kJacobiMaxDim = 64;

/// All eigenvalues of a Hermitian matrix, descending.
/// Throws InvalidInput when `m` is not square or deviates from hermiticity by
/// more than 1e-10 (absolute, scaled by max(1, |M|_F)).
std::vector<double> eigvalsh(const ComplexMatrix& m, EigenMethod method = EigenMethod::Auto);

/// Descending eigenvalues of a real symmetric tridiagonal matrix.
std::vector<double> eigvals_tridiagonal(std::vector<double> diag, std::vector<double> offdiag);

/// Clamps values in [-1e-10, 0) to zero. More negative values throw DomainError.
void clamp_psd(std::vector<double>& values, double tolerance = 1e-10);

// --- integrals -------------------------------------------------------------

enum class IntegralKind {
  A1,     ///< int_a^b sqrt((b-x)(x-a)) dx
  A2,     ///< int_a^b ln(x) sqrt((b-x)(x-a)) dx
  A4,     ///< int_0^b ln(x) sqrt(x(b-x)) dx
  Table,  ///< int_0^t x^(d-1) sqrt((t-x)x) dx, 2 <= d <= 6
};

/// Rational coefficient c_d with int_0^t x^(d-1) sqrt((t-x)x) dx = c_d pi t^(d+1).
double table_coefficient(int degree);

/// Closed-form value of the named integral. For A4 and Table, `a` must be 0
/// and `b` is the upper limit t.
double closed_form_integral(IntegralKind kind, double a, double b, int degree = 0);

/// The integrand whose integral closed_form_integral evaluates; used by tests
/// and by the boundary cross-checks.
std::function<double(double)> closed_form_integrand(IntegralKind kind, double a, double b,
                                                    int degree = 0);

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration on [a, b] after the endpoint
/// substitution x = a + (b - a)(1 - cos t)/2, which turns square-root edges
/// into smooth integrands. Throws ConvergenceError (carrying the best estimate
/// and its error bound) if `tol` is not reached within `max_panels` panels.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, int max_panels = 4000);

inline double quadrature(const std::function<double(double)>& f, double a, double b,
                         double tol) {
  return integrate(f, a, b, tol).value;
}

}  // namespace entrack
