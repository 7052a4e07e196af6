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

#include "entrack/numerics.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>

#include "blas.hpp"
#include "entrack/error.hpp"

extern "C" void openblas_set_num_threads(int);

namespace entrack {

namespace detail {

void ensure_blas_single_threaded() {
  static std::once_flag once;
  std::call_once(once, [] { openblas_set_num_threads(1); });
}

void herk_rows(const cplx* m, std::size_t rows, std::size_t cols, double scale, cplx* out) {
  ensure_blas_single_threaded();
  const auto n = static_cast<blasint>(rows);
  const auto k = static_cast<blasint>(cols);
  cblas_zherk(CblasRowMajor, CblasUpper, CblasNoTrans, n, k, scale, m, k, 0.0, out, n);
  for (std::size_t i = 0; i < rows; ++i) {
    out[i * rows + i] = {out[i * rows + i].real(), 0.0};
    for (std::size_t j = i + 1; j < rows; ++j) out[j * rows + i] = std::conj(out[i * rows + j]);
  }
}

}  // namespace detail

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    std::ostringstream os;
    os << "ComplexMatrix: " << data_.size() << " entries for a " << rows_ << "x" << cols_
       << " matrix";
    throw InvalidInput(os.str());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

double ComplexMatrix::max_asymmetry() const {
  if (!square()) throw InvalidInput("max_asymmetry: matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::gram() const {
  ComplexMatrix out(rows_, rows_);
  if (rows_ == 0) return out;
  if (cols_ == 0) return out;
  detail::herk_rows(data_.data(), rows_, cols_, 1.0, out.data().data());
  return out;
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

namespace {

// Cyclic complex Jacobi. Each rotation U = diag(1, e^{-i phi}) * R(theta)
// annihilates the (p, q) entry of U^dagger A U.
std::vector<double> jacobi_eigenvalues(ComplexMatrix a) {
  const std::size_t n = a.rows();
  const double fro = a.frobenius_norm();
  const double threshold = 1e-13 * fro;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= threshold) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300 || g < 1e-3 * threshold) continue;
        const cplx phase = apq / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx u_pp = c;
        const cplx u_pq = s;
        const cplx u_qp = -s * std::conj(phase);
        const cplx u_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    if (sweep + 1 == kMaxSweeps)
      throw ConvergenceError("eigvalsh: Jacobi did not converge", 0.0, off);
  }

  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a(i, i).real();
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

std::vector<double> lapack_eigenvalues(ComplexMatrix a) {
  detail::ensure_blas_single_threaded();
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(a.rows());
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'N', 'U', n,
                     reinterpret_cast<lapack_complex_double*>(a.data().data()), n, w.data());
  if (info != 0) {
    throw ConvergenceError("eigvalsh: zheevd failed with info=" + std::to_string(info), 0.0,
                           static_cast<double>(info));
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

}  // namespace

std::vector<double> eigvalsh(const ComplexMatrix& m, EigenMethod method) {
  if (!m.square()) {
    std::ostringstream os;
    os << "eigvalsh: matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw InvalidInput(os.str());
  }
  const double asym = m.max_asymmetry();
  if (asym > 1e-10 * std::max(1.0, m.frobenius_norm())) {
    std::ostringstream os;
    os << "eigvalsh: matrix is not Hermitian (max asymmetry " << asym << ")";
    throw InvalidInput(os.str());
  }
  if (m.rows() == 0) return {};
  if (method == EigenMethod::Auto)
    method = m.rows() <= kJacobiMaxDim ? EigenMethod::Jacobi : EigenMethod::Lapack;
  return method == EigenMethod::Jacobi ? jacobi_eigenvalues(m) : lapack_eigenvalues(m);
}

std::vector<double> eigvals_tridiagonal(std::vector<double> diag, std::vector<double> offdiag) {
  if (diag.empty()) return {};
  if (offdiag.size() + 1 != diag.size())
    throw InvalidInput("eigvals_tridiagonal: off-diagonal length must be n-1");
  detail::ensure_blas_single_threaded();
  const lapack_int info =
      LAPACKE_dsterf(static_cast<lapack_int>(diag.size()), diag.data(), offdiag.data());
  if (info != 0)
    throw ConvergenceError("eigvals_tridiagonal: dsterf failed", 0.0, static_cast<double>(info));
  std::sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

void clamp_psd(std::vector<double>& values, double tolerance) {
  for (double& v : values) {
    if (v >= 0.0) continue;
    if (v < -tolerance) {
      std::ostringstream os;
      os << "eigenvalue " << v << " violates positive semidefiniteness (tolerance " << tolerance
         << ")";
      throw DomainError(os.str());
    }
    v = 0.0;
  }
}

// --- integrals -------------------------------------------------------------

double table_coefficient(int degree) {
  switch (degree) {
    case 2: return 1.0 / 16.0;
    case 3: return 5.0 / 128.0;
    case 4: return 7.0 / 256.0;
    case 5: return 21.0 / 1024.0;
    case 6: return 33.0 / 2048.0;
    default:
      throw DomainError("integration table covers degrees 2..6, got " + std::to_string(degree));
  }
}

double closed_form_integral(IntegralKind kind, double a, double b, int degree) {
  using std::numbers::pi;
  using std::numbers::ln2;
  if (!(a >= 0.0) || !(b >= a)) throw DomainError("closed_form_integral: need b >= a >= 0");
  switch (kind) {
    case IntegralKind::A1:
      return pi / 8.0 * (b - a) * (b - a);
    case IntegralKind::A2: {
      if (a == b) return 0.0;
      const double sab = std::sqrt(a * b);
      const double d2 = (a - b) * (a - b);
      return pi / 16.0 *
             (a * a + 6.0 * a * b + b * b - 4.0 * sab * (a + b) - 4.0 * d2 * ln2 +
              2.0 * d2 * std::log(a + b + 2.0 * sab));
    }
    case IntegralKind::A4:
      if (a != 0.0) throw DomainError("closed_form_integral(A4): lower limit must be 0");
      if (b == 0.0) return 0.0;
      return pi / 16.0 * (2.0 * b * b * std::log(b) - b * b * (4.0 * ln2 - 1.0));
    case IntegralKind::Table:
      if (a != 0.0) throw DomainError("closed_form_integral(table): lower limit must be 0");
      return table_coefficient(degree) * pi * std::pow(b, degree + 1);
  }
  throw DomainError("closed_form_integral: unknown kind");
}

std::function<double(double)> closed_form_integrand(IntegralKind kind, double a, double b,
                                                    int degree) {
  auto edge = [a, b](double x) { return std::sqrt(std::max(0.0, (b - x) * (x - a))); };
  switch (kind) {
    case IntegralKind::A1:
      return edge;
    case IntegralKind::A2:
    case IntegralKind::A4:
      return [edge](double x) { return x > 0.0 ? std::log(x) * edge(x) : 0.0; };
    case IntegralKind::Table:
      table_coefficient(degree);
      return [edge, degree](double x) { return std::pow(x, degree - 1) * edge(x); };
  }
  throw DomainError("closed_form_integrand: unknown kind");
}

}  // namespace entrack
