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

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include "entrack/error.hpp"
#include "entrack/numerics.hpp"

namespace entrack {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class G>
Panel kronrod(const G& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(center);
  double kronrod_sum = fc * kWgk[7];
  double gauss_sum = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    kronrod_sum += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss_sum += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod_sum * half;
  const double error = std::abs((kronrod_sum - gauss_sum) * half);
  return {lo, hi, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, int max_panels) {
  if (!(b >= a)) throw DomainError("integrate: need b >= a");
  if (a == b) return {};

  // x(t) = a + (b - a)(1 - cos t)/2 on t in [0, pi]; dx = (b - a)/2 sin t dt.
  const double width = b - a;
  int evaluations = 0;
  auto g = [&](double t) {
    ++evaluations;
    const double x = a + 0.5 * width * (1.0 - std::cos(t));
    const double v = f(std::min(b, std::max(a, x))) * 0.5 * width * std::sin(t);
    return std::isfinite(v) ? v : 0.0;
  };

  std::priority_queue<Panel> panels;
  double total = 0.0;
  double total_error = 0.0;
  constexpr int kInitial = 8;
  for (int i = 0; i < kInitial; ++i) {
    const Panel p = kronrod(g, std::numbers::pi * i / kInitial, std::numbers::pi * (i + 1) / kInitial);
    total += p.value;
    total_error += p.error;
    panels.push(p);
  }

  int count = kInitial;
  auto converged = [&] {
    const double floor = 1e-15 * std::abs(total);
    return total_error <= std::max(tol, floor);
  };
  while (!converged()) {
    if (count >= max_panels) {
      std::ostringstream os;
      os << "integrate: no convergence after " << count << " panels (estimate " << total
         << ", error bound " << total_error << ")";
      throw ConvergenceError(os.str(), total, total_error);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = kronrod(g, worst.lo, mid);
    const Panel right = kronrod(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }

  // Re-sum to shed the accumulated cancellation of the running updates.
  double value = 0.0;
  double error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {value, error, evaluations};
}

}  // namespace entrack
