// privfeat/poles.cc

// Copyright 2026  privfeat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "privfeat/poles.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

namespace {

using Complex = std::complex<double>;

// Monic polynomial c_0 = 1, c_1..c_p in descending powers.
std::vector<double> MonicFromPredictor(std::span<const double> a) {
  std::vector<double> c(a.size() + 1, 1.0);
  for (std::size_t k = 0; k < a.size(); ++k) c[k + 1] = -a[k];
  return c;
}

// Value, derivative and evaluation scale sum |c_i| |z|^(p-i).
struct Evaluation {
  Complex value, derivative;
  double scale;
};

Evaluation Evaluate(const std::vector<double> &c, Complex z) {
  Evaluation ev{0.0, 0.0, 0.0};
  const double mag = std::abs(z);
  for (double ci : c) {
    ev.derivative = ev.derivative * z + ev.value;
    ev.value = ev.value * z + ci;
    ev.scale = ev.scale * mag + std::abs(ci);
  }
  return ev;
}

// Newton refinement runs in quad precision where the compiler offers it.
// Roots in a tight cluster are ill-conditioned: in double (or even long
// double) Newton stalls at a residual that still leaves the root ~1e-9 off,
// which shows up as ~1e-7 errors when the coefficients are rebuilt.
#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

// std::complex is only specified for the standard floating types.
template <typename T>
struct Cx {
  T re, im;
  Cx operator+(const Cx &o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx &o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx &o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cx operator/(const Cx &o) const {
    const T d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  T Norm() const { return re * re + im * im; }
};

// Newton steps in precision T while the residual keeps shrinking.
template <typename T>
Complex Newton(const std::vector<double> &c, Complex start, int max_iter) {
  auto eval = [&](const Cx<T> &z, Cx<T> &derivative) {
    Cx<T> v{0, 0}, d{0, 0};
    for (double ci : c) {
      d = d * z + v;
      v = v * z + Cx<T>{static_cast<T>(ci), 0};
    }
    derivative = d;
    return v;
  };
  Cx<T> z{static_cast<T>(start.real()), static_cast<T>(start.imag())};
  Cx<T> d;
  Cx<T> v = eval(z, d);
  for (int iter = 0; iter < max_iter && v.Norm() > 0; ++iter) {
    if (d.Norm() == 0) break;
    const Cx<T> next = z - v / d;
    Cx<T> next_d;
    const Cx<T> next_v = eval(next, next_d);
    if (!(next_v.Norm() < v.Norm())) break;
    z = next;
    v = next_v;
    d = next_d;
  }
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

Complex Polish(const std::vector<double> &c, Complex start) {
  const Complex z = Newton<long double>(c, start, 10);
  return Newton<Wide>(c, z, 3);
}

}  // namespace

bool Pole::IsReal() const { return angle == 0.0 || angle == std::numbers::pi; }

Complex Pole::Value() const {
  if (angle == 0.0) return {radius, 0.0};
  if (angle == std::numbers::pi) return {-radius, 0.0};
  return std::polar(radius, angle);
}

double PoleSet::MaxRadius() const {
  double m = 0.0;
  for (const Pole &p : poles) m = std::max(m, p.radius);
  return m;
}

PoleSet FindPoles(std::span<const double> predictor) {
  const Eigen::Index p = static_cast<Eigen::Index>(predictor.size());
  PoleSet out;
  if (p == 0) return out;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index k = 0; k < p; ++k) companion(0, k) = predictor[k];
  for (Eigen::Index k = 1; k < p; ++k) companion(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::kNumeric, "companion eigen-solver did not converge");

  const std::vector<double> c = MonicFromPredictor(predictor);
  std::vector<Complex> upper, lower;
  for (Eigen::Index i = 0; i < p; ++i) {
    const Complex raw = solver.eigenvalues()(i);
    const Complex z = Polish(c, raw);
    const Evaluation ev = Evaluate(c, z);
    if (!(std::abs(ev.value) <= 1e-6 * ev.scale)) {
      throw Error(ErrorKind::kNumeric,
                  "root residual " + std::to_string(std::abs(ev.value)) +
                      " exceeds tolerance");
    }
    // Real Schur returns exact zero imaginary parts for real eigenvalues.
    if (raw.imag() == 0.0) {
      const double x = z.real();
      out.poles.push_back({std::abs(x), x >= 0.0 ? 0.0 : std::numbers::pi});
    } else if (raw.imag() > 0.0) {
      upper.push_back(z);
    } else {
      lower.push_back(z);
    }
  }
  if (upper.size() != lower.size())
    throw Error(ErrorKind::kNumeric, "unpaired complex roots");

  // Pair every upper root with the nearest conjugate of a lower root.
  std::vector<bool> used(lower.size(), false);
  std::vector<Pole> pairs;
  for (const Complex &u : upper) {
    std::size_t best = lower.size();
    double best_dist = 0.0;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(u - std::conj(lower[j]));
      if (best == lower.size() || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    used[best] = true;
    Complex s = 0.5 * (u + std::conj(lower[best]));
    double angle = std::arg(s);
    if (!(angle > 0.0 && angle < std::numbers::pi)) {
      // Polishing pushed the pair onto the real axis: keep it as two reals.
      out.poles.push_back({std::abs(s.real()), s.real() >= 0.0 ? 0.0 : std::numbers::pi});
      out.poles.push_back(out.poles.back());
      continue;
    }
    pairs.push_back({std::abs(s), angle});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pole &a, const Pole &b) { return a.angle < b.angle; });
  std::vector<Pole> ordered;
  ordered.reserve(static_cast<std::size_t>(p));
  for (const Pole &q : pairs) {
    ordered.push_back(q);
    ordered.push_back({q.radius, -q.angle});
  }
  ordered.insert(ordered.end(), out.poles.begin(), out.poles.end());
  out.poles = std::move(ordered);
  return out;
}

std::vector<double> RebuildFromPoles(const PoleSet &set) {
  const std::size_t p = set.size();
  std::vector<bool> matched(p, false);
  for (std::size_t i = 0; i < p; ++i) {
    const Pole &q = set.poles[i];
    if (q.IsReal() || matched[i]) continue;
    bool found = false;
    for (std::size_t j = 0; j < p && !found; ++j) {
      if (j == i || matched[j]) continue;
      if (set.poles[j].radius == q.radius && set.poles[j].angle == -q.angle) {
        matched[i] = matched[j] = true;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kSymmetry,
                  "pole (r=" + std::to_string(q.radius) +
                      ", phi=" + std::to_string(q.angle) +
                      ") has no conjugate partner");
    }
  }

  std::vector<Complex> c(1, 1.0);
  for (const Pole &q : set.poles) {
    const Complex z = q.Value();
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= z * c[k - 1];
  }
  std::vector<double> a(p);
  for (std::size_t k = 1; k <= p; ++k) {
    const double scale = std::max(1.0, std::abs(c[k]));
    if (std::abs(c[k].imag()) > 1e-9 * scale)
      throw Error(ErrorKind::kSymmetry, "expanded polynomial is not real");
    a[k - 1] = -c[k].real();
  }
  return a;
}

PoleSet ShiftPoles(const PoleSet &set, double alpha, ShiftReport *report) {
  if (!(alpha > 0.0))
    throw Error(ErrorKind::kConfig, "McAdams coefficient must be > 0");
  constexpr double lo = kAngleClampEpsilon;
  constexpr double hi = std::numbers::pi - kAngleClampEpsilon;
  PoleSet out = set;
  for (Pole &q : out.poles) {
    if (q.IsReal()) continue;
    const double phi = std::abs(q.angle);
    const double shifted = std::pow(phi, alpha);
    // An angle already outside (eps, pi - eps) is never pushed further out.
    const double clamped =
        std::clamp(shifted, std::min(lo, phi), std::max(hi, phi));
    if (clamped != shifted && report && q.angle > 0.0) ++report->clamped;
    q.angle = q.angle > 0.0 ? clamped : -clamped;
  }
  return out;
}

PoleSet ScaleRadii(const PoleSet &set, double factor) {
  PoleSet out = set;
  for (Pole &q : out.poles) q.radius *= factor;
  return out;
}

}  // namespace privfeat
