// privfeat/poles.h

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

#ifndef PRIVFEAT_POLES_H_
#define PRIVFEAT_POLES_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace privfeat {

/// A pole in polar form. Real poles carry angle 0 (positive) or pi
/// (negative); a conjugate pair is two entries with bit-identical radius and
/// angles of opposite sign.
struct Pole {
  double radius = 0.0;
  double angle = 0.0;

  bool IsReal() const;
  std::complex<double> Value() const;
};

struct PoleSet {
  std::vector<Pole> poles;

  std::size_t size() const { return poles.size(); }
  double MaxRadius() const;
};

/// Roots of z^p - a_1 z^{p-1} - ... - a_p from the companion-matrix
/// eigenvalues, polished by Newton steps and symmetrized into exact
/// conjugate pairs. Throws kNumeric if the eigen-solver fails or a root's
/// residual exceeds 1e-6 of the evaluation scale.
PoleSet FindPoles(std::span<const double> predictor);

/// Inverse of FindPoles: expands prod (z - p_i) and returns a_1..a_p.
/// Throws kSymmetry unless every non-real pole has an exact conjugate
/// partner, or if the expansion leaves an imaginary residue above 1e-9.
std::vector<double> RebuildFromPoles(const PoleSet &set);

inline constexpr double kAngleClampEpsilon = 1e-6;

struct ShiftReport {
  int clamped = 0;  // pairs whose new angle was clamped into (eps, pi - eps)
};

/// phi -> phi^alpha for every non-real pole (conjugates mirrored), radius
/// untouched. Real poles are returned unchanged.
PoleSet ShiftPoles(const PoleSet &set, double alpha,
                   ShiftReport *report = nullptr);

/// Multiplies every radius by `factor`.
PoleSet ScaleRadii(const PoleSet &set, double factor);

}  // namespace privfeat

#endif  // PRIVFEAT_POLES_H_
