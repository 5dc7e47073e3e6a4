// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference values and brute-force oracles. Nothing here calls into
// the library routines it is used to check.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "hexphase/matrix.hpp"

namespace oracle {

using Cx = std::complex<double>;
using Grid = std::vector<std::vector<Cx>>;

inline Cx omega(double power, double order = 3.0) {
  return std::polar(1.0, 2.0 * std::numbers::pi * power / order);
}

inline Grid to_grid(const hexphase::ComplexMatrix& m) {
  Grid g(m.rows(), std::vector<Cx>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

// Qutrit Fourier matrix reference, rows/cols in the order |100>, |010>, |001>.
inline Grid reference_fourier_3x3() {
  const Cx w = omega(1);
  const Cx w2 = omega(2);
  const double s = 1.0 / std::sqrt(3.0);
  return {{s * w, s * 1.0, s * w2}, {s * w, s * w2, s * 1.0}, {s * 1.0, s * 1.0, s * 1.0}};
}

// The N = 2 Fourier matrix reference values, columns in the canonical order
// 200, 110, 020, 101, 011, 002.
inline Grid reference_fourier_6x6() {
  const Cx w = omega(1);
  const Cx w2 = omega(2);
  const Cx one = 1.0;
  const double s = 1.0 / std::sqrt(3.0);
  Grid g = {
      {s * one, one, s * one, one, one, s * one},
      {one, -s * w, w2, -s * w2, -s * one, w},
      {s * one, w2, s * w, w, one, s * w},
      {one, -s * one, w, -s * w, -s * one, w2},
      {one, -s * one, one, -s * one, -s * one, one},
      {s * one, w, s * w2, w2, one, s * w},
  };
  for (auto& row : g)
    for (auto& z : row) z *= 0.5;
  return g;
}

// Same matrix with the two entries that break unitarity replaced by the
// values forced by orthogonality to the other rows: row 3 column 6 is
// s*w^2 rather than s*w, row 4 column 2 is -s*w^2 rather than -s.
inline Grid corrected_fourier_6x6() {
  Grid g = reference_fourier_6x6();
  const double s = 1.0 / std::sqrt(3.0);
  g[2][5] = 0.5 * s * omega(2);
  g[3][1] = -0.5 * s * omega(2);
  return g;
}

inline double unitarity_defect(const Grid& g) {
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      Cx acc{};
      for (std::size_t k = 0; k < g[i].size(); ++k) acc += g[i][k] * std::conj(g[j][k]);
      worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

struct Alignment {
  std::vector<std::size_t> permutation;  // reference row -> candidate row
  std::vector<Cx> phases;                // candidate row * phase ~ reference row
  double max_error = 0.0;
  bool bijective = true;
};

// Matches every reference row to the candidate row of largest overlap,
// removes the relative unit phase, and reports the worst entrywise error.
inline Alignment align_rows(const Grid& candidate, const Grid& reference) {
  Alignment out;
  std::set<std::size_t> used;
  for (const auto& ref : reference) {
    std::size_t best = 0;
    double best_overlap = -1.0;
    Cx best_inner{};
    for (std::size_t r = 0; r < candidate.size(); ++r) {
      Cx inner{};
      for (std::size_t k = 0; k < ref.size(); ++k) inner += std::conj(candidate[r][k]) * ref[k];
      if (std::abs(inner) > best_overlap) {
        best_overlap = std::abs(inner);
        best = r;
        best_inner = inner;
      }
    }
    const Cx phase = best_inner / std::abs(best_inner);
    double err = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) err = std::max(err, std::abs(candidate[best][k] * phase - ref[k]));
    out.permutation.push_back(best);
    out.phases.push_back(phase);
    out.max_error = std::max(out.max_error, err);
    out.bijective &= used.insert(best).second;
  }
  return out;
}

// Weyl group of A2 generated from the two simple reflections acting on
// (a, b) in the fundamental-weight basis.
inline std::vector<std::array<int, 2>> weyl_images(int a, int b) {
  std::vector<std::array<int, 2>> seen{{a, b}};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const auto [x, y] = seen[i];
    for (const std::array<int, 2> next : {std::array<int, 2>{-x, x + y}, std::array<int, 2>{x + y, -y}}) {
      if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(next);
    }
  }
  return seen;
}

// Number of distinct points of {w(x/M)} on the torus R^2 / Q, found by
// pairwise comparison: u ~ v iff u - v = M (c1 alpha1 + c2 alpha2) with
// integers c, where alpha1 = (2,-1) and alpha2 = (-1,2).
inline int torus_orbit_count(int a, int b, int level) {
  const auto images = weyl_images(a, b);
  std::vector<std::array<int, 2>> reps;
  for (const auto& u : images) {
    bool fresh = true;
    for (const auto& v : reps) {
      const int d1 = u[0] - v[0];
      const int d2 = u[1] - v[1];
      const int n1 = 2 * d1 + d2;
      const int n2 = d1 + 2 * d2;
      if (n1 % (3 * level) == 0 && n2 % (3 * level) == 0) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(u);
  }
  return static_cast<int>(reps.size());
}

// Orbit function written out term by term, w = exp(2 pi i / (3M)):
//   w^{(2a+b)x + (a+2b)y} + w^{(b-a)x + (a+2b)y} + w^{(2a+b)x + (a-b)y}
// + w^{-(a-b)x - (b+2a)y} + w^{-(a+2b)x + (a-b)y} + w^{-(2b+a)x - (b+2a)y}
inline Cx orbit_function_terms(int a, int b, int x, int y, int level) {
  const double order = 3.0 * level;
  return omega((2 * a + b) * x + (a + 2 * b) * y, order) + omega((b - a) * x + (a + 2 * b) * y, order) +
         omega((2 * a + b) * x + (a - b) * y, order) + omega(-(a - b) * x - (b + 2 * a) * y, order) +
         omega(-(a + 2 * b) * x + (a - b) * y, order) + omega(-(2 * b + a) * x - (b + 2 * a) * y, order);
}

}  // namespace oracle
