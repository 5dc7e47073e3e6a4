// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Orbit functions on the A2 weight lattice and the finite Fourier matrix they
// generate on the level-M triangular grid.
//
// For a label lambda and grid point x (both first-hextant, a+b <= M)
//
//   chi_lambda(x) = sum over the six Weyl images mu of lambda of
//                   exp(2 pi i <mu, x> / (3M)),
//
// with <mu, x> = (2 mu.a + mu.b) x.a + (mu.a + 2 mu.b) x.b. Degenerate orbits
// keep their repeated images, so the sum always has six terms.

#pragma once

#include <cstdint>
#include <vector>

#include "hexphase/lattice.hpp"
#include "hexphase/matrix.hpp"

namespace hexphase {

/// Three times the weight-space inner product of lambda and x.
std::int64_t pairing(const HexPoint& lambda, const HexPoint& x);

/// chi_lambda(x) at grid level M. Exponents are reduced exactly mod 3M.
Complex orbit_function(const HexPoint& lambda, const HexPoint& x, int level);

/// The first-hextant points with a+b <= M, ordered as hextant_map of the
/// canonical state order. Used both as orbit labels and as grid points.
std::vector<HexPoint> grid_points(int level);

struct OrbitFunctionTable {
  int level = 0;
  std::vector<HexPoint> labels;  // rows; also the evaluation points (columns)
  ComplexMatrix values;          // values(i, j) = chi_{labels[i]}(labels[j])
};

OrbitFunctionTable orbit_function_table(int level);

struct HexFourierMatrix {
  int level = 0;
  ComplexMatrix matrix;
  std::vector<HexPoint> row_labels;  // orbit labels (a,b)
  std::vector<HexPoint> col_labels;  // grid points (n1,n2)
};

/// F(lambda, x) = sqrt(eps(x)) chi_lambda(x) / sqrt(sum_x eps(x) |chi_lambda(x)|^2).
/// No row phase convention is imposed.
HexFourierMatrix hex_fourier_matrix(int level);

/// Standard n-point DFT, F(j,k) = exp(2 pi i j k / n) / sqrt(n).
ComplexMatrix standard_dft(int n);

}  // namespace hexphase
