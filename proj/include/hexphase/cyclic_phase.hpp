// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Phase operators from polar decomposition of ladder operators.
//
// A raising operator L factors as L = E * D with D diagonal non-negative and E
// unitary. E is only fixed on the range of D; the remaining rows are completed
// here so that E becomes a cyclic shift with all completion entries equal to 1.

#pragma once

#include <string_view>
#include <vector>

#include "hexphase/lattice.hpp"
#include "hexphase/matrix.hpp"

namespace hexphase {

/// A single-shift operator: each basis state is moved to one neighbour with a
/// non-negative amplitude, or annihilated.
struct LadderMatrix {
  ComplexMatrix matrix;

  std::size_t dimension() const { return matrix.rows(); }
};

enum class PhaseKind { Su2Cyclic, Su3Line12, Su3Line23, Su3Wrap12, Su3Wrap23, QutritX, QutritZ };

std::string_view to_string(PhaseKind kind);

struct PhaseUnitary {
  ComplexMatrix unitary;
  PhaseKind kind;
};

struct PolarDecomposition {
  PhaseUnitary phase;
  ComplexMatrix modulus;  // diagonal, non-negative
};

/// S+ in the spin-j irrep, basis ordered m = -j..j, with
/// <m+1|S+|m> = sqrt((j-m)(j+m+1)). Takes 2j to keep j exact.
LadderMatrix su2_raising(int two_j);

/// Cyclic completion of a single-subdiagonal ladder: E maps |m> to |m+1> and
/// the top state back to the bottom one; D carries the ladder amplitudes with
/// a trailing 0. Throws std::invalid_argument for anything that is not such a
/// ladder.
PolarDecomposition polar_complete_cyclic(const LadderMatrix& ladder);

/// Eigenvectors of the d-dimensional cyclic shift as columns. Column m is the
/// phase state with components exp(2 pi i k m / d) / sqrt(d), which is
/// standard_dft(d) read column-wise.
ComplexMatrix cyclic_phase_states(int dimension);

/// Eigenvalue exp(-2 pi i m / d) of the cyclic shift on column m of
/// cyclic_phase_states(d).
Complex cyclic_phase_eigenvalue(int m, int dimension);

struct QutritPair {
  PhaseUnitary z;  // diag(1, w, w^2)
  PhaseUnitary x;  // [[0,1,0],[0,0,w],[w^2,0,0]]
};

/// Clock and shift matrices of a qutrit, w = exp(2 pi i / 3).
QutritPair qutrit_pair();

/// C_ij = a_i^dagger a_j on the canonical N-sector basis, modes i,j in {1,2,3}.
LadderMatrix su3_transition(int n, int i, int j);

struct Su3ShiftPair {
  PhaseUnitary e12;
  PhaseUnitary e23;
  ComplexMatrix d12;  // C12 = e12 * d12
  ComplexMatrix d23;  // C23 = e23 * d23
};

/// Line-by-line cyclic completion: E12 acts on lines of constant n3, E23 on
/// lines of constant n1. A single-state line gets a 1 on the diagonal.
Su3ShiftPair su3_line_completion(int n);

/// The commuting N=1 completion built from qutrit phases.
Su3ShiftPair su3_wrap_solution();

}  // namespace hexphase
