// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/cyclic_phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hexphase/orbit_transform.hpp"

namespace hexphase {

namespace {

Complex omega_pow(int k) { return RootOfUnity(k, 3).value(); }

// D = E^dagger L, which must come out diagonal and non-negative when E is a
// valid completion of L.
ComplexMatrix modulus_from(const ComplexMatrix& e, const ComplexMatrix& ladder) {
  ComplexMatrix d = multiply(adjoint(e), ladder);
  if (!is_diagonal(d, 1e-12)) throw std::logic_error("polar completion left off-diagonal modulus");
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i).real() < -1e-12 || std::abs(d(i, i).imag()) > 1e-12) {
      throw std::logic_error("polar completion produced a negative or complex modulus");
    }
    d(i, i) = d(i, i).real();
  }
  return d;
}

int& occupation(FockState& s, int mode) {
  switch (mode) {
    case 1:
      return s.n1;
    case 2:
      return s.n2;
    default:
      return s.n3;
  }
}

}  // namespace

std::string_view to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::Su2Cyclic:
      return "su2-cyclic";
    case PhaseKind::Su3Line12:
      return "su3-line-12";
    case PhaseKind::Su3Line23:
      return "su3-line-23";
    case PhaseKind::Su3Wrap12:
      return "su3-wrap-12";
    case PhaseKind::Su3Wrap23:
      return "su3-wrap-23";
    case PhaseKind::QutritX:
      return "qutrit-X";
    case PhaseKind::QutritZ:
      return "qutrit-Z";
  }
  return "unknown";
}

LadderMatrix su2_raising(int two_j) {
  if (two_j < 0) throw std::invalid_argument("su2_raising: 2j must be non-negative");
  const auto d = static_cast<std::size_t>(two_j) + 1;
  LadderMatrix ladder{ComplexMatrix(d, d)};
  // With i = j + m: (j - m)(j + m + 1) = (2j - i)(i + 1).
  for (std::size_t i = 0; i + 1 < d; ++i) {
    ladder.matrix(i + 1, i) = std::sqrt(static_cast<double>((static_cast<std::size_t>(two_j) - i) * (i + 1)));
  }
  return ladder;
}

PolarDecomposition polar_complete_cyclic(const LadderMatrix& ladder) {
  const ComplexMatrix& l = ladder.matrix;
  if (!l.square() || l.rows() == 0) throw std::invalid_argument("polar_complete_cyclic: ladder must be square");
  const std::size_t d = l.rows();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const Complex z = l(r, c);
      if (r == c + 1) {
        if (z.imag() != 0.0 || !(z.real() > 0.0)) {
          throw std::invalid_argument("polar_complete_cyclic: band entry (" + std::to_string(r) + "," +
                                      std::to_string(c) + ") is not a positive real");
        }
      } else if (z != Complex{}) {
        throw std::invalid_argument("polar_complete_cyclic: not a single-shift ladder, entry (" +
                                    std::to_string(r) + "," + std::to_string(c) + ") is nonzero");
      }
    }
  }

  PolarDecomposition out{{ComplexMatrix(d, d), PhaseKind::Su2Cyclic}, ComplexMatrix(d, d)};
  for (std::size_t i = 0; i + 1 < d; ++i) {
    out.phase.unitary(i + 1, i) = 1.0;
    out.modulus(i, i) = l(i + 1, i);
  }
  out.phase.unitary(0, d - 1) = 1.0;
  return out;
}

ComplexMatrix cyclic_phase_states(int dimension) { return standard_dft(dimension); }

Complex cyclic_phase_eigenvalue(int m, int dimension) { return RootOfUnity(-m, dimension).value(); }

QutritPair qutrit_pair() {
  QutritPair q{{ComplexMatrix(3, 3), PhaseKind::QutritZ}, {ComplexMatrix(3, 3), PhaseKind::QutritX}};
  q.z.unitary(0, 0) = 1.0;
  q.z.unitary(1, 1) = omega_pow(1);
  q.z.unitary(2, 2) = omega_pow(2);
  q.x.unitary(0, 1) = 1.0;
  q.x.unitary(1, 2) = omega_pow(1);
  q.x.unitary(2, 0) = omega_pow(2);
  return q;
}

LadderMatrix su3_transition(int n, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw std::invalid_argument("su3_transition: modes must be distinct values in {1,2,3}, got " +
                                std::to_string(i) + "," + std::to_string(j));
  }
  if (n < 1) throw std::invalid_argument("su3_transition: N must be >= 1");
  const auto states = enumerate_states(n);
  LadderMatrix ladder{ComplexMatrix(states.size(), states.size())};
  for (std::size_t col = 0; col < states.size(); ++col) {
    FockState target = states[col];
    const int nj = occupation(target, j);
    if (nj == 0) continue;
    const int ni = occupation(target, i);
    occupation(target, i) += 1;
    occupation(target, j) -= 1;
    ladder.matrix(canonical_index(target), col) = std::sqrt(static_cast<double>(ni + 1) * nj);
  }
  return ladder;
}

Su3ShiftPair su3_line_completion(int n) {
  if (n < 1) throw std::invalid_argument("su3_line_completion: N must be >= 1");
  const auto states = enumerate_states(n);
  const std::size_t k = states.size();
  ComplexMatrix e12(k, k);
  ComplexMatrix e23(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    const FockState s = states[col];
    // Along a constant-n3 line C12 raises n1; the top (n2 = 0) wraps to n1 = 0.
    const FockState t12 = s.n2 > 0 ? FockState{s.n1 + 1, s.n2 - 1, s.n3} : FockState{0, s.n1, s.n3};
    // Along a constant-n1 line C23 raises n2; the top (n3 = 0) wraps to n2 = 0.
    const FockState t23 = s.n3 > 0 ? FockState{s.n1, s.n2 + 1, s.n3 - 1} : FockState{s.n1, 0, s.n2};
    e12(canonical_index(t12), col) = 1.0;
    e23(canonical_index(t23), col) = 1.0;
  }
  Su3ShiftPair out{{std::move(e12), PhaseKind::Su3Line12}, {std::move(e23), PhaseKind::Su3Line23}, {}, {}};
  out.d12 = modulus_from(out.e12.unitary, su3_transition(n, 1, 2).matrix);
  out.d23 = modulus_from(out.e23.unitary, su3_transition(n, 2, 3).matrix);
  return out;
}

Su3ShiftPair su3_wrap_solution() {
  ComplexMatrix e12(3, 3);
  e12(0, 1) = 1.0;
  e12(1, 2) = omega_pow(1);
  e12(2, 0) = omega_pow(2);
  ComplexMatrix e23(3, 3);
  e23(0, 1) = omega_pow(2);
  e23(1, 2) = 1.0;
  e23(2, 0) = omega_pow(1);
  Su3ShiftPair out{{std::move(e12), PhaseKind::Su3Wrap12}, {std::move(e23), PhaseKind::Su3Wrap23}, {}, {}};
  out.d12 = modulus_from(out.e12.unitary, su3_transition(1, 1, 2).matrix);
  out.d23 = modulus_from(out.e23.unitary, su3_transition(1, 2, 3).matrix);
  return out;
}

}  // namespace hexphase
