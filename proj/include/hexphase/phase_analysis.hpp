// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// SU(3) phase states and phase operators obtained by conjugating the
// population-difference operators with the hexagonal Fourier matrix, and the
// probability / variance landscapes derived from them.

#pragma once

#include <vector>

#include "hexphase/lattice.hpp"
#include "hexphase/matrix.hpp"

namespace hexphase {

struct PopulationOperators {
  ComplexMatrix h1;  // diag(n1 - n2)
  ComplexMatrix h2;  // diag(n2 - n3)
};

PopulationOperators population_operators(int n);

/// Column (a,b) holds the Fock components F((a,b), t) of the phase state
/// labelled (a,b); rows follow the canonical state order.
ComplexMatrix phase_states(int n);

struct PhaseOperatorPair {
  int level = 0;
  ComplexMatrix eta1;  // F h1 F^dagger
  ComplexMatrix eta2;  // F h2 F^dagger
};

PhaseOperatorPair phase_operators(int n);

struct Distribution {
  int level = 0;
  std::vector<HexPoint> labels;
  std::vector<double> probabilities;
  double max = 0.0;
  double min = 0.0;
  double entropy = 0.0;  // normalized, H(p) / ln k
};

/// Builds a distribution over labels and fills its summaries. Throws if the
/// sizes differ or the probabilities are not a distribution within 1e-10.
Distribution make_distribution(int level, std::vector<HexPoint> labels, std::vector<double> probabilities);

/// p(lambda) = |F(lambda, hextant_map(input))|^2 over the phase labels.
Distribution number_distribution(const FockState& input);

/// Normalized Shannon entropy in [0, 1]. A one-label distribution counts as flat.
double flatness(const Distribution& dist);

struct VarianceLandscape {
  int level = 0;
  int which = 1;
  std::vector<FockState> states;  // canonical order
  std::vector<double> values;     // <x|eta^2|x> - <x|eta|x>^2
};

VarianceLandscape variance_landscape(int n, int which);
VarianceLandscape variance_landscape(const PhaseOperatorPair& ops, int which);

}  // namespace hexphase
