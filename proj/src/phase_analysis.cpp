// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/phase_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hexphase/orbit_transform.hpp"

namespace hexphase {

namespace {

void require_level(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": N must be >= 1");
}

// F h F^dagger with h diagonal: scale the columns of F, then one product.
ComplexMatrix conjugate_diagonal(const ComplexMatrix& f, const ComplexMatrix& h) {
  ComplexMatrix fh = f;
  for (std::size_t i = 0; i < fh.rows(); ++i)
    for (std::size_t j = 0; j < fh.cols(); ++j) fh(i, j) *= h(j, j);
  return multiply(fh, adjoint(f));
}

}  // namespace

PopulationOperators population_operators(int n) {
  require_level(n, "population_operators");
  std::vector<double> d1;
  std::vector<double> d2;
  for (const FockState& s : enumerate_states(n)) {
    d1.push_back(s.n1 - s.n2);
    d2.push_back(s.n2 - s.n3);
  }
  return {ComplexMatrix::diagonal(std::span<const double>(d1)), ComplexMatrix::diagonal(std::span<const double>(d2))};
}

ComplexMatrix phase_states(int n) {
  require_level(n, "phase_states");
  return transpose(hex_fourier_matrix(n).matrix);
}

PhaseOperatorPair phase_operators(int n) {
  require_level(n, "phase_operators");
  const ComplexMatrix f = hex_fourier_matrix(n).matrix;
  const PopulationOperators h = population_operators(n);
  return {n, conjugate_diagonal(f, h.h1), conjugate_diagonal(f, h.h2)};
}

Distribution make_distribution(int level, std::vector<HexPoint> labels, std::vector<double> probabilities) {
  if (labels.size() != probabilities.size() || labels.empty()) {
    throw std::invalid_argument("make_distribution: need one probability per label");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (p < -1e-14) throw std::invalid_argument("make_distribution: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("make_distribution: probabilities sum to " + std::to_string(total));
  }
  Distribution d;
  d.level = level;
  d.labels = std::move(labels);
  d.probabilities = std::move(probabilities);
  const auto [lo, hi] = std::minmax_element(d.probabilities.begin(), d.probabilities.end());
  d.min = *lo;
  d.max = *hi;
  d.entropy = flatness(d);
  return d;
}

Distribution number_distribution(const FockState& input) {
  if (!input.valid()) throw std::invalid_argument("number_distribution: negative occupation in " + input.str());
  const int n = input.total();
  require_level(n, "number_distribution");
  const HexFourierMatrix f = hex_fourier_matrix(n);
  const std::size_t col = canonical_index(input);
  std::vector<double> p(f.matrix.rows());
  for (std::size_t row = 0; row < p.size(); ++row) p[row] = std::norm(f.matrix(row, col));
  return make_distribution(n, f.row_labels, std::move(p));
}

double flatness(const Distribution& dist) {
  const std::size_t k = dist.probabilities.size();
  if (k <= 1) return 1.0;
  double h = 0.0;
  for (double p : dist.probabilities)
    if (p > 0.0) h -= p * std::log(p);
  return std::clamp(h / std::log(static_cast<double>(k)), 0.0, 1.0);
}

VarianceLandscape variance_landscape(int n, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("variance_landscape: which must be 1 or 2");
  return variance_landscape(phase_operators(n), which);
}

VarianceLandscape variance_landscape(const PhaseOperatorPair& ops, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("variance_landscape: which must be 1 or 2");
  const ComplexMatrix& eta = which == 1 ? ops.eta1 : ops.eta2;
  const std::vector<Complex> second = diagonal_of_product(eta, eta);
  VarianceLandscape out;
  out.level = ops.level;
  out.which = which;
  out.states = enumerate_states(ops.level);
  out.values.resize(out.states.size());
  for (std::size_t x = 0; x < out.states.size(); ++x) {
    const double mean = eta(x, x).real();
    out.values[x] = second[x].real() - mean * mean;
  }
  return out;
}

}  // namespace hexphase
