// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/orbit_transform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hexphase {

namespace {

void require_level(int level, const char* what) {
  if (level < 1) throw std::invalid_argument(std::string(what) + ": level must be >= 1");
}

// Roots e^{2 pi i k / m} for k in [0, m), evaluated once per table.
std::vector<Complex> root_table(std::int64_t m) {
  std::vector<Complex> roots(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) roots[static_cast<std::size_t>(k)] = root_of_unity_value(k, m);
  return roots;
}

std::int64_t reduce(std::int64_t k, std::int64_t m) {
  const std::int64_t r = k % m;
  return r < 0 ? r + m : r;
}

Complex orbit_sum(const WeylOrbit& orbit, const HexPoint& x, std::span<const Complex> roots) {
  const auto m = static_cast<std::int64_t>(roots.size());
  Complex acc{};
  for (const HexPoint& mu : orbit.images) acc += roots[static_cast<std::size_t>(reduce(pairing(mu, x), m))];
  return acc;
}

}  // namespace

std::int64_t pairing(const HexPoint& lambda, const HexPoint& x) {
  const std::int64_t la = lambda.a;
  const std::int64_t lb = lambda.b;
  return (2 * la + lb) * x.a + (la + 2 * lb) * x.b;
}

Complex orbit_function(const HexPoint& lambda, const HexPoint& x, int level) {
  require_level(level, "orbit_function");
  const std::int64_t m = 3 * static_cast<std::int64_t>(level);
  Complex acc{};
  for (const HexPoint& mu : weyl_orbit(lambda).images) acc += RootOfUnity(pairing(mu, x), m).value();
  return acc;
}

std::vector<HexPoint> grid_points(int level) {
  std::vector<HexPoint> pts;
  for (const FockState& s : enumerate_states(level)) pts.push_back(hextant_map(s));
  return pts;
}

OrbitFunctionTable orbit_function_table(int level) {
  require_level(level, "orbit_function_table");
  OrbitFunctionTable table;
  table.level = level;
  table.labels = grid_points(level);
  const std::size_t k = table.labels.size();
  const auto roots = root_table(3 * static_cast<std::int64_t>(level));
  table.values = ComplexMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const WeylOrbit orbit = weyl_orbit(table.labels[i]);
    for (std::size_t j = 0; j < k; ++j) table.values(i, j) = orbit_sum(orbit, table.labels[j], roots);
  }
  return table;
}

HexFourierMatrix hex_fourier_matrix(int level) {
  require_level(level, "hex_fourier_matrix");
  OrbitFunctionTable table = orbit_function_table(level);
  const std::size_t k = table.labels.size();

  std::vector<double> weight(k);
  for (std::size_t j = 0; j < k; ++j) weight[j] = std::sqrt(static_cast<double>(epsilon(table.labels[j], level)));

  HexFourierMatrix f;
  f.level = level;
  f.matrix = ComplexMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    double norm2 = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      f.matrix(i, j) = weight[j] * table.values(i, j);
      norm2 += std::norm(f.matrix(i, j));
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t j = 0; j < k; ++j) f.matrix(i, j) *= inv;
  }
  f.row_labels = table.labels;
  f.col_labels = std::move(table.labels);
  return f;
}

ComplexMatrix standard_dft(int n) {
  if (n < 1) throw std::invalid_argument("standard_dft: n must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const auto roots = root_table(n);
  ComplexMatrix f(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      f(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
          scale * roots[static_cast<std::size_t>((static_cast<std::int64_t>(j) * k) % n)];
  return f;
}

}  // namespace hexphase
