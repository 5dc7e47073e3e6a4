// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/lattice.hpp"

#include <algorithm>

namespace hexphase {

std::string FockState::str() const {
  return std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3);
}

std::string HexPoint::str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::size_t sector_dimension(int n) {
  if (n < 0) throw std::invalid_argument("sector_dimension: N must be non-negative");
  const auto m = static_cast<std::size_t>(n);
  return (m + 1) * (m + 2) / 2;
}

std::vector<FockState> enumerate_states(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_states: N must be non-negative");
  std::vector<FockState> out;
  out.reserve(sector_dimension(n));
  for (int n3 = 0; n3 <= n; ++n3)
    for (int n1 = n - n3; n1 >= 0; --n1) out.push_back({n1, n - n3 - n1, n3});
  return out;
}

std::size_t canonical_index(const FockState& s) {
  if (!s.valid()) throw std::invalid_argument("canonical_index: negative occupation in " + s.str());
  const int n = s.total();
  // Line n3 = t holds n - t + 1 states.
  std::size_t offset = 0;
  for (int t = 0; t < s.n3; ++t) offset += static_cast<std::size_t>(n - t + 1);
  return offset + static_cast<std::size_t>(n - s.n3 - s.n1);
}

HexPoint weight_of(const FockState& s) { return {s.n1 - s.n2, s.n2 - s.n3}; }

HexPoint hextant_map(const FockState& s) { return {s.n1, s.n2}; }

FockState state_from_hextant(const HexPoint& p, int n) {
  const FockState s{p.a, p.b, n - p.a - p.b};
  if (!s.valid()) {
    throw std::domain_error("state_from_hextant: " + p.str() + " is outside the N=" +
                            std::to_string(n) + " triangle");
  }
  return s;
}

WeylOrbit weyl_orbit(const HexPoint& p) {
  const int a = p.a;
  const int b = p.b;
  WeylOrbit orbit;
  orbit.seed = p;
  orbit.images = {HexPoint{a, b},       HexPoint{-a, a + b}, HexPoint{a + b, -b},
                  HexPoint{b, -a - b},  HexPoint{-a - b, a}, HexPoint{-b, -a}};
  auto sorted = orbit.images;
  std::sort(sorted.begin(), sorted.end());
  orbit.size = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  return orbit;
}

KacCoordinates kac_coordinates(const HexPoint& p, int level) {
  if (level <= 0) throw std::invalid_argument("kac_coordinates: level must be positive");
  const KacCoordinates k{level - p.a - p.b, p.a, p.b};
  if (k.s0 < 0 || k.s1 < 0 || k.s2 < 0) {
    throw std::domain_error("kac_coordinates: " + p.str() + " is outside the level-" +
                            std::to_string(level) + " simplex");
  }
  return k;
}

int epsilon(const HexPoint& p, int level) {
  switch (kac_coordinates(p, level).zero_count()) {
    case 2:
      return 1;
    case 1:
      return 3;
    default:
      return 6;
  }
}

}  // namespace hexphase
