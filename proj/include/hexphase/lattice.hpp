// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Fock states of a three-mode system with fixed total quanta N, and their
// placement on the hexagonal (A2) weight lattice.
//
// Lattice points are written in the basis of the two fundamental weights:
// HexPoint{a, b} sits at a*w1 + b*w2. The first hextant is a >= 0, b >= 0.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexphase {

struct FockState {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  int total() const { return n1 + n2 + n3; }
  bool valid() const { return n1 >= 0 && n2 >= 0 && n3 >= 0; }
  std::string str() const;

  auto operator<=>(const FockState&) const = default;
};

struct HexPoint {
  int a = 0;
  int b = 0;

  bool in_first_hextant() const { return a >= 0 && b >= 0; }
  std::string str() const;

  auto operator<=>(const HexPoint&) const = default;
};

struct WeylOrbit {
  HexPoint seed;
  // The six Weyl images in a fixed order, repeated when the orbit is
  // degenerate:
  //   (a,b) (-a,a+b) (a+b,-b) (b,-a-b) (-a-b,a) (-b,-a)
  std::array<HexPoint, 6> images;
  int size = 0;  // number of distinct images: 1, 3 or 6
};

/// Simplex coordinates [s0, s1, s2] = [M-a-b, a, b] of a grid point at level M.
struct KacCoordinates {
  int s0 = 0;
  int s1 = 0;
  int s2 = 0;

  int zero_count() const { return (s0 == 0) + (s1 == 0) + (s2 == 0); }
};

/// Number of Fock states with n1+n2+n3 = N, i.e. (N+1)(N+2)/2.
std::size_t sector_dimension(int n);

/// All states of the N-sector in canonical order: ascending n3, then
/// descending n1. For N = 2 that is 200, 110, 020, 101, 011, 002.
std::vector<FockState> enumerate_states(int n);

/// Position of a state in the canonical order of its own sector.
std::size_t canonical_index(const FockState& s);

/// Population differences (n1-n2, n2-n3).
HexPoint weight_of(const FockState& s);

/// First-hextant image (n1, n2) used by the hexagonal Fourier transform.
HexPoint hextant_map(const FockState& s);

/// Inverse of hextant_map within the N-sector.
FockState state_from_hextant(const HexPoint& p, int n);

WeylOrbit weyl_orbit(const HexPoint& p);

/// Throws std::domain_error unless p lies in the level-M simplex.
KacCoordinates kac_coordinates(const HexPoint& p, int level);

/// Grid weight: 1 on simplex vertices, 3 on edges, 6 in the interior.
int epsilon(const HexPoint& p, int level);

}  // namespace hexphase
