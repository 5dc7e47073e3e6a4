// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Runtime self-check of the library invariants, used by `hexphase verify`.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hexphase/lattice.hpp"

namespace hexphase {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Number of distinct images of x/M under the Weyl group on the torus
/// (weight space modulo the root lattice), counted by brute force.
int torus_orbit_count(const HexPoint& x, int level);

/// Runs every invariant check for sector sizes up to max_n. Each result is
/// also passed to `on_result` as soon as it is known.
std::vector<CheckResult> run_invariant_suite(int max_n,
                                             const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace hexphase
