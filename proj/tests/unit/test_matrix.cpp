// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "hexphase/cyclic_phase.hpp"
#include "hexphase/matrix.hpp"
#include "hexphase/orbit_transform.hpp"
#include "oracles.hpp"

using namespace hexphase;

namespace {

// Random unitary from Gram-Schmidt on a Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
  for (auto& r : rows)
    for (auto& z : r) z = {g(rng), g(rng)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Complex dot{};
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(rows[j][k]) * rows[i][k];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= dot * rows[j][k];
    }
    double norm = 0.0;
    for (const auto& z : rows[i]) norm += std::norm(z);
    for (auto& z : rows[i]) z /= std::sqrt(norm);
  }
  ComplexMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) u(i, k) = rows[i][k];
  return u;
}

}  // namespace

TEST_CASE("multiply: identity and hand-computed X^2") {
  const ComplexMatrix x = qutrit_pair().x.unitary;
  CHECK(multiply(ComplexMatrix::identity(3), x) == x);

  // X = [[0,1,0],[0,0,w],[w^2,0,0]] squared by hand:
  // row 0 = row 1 of X, row 1 = w * row 2 of X, row 2 = w^2 * row 0 of X.
  const Complex w = oracle::omega(1);
  const Complex w2 = oracle::omega(2);
  ComplexMatrix expected(3, 3);
  expected(0, 2) = w;
  expected(1, 0) = w * w2;
  expected(2, 1) = w2;
  CHECK(max_abs_difference(multiply(x, x), expected) < 1e-15);
}

TEST_CASE("multiply: F(1) F(1)^dagger is the identity") {
  const ComplexMatrix f = hex_fourier_matrix(1).matrix;
  CHECK(max_abs_difference(multiply(f, adjoint(f)), ComplexMatrix::identity(3)) < 1e-15);
}

TEST_CASE("multiply rejects mismatched dimensions") {
  CHECK_THROWS_AS(multiply(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(commutator_norm(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), DimensionError);
  CHECK_THROWS_AS(unitarity_defect(ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
}

TEST_CASE("multiply is bit-reproducible") {
  std::mt19937_64 rng(7);
  const ComplexMatrix a = random_unitary(20, rng);
  const ComplexMatrix b = random_unitary(20, rng);
  CHECK(multiply(a, b) == multiply(a, b));
}

TEST_CASE("unitarity_defect examples") {
  CHECK(unitarity_defect(ComplexMatrix::identity(3)) == 0.0);
  const std::vector<double> d{1.0, 2.0};
  CHECK(unitarity_defect(ComplexMatrix::diagonal(std::span<const double>(d))) == doctest::Approx(3.0));

  const oracle::Grid reference = oracle::reference_fourier_3x3();
  ComplexMatrix f(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) f(r, c) = reference[r][c];
  CHECK(unitarity_defect(f) < 1e-12);
}

TEST_CASE("commutator_norm examples") {
  const QutritPair q = qutrit_pair();
  CHECK(commutator_norm(q.z.unitary, multiply(q.z.unitary, q.z.unitary)) == 0.0);

  // Permutation matrices of the line completion: E12 swaps 100/010, E23 swaps
  // 010/001. Their commutator has entries of size 1.
  const Su3ShiftPair line = su3_line_completion(1);
  CHECK(commutator_norm(line.e12.unitary, line.e23.unitary) == doctest::Approx(1.0));
  const Su3ShiftPair wrap = su3_wrap_solution();
  CHECK(commutator_norm(wrap.e12.unitary, wrap.e23.unitary) < 1e-15);
}

TEST_CASE("property: multiplication is associative on random unitaries") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> dim(1, 36);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = dim(rng);
    const ComplexMatrix a = random_unitary(n, rng);
    const ComplexMatrix b = random_unitary(n, rng);
    const ComplexMatrix c = random_unitary(n, rng);
    CHECK(max_abs_difference(multiply(multiply(a, b), c), multiply(a, multiply(b, c))) < 1e-12);
    CHECK(adjoint(adjoint(a)) == a);
    const double da = unitarity_defect(a);
    const double db = unitarity_defect(b);
    CHECK(unitarity_defect(multiply(a, b)) <= 4 * (da + db) + 1e-14);
  }
}

TEST_CASE("property: root-of-unity products add exponents exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> mod(1, 90);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t m = mod(rng);
    const std::int64_t p = num(rng);
    const std::int64_t q = num(rng);
    const RootOfUnity prod = RootOfUnity(p, m) * RootOfUnity(q, m);
    CHECK(prod.modulus() == m);
    CHECK(prod.numerator() == (((p + q) % m) + m) % m);
    CHECK(std::abs(prod.value() - std::polar(1.0, 2 * std::numbers::pi * double(p + q) / double(m))) < 1e-12);
  }
  CHECK(RootOfUnity(3, 6).value() == Complex(-1.0, 0.0));
  CHECK(RootOfUnity(-6, 6).value() == Complex(1.0, 0.0));
  CHECK((RootOfUnity(1, 2) * RootOfUnity(1, 3)) == RootOfUnity(5, 6));
  CHECK_THROWS(RootOfUnity(1, 0));
}

TEST_CASE("diagonal_of_product matches the full product") {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_unitary(9, rng);
  const ComplexMatrix b = random_unitary(9, rng);
  const ComplexMatrix ab = multiply(a, b);
  const auto diag = diagonal_of_product(a, b);
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(diag[i] - ab(i, i)) < 1e-14);
}
