// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Small dense complex-matrix toolkit. Everything in the library works with
// matrices of at most a few hundred rows, so a plain row-major vector with a
// deterministic triple loop is all we need.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexphase {

using Complex = std::complex<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<const Complex> row(std::size_t r) const {
    return std::span<const Complex>(data_).subspan(r * cols_, cols_);
  }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Row-major product. Each output entry accumulates over k in increasing
/// order, so the result is bit-reproducible for fixed inputs.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix scaled(const ComplexMatrix& a, Complex factor);

/// a^k for square a, k >= 0.
ComplexMatrix power(const ComplexMatrix& a, unsigned k);

/// Diagonal of a*b without forming the full product.
std::vector<Complex> diagonal_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

// All defect metrics below use the max-abs (Chebyshev) entry norm.

/// max |(A A^dagger - I)_{ij}|
double unitarity_defect(const ComplexMatrix& a);

/// max |(A - A^dagger)_{ij}|
double hermiticity_defect(const ComplexMatrix& a);

/// max |(AB - BA)_{ij}|
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_diagonal(const ComplexMatrix& a, double tol = 0.0);

/// e^{2 pi i numerator / modulus}, kept as an exact integer exponent until
/// value() is asked for.
class RootOfUnity {
 public:
  RootOfUnity(std::int64_t numerator, std::int64_t modulus);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t modulus() const { return modulus_; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity conj() const;
  RootOfUnity pow(std::int64_t k) const;
  Complex value() const;

  bool operator==(const RootOfUnity&) const = default;

 private:
  std::int64_t numerator_;
  std::int64_t modulus_;
};

/// Evaluates e^{2 pi i k / m} for k already reduced to [0, m). The quarter
/// turns are returned exactly.
Complex root_of_unity_value(std::int64_t k, std::int64_t m);

}  // namespace hexphase
