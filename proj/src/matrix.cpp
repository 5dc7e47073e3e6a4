// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hexphase {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.square()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

std::int64_t floor_mod(std::int64_t k, std::int64_t m) {
  std::int64_t r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) +
                         " entries given for shape " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  // i-k-j loop: for each output row the contributions are added in increasing
  // k, which is the same order as the textbook sum.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ComplexMatrix scaled(const ComplexMatrix& a, Complex factor) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = factor * a(i, j);
  return out;
}

ComplexMatrix power(const ComplexMatrix& a, unsigned k) {
  require_square(a, "power");
  ComplexMatrix out = ComplexMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

std::vector<Complex> diagonal_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("diagonal_of_product: product is not square");
  }
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, i);
    out[i] = acc;
  }
  return out;
}

double unitarity_defect(const ComplexMatrix& a) {
  require_square(a, "unitarity_defect");
  const std::size_t n = a.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * std::conj(a(j, k));
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double hermiticity_defect(const ComplexMatrix& a) {
  require_square(a, "hermiticity_defect");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator_norm");
  require_same_shape(a, b, "commutator_norm");
  const ComplexMatrix ab = multiply(a, b);
  const ComplexMatrix ba = multiply(b, a);
  return max_abs_difference(ab, ba);
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_difference");
  double worst = 0.0;
  const auto x = a.entries();
  const auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

bool is_diagonal(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && std::abs(a(i, j)) > tol) return false;
  return true;
}

RootOfUnity::RootOfUnity(std::int64_t numerator, std::int64_t modulus) : modulus_(modulus) {
  if (modulus <= 0) throw std::invalid_argument("RootOfUnity: modulus must be positive");
  numerator_ = floor_mod(numerator, modulus);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  if (other.modulus_ == modulus_) return {numerator_ + other.numerator_, modulus_};
  const std::int64_t m = std::lcm(modulus_, other.modulus_);
  return {numerator_ * (m / modulus_) + other.numerator_ * (m / other.modulus_), m};
}

RootOfUnity RootOfUnity::conj() const { return {-numerator_, modulus_}; }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  // Reduce first so the product cannot overflow for any sane modulus.
  return {floor_mod(k, modulus_) * numerator_, modulus_};
}

Complex RootOfUnity::value() const { return root_of_unity_value(numerator_, modulus_); }

Complex root_of_unity_value(std::int64_t k, std::int64_t m) {
  k = floor_mod(k, m);
  if (k == 0) return {1.0, 0.0};
  if (2 * k == m) return {-1.0, 0.0};
  if (4 * k == m) return {0.0, 1.0};
  if (4 * k == 3 * m) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace hexphase
