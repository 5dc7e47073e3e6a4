// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

#include "hexphase/cyclic_phase.hpp"
#include "hexphase/orbit_transform.hpp"
#include "hexphase/phase_analysis.hpp"

namespace hexphase {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Suite {
 public:
  explicit Suite(const std::function<void(const CheckResult&)>& sink) : sink_(sink) {}

  void record(std::string name, bool passed, std::string detail) {
    results_.push_back({std::move(name), passed, std::move(detail)});
    if (sink_) sink_(results_.back());
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const std::function<void(const CheckResult&)>& sink_;
  std::vector<CheckResult> results_;
};

std::int64_t mod(std::int64_t k, std::int64_t m) { return ((k % m) + m) % m; }

std::vector<double> sorted_copy(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

FockState sorted_occupations(const FockState& s) {
  std::array<int, 3> n{s.n1, s.n2, s.n3};
  std::sort(n.begin(), n.end());
  return {n[0], n[1], n[2]};
}

void check_lattice(Suite& suite, int max_n) {
  bool counts = true;
  bool bijection = true;
  bool orbits_shared = true;
  for (int n = 0; n <= max_n; ++n) {
    const auto states = enumerate_states(n);
    counts &= states.size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    std::set<HexPoint> image;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const HexPoint p = hextant_map(states[i]);
      bijection &= p.in_first_hextant() && p.a + p.b <= n && canonical_index(states[i]) == i;
      image.insert(p);
      // Permuted states share a Weyl orbit of their population differences.
      const auto orbit = weyl_orbit(weight_of(sorted_occupations(states[i]))).images;
      orbits_shared &= std::find(orbit.begin(), orbit.end(), weight_of(states[i])) != orbit.end();
    }
    bijection &= image.size() == states.size();
  }
  suite.record("lattice.state_count", counts, "N <= " + std::to_string(max_n));
  suite.record("lattice.hextant_bijection", bijection, "N <= " + std::to_string(max_n));
  suite.record("lattice.permutation_orbits", orbits_shared, "N <= " + std::to_string(max_n));

  // The zero-pattern rule applies to the dominant (first-hextant) image,
  // which every orbit contains exactly once.
  bool sizes = true;
  for (int a = -20; a <= 20; ++a) {
    for (int b = -20; b <= 20; ++b) {
      const WeylOrbit o = weyl_orbit({a, b});
      const auto dom = std::find_if(o.images.begin(), o.images.end(), [](const HexPoint& p) { return p.in_first_hextant(); });
      if (dom == o.images.end()) {
        sizes = false;
        continue;
      }
      const int expected = (dom->a == 0 && dom->b == 0) ? 1 : (dom->a == 0 || dom->b == 0) ? 3 : 6;
      sizes &= o.size == expected;
    }
  }
  suite.record("lattice.orbit_sizes", sizes, "|a|,|b| <= 20");

  bool eps_ok = true;
  const int eps_max = std::min(max_n, 6);
  for (int m = 1; m <= eps_max; ++m)
    for (const HexPoint& x : grid_points(m)) eps_ok &= epsilon(x, m) == torus_orbit_count(x, m);
  suite.record("lattice.epsilon_torus_oracle", eps_ok, "M <= " + std::to_string(eps_max));
}

void check_transform(Suite& suite, int max_n) {
  double worst_unitary = 0.0;
  double worst_orth = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    worst_unitary = std::max(worst_unitary, unitarity_defect(hex_fourier_matrix(n).matrix));
    const OrbitFunctionTable t = orbit_function_table(n);
    const std::size_t k = t.labels.size();
    std::vector<double> eps(k);
    for (std::size_t j = 0; j < k; ++j) eps[j] = epsilon(t.labels[j], n);
    ComplexMatrix weighted = t.values;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) weighted(i, j) *= eps[j];
    const ComplexMatrix gram = multiply(weighted, adjoint(t.values));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j) {
          const double scale = std::sqrt(gram(i, i).real() * gram(j, j).real());
          worst_orth = std::max(worst_orth, std::abs(gram(i, j)) / scale);
        }
  }
  suite.record("transform.unitarity", worst_unitary < 1e-9, "max defect " + sci(worst_unitary));
  suite.record("transform.orthogonality", worst_orth < 1e-9, "max normalized overlap " + sci(worst_orth));

  double worst_dft = 0.0;
  for (int n = 1; n <= 16; ++n) {
    const ComplexMatrix f = standard_dft(n);
    worst_dft = std::max(worst_dft, max_abs_difference(power(f, 4), ComplexMatrix::identity(n)));
    for (const Complex& z : f.entries()) worst_dft = std::max(worst_dft, std::abs(std::abs(z) - 1 / std::sqrt(n)));
  }
  suite.record("transform.dft_order_four", worst_dft < 1e-12, "max defect " + sci(worst_dft));
}

void check_polar(Suite& suite, int max_n) {
  double worst = 0.0;
  bool cyclic = true;
  for (int two_j = 0; two_j <= 15; ++two_j) {
    const LadderMatrix s = su2_raising(two_j);
    const PolarDecomposition p = polar_complete_cyclic(s);
    const auto d = static_cast<unsigned>(two_j + 1);
    worst = std::max(worst, max_abs_difference(multiply(p.phase.unitary, p.modulus), s.matrix));
    worst = std::max(worst, unitarity_defect(p.phase.unitary));
    cyclic &= power(p.phase.unitary, d) == ComplexMatrix::identity(d);
    // Columns of the DFT are eigenvectors of the cyclic shift.
    const ComplexMatrix v = cyclic_phase_states(two_j + 1);
    const ComplexMatrix ev = multiply(p.phase.unitary, v);
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t k = 0; k < d; ++k)
        worst = std::max(worst, std::abs(ev(k, m) - cyclic_phase_eigenvalue(static_cast<int>(m), two_j + 1) * v(k, m)));
  }
  suite.record("polar.su2_cyclic", worst < 1e-12 && cyclic, "2j+1 <= 16, max defect " + sci(worst));

  // Z is diagonal with distinct entries, so its eigenvectors are the unit
  // vectors and each overlap is a squared component of an X eigenvector. X is
  // a monomial 3-cycle: for mu^3 = X01 X12 X20 the vector
  // (1, mu/X01, mu^2/(X01 X12)) is an eigenvector.
  const QutritPair q = qutrit_pair();
  const ComplexMatrix& x = q.x.unitary;
  double overlap_gap = 0.0;
  double residual = 0.0;
  const Complex cycle = x(0, 1) * x(1, 2) * x(2, 0);
  for (int r = 0; r < 3; ++r) {
    const Complex mu = std::polar(1.0, std::arg(cycle) / 3.0) * RootOfUnity(r, 3).value();
    std::array<Complex, 3> v{1.0, mu / x(0, 1), 0.0};
    v[2] = mu * v[1] / x(1, 2);
    double norm2 = 0.0;
    for (const auto& z : v) norm2 += std::norm(z);
    for (std::size_t i = 0; i < 3; ++i) {
      Complex xv{};
      for (std::size_t c = 0; c < 3; ++c) xv += x(i, c) * v[c];
      residual = std::max(residual, std::abs(xv - mu * v[i]));
      overlap_gap = std::max(overlap_gap, std::abs(std::norm(v[i]) / norm2 - 1.0 / 3.0));
    }
  }
  overlap_gap = std::max(overlap_gap, residual);
  suite.record("polar.qutrit_complementarity", overlap_gap < 1e-12, "max |overlap^2 - 1/3| " + sci(overlap_gap));

  double comm_min = 1e300;
  double polar_err = 0.0;
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const Su3ShiftPair e = su3_line_completion(n);
    comm_min = std::min(comm_min, commutator_norm(e.e12.unitary, e.e23.unitary));
    polar_err = std::max(polar_err, max_abs_difference(multiply(e.e12.unitary, e.d12), su3_transition(n, 1, 2).matrix));
    polar_err = std::max(polar_err, max_abs_difference(multiply(e.e23.unitary, e.d23), su3_transition(n, 2, 3).matrix));
  }
  suite.record("polar.su3_line_noncommuting", comm_min > 0.1 && polar_err < 1e-12,
               "min commutator " + sci(comm_min) + ", polar error " + sci(polar_err));

  const Su3ShiftPair w = su3_wrap_solution();
  const double wrap_comm = commutator_norm(w.e12.unitary, w.e23.unitary);
  suite.record("polar.su3_wrap_commuting", wrap_comm < 1e-12, "commutator " + sci(wrap_comm));
}

void check_phase(Suite& suite, int max_n) {
  double herm = 0.0;
  double comm = 0.0;
  double eig = 0.0;
  double norm_gap = 0.0;
  double perm_gap = 0.0;
  double var_sym_gap = 0.0;
  double var_min = 0.0;
  bool corners = true;
  for (int n = 1; n <= max_n; ++n) {
    const PhaseOperatorPair ops = phase_operators(n);
    herm = std::max({herm, hermiticity_defect(ops.eta1), hermiticity_defect(ops.eta2)});
    comm = std::max(comm, commutator_norm(ops.eta1, ops.eta2));

    // eta F = F h: the columns of F are eigenvectors with eigenvalues diag(h).
    const ComplexMatrix f = hex_fourier_matrix(n).matrix;
    const PopulationOperators h = population_operators(n);
    eig = std::max(eig, max_abs_difference(multiply(ops.eta1, f), multiply(f, h.h1)));
    eig = std::max(eig, max_abs_difference(multiply(ops.eta2, f), multiply(f, h.h2)));

    const auto states = enumerate_states(n);
    std::map<FockState, std::vector<double>> by_class;
    for (std::size_t col = 0; col < states.size(); ++col) {
      double total = 0.0;
      std::vector<double> p(f.rows());
      for (std::size_t row = 0; row < f.rows(); ++row) total += p[row] = std::norm(f(row, col));
      norm_gap = std::max(norm_gap, std::abs(total - 1.0));
      if (n <= 10) {
        auto sorted = sorted_copy(std::move(p));
        auto [it, fresh] = by_class.emplace(sorted_occupations(states[col]), sorted);
        if (!fresh) perm_gap = std::max(perm_gap, max_gap(it->second, sorted));
      }
    }

    const VarianceLandscape v1 = variance_landscape(ops, 1);
    const VarianceLandscape v2 = variance_landscape(ops, 2);
    std::map<FockState, double> sum_by_class;
    for (std::size_t i = 0; i < states.size(); ++i) {
      var_min = std::min({var_min, v1.values[i], v2.values[i]});
      const double s = v1.values[i] + v2.values[i];
      auto [it, fresh] = sum_by_class.emplace(sorted_occupations(states[i]), s);
      if (!fresh) var_sym_gap = std::max(var_sym_gap, std::abs(it->second - s));
    }
    const auto argmin = std::min_element(v1.values.begin(), v1.values.end()) - v1.values.begin();
    const FockState best = states[static_cast<std::size_t>(argmin)];
    corners &= best.n1 == n || best.n2 == n || best.n3 == n;
  }
  suite.record("phase.hermitian", herm < 1e-10, "max defect " + sci(herm));
  suite.record("phase.commuting", comm < 1e-10, "max commutator " + sci(comm));
  suite.record("phase.spectrum", eig < 1e-9, "max eigen-residual " + sci(eig));
  suite.record("phase.distribution_normalized", norm_gap < 1e-10, "max |sum p - 1| " + sci(norm_gap));
  suite.record("phase.distribution_permutation_symmetry", perm_gap < 1e-10, "N <= 10, max gap " + sci(perm_gap));
  suite.record("phase.variance_nonnegative", var_min >= -1e-10, "min variance " + sci(var_min));
  suite.record("phase.variance_sum_symmetry", var_sym_gap < 1e-9, "max gap " + sci(var_sym_gap));
  suite.record("phase.variance_minimum_at_corner", corners, "N <= " + std::to_string(max_n));
}

}  // namespace

int torus_orbit_count(const HexPoint& x, int level) {
  if (level < 1) throw std::invalid_argument("torus_orbit_count: level must be >= 1");
  const std::int64_t m = 3 * static_cast<std::int64_t>(level);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const HexPoint& w : weyl_orbit(x).images) {
    // Root-lattice coordinates of w are ((2a+b)/3, (a+2b)/3); x/M is
    // identified modulo the root lattice, i.e. w modulo M times it.
    seen.emplace(mod(2 * w.a + w.b, m), mod(w.a + 2 * w.b, m));
  }
  return static_cast<int>(seen.size());
}

std::vector<CheckResult> run_invariant_suite(int max_n, const std::function<void(const CheckResult&)>& on_result) {
  if (max_n < 1) throw std::invalid_argument("run_invariant_suite: max N must be >= 1");
  Suite suite(on_result);
  check_lattice(suite, max_n);
  check_transform(suite, max_n);
  check_polar(suite, max_n);
  check_phase(suite, max_n);
  return suite.take();
}

}  // namespace hexphase
