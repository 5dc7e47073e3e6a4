// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/hexphase.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "hexphase/cyclic_phase.hpp"
#include "hexphase/orbit_transform.hpp"
#include "hexphase/phase_analysis.hpp"
#include "hexphase/reports.hpp"
#include "hexphase/verify.hpp"

struct hp_matrix {
  hexphase::LabeledMatrix data;
};

struct hp_landscape {
  hexphase::Landscape data;
};

namespace {

using namespace hexphase;

thread_local std::string g_last_error;

hp_status fail(hp_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

// Maps exceptions from the C++ core onto status codes.
template <typename Fn>
hp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    return fail(HP_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HP_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(HP_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HP_ERR_INTERNAL, "unknown error");
  }
}

hp_status check_level(int n, int min_n) {
  if (n < min_n) return fail(HP_ERR_ARGUMENT, "N must be >= " + std::to_string(min_n) + ", got " + std::to_string(n));
  if (n > hp_max_n()) {
    return fail(HP_ERR_ARGUMENT, "N=" + std::to_string(n) + " exceeds the cap of " + std::to_string(hp_max_n()) +
                                     " (set HEXPHASE_MAX_N to raise it)");
  }
  return HP_OK;
}

std::vector<std::string> label_strings(const std::vector<HexPoint>& pts) {
  std::vector<std::string> out;
  out.reserve(pts.size());
  for (const HexPoint& p : pts) out.push_back(p.str());
  return out;
}

std::vector<std::string> state_labels(int n) {
  std::vector<std::string> out;
  for (const FockState& s : enumerate_states(n)) out.push_back("|" + s.str() + ">");
  return out;
}

hp_matrix* wrap(std::string kind, ComplexMatrix m, std::vector<std::string> rows = {},
                std::vector<std::string> cols = {}) {
  return new hp_matrix{{std::move(kind), std::move(m), std::move(rows), std::move(cols)}};
}

void assign(hp_matrix** slot, hp_matrix* value) {
  if (slot) {
    *slot = value;
  } else {
    delete value;
  }
}

}  // namespace

extern "C" {

const char* hp_version(void) { return "1.0.0"; }

const char* hp_last_error(void) { return g_last_error.c_str(); }

int hp_max_n(void) {
  constexpr int kDefault = 50;
  const char* env = std::getenv("HEXPHASE_MAX_N");
  if (!env || !*env) return kDefault;
  int value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) return kDefault;
  return value;
}

void hp_matrix_free(hp_matrix* m) { delete m; }

size_t hp_matrix_rows(const hp_matrix* m) { return m ? m->data.matrix.rows() : 0; }

size_t hp_matrix_cols(const hp_matrix* m) { return m ? m->data.matrix.cols() : 0; }

hp_status hp_matrix_get(const hp_matrix* m, size_t row, size_t col, double* re, double* im) {
  if (!m || !re || !im) return fail(HP_ERR_ARGUMENT, "hp_matrix_get: null argument");
  if (row >= m->data.matrix.rows() || col >= m->data.matrix.cols()) {
    return fail(HP_ERR_ARGUMENT, "hp_matrix_get: index out of range");
  }
  const Complex z = m->data.matrix(row, col);
  *re = z.real();
  *im = z.imag();
  return HP_OK;
}

const char* hp_matrix_row_label(const hp_matrix* m, size_t row) {
  if (!m || row >= m->data.row_labels.size()) return nullptr;
  return m->data.row_labels[row].c_str();
}

const char* hp_matrix_col_label(const hp_matrix* m, size_t col) {
  if (!m || col >= m->data.col_labels.size()) return nullptr;
  return m->data.col_labels[col].c_str();
}

hp_status hp_unitarity_defect(const hp_matrix* m, double* out) {
  if (!m || !out) return fail(HP_ERR_ARGUMENT, "hp_unitarity_defect: null argument");
  return guarded([&] {
    *out = unitarity_defect(m->data.matrix);
    return HP_OK;
  });
}

hp_status hp_commutator_norm(const hp_matrix* a, const hp_matrix* b, double* out) {
  if (!a || !b || !out) return fail(HP_ERR_ARGUMENT, "hp_commutator_norm: null argument");
  return guarded([&] {
    *out = commutator_norm(a->data.matrix, b->data.matrix);
    return HP_OK;
  });
}

hp_status hp_fourier_matrix(int n, hp_matrix** out) {
  if (!out) return fail(HP_ERR_ARGUMENT, "hp_fourier_matrix: null output");
  if (const hp_status s = check_level(n, 1); s != HP_OK) return s;
  return guarded([&] {
    HexFourierMatrix f = hex_fourier_matrix(n);
    *out = wrap("hex-fourier", std::move(f.matrix), label_strings(f.row_labels), label_strings(f.col_labels));
    return HP_OK;
  });
}

hp_status hp_standard_dft(int n, hp_matrix** out) {
  if (!out) return fail(HP_ERR_ARGUMENT, "hp_standard_dft: null output");
  if (n < 1) return fail(HP_ERR_ARGUMENT, "hp_standard_dft: n must be >= 1");
  if (n > 4096) return fail(HP_ERR_ARGUMENT, "hp_standard_dft: n must be <= 4096");
  return guarded([&] {
    *out = wrap("dft", standard_dft(n));
    return HP_OK;
  });
}

hp_status hp_su2_polar(int two_j, hp_matrix** e, hp_matrix** d, hp_matrix** s_plus) {
  if (two_j < 0) return fail(HP_ERR_ARGUMENT, "hp_su2_polar: 2j must be non-negative");
  if (two_j > 4096) return fail(HP_ERR_ARGUMENT, "hp_su2_polar: 2j must be <= 4096");
  return guarded([&] {
    LadderMatrix s = su2_raising(two_j);
    PolarDecomposition p = polar_complete_cyclic(s);
    assign(e, wrap(std::string(to_string(p.phase.kind)), std::move(p.phase.unitary)));
    assign(d, wrap("su2-modulus", std::move(p.modulus)));
    assign(s_plus, wrap("su2-raising", std::move(s.matrix)));
    return HP_OK;
  });
}

hp_status hp_su3_line_completion(int n, hp_matrix** e12, hp_matrix** e23) {
  if (const hp_status s = check_level(n, 1); s != HP_OK) return s;
  return guarded([&] {
    Su3ShiftPair p = su3_line_completion(n);
    assign(e12, wrap(std::string(to_string(p.e12.kind)), std::move(p.e12.unitary), state_labels(n), state_labels(n)));
    assign(e23, wrap(std::string(to_string(p.e23.kind)), std::move(p.e23.unitary), state_labels(n), state_labels(n)));
    return HP_OK;
  });
}

hp_status hp_su3_wrap_solution(hp_matrix** e12, hp_matrix** e23) {
  return guarded([&] {
    Su3ShiftPair p = su3_wrap_solution();
    assign(e12, wrap(std::string(to_string(p.e12.kind)), std::move(p.e12.unitary), state_labels(1), state_labels(1)));
    assign(e23, wrap(std::string(to_string(p.e23.kind)), std::move(p.e23.unitary), state_labels(1), state_labels(1)));
    return HP_OK;
  });
}

hp_status hp_qutrit_pair(hp_matrix** z, hp_matrix** x) {
  return guarded([&] {
    QutritPair q = qutrit_pair();
    assign(z, wrap(std::string(to_string(q.z.kind)), std::move(q.z.unitary)));
    assign(x, wrap(std::string(to_string(q.x.kind)), std::move(q.x.unitary)));
    return HP_OK;
  });
}

hp_status hp_phase_operator(int n, int which, hp_matrix** out) {
  if (!out) return fail(HP_ERR_ARGUMENT, "hp_phase_operator: null output");
  if (which != 1 && which != 2) return fail(HP_ERR_ARGUMENT, "hp_phase_operator: which must be 1 or 2");
  if (const hp_status s = check_level(n, 1); s != HP_OK) return s;
  return guarded([&] {
    PhaseOperatorPair ops = phase_operators(n);
    ComplexMatrix& eta = which == 1 ? ops.eta1 : ops.eta2;
    *out = wrap(which == 1 ? "eta1" : "eta2", std::move(eta), state_labels(n), state_labels(n));
    return HP_OK;
  });
}

void hp_landscape_free(hp_landscape* l) { delete l; }

size_t hp_landscape_size(const hp_landscape* l) { return l ? l->data.points.size() : 0; }

int hp_landscape_level(const hp_landscape* l) { return l ? l->data.level : 0; }

hp_status hp_landscape_get(const hp_landscape* l, size_t index, int* a, int* b, double* value) {
  if (!l || !a || !b || !value) return fail(HP_ERR_ARGUMENT, "hp_landscape_get: null argument");
  if (index >= l->data.points.size()) return fail(HP_ERR_ARGUMENT, "hp_landscape_get: index out of range");
  *a = l->data.points[index].a;
  *b = l->data.points[index].b;
  *value = l->data.values[index];
  return HP_OK;
}

hp_status hp_histogram(int n1, int n2, int n3, hp_landscape** out) {
  if (!out) return fail(HP_ERR_ARGUMENT, "hp_histogram: null output");
  if (n1 < 0 || n2 < 0 || n3 < 0) return fail(HP_ERR_ARGUMENT, "hp_histogram: occupations must be non-negative");
  if (const hp_status s = check_level(n1 + n2 + n3, 1); s != HP_OK) return s;
  return guarded([&] {
    Distribution d = number_distribution({n1, n2, n3});
    *out = new hp_landscape{{"histogram", d.level, std::move(d.labels), std::move(d.probabilities)}};
    return HP_OK;
  });
}

hp_status hp_variance_landscape(int n, int which, hp_landscape** out) {
  if (!out) return fail(HP_ERR_ARGUMENT, "hp_variance_landscape: null output");
  if (which != 1 && which != 2) return fail(HP_ERR_ARGUMENT, "hp_variance_landscape: which must be 1 or 2");
  if (const hp_status s = check_level(n, 1); s != HP_OK) return s;
  return guarded([&] {
    VarianceLandscape v = variance_landscape(n, which);
    std::vector<HexPoint> pts;
    pts.reserve(v.states.size());
    for (const FockState& s : v.states) pts.push_back(hextant_map(s));
    *out = new hp_landscape{{which == 1 ? "variance-eta1" : "variance-eta2", n, std::move(pts), std::move(v.values)}};
    return HP_OK;
  });
}

hp_status hp_flatness(const hp_landscape* l, double* out) {
  if (!l || !out) return fail(HP_ERR_ARGUMENT, "hp_flatness: null argument");
  return guarded([&] {
    *out = flatness(make_distribution(l->data.level, l->data.points, l->data.values));
    return HP_OK;
  });
}

hp_status hp_write_matrix(const hp_matrix* m, hp_format format, const char* path) {
  if (!m) return fail(HP_ERR_ARGUMENT, "hp_write_matrix: null matrix");
  const std::string target = path ? path : "-";
  return guarded([&] {
    switch (format) {
      case HP_FORMAT_CSV:
        write_to_path(target, [&](std::ostream& os) { write_matrix_csv(os, m->data.matrix); });
        return HP_OK;
      case HP_FORMAT_JSON:
        write_to_path(target, [&](std::ostream& os) { write_matrix_json(os, m->data); });
        return HP_OK;
      case HP_FORMAT_SVG:
        break;
    }
    return fail(HP_ERR_ARGUMENT, "matrices can be written as csv or json only");
  });
}

hp_status hp_write_landscape(const hp_landscape* l, hp_format format, const char* path) {
  if (!l) return fail(HP_ERR_ARGUMENT, "hp_write_landscape: null landscape");
  const std::string target = path ? path : "-";
  return guarded([&] {
    switch (format) {
      case HP_FORMAT_CSV:
        write_to_path(target, [&](std::ostream& os) { write_landscape_csv(os, l->data); });
        return HP_OK;
      case HP_FORMAT_JSON:
        write_to_path(target, [&](std::ostream& os) { write_landscape_json(os, l->data); });
        return HP_OK;
      case HP_FORMAT_SVG:
        write_to_path(target, [&](std::ostream& os) { write_hex_heatmap(os, l->data); });
        return HP_OK;
    }
    return fail(HP_ERR_ARGUMENT, "unknown output format");
  });
}

hp_status hp_verify(int max_n, hp_check_callback callback, void* user) {
  if (const hp_status s = check_level(max_n, 1); s != HP_OK) return s;
  return guarded([&] {
    bool all = true;
    run_invariant_suite(max_n, [&](const CheckResult& r) {
      all &= r.passed;
      if (callback) callback(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
    });
    return all ? HP_OK : fail(HP_ERR_INVARIANT, "one or more invariant checks failed");
  });
}

}  // extern "C"
