// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hexphase/hexphase.h"

namespace {

struct MatrixHandle {
  hp_matrix* m = nullptr;
  ~MatrixHandle() { hp_matrix_free(m); }
};

struct LandscapeHandle {
  hp_landscape* l = nullptr;
  ~LandscapeHandle() { hp_landscape_free(l); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("version and limits") {
  CHECK(std::strlen(hp_version()) > 0);
  CHECK(hp_max_n() == 50);
}

TEST_CASE("fourier matrix through handles") {
  MatrixHandle f;
  REQUIRE(hp_fourier_matrix(2, &f.m) == HP_OK);
  CHECK(hp_matrix_rows(f.m) == 6);
  CHECK(hp_matrix_cols(f.m) == 6);
  CHECK(std::string(hp_matrix_row_label(f.m, 0)) == "(2,0)");
  CHECK(std::string(hp_matrix_col_label(f.m, 5)) == "(0,0)");
  CHECK(hp_matrix_row_label(f.m, 6) == nullptr);

  double re = 0;
  double im = 0;
  REQUIRE(hp_matrix_get(f.m, 5, 5, &re, &im) == HP_OK);
  CHECK(re * re + im * im == doctest::Approx(1.0 / 12));
  CHECK(hp_matrix_get(f.m, 6, 0, &re, &im) == HP_ERR_ARGUMENT);
  CHECK(std::string(hp_last_error()).size() > 0);

  double defect = 1;
  REQUIRE(hp_unitarity_defect(f.m, &defect) == HP_OK);
  CHECK(defect < 1e-12);
}

TEST_CASE("argument errors map to codes") {
  hp_matrix* m = nullptr;
  CHECK(hp_fourier_matrix(0, &m) == HP_ERR_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(hp_fourier_matrix(51, &m) == HP_ERR_ARGUMENT);
  CHECK(std::string(hp_last_error()).find("51") != std::string::npos);
  CHECK(hp_fourier_matrix(1, nullptr) == HP_ERR_ARGUMENT);
  CHECK(hp_phase_operator(2, 3, &m) == HP_ERR_ARGUMENT);
  CHECK(hp_su2_polar(-1, &m, nullptr, nullptr) == HP_ERR_ARGUMENT);

  hp_landscape* l = nullptr;
  CHECK(hp_histogram(-1, 0, 0, &l) == HP_ERR_ARGUMENT);
  CHECK(hp_histogram(0, 0, 0, &l) == HP_ERR_ARGUMENT);
  CHECK(hp_variance_landscape(3, 0, &l) == HP_ERR_ARGUMENT);
  double v = 0;
  CHECK(hp_flatness(nullptr, &v) == HP_ERR_ARGUMENT);
}

TEST_CASE("HEXPHASE_MAX_N raises the cap") {
  ::setenv("HEXPHASE_MAX_N", "60", 1);
  CHECK(hp_max_n() == 60);
  MatrixHandle f;
  CHECK(hp_standard_dft(55, &f.m) == HP_OK);
  ::unsetenv("HEXPHASE_MAX_N");
  CHECK(hp_max_n() == 50);
}

TEST_CASE("polar decompositions") {
  MatrixHandle e;
  MatrixHandle d;
  MatrixHandle s;
  REQUIRE(hp_su2_polar(3, &e.m, &d.m, &s.m) == HP_OK);
  CHECK(hp_matrix_rows(e.m) == 4);
  double re = 0;
  double im = 0;
  REQUIRE(hp_matrix_get(e.m, 0, 3, &re, &im) == HP_OK);
  CHECK(re == 1.0);
  REQUIRE(hp_matrix_get(d.m, 0, 0, &re, &im) == HP_OK);
  CHECK(re == doctest::Approx(std::sqrt(3.0)));

  MatrixHandle l12;
  MatrixHandle l23;
  REQUIRE(hp_su3_line_completion(3, &l12.m, &l23.m) == HP_OK);
  double c = 0;
  REQUIRE(hp_commutator_norm(l12.m, l23.m, &c) == HP_OK);
  CHECK(c > 0.1);

  MatrixHandle w12;
  MatrixHandle w23;
  REQUIRE(hp_su3_wrap_solution(&w12.m, &w23.m) == HP_OK);
  REQUIRE(hp_commutator_norm(w12.m, w23.m, &c) == HP_OK);
  CHECK(c < 1e-12);

  MatrixHandle z;
  MatrixHandle x;
  REQUIRE(hp_qutrit_pair(&z.m, &x.m) == HP_OK);
  REQUIRE(hp_commutator_norm(x.m, w12.m, &c) == HP_OK);
  CHECK(c < 1e-12);

  MatrixHandle dft;
  REQUIRE(hp_standard_dft(4, &dft.m) == HP_OK);
  CHECK(hp_commutator_norm(dft.m, x.m, &c) == HP_ERR_ARGUMENT);
}

TEST_CASE("phase operator") {
  MatrixHandle eta;
  REQUIRE(hp_phase_operator(3, 2, &eta.m) == HP_OK);
  CHECK(hp_matrix_rows(eta.m) == 10);
  CHECK(std::string(hp_matrix_row_label(eta.m, 0)) == "|3,0,0>");
}

TEST_CASE("landscapes") {
  LandscapeHandle h;
  REQUIRE(hp_histogram(2, 0, 0, &h.l) == HP_OK);
  CHECK(hp_landscape_size(h.l) == 6);
  CHECK(hp_landscape_level(h.l) == 2);
  double total = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    int a = -1;
    int b = -1;
    double v = 0;
    REQUIRE(hp_landscape_get(h.l, i, &a, &b, &v) == HP_OK);
    CHECK(a >= 0);
    CHECK(b >= 0);
    CHECK(a + b <= 2);
    total += v;
  }
  CHECK(total == doctest::Approx(1.0));
  double f = 0;
  REQUIRE(hp_flatness(h.l, &f) == HP_OK);
  CHECK(f > 0.9);
  CHECK(f < 1.0);

  LandscapeHandle var;
  REQUIRE(hp_variance_landscape(4, 1, &var.l) == HP_OK);
  CHECK(hp_landscape_size(var.l) == 15);
  int a = 0;
  int b = 0;
  double v = 0;
  REQUIRE(hp_landscape_get(var.l, 0, &a, &b, &v) == HP_OK);
  CHECK(a == 4);  // |4,0,0>
  CHECK(b == 0);
  CHECK(hp_landscape_get(var.l, 15, &a, &b, &v) == HP_ERR_ARGUMENT);
}

TEST_CASE("writing files") {
  const auto dir = std::filesystem::temp_directory_path() / "hexphase_capi_test";
  std::filesystem::create_directories(dir);

  MatrixHandle f;
  REQUIRE(hp_fourier_matrix(1, &f.m) == HP_OK);
  const auto csv = dir / "f.csv";
  REQUIRE(hp_write_matrix(f.m, HP_FORMAT_CSV, csv.c_str()) == HP_OK);
  CHECK(slurp(csv).rfind("row,col,re,im\n", 0) == 0);
  const auto json = dir / "f.json";
  REQUIRE(hp_write_matrix(f.m, HP_FORMAT_JSON, json.c_str()) == HP_OK);
  CHECK(slurp(json).find("\"row_labels\"") != std::string::npos);
  CHECK(hp_write_matrix(f.m, HP_FORMAT_SVG, (dir / "f.svg").c_str()) == HP_ERR_ARGUMENT);
  CHECK(hp_write_matrix(f.m, HP_FORMAT_CSV, "/nonexistent-dir/f.csv") == HP_ERR_IO);

  LandscapeHandle h;
  REQUIRE(hp_histogram(3, 0, 0, &h.l) == HP_OK);
  const auto svg = dir / "h.svg";
  REQUIRE(hp_write_landscape(h.l, HP_FORMAT_SVG, svg.c_str()) == HP_OK);
  const std::string text = slurp(svg);
  CHECK(text.rfind("<?xml", 0) == 0);
  CHECK(text.find("<svg ") != std::string::npos);
  std::size_t cells = 0;
  for (std::size_t at = text.find("class=\"cell\""); at != std::string::npos; at = text.find("class=\"cell\"", at + 1))
    ++cells;
  CHECK(cells == 10);

  std::filesystem::remove_all(dir);
}

TEST_CASE("verify callback") {
  struct Tally {
    int passed = 0;
    int failed = 0;
  } tally;
  const hp_status s = hp_verify(
      4,
      [](const char* name, int ok, const char*, void* user) {
        auto* t = static_cast<Tally*>(user);
        CHECK(std::strlen(name) > 0);
        (ok ? t->passed : t->failed)++;
      },
      &tally);
  CHECK(s == HP_OK);
  CHECK(tally.failed == 0);
  CHECK(tally.passed >= 20);
  CHECK(hp_verify(0, nullptr, nullptr) == HP_ERR_ARGUMENT);
}
