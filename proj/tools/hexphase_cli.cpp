// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// hexphase: command-line front end over the libhexphase C interface.
//
//   hexphase fourier   --N 2 --format json
//   hexphase dft       --n 4
//   hexphase polar     --j 3/2 --part E      (SU(2) cyclic completion)
//   hexphase polar     --N 2 --part E23      (SU(3) line completion)
//   hexphase wrap      --part E12
//   hexphase histogram --state 2,0,0 --format svg --out h.svg
//   hexphase variance  --N 30 --which 1 --format csv
//   hexphase flatness  --state 5,0,0 --state 10,0,0
//   hexphase verify    --max-N 8
//
// Exit codes: 0 ok, 2 bad arguments, 3 invariant failure, 4 I/O failure.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hexphase/hexphase.h"

namespace {

struct MatrixDeleter {
  void operator()(hp_matrix* m) const { hp_matrix_free(m); }
};
struct LandscapeDeleter {
  void operator()(hp_landscape* l) const { hp_landscape_free(l); }
};
using MatrixPtr = std::unique_ptr<hp_matrix, MatrixDeleter>;
using LandscapePtr = std::unique_ptr<hp_landscape, LandscapeDeleter>;

int report(hp_status status) {
  if (status != HP_OK) std::cerr << "hexphase: " << hp_last_error() << '\n';
  return static_cast<int>(status);
}

int usage_error(const std::string& message) {
  std::cerr << "hexphase: " << message << '\n';
  return HP_ERR_ARGUMENT;
}

hp_format to_format(const std::string& name) {
  if (name == "json") return HP_FORMAT_JSON;
  if (name == "svg") return HP_FORMAT_SVG;
  return HP_FORMAT_CSV;
}

const char* out_path(const std::string& path) { return path.empty() ? nullptr : path.c_str(); }

// "n1,n2,n3"
bool parse_state(const std::string& text, int (&n)[3]) {
  std::istringstream in(text);
  char c1 = 0;
  char c2 = 0;
  if (!(in >> n[0] >> c1 >> n[1] >> c2 >> n[2]) || c1 != ',' || c2 != ',') return false;
  in >> std::ws;
  return in.eof() && n[0] >= 0 && n[1] >= 0 && n[2] >= 0;
}

// "3/2", "1.5" or "1" -> 2j
bool parse_spin(const std::string& text, int& two_j) {
  try {
    std::size_t used = 0;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const int num = std::stoi(text.substr(0, slash), &used);
      if (used != slash || text.substr(slash + 1) != "2") return false;
      two_j = num;
    } else {
      const double j = std::stod(text, &used);
      if (used != text.size() || j * 2 != static_cast<int>(j * 2)) return false;
      two_j = static_cast<int>(j * 2);
    }
  } catch (const std::exception&) {
    return false;
  }
  return two_j >= 0;
}

int write_matrix(hp_matrix* raw, hp_status status, const std::string& format, const std::string& path) {
  MatrixPtr m(raw);
  if (status != HP_OK) return report(status);
  if (format == "svg") return usage_error("matrices can be written as csv or json only");
  return report(hp_write_matrix(m.get(), to_format(format), out_path(path)));
}

int write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    if (std::cout) return 0;
    std::cerr << "hexphase: failed writing to standard output\n";
    return HP_ERR_IO;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::cerr << "hexphase: cannot open '" << path << "' for writing\n";
    return HP_ERR_IO;
  }
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) {
    std::cerr << "hexphase: failed writing '" << path << "'\n";
    return HP_ERR_IO;
  }
  return 0;
}

void on_check(const char* name, int passed, const char* detail, void*) {
  std::printf("[%s] %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(3) phase states from the hexagonal finite Fourier transform", "hexphase"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(hp_version()));

  std::string format = "csv";
  std::string out;
  const auto add_output = [&](CLI::App* cmd, bool svg) {
    cmd->add_option("--format", format, "Output format")
        ->check(svg ? CLI::IsMember({"csv", "json", "svg"}) : CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out, "Output file (default: standard output)");
  };

  int level = 0;
  auto* fourier = app.add_subcommand("fourier", "Hexagonal Fourier matrix of the N-sector");
  fourier->add_option("--N", level, "Total quanta")->required();
  add_output(fourier, false);

  int dft_n = 0;
  auto* dft = app.add_subcommand("dft", "Standard n-point Fourier matrix");
  dft->add_option("--n", dft_n, "Dimension")->required();
  add_output(dft, false);

  std::string spin;
  std::string part;
  auto* polar = app.add_subcommand("polar", "Polar-decomposition phase unitaries");
  auto* spin_opt = polar->add_option("--j", spin, "Spin j for the SU(2) completion (e.g. 3/2)");
  auto* level_opt = polar->add_option("--N", level, "Total quanta for the SU(3) line completion");
  spin_opt->excludes(level_opt);
  polar->add_option("--part", part, "E, D or S for SU(2); E12 or E23 for SU(3)");
  add_output(polar, false);

  auto* wrap = app.add_subcommand("wrap", "Commuting N=1 completion and qutrit clock/shift");
  wrap->add_option("--part", part, "E12, E23, X or Z")->check(CLI::IsMember({"E12", "E23", "X", "Z"}));
  add_output(wrap, false);

  std::vector<std::string> states;
  auto* histogram = app.add_subcommand("histogram", "Phase-label probabilities for a Fock input state");
  histogram->add_option("--state", states, "Input state n1,n2,n3")->required()->expected(1);
  add_output(histogram, true);

  int which = 1;
  auto* variance = app.add_subcommand("variance", "Var(eta_i) over the Fock states of the N-sector");
  variance->add_option("--N", level, "Total quanta")->required();
  variance->add_option("--which", which, "Phase operator index")->check(CLI::IsMember({1, 2}));
  add_output(variance, true);

  auto* flat = app.add_subcommand("flatness", "Normalized entropy of the histogram of each input state");
  flat->add_option("--state", states, "Input state n1,n2,n3 (repeatable)")->required();
  add_output(flat, false);

  int max_n = 8;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--max-N", max_n, "Largest sector to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HP_ERR_ARGUMENT;
  }

  if (fourier->parsed()) {
    hp_matrix* m = nullptr;
    const hp_status s = hp_fourier_matrix(level, &m);
    return write_matrix(m, s, format, out);
  }
  if (dft->parsed()) {
    hp_matrix* m = nullptr;
    const hp_status s = hp_standard_dft(dft_n, &m);
    return write_matrix(m, s, format, out);
  }
  if (polar->parsed()) {
    hp_matrix* a = nullptr;
    hp_matrix* b = nullptr;
    hp_matrix* c = nullptr;
    if (!spin.empty()) {
      int two_j = 0;
      if (!parse_spin(spin, two_j)) return usage_error("--j expects a non-negative half-integer, got '" + spin + "'");
      if (part.empty()) part = "E";
      if (part != "E" && part != "D" && part != "S") return usage_error("--part must be E, D or S with --j");
      const hp_status s = hp_su2_polar(two_j, &a, &b, &c);
      MatrixPtr e(a), d(b), sp(c);
      if (s != HP_OK) return report(s);
      return write_matrix((part == "E" ? e : part == "D" ? d : sp).release(), HP_OK, format, out);
    }
    if (level_opt->count() == 0) return usage_error("polar needs --j or --N");
    if (part.empty()) part = "E12";
    if (part != "E12" && part != "E23") return usage_error("--part must be E12 or E23 with --N");
    const hp_status s = hp_su3_line_completion(level, &a, &b);
    MatrixPtr e12(a), e23(b);
    if (s != HP_OK) return report(s);
    return write_matrix((part == "E12" ? e12 : e23).release(), HP_OK, format, out);
  }
  if (wrap->parsed()) {
    hp_matrix* a = nullptr;
    hp_matrix* b = nullptr;
    if (part.empty()) part = "E12";
    const bool qutrit = part == "X" || part == "Z";
    const hp_status s = qutrit ? hp_qutrit_pair(&a, &b) : hp_su3_wrap_solution(&a, &b);
    MatrixPtr first(a), second(b);
    if (s != HP_OK) return report(s);
    const bool pick_first = part == "E12" || part == "Z";
    return write_matrix((pick_first ? first : second).release(), HP_OK, format, out);
  }
  if (histogram->parsed()) {
    int n[3];
    if (!parse_state(states.front(), n)) return usage_error("--state expects n1,n2,n3, got '" + states.front() + "'");
    hp_landscape* raw = nullptr;
    const hp_status s = hp_histogram(n[0], n[1], n[2], &raw);
    LandscapePtr l(raw);
    if (s != HP_OK) return report(s);
    return report(hp_write_landscape(l.get(), to_format(format), out_path(out)));
  }
  if (variance->parsed()) {
    hp_landscape* raw = nullptr;
    const hp_status s = hp_variance_landscape(level, which, &raw);
    LandscapePtr l(raw);
    if (s != HP_OK) return report(s);
    return report(hp_write_landscape(l.get(), to_format(format), out_path(out)));
  }
  if (flat->parsed()) {
    std::ostringstream csv;
    std::ostringstream json;
    csv << "n1,n2,n3,flatness\n";
    json << "[";
    for (std::size_t i = 0; i < states.size(); ++i) {
      int n[3];
      if (!parse_state(states[i], n)) return usage_error("--state expects n1,n2,n3, got '" + states[i] + "'");
      hp_landscape* raw = nullptr;
      hp_status s = hp_histogram(n[0], n[1], n[2], &raw);
      LandscapePtr l(raw);
      double value = 0.0;
      if (s == HP_OK) s = hp_flatness(l.get(), &value);
      if (s != HP_OK) return report(s);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", value);
      csv << n[0] << ',' << n[1] << ',' << n[2] << ',' << buf << '\n';
      json << (i ? "," : "") << "\n {\"state\": [" << n[0] << ", " << n[1] << ", " << n[2] << "], \"flatness\": " << buf
           << "}";
    }
    json << "\n]\n";
    return write_text(format == "json" ? json.str() : csv.str(), out);
  }
  if (verify->parsed()) {
    const hp_status s = hp_verify(max_n, on_check, nullptr);
    return report(s);
  }
  return HP_ERR_ARGUMENT;
}
