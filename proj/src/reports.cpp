// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

#include "hexphase/reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "json.hpp"

namespace hexphase {

namespace {

using nlohmann::json;

std::string fmt_double(const char* spec, double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), spec, v);
  return buf.data();
}

std::string full(double v) { return fmt_double("%.17g", v == 0.0 ? 0.0 : v); }

// Endpoints of the colour ramp: dark purple for the minimum, yellow for the
// maximum.
constexpr std::array<int, 3> kLow{0x44, 0x01, 0x54};
constexpr std::array<int, 3> kHigh{0xfd, 0xe7, 0x25};

constexpr double kCell = 40.0;    // centre-to-centre distance of neighbouring cells
constexpr double kMargin = 30.0;
constexpr double kLegend = 70.0;  // height reserved below the lattice

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg") return Format::Svg;
  return std::nullopt;
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
  out << "row,col,re,im\n";
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out << r << ',' << c << ',' << full(m(r, c).real()) << ',' << full(m(r, c).imag()) << '\n';
}

void write_matrix_json(std::ostream& out, const LabeledMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) row.push_back({m.matrix(r, c).real(), m.matrix(r, c).imag()});
    entries.push_back(std::move(row));
  }
  json doc{{"kind", m.kind},
           {"rows", m.matrix.rows()},
           {"cols", m.matrix.cols()},
           {"row_labels", m.row_labels},
           {"col_labels", m.col_labels},
           {"entries", std::move(entries)}};
  out << doc.dump(1) << '\n';
}

ComplexMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    const json& entries = doc.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("parse_matrix_json: row count mismatch");
    std::vector<Complex> values;
    values.reserve(rows * cols);
    for (const json& row : entries) {
      if (row.size() != cols) throw std::invalid_argument("parse_matrix_json: column count mismatch");
      for (const json& z : row) values.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(values));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parse_matrix_json: ") + e.what());
  }
}

void write_landscape_csv(std::ostream& out, const Landscape& l) {
  if (l.points.size() != l.values.size()) throw std::invalid_argument("landscape: points/values size mismatch");
  out << "a,b,value\n";
  for (std::size_t i = 0; i < l.points.size(); ++i)
    out << l.points[i].a << ',' << l.points[i].b << ',' << full(l.values[i]) << '\n';
}

void write_landscape_json(std::ostream& out, const Landscape& l) {
  if (l.points.size() != l.values.size()) throw std::invalid_argument("landscape: points/values size mismatch");
  json points = json::array();
  for (std::size_t i = 0; i < l.points.size(); ++i)
    points.push_back({{"a", l.points[i].a}, {"b", l.points[i].b}, {"value", l.values[i]}});
  json doc{{"kind", l.kind}, {"level", l.level}, {"points", std::move(points)}};
  out << doc.dump(1) << '\n';
}

std::string heat_colour(double value, double lo, double hi) {
  double t = hi > lo ? (value - lo) / (hi - lo) : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  std::array<char, 8> buf{};
  std::array<int, 3> rgb{};
  for (std::size_t i = 0; i < 3; ++i) rgb[i] = static_cast<int>(std::lround(kLow[i] + t * (kHigh[i] - kLow[i])));
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf.data();
}

void write_hex_heatmap(std::ostream& out, const Landscape& l) {
  if (l.points.empty()) throw std::invalid_argument("write_hex_heatmap: empty landscape");
  if (l.points.size() != l.values.size()) throw std::invalid_argument("landscape: points/values size mismatch");
  int extent = 0;
  for (const HexPoint& p : l.points) {
    if (!p.in_first_hextant()) throw std::invalid_argument("write_hex_heatmap: point " + p.str() + " outside first hextant");
    extent = std::max(extent, p.a + p.b);
  }
  const auto [lo_it, hi_it] = std::minmax_element(l.values.begin(), l.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  const double sqrt3 = std::numbers::sqrt3;
  const double radius = kCell / sqrt3;
  const double width = std::max(2 * kMargin + extent * kCell + kCell, 260.0);
  const double lattice_height = 2 * kMargin + extent * kCell * sqrt3 / 2 + 2 * radius;
  const double height = lattice_height + kLegend;
  // Point (a,b) sits at a*w1 + b*w2 with w1 along +x and w2 at 60 degrees.
  const double origin_x = kMargin + kCell / 2;
  const double origin_y = lattice_height - kMargin - radius;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_double("%.0f", width) << "\" height=\""
      << fmt_double("%.0f", height) << "\" viewBox=\"0 0 " << fmt_double("%.0f", width) << ' '
      << fmt_double("%.0f", height) << "\">\n";
  out << "<title>" << l.kind << " N=" << l.level << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g id=\"cells\" stroke=\"#333333\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < l.points.size(); ++i) {
    const HexPoint& p = l.points[i];
    const double cx = origin_x + kCell * (p.a + 0.5 * p.b);
    const double cy = origin_y - kCell * (sqrt3 / 2) * p.b;
    out << "<polygon class=\"cell\" data-a=\"" << p.a << "\" data-b=\"" << p.b << "\" data-value=\""
        << full(l.values[i]) << "\" fill=\"" << heat_colour(l.values[i], lo, hi) << "\" points=\"";
    for (int k = 0; k < 6; ++k) {
      const double angle = std::numbers::pi / 6 + k * std::numbers::pi / 3;
      out << (k ? " " : "") << fmt_double("%.3f", cx + radius * std::cos(angle)) << ','
          << fmt_double("%.3f", cy + radius * std::sin(angle));
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  const double bar_y = lattice_height + 10;
  const double bar_w = width - 2 * kMargin;
  out << "<defs><linearGradient id=\"ramp\" x1=\"0\" x2=\"1\" y1=\"0\" y2=\"0\">"
      << "<stop offset=\"0\" stop-color=\"" << heat_colour(0, 0, 1) << "\"/>"
      << "<stop offset=\"1\" stop-color=\"" << heat_colour(1, 0, 1) << "\"/>"
      << "</linearGradient></defs>\n";
  out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"" << fmt_double("%.3f", kMargin) << "\" y=\"" << fmt_double("%.3f", bar_y) << "\" width=\""
      << fmt_double("%.3f", bar_w) << "\" height=\"14\" fill=\"url(#ramp)\" stroke=\"#333333\"/>\n";
  out << "<text class=\"legend-min\" x=\"" << fmt_double("%.3f", kMargin) << "\" y=\""
      << fmt_double("%.3f", bar_y + 32) << "\">min=" << fmt_double("%.6g", lo) << "</text>\n";
  out << "<text class=\"legend-max\" text-anchor=\"end\" x=\"" << fmt_double("%.3f", kMargin + bar_w) << "\" y=\""
      << fmt_double("%.3f", bar_y + 32) << "\">max=" << fmt_double("%.6g", hi) << "</text>\n";
  out << "</g>\n</svg>\n";
}

void write_to_path(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  writer(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace hexphase
