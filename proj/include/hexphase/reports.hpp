// Copyright 2026 The hexphase Authors
// SPDX-License-Identifier: Apache-2.0

// Serialization of matrices and lattice landscapes.
//
// Matrix CSV:     header `row,col,re,im`, one line per entry, row-major.
// Landscape CSV:  header `a,b,value`, one line per first-hextant point.
// Matrix JSON:    {"kind", "rows", "cols", "row_labels", "col_labels",
//                  "entries": [[[re, im], ...], ...]}
// Landscape JSON: {"kind", "level", "points": [{"a", "b", "value"}, ...]}
// SVG:            one hexagonal cell per lattice point, linear colour scale,
//                 legend with the min and max values.
//
// CSV values are printed with 17 significant digits; JSON doubles use the
// shortest representation that parses back to the same bits.

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexphase/lattice.hpp"
#include "hexphase/matrix.hpp"

namespace hexphase {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json, Svg };

std::optional<Format> parse_format(std::string_view name);

struct LabeledMatrix {
  std::string kind;
  ComplexMatrix matrix;
  std::vector<std::string> row_labels;  // may be empty
  std::vector<std::string> col_labels;  // may be empty
};

struct Landscape {
  std::string kind;
  int level = 0;
  std::vector<HexPoint> points;
  std::vector<double> values;
};

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m);
void write_matrix_json(std::ostream& out, const LabeledMatrix& m);

/// Reads back the "entries" array written by write_matrix_json.
ComplexMatrix parse_matrix_json(std::string_view text);

void write_landscape_csv(std::ostream& out, const Landscape& l);
void write_landscape_json(std::ostream& out, const Landscape& l);

/// Standalone SVG heat map. Throws std::invalid_argument for an empty
/// landscape or points outside the first hextant.
void write_hex_heatmap(std::ostream& out, const Landscape& l);

/// Fill colour chosen for `value` on the scale [lo, hi], as "#rrggbb".
std::string heat_colour(double value, double lo, double hi);

/// Runs `writer` against the file at `path`, or standard output for "-".
/// Throws IoError when the file cannot be opened or written.
void write_to_path(const std::string& path, const std::function<void(std::ostream&)>& writer);

}  // namespace hexphase
