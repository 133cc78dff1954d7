// JSON matrix files and the export formats.
//
//   {
//     "schema_version": 1,
//     "dimension": 18,                 // or 6
//     "ordering": "table2-3d",         // or "table2-2d"
//     "values": [...],                 // 171 (or 21) upper-triangle values, row-major
//     "units": "MPa.mm2",              // optional
//     "class": "cubic",                // optional
//     "params": [...]                  // optional, requires "class"
//   }
#pragma once

#include "sge/basis_index.hpp"
#include "sge/class_builders.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sge {

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  int schema_version = kSchemaVersion;
  int dimension = kDim;
  std::vector<double> upper;
  std::optional<std::string> units;
  std::optional<SymmetryTag> cls;
  std::vector<double> params;

  std::string ordering() const { return dimension == kDim ? "table2-3d" : "table2-2d"; }

  static MatrixFile from_matrix(const SgeMatrix& m);
  static MatrixFile from_2d(const Mat6& m);

  /// Throws DimensionError unless the file is 18-dimensional.
  SgeMatrix matrix() const;
  /// Throws DimensionError unless the file is 6-dimensional.
  Mat6 matrix_2d() const;
};

/// Throws ParseError for malformed JSON or schema violations, DimensionError
/// when the value count does not match the dimension.
MatrixFile parse_matrix_file(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);  // "-" reads stdin

std::string format_matrix_file(const MatrixFile& f);
void write_matrix_file(const std::string& path, const MatrixFile& f);  // "-" writes stdout

/// Full square matrix, one row per line, 17 significant digits.
std::string format_csv(const MatrixFile& f);

/// {"ordering": "ijklmn", "shape": [3,3,3,3,3,3], "values": [729]} with the
/// basis scalings removed.
nlohmann::json tensor_json(const SgeMatrix& m);

}  // namespace sge
