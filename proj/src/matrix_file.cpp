#include "sge/matrix_file.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace sge {
namespace {

constexpr int kUpper2d = 21;

std::vector<double> upper_of(const Mat6& m) {
  std::vector<double> out;
  for (int r = 0; r < 6; ++r)
    for (int c = r; c < 6; ++c) out.push_back(m(r, c));
  return out;
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("missing or malformed field '") + key + "'");
  }
}

}  // namespace

MatrixFile MatrixFile::from_matrix(const SgeMatrix& m) {
  MatrixFile f;
  f.dimension = kDim;
  f.upper.assign(m.upper().begin(), m.upper().end());
  return f;
}

MatrixFile MatrixFile::from_2d(const Mat6& m) {
  MatrixFile f;
  f.dimension = 6;
  f.upper = upper_of(m);
  return f;
}

SgeMatrix MatrixFile::matrix() const {
  if (dimension != kDim) throw DimensionError("expected an 18x18 matrix file, got dimension " + std::to_string(dimension));
  return SgeMatrix::from_upper(upper);
}

Mat6 MatrixFile::matrix_2d() const {
  if (dimension != 6) throw DimensionError("expected a 6x6 matrix file, got dimension " + std::to_string(dimension));
  Mat6 m;
  std::size_t k = 0;
  for (int r = 0; r < 6; ++r)
    for (int c = r; c < 6; ++c, ++k) m(r, c) = m(c, r) = upper[k];
  return m;
}

MatrixFile parse_matrix_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("matrix file must be a JSON object");

  MatrixFile f;
  f.schema_version = field<int>(j, "schema_version");
  if (f.schema_version != kSchemaVersion)
    throw ParseError("unsupported schema_version " + std::to_string(f.schema_version));
  f.dimension = field<int>(j, "dimension");
  if (f.dimension != kDim && f.dimension != 6)
    throw DimensionError("dimension must be 18 or 6, got " + std::to_string(f.dimension));
  const auto ordering = field<std::string>(j, "ordering");
  if (ordering != f.ordering())
    throw DimensionError("ordering '" + ordering + "' does not match dimension " + std::to_string(f.dimension));
  f.upper = field<std::vector<double>>(j, "values");
  const std::size_t want = f.dimension == kDim ? kUpperSize : kUpper2d;
  if (f.upper.size() != want)
    throw DimensionError("expected " + std::to_string(want) + " upper-triangle values, got " +
                         std::to_string(f.upper.size()));
  if (j.contains("units")) f.units = field<std::string>(j, "units");
  if (j.contains("class")) {
    const auto name = field<std::string>(j, "class");
    f.cls = parse_tag(name);
    if (!f.cls) throw ParseError("unknown class '" + name + "'");
  }
  if (j.contains("params")) {
    if (!f.cls) throw ParseError("'params' requires 'class'");
    f.params = field<std::vector<double>>(j, "params");
    if (static_cast<int>(f.params.size()) != param_count(*f.cls))
      throw DimensionError(display_name(*f.cls) + " takes " + std::to_string(param_count(*f.cls)) +
                           " parameters, file has " + std::to_string(f.params.size()));
  }
  return f;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_matrix_file(text);
}

std::string format_matrix_file(const MatrixFile& f) {
  nlohmann::ordered_json j;
  j["schema_version"] = f.schema_version;
  j["dimension"] = f.dimension;
  j["ordering"] = f.ordering();
  j["values"] = f.upper;
  if (f.units) j["units"] = *f.units;
  if (f.cls) j["class"] = tag_name(*f.cls);
  if (f.cls && !f.params.empty()) j["params"] = f.params;
  // nlohmann writes the shortest decimal that reads back to the same double.
  return j.dump(2) + "\n";
}

void write_matrix_file(const std::string& path, const MatrixFile& f) {
  const std::string text = format_matrix_file(f);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string format_csv(const MatrixFile& f) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  const int n = f.dimension;
  std::vector<std::vector<double>> full(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  std::size_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c, ++k)
      full[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          full[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = f.upper[k];
  for (const auto& row : full) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << "\n";
  }
  return os.str();
}

nlohmann::json tensor_json(const SgeMatrix& m) {
  const TensorA a = matrix_to_tensorA(m);
  const auto v = a.values();
  return {{"ordering", "ijklmn"},
          {"shape", {3, 3, 3, 3, 3, 3}},
          {"values", std::vector<double>(v.begin(), v.end())}};
}

}  // namespace sge
