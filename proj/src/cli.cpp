#include "sge/cli.hpp"

#include "sge/class_builders.hpp"
#include "sge/invariance.hpp"
#include "sge/matrix_file.hpp"
#include "sge/rotations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace sge {
namespace {

class BadArguments : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

SymmetryTag require_tag(const std::string& name) {
  const auto t = parse_tag(name);
  if (!t) throw BadArguments("unknown class '" + name + "' (try 'sgetool info')");
  return *t;
}

Rotation orientation_from(const std::vector<double>& axis, const std::string& angle) {
  if (axis.empty() && angle.empty()) return Rotation::identity();
  if (axis.size() != 3) throw BadArguments("--axis takes three comma-separated components");
  if (angle.empty()) throw BadArguments("--axis needs --angle");
  try {
    return axis_angle(Vec3(axis[0], axis[1], axis[2]), parse_angle(angle));
  } catch (const std::invalid_argument& e) {
    throw BadArguments(e.what());
  }
}

// "x,y,z:angle"
Rotation parse_orientation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw BadArguments("orientation must look like x,y,z:angle, got '" + text + "'");
  std::vector<double> axis;
  std::stringstream ss(text.substr(0, colon));
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      axis.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw BadArguments("bad axis component '" + item + "'");
    }
  }
  return orientation_from(axis, text.substr(colon + 1));
}

void emit_matrix(const MatrixFile& f, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << format_matrix_file(f);
    return;
  }
  write_matrix_file(path, f);
}

std::vector<double> read_params_file(const std::string& path, SymmetryTag tag) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    if (j.is_array()) return j.get<std::vector<double>>();
    if (j.is_object() && j.contains("params")) return j.at("params").get<std::vector<double>>();
    if (j.is_object()) {
      // Named form: {"a11": 1.0, ...}; every parameter must be present.
      std::vector<double> out;
      for (const auto& name : parameter_names(tag)) {
        if (!j.contains(name)) throw ParseError(path + ": missing parameter '" + name + "'");
        out.push_back(j.at(name).get<double>());
      }
      if (j.size() != out.size()) throw ParseError(path + ": unknown parameter names present");
      return out;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": expected an array or an object of parameters");
}

std::vector<double> random_params(SymmetryTag tag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(param_count(tag)));
  for (double& v : p) v = uni(rng);
  return p;
}

void print_report(const nlohmann::ordered_json& j, const std::vector<std::string>& csv_rows,
                  const std::string& pretty, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json: out << j.dump(2) << "\n"; break;
    case OutputFormat::csv:
      for (const auto& r : csv_rows) out << r << "\n";
      break;
    case OutputFormat::pretty: out << pretty; break;
  }
}

// Commands ------------------------------------------------------------------

struct Options {
  RunConfig cfg;
  std::string format = "pretty";
  std::string out_path;
  std::string cls;
  std::string file;
  std::vector<double> params;
  std::string params_file;
  std::vector<double> axis;
  std::string angle;
  std::string units;
  std::string to;
  std::vector<std::string> orientations;
  std::vector<std::string> classes;
};

int cmd_gen(const Options& o, std::ostream& out) {
  const SymmetryTag tag = require_tag(o.cls);
  if (!o.params.empty() && !o.params_file.empty()) throw BadArguments("give --params or --params-file, not both");
  std::vector<double> p;
  if (!o.params.empty()) {
    p = o.params;
  } else if (!o.params_file.empty()) {
    p = read_params_file(o.params_file, tag);
  } else {
    p = random_params(tag, o.cfg.seed);
  }
  if (static_cast<int>(p.size()) != param_count(tag))
    throw DimensionError(display_name(tag) + " takes " + std::to_string(param_count(tag)) + " parameters, got " +
                         std::to_string(p.size()));
  const SymmetryClass c{tag, orientation_from(o.axis, o.angle)};
  MatrixFile f = MatrixFile::from_matrix(build(c, p));
  if (!o.units.empty()) f.units = o.units;
  // Parameters only describe the file when it sits in the canonical frame.
  if (c.canonical()) {
    f.cls = tag;
    f.params = p;
  }
  emit_matrix(f, o.out_path, out);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SymmetryTag tag = require_tag(o.cls);
  const SymmetryClass c{tag, orientation_from(o.axis, o.angle)};
  const SgeMatrix m = read_matrix_file(o.file).matrix();
  const GeneratorSet gens = c.canonical() ? generators(tag) : conjugated(generators(tag), c.orientation);
  const double norm = m.frobenius_norm();

  std::vector<double> gres;
  for (const auto& q : gens.elements)
    gres.push_back(norm == 0.0 ? 0.0 : (rotate_matrix(m, q) - m).frobenius_norm() / norm);
  const double res = norm == 0.0 ? 0.0 : residual_to_class(m, c);
  const bool ok = res <= o.cfg.tolerance;

  nlohmann::ordered_json j;
  j["class"] = tag_name(tag);
  j["generator_residuals"] = gres;
  j["residual"] = res;
  j["tolerance"] = o.cfg.tolerance;
  j["passed"] = ok;
  std::vector<std::string> rows = {"item,residual"};
  std::ostringstream pretty;
  pretty << "class " << display_name(tag) << "\n";
  for (std::size_t i = 0; i < gres.size(); ++i) {
    rows.push_back("generator" + std::to_string(i + 1) + "," + sci(gres[i]));
    pretty << "  generator " << i + 1 << "  residual " << sci(gres[i]) << "\n";
  }
  rows.push_back("class," + sci(res));
  pretty << "  distance to class " << sci(res) << " (tolerance " << sci(o.cfg.tolerance) << ")  "
         << (ok ? "PASS" : "FAIL") << "\n";
  print_report(j, rows, pretty.str(), o.cfg.format, out);
  return ok ? kExitOk : kExitTolerance;
}

int cmd_project(const Options& o, std::ostream& out) {
  const SymmetryTag tag = require_tag(o.cls);
  const SymmetryClass c{tag, orientation_from(o.axis, o.angle)};
  const MatrixFile in = read_matrix_file(o.file);
  const SgeMatrix local = c.canonical() ? in.matrix() : rotate_matrix(in.matrix(), c.orientation.transpose());
  SgeMatrix p = project(local, class_basis(tag));
  MatrixFile f;
  if (c.canonical()) {
    f = MatrixFile::from_matrix(p);
    f.cls = tag;
    f.params = extract_params(p, tag);
  } else {
    f = MatrixFile::from_matrix(rotate_matrix(p, c.orientation));
  }
  f.units = in.units;
  emit_matrix(f, o.out_path, out);
  return kExitOk;
}

int cmd_rotate(const Options& o, std::ostream& out) {
  if (o.axis.empty()) throw BadArguments("rotate needs --axis and --angle");
  const Rotation q = orientation_from(o.axis, o.angle);
  const MatrixFile in = read_matrix_file(o.file);
  MatrixFile f = MatrixFile::from_matrix(rotate_matrix(in.matrix(), q));
  f.units = in.units;
  emit_matrix(f, o.out_path, out);
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const SgeMatrix m = read_matrix_file(o.file).matrix();
  std::vector<Rotation> extra;
  for (const auto& s : o.orientations) extra.push_back(parse_orientation(s));
  if (m.frobenius_norm() == 0.0) throw BadArguments("cannot classify the zero matrix");
  const auto matches = classify(m, o.cfg.tolerance, extra);

  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  std::vector<std::string> rows = {"class,param_count,residual,oriented"};
  std::ostringstream pretty;
  pretty << "classes within " << sci(o.cfg.tolerance) << ", most symmetric first\n";
  for (const auto& mt : matches) {
    const bool oriented = !mt.cls.canonical();
    nlohmann::ordered_json e;
    e["class"] = tag_name(mt.cls.tag);
    e["param_count"] = param_count(mt.cls.tag);
    e["residual"] = mt.residual;
    if (oriented) {
      std::vector<std::vector<double>> q(3, std::vector<double>(3));
      for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < 3; ++cc) q[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] = mt.cls.orientation(r, cc);
      e["orientation"] = q;
    }
    j.push_back(e);
    rows.push_back(tag_name(mt.cls.tag) + "," + std::to_string(param_count(mt.cls.tag)) + "," + sci(mt.residual) +
                   "," + (oriented ? "yes" : "no"));
    pretty << "  " << std::left << std::setw(14) << display_name(mt.cls.tag) << std::right << std::setw(4)
           << param_count(mt.cls.tag) << "  residual " << sci(mt.residual) << (oriented ? "  (user frame)" : "")
           << "\n";
  }
  print_report(j, rows, pretty.str(), o.cfg.format, out);
  return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out) {
  const MatrixFile in = read_matrix_file(o.file);
  std::string text;
  if (o.to == "tensor-json") {
    text = tensor_json(in.matrix()).dump(2) + "\n";
  } else if (o.to == "csv") {
    text = format_csv(in);
  } else if (o.to == "2d") {
    MatrixFile f = MatrixFile::from_2d(restrict_2d(in.matrix()));
    f.units = in.units;
    text = format_matrix_file(f);
  } else {
    throw BadArguments("--to must be tensor-json, csv or 2d");
  }
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw BadArguments("cannot write " + o.out_path);
    f << text;
  }
  return kExitOk;
}

std::string order_text(SymmetryTag t) {
  const auto n = group_order(t);
  return n ? std::to_string(*n) : "inf";
}

int cmd_info(const Options& o, std::ostream& out) {
  if (o.cls.empty()) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    std::vector<std::string> rows = {"class,param_count,group_order"};
    std::ostringstream pretty;
    pretty << std::left << std::setw(14) << "class" << std::setw(10) << "name" << std::right << std::setw(8)
           << "params" << std::setw(8) << "order" << "\n";
    for (SymmetryTag t : all_tags()) {
      j.push_back({{"class", tag_name(t)}, {"param_count", param_count(t)}, {"group_order", order_text(t)}});
      rows.push_back(tag_name(t) + "," + std::to_string(param_count(t)) + "," + order_text(t));
      pretty << std::left << std::setw(14) << display_name(t) << std::setw(10) << tag_name(t) << std::right
             << std::setw(8) << param_count(t) << std::setw(8) << order_text(t) << "\n";
    }
    print_report(j, rows, pretty.str(), o.cfg.format, out);
    return kExitOk;
  }
  const SymmetryTag t = require_tag(o.cls);
  const auto names = parameter_names(t);
  const auto gens = generators(t);
  nlohmann::ordered_json j;
  j["class"] = tag_name(t);
  j["display_name"] = display_name(t);
  j["param_count"] = param_count(t);
  j["group_order"] = order_text(t);
  j["parameters"] = names;
  std::vector<std::string> rows = {"index,parameter"};
  for (std::size_t i = 0; i < names.size(); ++i) rows.push_back(std::to_string(i) + "," + names[i]);
  std::ostringstream pretty;
  pretty << display_name(t) << ": " << param_count(t) << " parameters, group order " << order_text(t) << ", "
         << gens.elements.size() << " generator" << (gens.elements.size() == 1 ? "" : "s")
         << (gens.finite ? "" : " (order-7 surrogate)") << "\n  ";
  for (std::size_t i = 0; i < names.size(); ++i) pretty << names[i] << ((i + 1) % 12 == 0 ? "\n  " : " ");
  pretty << "\n";
  print_report(j, rows, pretty.str(), o.cfg.format, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<SymmetryTag> tags;
  for (const auto& name : o.classes) tags.push_back(require_tag(name));
  if (tags.empty()) tags = table_tags();

  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  std::vector<std::string> rows = {"class,table_count,oracle_dimension,builder_rank,max_residual,passed"};
  std::ostringstream pretty;
  pretty << std::left << std::setw(14) << "class" << std::right << std::setw(7) << "table" << std::setw(8)
         << "oracle" << std::setw(9) << "builder" << std::setw(12) << "residual" << "  result\n";
  bool all = true;
  for (SymmetryTag t : tags) {
    const int n = std::max(o.cfg.samples, param_count(t));
    const auto r = verify_builder(t, n, o.cfg.seed);
    all = all && r.passed;
    j.push_back(to_json(r));
    rows.push_back(tag_name(t) + "," + std::to_string(r.table_count) + "," + std::to_string(r.oracle_dimension) +
                   "," + std::to_string(r.builder_rank) + "," + sci(r.max_sample_residual) + "," +
                   (r.passed ? "true" : "false"));
    pretty << std::left << std::setw(14) << display_name(t) << std::right << std::setw(7) << r.table_count
           << std::setw(8) << r.oracle_dimension << std::setw(9) << r.builder_rank << std::setw(12)
           << sci(r.max_sample_residual) << "  " << (r.passed ? "ok" : "MISMATCH") << "\n";
  }
  print_report(j, rows, pretty.str(), o.cfg.format, out);
  return all ? kExitOk : kExitTolerance;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  if (const char* env = std::getenv(kToleranceEnv); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(kToleranceEnv) + " must be a positive number, got '" + env + "'");
    cfg.tolerance = v;
  }
  return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.cfg = default_config();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }

  CLI::App app{"Strain-gradient elasticity class matrices", "sgetool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.cfg.tolerance, "Relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.cfg.seed, "Random seed");
  app.add_option("--samples", o.cfg.samples, "Samples per class for verify")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto add_orientation = [&](CLI::App* sub) {
    sub->add_option("--axis", o.axis, "Rotation axis x,y,z")->delimiter(',')->expected(3);
    sub->add_option("--angle", o.angle, "Rotation angle, e.g. pi/4 or 0.785");
  };

  auto* gen = app.add_subcommand("gen", "Build a class matrix");
  gen->add_option("class", o.cls, "Class name")->required();
  gen->add_option("--params", o.params, "Comma-separated parameters")->delimiter(',');
  gen->add_option("--params-file", o.params_file, "JSON parameter file");
  gen->add_option("-o,--out", o.out_path, "Output file");
  gen->add_option("--units", o.units, "Units annotation");
  add_orientation(gen);

  auto* check = app.add_subcommand("check", "Check a matrix against a class");
  check->add_option("file", o.file)->required();
  check->add_option("class", o.cls)->required();
  add_orientation(check);

  auto* proj = app.add_subcommand("project", "Project a matrix onto a class");
  proj->add_option("file", o.file)->required();
  proj->add_option("class", o.cls)->required();
  proj->add_option("-o,--out", o.out_path, "Output file");
  add_orientation(proj);

  auto* rot = app.add_subcommand("rotate", "Rotate a matrix");
  rot->add_option("file", o.file)->required();
  rot->add_option("-o,--out", o.out_path, "Output file");
  add_orientation(rot);

  auto* cls = app.add_subcommand("classify", "List the classes a matrix belongs to");
  cls->add_option("file", o.file)->required();
  cls->add_option("--orientation", o.orientations, "Extra frame x,y,z:angle (repeatable)");

  auto* conv = app.add_subcommand("convert", "Export a matrix file");
  conv->add_option("file", o.file)->required();
  conv->add_option("--to", o.to, "tensor-json, csv or 2d")->required();
  conv->add_option("-o,--out", o.out_path, "Output file");

  auto* info = app.add_subcommand("info", "Class table or per-class parameter names");
  info->add_option("class", o.cls);

  auto* verify = app.add_subcommand("verify", "Compare builders with the invariant-subspace oracle");
  verify->add_option("classes", o.classes);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }
  o.cfg.format = o.format == "json" ? OutputFormat::json : o.format == "csv" ? OutputFormat::csv : OutputFormat::pretty;

  try {
    if (*gen) return cmd_gen(o, out);
    if (*check) return cmd_check(o, out);
    if (*proj) return cmd_project(o, out);
    if (*rot) return cmd_rotate(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*conv) return cmd_convert(o, out);
    if (*info) return cmd_info(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kExitDimension;
  } catch (const SubspaceMismatch& e) {
    err << "tolerance failure: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}

}  // namespace sge
