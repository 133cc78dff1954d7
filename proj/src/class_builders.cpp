#include "sge/class_builders.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>

namespace sge {
namespace {

using Matrix = Eigen::MatrixXd;

constexpr std::array<int, 4> kOffset = {0, 5, 10, 15};

// Hands out consecutive parameters block by block and records their names.
class Cursor {
 public:
  Cursor(std::span<const double> p, Transcription t) : p_(p), t_(t) {}

  Block take(BlockKind kind) {
    const auto n = static_cast<std::size_t>(block_param_count(kind));
    for (auto& s : block_param_names(kind)) names_.push_back(std::move(s));
    Block b = make_block(kind, p_.subspan(pos_, n), t_);
    pos_ += n;
    return b;
  }

  double scalar(const char* name) {
    names_.emplace_back(name);
    return p_[pos_++];
  }

  Block depend(DependentKind kind, const Block& b) const { return dependent_block(kind, b, t_); }
  Transcription transcription() const { return t_; }
  std::size_t used() const { return pos_; }
  std::vector<std::string>& names() { return names_; }

 private:
  std::span<const double> p_;
  Transcription t_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

// Block (r, c) with r <= c; the mirror block is filled by symmetry.
class Layout {
 public:
  void put(int r, int c, const Matrix& b) {
    m_.block(kOffset[r], kOffset[c], b.rows(), b.cols()) += b;
    if (r != c) m_.block(kOffset[c], kOffset[r], b.cols(), b.rows()) += b.transpose();
  }
  const Mat18& matrix() const { return m_; }

 private:
  Mat18 m_ = Mat18::Zero();
};

Mat18 assemble(SymmetryTag tag, Cursor& p) {
  const auto& k = coupling_constants();
  const Matrix& perm = k.p.values;
  Layout L;
  switch (tag) {
    case SymmetryTag::triclinic: {
      L.put(0, 0, p.take(BlockKind::A15).values);
      L.put(0, 1, p.take(BlockKind::B25).values);
      L.put(0, 2, p.take(BlockKind::C25).values);
      L.put(0, 3, p.take(BlockKind::D15).values);
      L.put(1, 1, p.take(BlockKind::E15).values);
      L.put(1, 2, p.take(BlockKind::F25).values);
      L.put(1, 3, p.take(BlockKind::G15).values);
      L.put(2, 2, p.take(BlockKind::H15).values);
      L.put(2, 3, p.take(BlockKind::I15).values);
      L.put(3, 3, p.take(BlockKind::J6).values);
      break;
    }
    case SymmetryTag::z2: {
      L.put(0, 0, p.take(BlockKind::A15).values);
      L.put(0, 1, p.take(BlockKind::B25).values);
      L.put(1, 1, p.take(BlockKind::E15).values);
      L.put(2, 2, p.take(BlockKind::H15).values);
      L.put(2, 3, p.take(BlockKind::I15).values);
      L.put(3, 3, p.take(BlockKind::J6).values);
      break;
    }
    case SymmetryTag::z2_e1: {
      L.put(0, 0, p.take(BlockKind::A15).values);
      L.put(0, 3, p.take(BlockKind::D15).values);
      L.put(1, 1, p.take(BlockKind::E15).values);
      L.put(1, 2, p.take(BlockKind::F25).values);
      L.put(2, 2, p.take(BlockKind::H15).values);
      L.put(3, 3, p.take(BlockKind::J6).values);
      break;
    }
    case SymmetryTag::d2: {
      L.put(0, 0, p.take(BlockKind::A15).values);
      L.put(1, 1, p.take(BlockKind::E15).values);
      L.put(2, 2, p.take(BlockKind::H15).values);
      L.put(3, 3, p.take(BlockKind::J6).values);
      break;
    }
    case SymmetryTag::z4: {
      const Matrix a = p.take(BlockKind::A15).values;
      L.put(0, 0, a);
      L.put(0, 1, p.take(BlockKind::B10).values);
      L.put(1, 1, a);
      L.put(2, 2, p.take(BlockKind::H9).values);
      L.put(2, 3, p.take(BlockKind::I7).values);
      L.put(3, 3, p.take(BlockKind::J4).values);
      break;
    }
    case SymmetryTag::d4: {
      const Matrix a = p.take(BlockKind::A15).values;
      L.put(0, 0, a);
      L.put(1, 1, a);
      L.put(2, 2, p.take(BlockKind::H9).values);
      L.put(3, 3, p.take(BlockKind::J4).values);
      break;
    }
    case SymmetryTag::z3: {
      const Block a = p.take(BlockKind::A11);
      const Block b = p.take(BlockKind::B6);
      const Block c = p.take(BlockKind::C3);
      const Block d = p.take(BlockKind::D4b);
      const Block f = p.take(BlockKind::F8);
      const Block g = p.take(BlockKind::G9);
      const Block h = p.take(BlockKind::H6);
      const Block i = p.take(BlockKind::I4);
      const Block j = p.take(BlockKind::J4);
      const double eta = p.scalar("eta");
      const double theta = p.scalar("theta");
      L.put(0, 0, a.values + eta * k.a_c.values);
      L.put(0, 1, b.values + theta * k.b_c.values);
      L.put(0, 2, c.values + p.depend(DependentKind::fG9, g).values);
      L.put(0, 3, d.values + p.depend(DependentKind::fF8, f).values);
      L.put(1, 1, a.values);
      L.put(1, 2, f.values + p.depend(DependentKind::fD4, d).values);
      L.put(1, 3, g.values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(2, 3, i.values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::d3: {
      const Block a = p.take(BlockKind::A11);
      const Block d = p.take(BlockKind::D4b);
      const Block f = p.take(BlockKind::F8);
      const Block h = p.take(BlockKind::H6);
      const Block j = p.take(BlockKind::J4);
      const double eta = p.scalar("eta");
      L.put(0, 0, a.values + eta * k.a_c.values);
      L.put(0, 3, d.values + p.depend(DependentKind::fF8, f).values);
      L.put(1, 1, a.values);
      L.put(1, 2, f.values + p.depend(DependentKind::fD4, d).values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::z6: {
      const Block a = p.take(BlockKind::A11);
      const Block b = p.take(BlockKind::B6);
      const Block h = p.take(BlockKind::H6);
      const Block i = p.take(BlockKind::I4);
      const Block j = p.take(BlockKind::J4);
      const double eta = p.scalar("eta");
      const double theta = p.scalar("theta");
      L.put(0, 0, a.values + eta * k.a_c.values);
      L.put(0, 1, b.values + theta * k.b_c.values);
      L.put(1, 1, a.values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(2, 3, i.values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::d6: {
      const Block a = p.take(BlockKind::A11);
      const Block h = p.take(BlockKind::H6);
      const Block j = p.take(BlockKind::J4);
      const double eta = p.scalar("eta");
      L.put(0, 0, a.values + eta * k.a_c.values);
      L.put(1, 1, a.values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::z5: {
      const Block a = p.take(BlockKind::A11);
      const Block b = p.take(BlockKind::B6);
      const Block f = p.take(BlockKind::F2);
      const Block g = p.take(BlockKind::G2);
      const Block h = p.take(BlockKind::H6);
      const Block i = p.take(BlockKind::I4);
      const Block j = p.take(BlockKind::J4);
      L.put(0, 0, a.values);
      L.put(0, 1, b.values);
      L.put(0, 2, p.depend(DependentKind::fG2, g).values);
      L.put(0, 3, p.depend(DependentKind::fF2, f).values);
      L.put(1, 1, a.values);
      L.put(1, 2, f.values);
      L.put(1, 3, g.values);
      L.put(2, 2, h.values + p.depend(DependentKind::gJ4, j).values);
      L.put(2, 3, i.values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::d5: {
      const Block a = p.take(BlockKind::A11);
      const Block f = p.take(BlockKind::F2);
      const Block h = p.take(BlockKind::H6);
      const Block j = p.take(BlockKind::J4);
      L.put(0, 0, a.values);
      L.put(0, 3, p.depend(DependentKind::fF2, f).values);
      L.put(1, 1, a.values);
      L.put(1, 2, f.values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::so2: {
      const Block a = p.take(BlockKind::A11);
      const Block b = p.take(BlockKind::B6);
      const Block h = p.take(BlockKind::H6);
      const Block i = p.take(BlockKind::I4);
      const Block j = p.take(BlockKind::J4);
      L.put(0, 0, a.values);
      L.put(0, 1, b.values);
      L.put(1, 1, a.values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(2, 3, i.values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::o2: {
      const Block a = p.take(BlockKind::A11);
      const Block h = p.take(BlockKind::H6);
      const Block j = p.take(BlockKind::J4);
      L.put(0, 0, a.values);
      L.put(1, 1, a.values);
      L.put(2, 2, h.values + p.depend(DependentKind::fJ4, j).values);
      L.put(3, 3, j.values);
      break;
    }
    case SymmetryTag::tetrahedral: {
      const Matrix a = p.take(BlockKind::A15).values;
      L.put(0, 0, a);
      L.put(1, 1, perm * a * perm.transpose());
      L.put(2, 2, a);
      L.put(3, 3, p.take(BlockKind::J2).values);
      break;
    }
    case SymmetryTag::cubic: {
      const Matrix a = p.take(BlockKind::A9).values;
      L.put(0, 0, a);
      L.put(1, 1, a);
      L.put(2, 2, a);
      L.put(3, 3, p.take(BlockKind::J2).values);
      break;
    }
    case SymmetryTag::icosahedral: {
      const Block a = p.take(BlockKind::A5);
      const double eta = p.scalar("eta");
      const Matrix x = a.values + eta * k.a_ico.values;
      L.put(0, 0, x);
      L.put(1, 1, perm * x * perm.transpose());
      L.put(2, 2, x);
      L.put(3, 3, eta * k.j_c.values + p.depend(DependentKind::fA5, a).values);
      break;
    }
    case SymmetryTag::isotropic: {
      const Block a = p.take(BlockKind::A5);
      L.put(0, 0, a.values);
      L.put(1, 1, a.values);
      L.put(2, 2, a.values);
      L.put(3, 3, p.depend(DependentKind::fA5, a).values);
      break;
    }
  }
  return L.matrix();
}

struct TagInfo {
  SymmetryTag tag;
  const char* name;
  const char* display;
  int count;
  int order;  // 0 for continuous groups
};

constexpr std::array<TagInfo, kTagCount> kInfo = {{
    {SymmetryTag::triclinic, "triclinic", "Triclinic", 171, 1},
    {SymmetryTag::z2, "z2", "Z2 (e3)", 91, 2},
    {SymmetryTag::z2_e1, "z2_e1", "Z2 (e1)", 91, 2},
    {SymmetryTag::d2, "d2", "D2", 51, 4},
    {SymmetryTag::z4, "z4", "Z4", 45, 4},
    {SymmetryTag::d4, "d4", "D4", 28, 8},
    {SymmetryTag::z3, "z3", "Z3", 57, 3},
    {SymmetryTag::d3, "d3", "D3", 34, 6},
    {SymmetryTag::z6, "z6", "Z6", 33, 6},
    {SymmetryTag::d6, "d6", "D6", 22, 12},
    {SymmetryTag::z5, "z5", "Z5", 35, 5},
    {SymmetryTag::d5, "d5", "D5", 23, 10},
    {SymmetryTag::so2, "so2", "SO(2)", 31, 0},
    {SymmetryTag::o2, "o2", "O(2)", 21, 0},
    {SymmetryTag::tetrahedral, "tetrahedral", "Tetrahedral", 17, 12},
    {SymmetryTag::cubic, "cubic", "Cubic", 11, 24},
    {SymmetryTag::icosahedral, "icosahedral", "Icosahedral", 6, 60},
    {SymmetryTag::isotropic, "isotropic", "Isotropic", 5, 0},
}};

const TagInfo& info(SymmetryTag tag) { return kInfo[static_cast<std::size_t>(tag)]; }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

struct Directions {
  std::vector<SgeMatrix> matrices;
  Eigen::MatrixXd coords;  // 171 x n
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver;
};

const Directions& directions(SymmetryTag tag) {
  static const std::vector<Directions> all = [] {
    std::vector<Directions> out;
    for (int i = 0; i < kTagCount; ++i) {
      const auto t = static_cast<SymmetryTag>(i);
      Directions d;
      d.matrices = parameter_directions(t);
      d.coords.resize(kUpperSize, static_cast<Eigen::Index>(d.matrices.size()));
      for (std::size_t i = 0; i < d.matrices.size(); ++i)
        d.coords.col(static_cast<Eigen::Index>(i)) = d.matrices[i].coords();
      d.solver.compute(d.coords);
      out.push_back(std::move(d));
    }
    return out;
  }();
  return all[static_cast<std::size_t>(tag)];
}

}  // namespace

int param_count(SymmetryTag tag) { return info(tag).count; }

std::optional<int> group_order(SymmetryTag tag) {
  const int n = info(tag).order;
  if (n == 0) return std::nullopt;
  return n;
}

std::string tag_name(SymmetryTag tag) { return info(tag).name; }
std::string display_name(SymmetryTag tag) { return info(tag).display; }

std::optional<SymmetryTag> parse_tag(const std::string& name) {
  static const std::map<std::string, SymmetryTag> aliases = {
      {"z2_e3", SymmetryTag::z2},          {"monoclinic", SymmetryTag::z2},
      {"orthotropic", SymmetryTag::d2},    {"tetragonal", SymmetryTag::d4},
      {"trigonal", SymmetryTag::d3},       {"hexagonal", SymmetryTag::d6},
      {"pentagonal", SymmetryTag::d5},     {"so(2)", SymmetryTag::so2},
      {"o(2)", SymmetryTag::o2},           {"trans_iso", SymmetryTag::o2},
      {"t", SymmetryTag::tetrahedral},     {"o", SymmetryTag::cubic},
      {"i", SymmetryTag::icosahedral},     {"ico", SymmetryTag::icosahedral},
      {"so3", SymmetryTag::isotropic},     {"so(3)", SymmetryTag::isotropic},
  };
  const std::string key = lower(name);
  for (const auto& row : kInfo)
    if (key == row.name) return row.tag;
  if (auto it = aliases.find(key); it != aliases.end()) return it->second;
  return std::nullopt;
}

const std::vector<SymmetryTag>& table_tags() {
  static const std::vector<SymmetryTag> tags = [] {
    std::vector<SymmetryTag> out;
    for (SymmetryTag t : all_tags())
      if (t != SymmetryTag::z2_e1) out.push_back(t);
    return out;
  }();
  return tags;
}

std::vector<std::string> parameter_names(SymmetryTag tag) {
  const std::vector<double> zeros(static_cast<std::size_t>(param_count(tag)), 0.0);
  Cursor cur(zeros, Transcription::corrected);
  assemble(tag, cur);
  return std::move(cur.names());
}

SgeMatrix build(const SymmetryClass& c, std::span<const double> params, Transcription t) {
  const int n = param_count(c.tag);
  if (static_cast<int>(params.size()) != n)
    throw std::invalid_argument(display_name(c.tag) + " takes " + std::to_string(n) + " parameters, got " +
                                std::to_string(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i)
    if (!std::isfinite(params[i]))
      throw std::invalid_argument("parameter " + std::to_string(i) + " is not finite");
  Cursor cur(params, t);
  SgeMatrix m = SgeMatrix::symmetrized(assemble(c.tag, cur));
  if (!c.canonical()) m = rotate_matrix(m, c.orientation);
  return m;
}

std::vector<SgeMatrix> parameter_directions(SymmetryTag tag, Transcription t) {
  const int n = param_count(tag);
  std::vector<SgeMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<double> unit(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    unit[static_cast<std::size_t>(i)] = 1.0;
    out.push_back(build(tag, unit, t));
    unit[static_cast<std::size_t>(i)] = 0.0;
  }
  return out;
}

ParamVector extract_params(const SgeMatrix& m, const SymmetryClass& c, double tol) {
  const SgeMatrix local = c.canonical() ? m : rotate_matrix(m, c.orientation.transpose());
  const Directions& d = directions(c.tag);
  const Coords171 x = local.coords();
  const Eigen::VectorXd p = d.solver.solve(x);
  const double norm = x.norm();
  if (norm == 0.0) return ParamVector(static_cast<std::size_t>(param_count(c.tag)), 0.0);
  const double residual = (d.coords * p - x).norm() / norm;
  if (!(residual <= tol))
    throw SubspaceMismatch("matrix is not in the " + display_name(c.tag) + " subspace (relative residual " +
                               std::to_string(residual) + ")",
                           residual);
  return {p.data(), p.data() + p.size()};
}

}  // namespace sge
