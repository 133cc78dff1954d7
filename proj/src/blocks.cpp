#include "sge/blocks.hpp"

#include <cmath>
#include <stdexcept>

namespace sge {
namespace {

using Matrix = Eigen::MatrixXd;

const double s2 = std::sqrt(2.0);
const double h2 = std::sqrt(2.0) / 2.0;

// Mirrors the upper triangle of u into a symmetric matrix.
Matrix sym(Matrix u) {
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index c = 0; c < r; ++c) u(r, c) = u(c, r);
  return u;
}

// Antisymmetric matrix from the strict upper triangle of u.
Matrix asym(Matrix u) {
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    u(r, r) = 0.0;
    for (Eigen::Index c = 0; c < r; ++c) u(r, c) = -u(c, r);
  }
  return u;
}

Matrix rows5(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Upper-triangle-first fill of an n x n symmetric matrix.
Matrix full_sym(std::span<const double> p, int n) {
  Matrix m(n, n);
  std::size_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) m(r, c) = p[k++];
  return sym(m);
}

Matrix full_rect(std::span<const double> p, int n, int m) {
  Matrix out(n, m);
  std::size_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) out(r, c) = p[k++];
  return out;
}

std::vector<std::string> sym_names(char letter, int n) {
  std::vector<std::string> out;
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c) out.push_back(std::string(1, letter) + std::to_string(r) + std::to_string(c));
  return out;
}

std::vector<std::string> rect_names(char letter, int n, int m) {
  std::vector<std::string> out;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= m; ++c) out.push_back(std::string(1, letter) + std::to_string(r) + std::to_string(c));
  return out;
}

std::vector<std::string> antisym_names(char letter, int n) {
  std::vector<std::string> out;
  for (int r = 1; r <= n; ++r)
    for (int c = r + 1; c <= n; ++c) out.push_back(std::string(1, letter) + std::to_string(r) + std::to_string(c));
  return out;
}

// A(5): five parameters a11 a12 a13 a22 a35.
Matrix a5_block(double a11, double a12, double a13, double a22, double a35, Transcription t) {
  const double a_iii = (a11 - a22) / 2.0;
  const double a_iv = a35 - s2 * a13;
  const double a_iv_star = a13 - s2 * a35;
  const double a_iii_star = (a11 + a22) / 2.0;
  // Published form uses alpha_IV on the (3,3)/(5,5) diagonal.
  const double d33 = -a12 + (t == Transcription::printed ? a_iv : a_iii_star);
  return sym(rows5({{a11, a12, a13, a12, a13},
                    {0, a22, -a13 + s2 * a_iii, a12 - s2 * a_iv_star, a_iv_star},
                    {0, 0, d33, a_iv_star, a35},
                    {0, 0, 0, a22, -a13 + s2 * a_iii},
                    {0, 0, 0, 0, d33}}));
}

void expect_source(const Block& b, BlockKind kind, const char* fn) {
  const auto [r, c] = block_shape(kind);
  if (b.kind != kind || b.values.rows() != r || b.values.cols() != c)
    throw std::invalid_argument(std::string(fn) + " expects a " + block_name(kind) + " block of shape " +
                                std::to_string(r) + "x" + std::to_string(c));
}

}  // namespace

std::pair<int, int> block_shape(BlockKind kind) {
  switch (kind) {
    case BlockKind::D15:
    case BlockKind::G15:
    case BlockKind::I15:
    case BlockKind::I7:
    case BlockKind::I4:
    case BlockKind::D4b:
    case BlockKind::G9:
    case BlockKind::G2: return {5, 3};
    case BlockKind::J6:
    case BlockKind::J4:
    case BlockKind::J2:
    case BlockKind::Jc: return {3, 3};
    default: return {5, 5};
  }
}

std::pair<int, int> dependent_shape(DependentKind kind) {
  switch (kind) {
    case DependentKind::fF8:
    case DependentKind::fF2: return {5, 3};
    case DependentKind::fA5: return {3, 3};
    default: return {5, 5};
  }
}

std::string block_name(BlockKind kind) {
  static const char* names[] = {"A15", "B25", "C25", "D15", "E15", "F25", "G15", "H15", "I15", "J6", "B10",
                                "H9",  "I7",  "J4",  "A11", "B6",  "C3",  "D4",  "F8",  "G9",  "H6",  "I4",
                                "F2",  "G2",  "A9",  "J2",  "A5",  "Ac",  "Bc",  "AIc", "Jc",  "P"};
  return names[static_cast<int>(kind)];
}

int block_param_count(BlockKind kind) { return static_cast<int>(block_param_names(kind).size()); }

std::vector<std::string> block_param_names(BlockKind kind) {
  switch (kind) {
    case BlockKind::A15: return sym_names('a', 5);
    case BlockKind::E15: return sym_names('e', 5);
    case BlockKind::H15: return sym_names('h', 5);
    case BlockKind::B25: return rect_names('b', 5, 5);
    case BlockKind::C25: return rect_names('c', 5, 5);
    case BlockKind::F25: return rect_names('f', 5, 5);
    case BlockKind::D15: return rect_names('d', 5, 3);
    case BlockKind::G15: return rect_names('g', 5, 3);
    case BlockKind::I15: return rect_names('i', 5, 3);
    case BlockKind::J6: return sym_names('j', 3);
    case BlockKind::B10: return antisym_names('b', 5);
    case BlockKind::H9: return {"h11", "h12", "h13", "h22", "h23", "h24", "h25", "h33", "h35"};
    case BlockKind::I7: return {"i12", "i21", "i22", "i23", "i31", "i32", "i33"};
    case BlockKind::J4: return {"j11", "j12", "j22", "j23"};
    case BlockKind::A11:
      return {"a11", "a12", "a13", "a14", "a15", "a22", "a34", "a35", "a44", "a45", "a55"};
    case BlockKind::B6: return {"b12", "b24", "b25", "b34", "b35", "b45"};
    case BlockKind::C3: return {"c11", "c12", "c13"};
    case BlockKind::D4b: return {"d11", "d12", "d41", "d51"};
    case BlockKind::F8: return {"f11", "f12", "f13", "f14", "f15", "f23", "f43", "f53"};
    case BlockKind::G9: return {"g11", "g12", "g13", "g21", "g23", "g41", "g42", "g51", "g52"};
    case BlockKind::H6: return {"h11", "h12", "h13", "h22", "h23", "h33"};
    case BlockKind::I4: return {"i12", "i22", "i31", "i32"};
    case BlockKind::F2: return {"f12", "f13"};
    case BlockKind::G2: return {"g11", "g12"};
    case BlockKind::A9: return {"a11", "a12", "a13", "a22", "a23", "a24", "a25", "a33", "a35"};
    case BlockKind::J2: return {"j11", "j12"};
    case BlockKind::A5: return {"a11", "a12", "a13", "a22", "a35"};
    case BlockKind::Ac:
    case BlockKind::Bc:
    case BlockKind::AIc:
    case BlockKind::Jc:
    case BlockKind::P: return {};
  }
  return {};
}

Block make_block(BlockKind kind, std::span<const double> p, Transcription t) {
  const int n = block_param_count(kind);
  if (n == 0) throw std::invalid_argument(block_name(kind) + " is a constant block");
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument(block_name(kind) + " takes " + std::to_string(n) + " parameters, got " +
                                std::to_string(p.size()));
  Matrix m;
  switch (kind) {
    case BlockKind::A15:
    case BlockKind::E15:
    case BlockKind::H15: m = full_sym(p, 5); break;
    case BlockKind::B25:
    case BlockKind::C25:
    case BlockKind::F25: m = full_rect(p, 5, 5); break;
    case BlockKind::D15:
    case BlockKind::G15:
    case BlockKind::I15: m = full_rect(p, 5, 3); break;
    case BlockKind::J6: m = full_sym(p, 3); break;
    case BlockKind::B10: {
      Matrix u = Matrix::Zero(5, 5);
      std::size_t k = 0;
      for (int r = 0; r < 5; ++r)
        for (int c = r + 1; c < 5; ++c) u(r, c) = p[k++];
      m = asym(u);
      break;
    }
    case BlockKind::H9: {
      const double h11 = p[0], h12 = p[1], h13 = p[2], h22 = p[3], h23 = p[4], h24 = p[5], h25 = p[6],
                   h33 = p[7], h35 = p[8];
      m = sym(rows5({{h11, h12, h13, h12, h13},
                     {0, h22, h23, h24, h25},
                     {0, 0, h33, h25, h35},
                     {0, 0, 0, h22, h23},
                     {0, 0, 0, 0, h33}}));
      break;
    }
    case BlockKind::I7: {
      const double i12 = p[0], i21 = p[1], i22 = p[2], i23 = p[3], i31 = p[4], i32 = p[5], i33 = p[6];
      m = rows5({{0, i12, -i12}, {i21, i22, i23}, {i31, i32, i33}, {-i21, -i23, -i22}, {-i31, -i33, -i32}});
      break;
    }
    case BlockKind::J4: {
      const double j11 = p[0], j12 = p[1], j22 = p[2], j23 = p[3];
      m = sym(rows5({{j11, j12, j12}, {0, j22, j23}, {0, 0, j22}}));
      break;
    }
    case BlockKind::A11: {
      const double a11 = p[0], a12 = p[1], a13 = p[2], a14 = p[3], a15 = p[4], a22 = p[5], a34 = p[6],
                   a35 = p[7], a44 = p[8], a45 = p[9], a55 = p[10];
      const double a_i = a14 - s2 * a34;
      const double a_ii = a15 - s2 * a35;
      const double a_iii = (a11 - a22) / 2.0;
      const double a_iii_star = (a11 + a22) / 2.0;
      m = sym(rows5({{a11, a12, a13, a14, a15},
                     {0, a22, -a13 + s2 * a_iii, a_i, a_ii},
                     {0, 0, -a12 + a_iii_star, a34, a35},
                     {0, 0, 0, a44, a45},
                     {0, 0, 0, 0, a55}}));
      break;
    }
    case BlockKind::B6: {
      const double b12 = p[0], b24 = p[1], b25 = p[2], b34 = p[3], b35 = p[4], b45 = p[5];
      m = asym(rows5({{0, b12, -h2 * b12, b24 + s2 * b34, b25 + s2 * b35},
                      {0, 0, -h2 * b12, b24, b25},
                      {0, 0, 0, b34, b35},
                      {0, 0, 0, 0, b45},
                      {0, 0, 0, 0, 0}}));
      break;
    }
    case BlockKind::C3: {
      Eigen::RowVectorXd r(5);
      r << p[0], p[1], p[2], p[1], p[2];
      m = Matrix::Zero(5, 5);
      m.row(0) = r;
      m.row(1) = -r;
      m.row(2) = -s2 * r;
      break;
    }
    case BlockKind::D4b: {
      const double d11 = p[0], d12 = p[1], d41 = p[2], d51 = p[3];
      m = rows5({{d11, d12, -d12}, {d11, -d12, d12}, {0, -s2 * d12, s2 * d12}, {d41, 0, 0}, {d51, 0, 0}});
      break;
    }
    case BlockKind::F8: {
      const double f11 = p[0], f12 = p[1], f13 = p[2], f14 = p[3], f15 = p[4], f23 = p[5], f43 = p[6],
                   f53 = p[7];
      const double b_i = (f12 - f14) / 2.0;
      const double b_ii = (f13 + f23) / 2.0;
      m = rows5({{f11, f12, f13, f14, f15},
                 {-f11, -f12 + b_i, f23, -f12 + b_i, -f15 - 2.0 * b_ii},
                 {-s2 * f11, -s2 * (f12 - 1.5 * b_i), -s2 * (f15 + b_ii), -s2 * (f12 - 0.5 * b_i),
                  -s2 * (f13 - b_ii)},
                 {0, 0, f43, 0, -f43},
                 {0, 0, f53, 0, -f53}});
      break;
    }
    case BlockKind::G9: {
      const double g11 = p[0], g12 = p[1], g13 = p[2], g21 = p[3], g23 = p[4], g41 = p[5], g42 = p[6],
                   g51 = p[7], g52 = p[8];
      const double c_i = (g11 - g21) / 2.0;
      const double c_ii = (g13 - g23) / 2.0;
      const double c_iii = (g12 - g13) / 2.0;
      m = rows5({{g11, g12, g13},
                 {g21, g23 - 2.0 * c_iii, g23},
                 {s2 * c_i, s2 * c_ii, s2 * (2.0 * c_iii + c_ii)},
                 {g41, g42, g42},
                 {g51, g52, g52}});
      break;
    }
    case BlockKind::H6: {
      const double h11 = p[0], h12 = p[1], h13 = p[2], h22 = p[3], h23 = p[4], h33 = p[5];
      m = sym(rows5({{h11, h12, h13, h12, h13},
                     {0, h22, h23, h22, h23},
                     {0, 0, h33, h23, h33},
                     {0, 0, 0, h22, h23},
                     {0, 0, 0, 0, h33}}));
      break;
    }
    case BlockKind::I4: {
      const double i12 = p[0], i22 = p[1], i31 = p[2], i32 = p[3];
      m = rows5({{0, i12, -i12},
                 {0, i22, -i22 - s2 * i31},
                 {i31, i32, -i32},
                 {0, i22 + s2 * i31, -i22},
                 {-i31, i32, -i32}});
      break;
    }
    case BlockKind::F2: {
      Eigen::RowVectorXd r(5);
      r << 0, p[0], p[1], -p[0], -p[1];
      m = Matrix::Zero(5, 5);
      m.row(0) = r;
      m.row(1) = -r;
      m.row(2) = -s2 * r;
      break;
    }
    case BlockKind::G2: {
      Eigen::RowVectorXd r(3);
      r << p[0], p[1], p[1];
      m = Matrix::Zero(5, 3);
      m.row(0) = r;
      m.row(1) = -r;
      m.row(2) = -s2 * r;
      break;
    }
    case BlockKind::A9: {
      const double a11 = p[0], a12 = p[1], a13 = p[2], a22 = p[3], a23 = p[4], a24 = p[5], a25 = p[6],
                   a33 = p[7], a35 = p[8];
      m = sym(rows5({{a11, a12, a13, a12, a13},
                     {0, a22, a23, a24, a25},
                     {0, 0, a33, a25, a35},
                     {0, 0, 0, a22, a23},
                     {0, 0, 0, 0, a33}}));
      break;
    }
    case BlockKind::J2: {
      const double j11 = p[0], j12 = p[1];
      m = sym(rows5({{j11, j12, j12}, {0, j11, j12}, {0, 0, j11}}));
      break;
    }
    case BlockKind::A5: m = a5_block(p[0], p[1], p[2], p[3], p[4], t); break;
    default: throw std::invalid_argument(block_name(kind) + " is a constant block");
  }
  return {kind, std::move(m)};
}

Block dependent_block(DependentKind kind, const Block& b, Transcription t) {
  const Matrix& v = b.values;
  Matrix m;
  switch (kind) {
    case DependentKind::fG9: {
      expect_source(b, BlockKind::G9, "f(G9)");
      const double g11 = v(0, 0), g12 = v(0, 1), g13 = v(0, 2), g21 = v(1, 0), g23 = v(1, 2), g41 = v(3, 0),
                   g42 = v(3, 1), g51 = v(4, 0), g52 = v(4, 1);
      const double c_i = (g11 - g21) / 2.0;
      const double c_ii = (g13 - g23) / 2.0;
      const double c_iii = (g12 - g13) / 2.0;
      const double c_i_star = (g11 + g21) / 2.0;
      const double c_ii_star = (g13 + g23) / 2.0;
      // The published (2,4) entry repeats row 1's expression.
      const double e24 = t == Transcription::printed ? h2 * (g11 + c_i) : h2 * (g21 - c_i);
      m = rows5({{0, -h2 * c_i_star, -g12 - c_ii, h2 * (g11 + c_i), c_ii_star},
                 {0, -h2 * c_i_star, -g12 + 3.0 * c_ii + 4.0 * c_iii, e24, c_ii_star},
                 {0, -2.0 * c_i, 0, 0, 2.0 * s2 * (c_iii + c_ii)},
                 {0, -h2 * g41, -g42, h2 * g41, g42},
                 {0, -h2 * g51, -g52, h2 * g51, g52}});
      break;
    }
    case DependentKind::fF8: {
      expect_source(b, BlockKind::F8, "f(F8)");
      const double f12 = v(0, 1), f13 = v(0, 2), f14 = v(0, 3), f15 = v(0, 4), f23 = v(1, 2), f43 = v(3, 2),
                   f53 = v(4, 2);
      const double b_i = (f12 - f14) / 2.0;
      const double b_ii = (f13 + f23) / 2.0;
      const double b_iii = (f13 - f15) / 2.0;
      // Published: the first-column scalar is left undefined and the (1,3)
      // entry reads -2 b_iii - b_ii.
      const bool printed = t == Transcription::printed;
      const double alpha = printed ? 0.0 : b_i;
      const double e13 = printed ? -2.0 * b_iii - b_ii : 2.0 * b_iii - b_ii;
      m = rows5({{s2 * alpha, b_ii, e13},
                 {0, b_ii, 3.0 * b_ii - 2.0 * b_iii},
                 {alpha, -2.0 * s2 * (b_ii - b_iii), 0},
                 {0, f43, f43},
                 {0, f53, f53}});
      break;
    }
    case DependentKind::fD4: {
      expect_source(b, BlockKind::D4b, "f(D4)");
      const double d11 = v(0, 0), d41 = v(3, 0), d51 = v(4, 0);
      m = rows5({{0, h2 * d11, 0, -h2 * d11, 0},
                 {0, h2 * d11, 0, -h2 * d11, 0},
                 {0, 0, 0, 0, 0},
                 {0, h2 * d41, 0, -h2 * d41, 0},
                 {0, h2 * d51, 0, -h2 * d51, 0}});
      break;
    }
    case DependentKind::fJ4: {
      expect_source(b, BlockKind::J4, "f(J4)");
      const double j11 = v(0, 0), j12 = v(0, 1), j22 = v(1, 1), j23 = v(1, 2);
      m = sym(rows5({{0, 0, 0, 0, 0},
                     {0, 0, 0, -j11, -s2 * j12},
                     {0, 0, 0, -s2 * j12, -(j22 + j23)},
                     {0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0}}));
      break;
    }
    case DependentKind::gJ4: {
      expect_source(b, BlockKind::J4, "g(J4)");
      const double j11 = v(0, 0), j12 = v(0, 1), j22 = v(1, 1), j23 = v(1, 2);
      m = sym(rows5({{0, 0, 0, 0, 0},
                     {0, 0, s2 * j12, -j11, 0},
                     {0, 0, 0, 0, -(j22 + j23)},
                     {0, 0, 0, 0, s2 * j12},
                     {0, 0, 0, 0, 0}}));
      break;
    }
    case DependentKind::fF2: {
      expect_source(b, BlockKind::F2, "f(F2)");
      const double f12 = v(0, 1), f13 = v(0, 2);
      m = rows5({{-s2 * f12, -f13, -f13},
                 {s2 * f12, f13, f13},
                 {2.0 * f12, s2 * f13, s2 * f13},
                 {0, 0, 0},
                 {0, 0, 0}});
      break;
    }
    case DependentKind::fG2: {
      expect_source(b, BlockKind::G2, "f(G2)");
      const double g11 = v(0, 0), g12 = v(0, 1);
      m = rows5({{0, h2 * g11, g12, -h2 * g11, -g12},
                 {0, -h2 * g11, -g12, h2 * g11, g12},
                 {0, -g11, -s2 * g12, g11, s2 * g12},
                 {0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0}});
      break;
    }
    case DependentKind::fA5: {
      expect_source(b, BlockKind::A5, "f(A5)");
      const double a11 = v(0, 0), a12 = v(0, 1), a13 = v(0, 2), a22 = v(1, 1), a35 = v(2, 4);
      const double a_iii = (a11 - a22) / 2.0;
      const double a_iv = a35 - s2 * a13;
      const double a_iv_star = a13 - s2 * a35;
      const double a_v = a22 - a12;
      // Published form has alpha_IV and alpha*_IV swapped.
      const bool printed = t == Transcription::printed;
      const double d = a_v + s2 * (printed ? a_iv : a_iv_star);
      const double o = printed ? a_iii - a_iv_star : a_iii + a_iv;
      m = sym(rows5({{d, o, o}, {0, d, o}, {0, 0, d}}));
      break;
    }
  }
  return {b.kind, std::move(m)};
}

const CouplingConstants& coupling_constants() {
  static const CouplingConstants c = [] {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double phi_bar = (1.0 - std::sqrt(5.0)) / 2.0;
    CouplingConstants k;
    k.a_c = {BlockKind::Ac, sym(rows5({{1, -1, -s2, 0, 0},
                                       {0, 1, s2, 0, 0},
                                       {0, 0, 2, 0, 0},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0}}))};
    k.b_c = {BlockKind::Bc, rows5({{1, 0, -3.0 * h2, 0, 0},
                                   {-2, 1, h2, 0, 0},
                                   {-h2, 3.0 * h2, 2, 0, 0},
                                   {0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0}})};
    k.a_ico = {BlockKind::AIc, sym(rows5({{4.0 - phi, 1, 2.0 * s2, 0, s2},
                                          {0, -1, 0, 1.0 - phi, 0},
                                          {0, 0, 0, 0, 2.0 - phi},
                                          {0, 0, 0, 0, s2},
                                          {0, 0, 0, 0, 2}}))};
    k.j_c = {BlockKind::Jc, sym(rows5({{-1, phi_bar, phi_bar}, {0, -1, phi_bar}, {0, 0, -1}}))};
    k.p = {BlockKind::P, rows5({{1, 0, 0, 0, 0},
                                {0, 0, 0, 1, 0},
                                {0, 0, 0, 0, 1},
                                {0, 1, 0, 0, 0},
                                {0, 0, 1, 0, 0}})};
    return k;
  }();
  return c;
}

}  // namespace sge
