#include "sge/basis_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sge {
namespace {

// 0-based transcription of the index table.
constexpr std::array<std::array<int, 3>, kDim> kTable = {{
    {0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {2, 2, 0}, {0, 2, 2},  // direction 1
    {1, 1, 1}, {0, 0, 1}, {0, 1, 0}, {2, 2, 1}, {1, 2, 2},  // direction 2
    {2, 2, 2}, {0, 0, 2}, {0, 2, 0}, {1, 1, 2}, {1, 2, 1},  // direction 3
    {0, 1, 2}, {0, 2, 1}, {1, 2, 0},                        // mixed
}};

constexpr std::array<int, 27> make_inverse() {
  std::array<int, 27> inv{};
  for (int a = 0; a < kDim; ++a) {
    const auto [i, j, k] = kTable[a];
    inv[9 * i + 3 * j + k] = a;
    inv[9 * j + 3 * i + k] = a;
  }
  return inv;
}
constexpr std::array<int, 27> kInverse = make_inverse();

constexpr double kSymmetryTol = 1e-12;

}  // namespace

std::array<int, 3> index_triple(int a) { return kTable[static_cast<std::size_t>(a)]; }

int index_of(int i, int j, int k) { return kInverse[static_cast<std::size_t>(9 * i + 3 * j + k)]; }

double basis_scale(int a) {
  const auto& t = kTable[static_cast<std::size_t>(a)];
  return t[0] == t[1] ? 1.0 : std::sqrt(2.0);
}

Triple alpha_to_ijk(int alpha) {
  if (alpha < 1 || alpha > kDim)
    throw std::out_of_range("alpha must be in 1..18, got " + std::to_string(alpha));
  const auto& t = kTable[static_cast<std::size_t>(alpha - 1)];
  return {t[0] + 1, t[1] + 1, t[2] + 1};
}

int ijk_to_alpha(int i, int j, int k) {
  auto ok = [](int x) { return x >= 1 && x <= 3; };
  if (!ok(i) || !ok(j) || !ok(k))
    throw std::out_of_range("tensor indices must be in 1..3");
  return index_of(i - 1, j - 1, k - 1) + 1;
}

// Tensor3 ------------------------------------------------------------------

double Tensor3::frobenius_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

double Tensor3::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs((*this)(i, j, k) - (*this)(j, i, k)));
  return worst;
}

Vec18 tensor3_to_vec(const Tensor3& t) {
  if (t.asymmetry() > kSymmetryTol * std::max(t.frobenius_norm(), 1.0))
    throw std::invalid_argument("third-order tensor violates t_ijk = t_jik");
  Vec18 v;
  for (int a = 0; a < kDim; ++a) {
    const auto [i, j, k] = kTable[a];
    // Average the two mates so round-off asymmetry does not leak into v.
    v[a] = basis_scale(a) * 0.5 * (t(i, j, k) + t(j, i, k));
  }
  return v;
}

Tensor3 vec_to_tensor3(const Vec18& v) {
  Tensor3 t;
  for (int a = 0; a < kDim; ++a) {
    const auto [i, j, k] = kTable[a];
    t.set_sym(i, j, k, v[a] / basis_scale(a));
  }
  return t;
}

// TensorA ------------------------------------------------------------------

void TensorA::set_sym(int i, int j, int k, int l, int m, int n, double v) {
  (*this)(i, j, k, l, m, n) = v;
  (*this)(j, i, k, l, m, n) = v;
  (*this)(i, j, k, m, l, n) = v;
  (*this)(j, i, k, m, l, n) = v;
  (*this)(l, m, n, i, j, k) = v;
  (*this)(m, l, n, i, j, k) = v;
  (*this)(l, m, n, j, i, k) = v;
  (*this)(m, l, n, j, i, k) = v;
}

double TensorA::frobenius_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

double TensorA::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
              const double x = (*this)(i, j, k, l, m, n);
              worst = std::max(worst, std::abs(x - (*this)(j, i, k, l, m, n)));
              worst = std::max(worst, std::abs(x - (*this)(l, m, n, i, j, k)));
            }
  return worst;
}

SgeMatrix tensorA_to_matrix(const TensorA& a) {
  if (a.asymmetry() > kSymmetryTol * std::max(a.frobenius_norm(), 1.0))
    throw std::invalid_argument("sixth-order tensor violates A_ijklmn = A_jiklmn = A_lmnijk");
  SgeMatrix out;
  for (int r = 0; r < kDim; ++r) {
    const auto [i, j, k] = kTable[r];
    for (int c = r; c < kDim; ++c) {
      const auto [l, m, n] = kTable[c];
      out.set(r, c, basis_scale(r) * basis_scale(c) * a(i, j, k, l, m, n));
    }
  }
  return out;
}

TensorA matrix_to_tensorA(const SgeMatrix& m) {
  TensorA a;
  for (int r = 0; r < kDim; ++r) {
    const auto [i, j, k] = kTable[r];
    for (int c = r; c < kDim; ++c) {
      const auto [l, mm, n] = kTable[c];
      a.set_sym(i, j, k, l, mm, n, m(r, c) / (basis_scale(r) * basis_scale(c)));
    }
  }
  return a;
}

// SgeMatrix ----------------------------------------------------------------

SgeMatrix SgeMatrix::identity() {
  SgeMatrix m;
  for (int r = 0; r < kDim; ++r) m.set(r, r, 1.0);
  return m;
}

SgeMatrix SgeMatrix::from_dense(const Mat18& m) {
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * std::max(m.norm(), 1.0))
    throw std::invalid_argument("18x18 matrix is not symmetric");
  return symmetrized(m);
}

SgeMatrix SgeMatrix::symmetrized(const Mat18& m) {
  SgeMatrix out;
  for (int r = 0; r < kDim; ++r)
    for (int c = r; c < kDim; ++c) out.set(r, c, r == c ? m(r, r) : 0.5 * (m(r, c) + m(c, r)));
  return out;
}

SgeMatrix SgeMatrix::from_upper(std::span<const double> upper) {
  if (upper.size() != static_cast<std::size_t>(kUpperSize))
    throw std::invalid_argument("expected 171 upper-triangle values, got " + std::to_string(upper.size()));
  SgeMatrix out;
  std::copy(upper.begin(), upper.end(), out.upper_.begin());
  return out;
}

SgeMatrix SgeMatrix::from_coords(const Coords171& x) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SgeMatrix out;
  std::size_t s = 0;
  for (int r = 0; r < kDim; ++r)
    for (int c = r; c < kDim; ++c, ++s) out.upper_[s] = r == c ? x[static_cast<Eigen::Index>(s)] : x[static_cast<Eigen::Index>(s)] * inv_sqrt2;
  return out;
}

Mat18 SgeMatrix::dense() const {
  Mat18 m;
  for (int r = 0; r < kDim; ++r)
    for (int c = r; c < kDim; ++c) m(r, c) = m(c, r) = (*this)(r, c);
  return m;
}

Coords171 SgeMatrix::coords() const {
  const double sqrt2 = std::sqrt(2.0);
  Coords171 x;
  std::size_t s = 0;
  for (int r = 0; r < kDim; ++r)
    for (int c = r; c < kDim; ++c, ++s) x[static_cast<Eigen::Index>(s)] = r == c ? upper_[s] : upper_[s] * sqrt2;
  return x;
}

double SgeMatrix::frobenius_norm() const { return std::sqrt(dot(*this)); }

double SgeMatrix::dot(const SgeMatrix& other) const {
  double s = 0.0;
  std::size_t slot = 0;
  for (int r = 0; r < kDim; ++r)
    for (int c = r; c < kDim; ++c, ++slot) s += (r == c ? 1.0 : 2.0) * upper_[slot] * other.upper_[slot];
  return s;
}

SgeMatrix& SgeMatrix::operator+=(const SgeMatrix& o) {
  for (std::size_t s = 0; s < upper_.size(); ++s) upper_[s] += o.upper_[s];
  return *this;
}

SgeMatrix& SgeMatrix::operator-=(const SgeMatrix& o) {
  for (std::size_t s = 0; s < upper_.size(); ++s) upper_[s] -= o.upper_[s];
  return *this;
}

SgeMatrix& SgeMatrix::operator*=(double s) {
  for (double& v : upper_) v *= s;
  return *this;
}

Mat6 restrict_2d(const SgeMatrix& m) {
  Mat6 out;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) out(r, c) = m(kPlanarIndices[r], kPlanarIndices[c]);
  return out;
}

}  // namespace sge
