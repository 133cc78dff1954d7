// Three-to-one subscript correspondence and tensor <-> matrix conversions for
// strain-gradient elasticity.
//
// The space of third-order tensors with T_ijk = T_jik is 18-dimensional. It is
// given the orthonormal basis
//
//     e_alpha = c_ij (e_i (x) e_j + e_j (x) e_i) (x) e_k,
//     c_ij = 1/2 if i == j, 1/sqrt(2) otherwise,
//
// so vector components pick up a factor sqrt(2) when i != j, and the 18x18
// matrix of the sixth-order tensor A picks up 1, sqrt(2) or 2. The index
// ordering groups the components by privileged direction:
//
//     alpha   1   2   3   4   5  | 6   7   8   9   10 | 11  12  13  14  15 | 16  17  18
//     ijk    111 221 122 331 133 |222 112 121 332 233 |333 113 131 223 232 |123 132 231
//
// Matrix and vector positions are 0-based everywhere except in
// alpha_to_ijk()/ijk_to_alpha(), which use the 1-based table labels.
#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <span>

namespace sge {

inline constexpr int kDim = 18;
inline constexpr int kUpperSize = kDim * (kDim + 1) / 2;  // 171

using Vec18 = Eigen::Matrix<double, kDim, 1>;
using Mat18 = Eigen::Matrix<double, kDim, kDim>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Coords171 = Eigen::Matrix<double, kUpperSize, 1>;

/// 1-based index triple (i, j, k).
struct Triple {
  int i;
  int j;
  int k;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Table entry for alpha in 1..18, e.g. 3 -> (1,2,2). Throws std::out_of_range.
Triple alpha_to_ijk(int alpha);

/// Inverse of alpha_to_ijk, with (i,j,k) ~ (j,i,k). Throws std::out_of_range.
int ijk_to_alpha(int i, int j, int k);

/// 0-based variants used by the numeric code.
std::array<int, 3> index_triple(int a);
int index_of(int i, int j, int k);

/// sqrt(2) for mixed (i != j) positions, 1 otherwise.
double basis_scale(int a);

/// Third-order tensor with minor symmetry in its first index pair.
class Tensor3 {
 public:
  Tensor3() { values_.fill(0.0); }

  double& operator()(int i, int j, int k) { return values_[flat(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[flat(i, j, k)]; }

  /// Sets t_ijk and t_jik together.
  void set_sym(int i, int j, int k, double v) {
    (*this)(i, j, k) = v;
    (*this)(j, i, k) = v;
  }

  double frobenius_norm() const;
  /// max |t_ijk - t_jik|.
  double asymmetry() const;

  std::span<const double, 27> values() const { return values_; }

 private:
  static constexpr std::size_t flat(int i, int j, int k) {
    return static_cast<std::size_t>(9 * i + 3 * j + k);
  }
  std::array<double, 27> values_;
};

/// Full sixth-order component array A_ijklmn (729 values).
class TensorA {
 public:
  TensorA() { values_.fill(0.0); }

  double& operator()(int i, int j, int k, int l, int m, int n) {
    return values_[flat(i, j, k, l, m, n)];
  }
  double operator()(int i, int j, int k, int l, int m, int n) const {
    return values_[flat(i, j, k, l, m, n)];
  }

  /// Writes v into every position related by A_ijklmn = A_jiklmn = A_lmnijk.
  void set_sym(int i, int j, int k, int l, int m, int n, double v);

  double frobenius_norm() const;
  /// Largest violation of the minor/major index symmetries.
  double asymmetry() const;

  std::span<const double, 729> values() const { return values_; }

  static constexpr std::size_t flat(int i, int j, int k, int l, int m, int n) {
    return static_cast<std::size_t>(((((i * 3 + j) * 3 + k) * 3 + l) * 3 + m) * 3 + n);
  }

 private:
  std::array<double, 729> values_;
};

/// Symmetric 18x18 matrix stored as its 171-value upper triangle (row-major).
/// Symmetry holds by construction: (r,c) and (c,r) share one cell.
class SgeMatrix {
 public:
  SgeMatrix() { upper_.fill(0.0); }

  static SgeMatrix identity();
  /// Throws std::invalid_argument if m is not symmetric to 1e-12 relative.
  static SgeMatrix from_dense(const Mat18& m);
  /// Averages m and m^T without checking.
  static SgeMatrix symmetrized(const Mat18& m);
  static SgeMatrix from_upper(std::span<const double> upper);
  /// Inverse of coords(): off-diagonal coordinates are divided by sqrt(2).
  static SgeMatrix from_coords(const Coords171& x);

  double operator()(int r, int c) const { return upper_[slot(r, c)]; }
  void set(int r, int c, double v) { upper_[slot(r, c)] = v; }
  void add(int r, int c, double v) { upper_[slot(r, c)] += v; }

  Mat18 dense() const;
  /// Coordinates in the Frobenius-orthonormal basis of symmetric matrices:
  /// diagonal entries as is, off-diagonal entries times sqrt(2).
  Coords171 coords() const;

  std::span<const double, kUpperSize> upper() const { return upper_; }

  double frobenius_norm() const;
  /// Frobenius inner product over all 324 entries.
  double dot(const SgeMatrix& other) const;

  SgeMatrix& operator+=(const SgeMatrix& o);
  SgeMatrix& operator-=(const SgeMatrix& o);
  SgeMatrix& operator*=(double s);
  friend SgeMatrix operator+(SgeMatrix a, const SgeMatrix& b) { return a += b; }
  friend SgeMatrix operator-(SgeMatrix a, const SgeMatrix& b) { return a -= b; }
  friend SgeMatrix operator*(double s, SgeMatrix a) { return a *= s; }
  friend bool operator==(const SgeMatrix&, const SgeMatrix&) = default;

  static constexpr std::size_t slot(int r, int c) {
    if (r > c) {
      const int t = r;
      r = c;
      c = t;
    }
    return static_cast<std::size_t>(r * kDim - r * (r - 1) / 2 + (c - r));
  }

 private:
  std::array<double, kUpperSize> upper_;
};

/// v_alpha = t_ijk (i == j) or sqrt(2) t_ijk (i != j). Throws
/// std::invalid_argument if t_ijk != t_jik beyond 1e-12 relative.
Vec18 tensor3_to_vec(const Tensor3& t);
Tensor3 vec_to_tensor3(const Vec18& v);

/// Applies the 1 / sqrt(2) / 2 scaling. Throws std::invalid_argument on a
/// symmetry violation beyond 1e-12 relative to the Frobenius norm.
SgeMatrix tensorA_to_matrix(const TensorA& a);
TensorA matrix_to_tensorA(const SgeMatrix& m);

/// Rows/columns 1,2,3,6,7,8 (the in-plane components 111 221 122 222 112 121).
Mat6 restrict_2d(const SgeMatrix& m);
inline constexpr std::array<int, 6> kPlanarIndices = {0, 1, 2, 5, 6, 7};

}  // namespace sge
