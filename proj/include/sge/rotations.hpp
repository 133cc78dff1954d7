// Proper rotations, the per-class generator sets, finite-group closure and the
// induced 18x18 representation acting on strain-gradient matrices.
#pragma once

#include "sge/basis_index.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace sge {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using RotMatrix18 = Mat18;

/// Element of SO(3). Construction validates Q^T Q = I and det Q = +1 to 1e-12.
class Rotation {
 public:
  Rotation() : q_(Mat3::Identity()) {}
  explicit Rotation(const Mat3& q);

  static Rotation identity() { return {}; }

  const Mat3& matrix() const { return q_; }
  double operator()(int i, int j) const { return q_(i, j); }

  Rotation operator*(const Rotation& o) const { return Rotation(q_ * o.q_, Unchecked{}); }
  Rotation transpose() const { return Rotation(q_.transpose(), Unchecked{}); }
  Vec3 operator*(const Vec3& v) const { return q_ * v; }

 private:
  struct Unchecked {};
  Rotation(const Mat3& q, Unchecked) : q_(q) {}
  Mat3 q_;
};

/// Rodrigues rotation by theta radians about a / |a|. Throws on a zero axis.
Rotation axis_angle(const Vec3& axis, double theta);

/// Q(e1 + e2 + e3, 2 pi / 3): the cyclic permutation e1 -> e2 -> e3.
Rotation special_tilde();

/// Q(2(sqrt5 - 1) e2 + (sqrt5 + 1) e3, 2 pi / 3), the order-3 icosahedral
/// element that completes D5.
Rotation special_hat();

enum class SymmetryTag {
  triclinic,
  z2,     // pi about e3
  z2_e1,  // pi about e1
  d2,
  z4,
  d4,
  z3,
  d3,
  z6,
  d6,
  z5,
  d5,
  so2,
  o2,
  tetrahedral,
  cubic,
  icosahedral,
  isotropic,
};

inline constexpr int kTagCount = 18;

/// All tags in table order.
const std::vector<SymmetryTag>& all_tags();

struct GeneratorSet {
  SymmetryTag tag = SymmetryTag::triclinic;
  std::vector<Rotation> elements;
  /// False for the order-7 surrogates of SO(2), O(2), SO(3).
  bool finite = true;
};

/// Generators in the canonical frame of each class. The continuous groups use
/// rotations of order 7, which fix exactly the same sixth-order tensors as the
/// full continuous group. The icosahedral set is {D2, Q~, Q(e2 + (1-phi) e3, 2pi/5)},
/// the frame in which the tetrahedral subgroup is axis-aligned.
GeneratorSet generators(SymmetryTag tag);

/// {Q(e3, 2pi/5), Q(e1, pi), Q^}: the icosahedral group with a 5-fold axis on e3.
GeneratorSet icosahedral_d5_generators();

/// {R g R^T} for every generator g.
GeneratorSet conjugated(const GeneratorSet& g, const Rotation& r);

/// Closure of a finite generator set under multiplication, identity first.
/// Elements are deduplicated at 1e-9 entrywise. Throws std::invalid_argument
/// for infinite sets and std::runtime_error past 10000 elements.
std::vector<Rotation> enumerate_group(const GeneratorSet& g);

/// 18x18 matrix with rep18(Q) * tensor3_to_vec(t) = tensor3_to_vec(Q o t).
RotMatrix18 rep18(const Rotation& q);

/// rep18(q) m rep18(q)^T.
SgeMatrix rotate_matrix(const SgeMatrix& m, const Rotation& q);
SgeMatrix rotate_matrix(const SgeMatrix& m, const RotMatrix18& q18);

/// Angle from text such as "pi/4", "2*pi/3", "-pi" or plain radians.
/// Throws std::invalid_argument on malformed text.
double parse_angle(const std::string& text);

}  // namespace sge
