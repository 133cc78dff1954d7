#include "sge/rotations.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sge {
namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kDedupTol = 1e-9;
constexpr std::size_t kClosureCap = 10000;

const Vec3 e1 = Vec3::UnitX();
const Vec3 e2 = Vec3::UnitY();
const Vec3 e3 = Vec3::UnitZ();

Rotation about(const Vec3& axis, double theta) { return axis_angle(axis, theta); }

std::vector<Rotation> cyclic(int r) { return {about(e3, 2.0 * std::numbers::pi / r)}; }

std::vector<Rotation> dihedral(int r) {
  return {about(e3, 2.0 * std::numbers::pi / r), about(e1, std::numbers::pi)};
}

bool same(const Mat3& a, const Mat3& b) { return (a - b).cwiseAbs().maxCoeff() <= kDedupTol; }

}  // namespace

Rotation::Rotation(const Mat3& q) : q_(q) {
  const double ortho = (q.transpose() * q - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (!(ortho <= kOrthoTol) || std::abs(q.determinant() - 1.0) > kOrthoTol)
    throw std::invalid_argument("matrix is not a proper rotation");
}

Rotation axis_angle(const Vec3& axis, double theta) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("rotation axis must be non-zero");
  return Rotation(Eigen::AngleAxisd(theta, axis / n).toRotationMatrix());
}

Rotation special_tilde() { return axis_angle(Vec3(1.0, 1.0, 1.0), 2.0 * std::numbers::pi / 3.0); }

Rotation special_hat() {
  const double s5 = std::sqrt(5.0);
  return axis_angle(2.0 * (s5 - 1.0) * e2 + (s5 + 1.0) * e3, 2.0 * std::numbers::pi / 3.0);
}

const std::vector<SymmetryTag>& all_tags() {
  static const std::vector<SymmetryTag> tags = {
      SymmetryTag::triclinic, SymmetryTag::z2,          SymmetryTag::z2_e1,       SymmetryTag::d2,
      SymmetryTag::z3,        SymmetryTag::d3,          SymmetryTag::z4,          SymmetryTag::d4,
      SymmetryTag::z5,        SymmetryTag::d5,          SymmetryTag::z6,          SymmetryTag::d6,
      SymmetryTag::so2,       SymmetryTag::o2,          SymmetryTag::tetrahedral, SymmetryTag::cubic,
      SymmetryTag::icosahedral, SymmetryTag::isotropic};
  return tags;
}

GeneratorSet generators(SymmetryTag tag) {
  using std::numbers::pi;
  GeneratorSet g;
  g.tag = tag;
  switch (tag) {
    case SymmetryTag::triclinic: break;
    case SymmetryTag::z2: g.elements = cyclic(2); break;
    case SymmetryTag::z2_e1: g.elements = {about(e1, pi)}; break;
    case SymmetryTag::d2: g.elements = dihedral(2); break;
    case SymmetryTag::z4: g.elements = cyclic(4); break;
    case SymmetryTag::d4: g.elements = dihedral(4); break;
    case SymmetryTag::z3: g.elements = cyclic(3); break;
    case SymmetryTag::d3: g.elements = dihedral(3); break;
    case SymmetryTag::z6: g.elements = cyclic(6); break;
    case SymmetryTag::d6: g.elements = dihedral(6); break;
    case SymmetryTag::z5: g.elements = cyclic(5); break;
    case SymmetryTag::d5: g.elements = dihedral(5); break;
    case SymmetryTag::so2:
      g.elements = cyclic(7);
      g.finite = false;
      break;
    case SymmetryTag::o2:
      g.elements = dihedral(7);
      g.finite = false;
      break;
    case SymmetryTag::tetrahedral:
      g.elements = dihedral(2);
      g.elements.push_back(special_tilde());
      break;
    case SymmetryTag::cubic:
      g.elements = dihedral(4);
      g.elements.push_back(special_tilde());
      break;
    case SymmetryTag::icosahedral: {
      const double phi = 0.5 * (1.0 + std::sqrt(5.0));
      g.elements = dihedral(2);
      g.elements.push_back(special_tilde());
      g.elements.push_back(about(e2 + (1.0 - phi) * e3, 2.0 * pi / 5.0));
      break;
    }
    case SymmetryTag::isotropic:
      g.elements = {about(e3, 2.0 * pi / 7.0), about(e1, 2.0 * pi / 7.0)};
      g.finite = false;
      break;
  }
  return g;
}

GeneratorSet icosahedral_d5_generators() {
  GeneratorSet g;
  g.tag = SymmetryTag::icosahedral;
  g.elements = dihedral(5);
  g.elements.push_back(special_hat());
  return g;
}

GeneratorSet conjugated(const GeneratorSet& g, const Rotation& r) {
  GeneratorSet out = g;
  for (auto& q : out.elements) q = r * q * r.transpose();
  return out;
}

std::vector<Rotation> enumerate_group(const GeneratorSet& g) {
  if (!g.finite) throw std::invalid_argument("generator set does not generate a finite group");
  std::vector<Rotation> elements{Rotation::identity()};
  std::vector<Rotation> frontier = elements;
  while (!frontier.empty()) {
    std::vector<Rotation> next;
    for (const auto& a : frontier) {
      for (const auto& gen : g.elements) {
        const Rotation p = gen * a;
        bool known = false;
        for (const auto& e : elements) {
          if (same(e.matrix(), p.matrix())) {
            known = true;
            break;
          }
        }
        if (known) continue;
        elements.push_back(p);
        next.push_back(p);
        if (elements.size() > kClosureCap)
          throw std::runtime_error("group closure exceeded 10000 elements; generators are not a finite group");
      }
    }
    frontier = std::move(next);
  }
  return elements;
}

RotMatrix18 rep18(const Rotation& rot) {
  const Mat3& q = rot.matrix();
  RotMatrix18 out;
  for (int a = 0; a < kDim; ++a) {
    const auto [i, j, k] = index_triple(a);
    for (int b = 0; b < kDim; ++b) {
      const auto [o, p, r] = index_triple(b);
      double v = q(i, o) * q(j, p);
      if (o != p) v += q(i, p) * q(j, o);
      out(a, b) = basis_scale(a) / basis_scale(b) * v * q(k, r);
    }
  }
  return out;
}

SgeMatrix rotate_matrix(const SgeMatrix& m, const RotMatrix18& q18) {
  return SgeMatrix::symmetrized(q18 * m.dense() * q18.transpose());
}

SgeMatrix rotate_matrix(const SgeMatrix& m, const Rotation& q) { return rotate_matrix(m, rep18(q)); }

double parse_angle(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty angle");
  const auto pos = s.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed angle: " + text);
    return v;
  }
  // [sign][coef[*]]pi[/den]
  std::string head = s.substr(0, pos);
  std::string tail = s.substr(pos + 2);
  double coef = 1.0;
  if (!head.empty() && head.back() == '*') head.pop_back();
  if (head == "-") {
    coef = -1.0;
  } else if (!head.empty() && head != "+") {
    std::size_t used = 0;
    coef = std::stod(head, &used);
    if (used != head.size()) throw std::invalid_argument("malformed angle: " + text);
  }
  double den = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("malformed angle: " + text);
    std::size_t used = 0;
    den = std::stod(tail.substr(1), &used);
    if (used != tail.size() - 1 || den == 0.0) throw std::invalid_argument("malformed angle: " + text);
  }
  return coef * std::numbers::pi / den;
}

}  // namespace sge
