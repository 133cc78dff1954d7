#include "oracles.hpp"
#include "sge/class_builders.hpp"
#include "sge/invariance.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <limits>
#include <set>

using namespace sge;

namespace {

std::vector<double> random_params(SymmetryTag t, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(param_count(t)));
  for (double& v : p) v = u(rng);
  return p;
}

Eigen::MatrixXd image(SymmetryTag t) {
  const auto dirs = parameter_directions(t);
  Eigen::MatrixXd m(kUpperSize, static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t i = 0; i < dirs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = dirs[i].coords();
  return m;
}

// Distance of every column of `sub` from span(`super`), relative.
double containment_residual(const Eigen::MatrixXd& sub, const Eigen::MatrixXd& super) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(super);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(super.rows(), super.cols());
  double worst = 0.0;
  for (Eigen::Index c = 0; c < sub.cols(); ++c) {
    const Eigen::VectorXd x = sub.col(c);
    worst = std::max(worst, (x - q * (q.transpose() * x)).norm() / x.norm());
  }
  return worst;
}

// Frobenius norm of block (r, c) of the 5+5+5+3 partition.
double block_norm(const SgeMatrix& m, int r, int c) {
  const int off[] = {0, 5, 10, 15};
  const int size[] = {5, 5, 5, 3};
  return m.dense().block(off[r], off[c], size[r], size[c]).norm();
}

}  // namespace

TEST_CASE("parameter counts") {
  CHECK(param_count(SymmetryTag::triclinic) == 171);
  CHECK(param_count(SymmetryTag::cubic) == 11);
  CHECK(param_count(SymmetryTag::isotropic) == 5);
  CHECK(param_count(SymmetryTag::z2_e1) == param_count(SymmetryTag::z2));
  CHECK(table_tags().size() == 17);
}

TEST_CASE("parameter names") {
  for (SymmetryTag t : all_tags()) {
    CAPTURE(tag_name(t));
    const auto names = parameter_names(t);
    CHECK(static_cast<int>(names.size()) == param_count(t));
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  }
  const auto z3 = parameter_names(SymmetryTag::z3);
  CHECK(z3.front() == "a11");
  CHECK(z3[z3.size() - 2] == "eta");
  CHECK(z3.back() == "theta");
  CHECK(parameter_names(SymmetryTag::icosahedral).back() == "eta");
}

TEST_CASE("tag names") {
  for (SymmetryTag t : all_tags()) CHECK(parse_tag(tag_name(t)) == t);
  CHECK(parse_tag("CUBIC") == SymmetryTag::cubic);
  CHECK(parse_tag("so3") == SymmetryTag::isotropic);
  CHECK(parse_tag("z2_e3") == SymmetryTag::z2);
  CHECK_FALSE(parse_tag("z7").has_value());
  CHECK(group_order(SymmetryTag::icosahedral) == 60);
  CHECK_FALSE(group_order(SymmetryTag::so2).has_value());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(build(SymmetryTag::cubic, std::vector<double>(10)), std::invalid_argument);
  std::vector<double> p(11, 0.0);
  p[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(build(SymmetryTag::cubic, p), std::invalid_argument);
  CHECK(build(SymmetryTag::d2, std::vector<double>(51, 0.0)).frobenius_norm() == 0.0);
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(41);
  for (SymmetryTag t : all_tags()) {
    const auto p = random_params(t, rng);
    const auto q = random_params(t, rng);
    std::vector<double> mix(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mix[i] = 0.3 * p[i] - 1.7 * q[i];
    const SgeMatrix expect = 0.3 * build(t, p) - 1.7 * build(t, q);
    CHECK((build(t, mix) - expect).frobenius_norm() <= 1e-13 * expect.frobenius_norm());
  }
}

TEST_CASE("generator invariance for every class") {
  std::mt19937_64 rng(42);
  for (SymmetryTag t : all_tags()) {
    CAPTURE(tag_name(t));
    const auto gens = generators(t);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      const SgeMatrix m = build(t, random_params(t, rng));
      for (const auto& q : gens.elements)
        worst = std::max(worst, (rotate_matrix(m, q) - m).frobenius_norm() / m.frobenius_norm());
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("isotropic matrices are invariant under arbitrary rotations") {
  std::mt19937_64 rng(43);
  const SgeMatrix m = build(SymmetryTag::isotropic, random_params(SymmetryTag::isotropic, rng));
  for (int n = 0; n < 50; ++n) {
    const Rotation q(oracle::random_rotation(rng));
    CHECK((rotate_matrix(m, q) - m).frobenius_norm() <= 1e-11 * m.frobenius_norm());
  }
}

TEST_CASE("full column rank") {
  for (SymmetryTag t : all_tags()) {
    CAPTURE(tag_name(t));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(image(t));
    const auto& s = svd.singularValues();
    CHECK(s[s.size() - 1] > 1e-8 * s[0]);
  }
}

TEST_CASE("cubic and tetrahedral layouts") {
  std::mt19937_64 rng(44);
  const Mat18 c = build(SymmetryTag::cubic, random_params(SymmetryTag::cubic, rng)).dense();
  CHECK(c.block<5, 5>(0, 0) == c.block<5, 5>(5, 5));
  CHECK(c.block<5, 5>(0, 0) == c.block<5, 5>(10, 10));
  const auto j = c.block<3, 3>(15, 15);
  CHECK(j(0, 0) == j(1, 1));
  CHECK(j(1, 1) == j(2, 2));
  CHECK(j(0, 1) == j(0, 2));
  CHECK(j(0, 1) == j(1, 2));

  const Mat18 t = build(SymmetryTag::tetrahedral, random_params(SymmetryTag::tetrahedral, rng)).dense();
  const Eigen::MatrixXd& p = coupling_constants().p.values;
  const Eigen::MatrixXd a = t.block<5, 5>(0, 0);
  CHECK((t.block<5, 5>(5, 5) - p * a * p.transpose()).norm() == 0.0);
  CHECK(t.block<5, 5>(10, 10) == t.block<5, 5>(0, 0));
}

TEST_CASE("subset chain by span containment") {
  const std::vector<std::pair<SymmetryTag, SymmetryTag>> chain = {
      {SymmetryTag::d2, SymmetryTag::z2},          {SymmetryTag::d3, SymmetryTag::z3},
      {SymmetryTag::d4, SymmetryTag::z4},          {SymmetryTag::d5, SymmetryTag::z5},
      {SymmetryTag::d6, SymmetryTag::z6},          {SymmetryTag::isotropic, SymmetryTag::cubic},
      {SymmetryTag::cubic, SymmetryTag::tetrahedral}, {SymmetryTag::o2, SymmetryTag::so2},
      {SymmetryTag::d4, SymmetryTag::d2},          {SymmetryTag::z4, SymmetryTag::z2},
      {SymmetryTag::z6, SymmetryTag::z3},          {SymmetryTag::d6, SymmetryTag::d3},
      {SymmetryTag::so2, SymmetryTag::z6},         {SymmetryTag::so2, SymmetryTag::z5},
      {SymmetryTag::o2, SymmetryTag::d5},          {SymmetryTag::isotropic, SymmetryTag::icosahedral},
      {SymmetryTag::tetrahedral, SymmetryTag::d2}, {SymmetryTag::d2, SymmetryTag::z2_e1},
  };
  for (const auto& [sub, super] : chain) {
    CAPTURE(tag_name(sub));
    CAPTURE(tag_name(super));
    CHECK(containment_residual(image(sub), image(super)) < 1e-10);
  }
  // And not the other way round.
  CHECK(containment_residual(image(SymmetryTag::z4), image(SymmetryTag::d4)) > 1e-3);
}

TEST_CASE("generic zero-block patterns") {
  std::mt19937_64 rng(45);
  for (SymmetryTag t : {SymmetryTag::z2, SymmetryTag::z4, SymmetryTag::z6}) {
    const SgeMatrix m = build(t, random_params(t, rng));
    for (auto [r, c] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}}) CHECK(block_norm(m, r, c) == 0.0);
  }
  for (SymmetryTag t : {SymmetryTag::d2, SymmetryTag::d4, SymmetryTag::d6}) {
    const SgeMatrix m = build(t, random_params(t, rng));
    for (int r = 0; r < 4; ++r)
      for (int c = r + 1; c < 4; ++c) CHECK(block_norm(m, r, c) == 0.0);
  }
  for (SymmetryTag t : {SymmetryTag::d3, SymmetryTag::d5}) {
    const SgeMatrix m = build(t, random_params(t, rng));
    for (int r = 0; r < 4; ++r)
      for (int c = r + 1; c < 4; ++c) {
        const bool allowed = (r == 0 && c == 3) || (r == 1 && c == 2);
        CAPTURE(r);
        CAPTURE(c);
        if (allowed)
          CHECK(block_norm(m, r, c) > 0.0);
        else
          CHECK(block_norm(m, r, c) == 0.0);
      }
  }
}

TEST_CASE("extract_params") {
  std::mt19937_64 rng(46);
  for (SymmetryTag t : all_tags()) {
    CAPTURE(tag_name(t));
    const auto p = random_params(t, rng);
    const auto back = extract_params(build(t, p), t);
    REQUIRE(back.size() == p.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(back[i] - p[i]));
    CHECK(worst <= 1e-10);
  }
  const auto zero = extract_params(SgeMatrix{}, SymmetryTag::cubic);
  CHECK(zero == std::vector<double>(11, 0.0));

  const SgeMatrix generic = build(SymmetryTag::triclinic, random_params(SymmetryTag::triclinic, rng));
  try {
    extract_params(generic, SymmetryTag::cubic);
    FAIL("expected SubspaceMismatch");
  } catch (const SubspaceMismatch& e) {
    CHECK(e.residual() > 0.1);
  }
}

TEST_CASE("oriented classes") {
  std::mt19937_64 rng(47);
  const Rotation q(oracle::random_rotation(rng));
  const auto p = random_params(SymmetryTag::d4, rng);
  const SymmetryClass c{SymmetryTag::d4, q};
  const SgeMatrix m = build(c, p);
  CHECK((m - rotate_matrix(build(SymmetryTag::d4, p), q)).frobenius_norm() <= 1e-13 * m.frobenius_norm());
  for (const auto& g : conjugated(generators(SymmetryTag::d4), q).elements)
    CHECK(is_invariant(m, g, 1e-12));
  const auto back = extract_params(m, c);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(back[i] == doctest::Approx(p[i]).epsilon(1e-10));
}

TEST_CASE("printed transcription breaks invariance where misprinted") {
  std::mt19937_64 rng(48);
  for (SymmetryTag t : {SymmetryTag::z3, SymmetryTag::d3, SymmetryTag::icosahedral, SymmetryTag::isotropic}) {
    CAPTURE(tag_name(t));
    const SgeMatrix m = build(t, random_params(t, rng), Transcription::printed);
    double worst = 0.0;
    for (const auto& q : generators(t).elements)
      worst = std::max(worst, (rotate_matrix(m, q) - m).frobenius_norm() / m.frobenius_norm());
    CHECK(worst > 1e-3);
  }
}
