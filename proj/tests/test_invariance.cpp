#include "oracles.hpp"
#include "sge/class_builders.hpp"
#include "sge/invariance.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <numbers>

using namespace sge;

namespace {

std::vector<double> random_params(SymmetryTag t, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(param_count(t)));
  for (double& v : p) v = u(rng);
  return p;
}

SgeMatrix random_matrix(std::mt19937_64& rng) {
  return build(SymmetryTag::triclinic, random_params(SymmetryTag::triclinic, rng));
}

}  // namespace

TEST_CASE("is_invariant") {
  std::mt19937_64 rng(51);
  const SgeMatrix m = random_matrix(rng);
  CHECK(is_invariant(m, Rotation::identity(), 1e-12));
  CHECK_FALSE(is_invariant(m, axis_angle(Vec3::UnitZ(), std::numbers::pi / 2), 1e-9));
  const SgeMatrix c = build(SymmetryTag::cubic, random_params(SymmetryTag::cubic, rng));
  CHECK(is_invariant(c, special_tilde(), 1e-12));
  CHECK(is_invariant(SgeMatrix{}, special_tilde(), 1e-12));
}

TEST_CASE("oracle dimensions") {
  CHECK(invariant_basis(GeneratorSet{}).dimension() == 171);
  for (SymmetryTag t : all_tags()) {
    CAPTURE(tag_name(t));
    CHECK(class_basis(t).dimension() == param_count(t));
  }
  CHECK(invariant_basis(icosahedral_d5_generators()).dimension() == 6);
}

TEST_CASE("oracle basis is orthonormal and invariant") {
  for (SymmetryTag t : {SymmetryTag::d2, SymmetryTag::z6, SymmetryTag::cubic, SymmetryTag::icosahedral}) {
    CAPTURE(tag_name(t));
    const auto& b = class_basis(t);
    const Eigen::MatrixXd gram = b.coords.transpose() * b.coords;
    CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).norm() <= 1e-10);
    for (const auto& e : b.elements) {
      CHECK(e.frobenius_norm() == doctest::Approx(1.0).epsilon(1e-12));
      for (const auto& q : b.generators.elements) CHECK(is_invariant(e, q, 1e-10));
    }
  }
}

TEST_CASE("projection") {
  std::mt19937_64 rng(52);
  const SgeMatrix m = random_matrix(rng);
  CHECK((project(m, class_basis(SymmetryTag::triclinic)) - m).frobenius_norm() <= 1e-13 * m.frobenius_norm());
  for (SymmetryTag t : all_tags()) {
    const auto& b = class_basis(t);
    const SgeMatrix a = build(t, random_params(t, rng));
    CHECK((project(a, b) - a).frobenius_norm() <= 1e-10 * a.frobenius_norm());
    const SgeMatrix p1 = project(m, b);
    CHECK((project(p1, b) - p1).frobenius_norm() <= 1e-13 * m.frobenius_norm());
    CHECK(p1.frobenius_norm() <= m.frobenius_norm() * (1 + 1e-12));
  }
}

TEST_CASE("group average equals projection for finite groups") {
  std::mt19937_64 rng(53);
  const SgeMatrix m = random_matrix(rng);
  CHECK((group_average(m, {Rotation::identity()}) - m).frobenius_norm() == 0.0);
  for (SymmetryTag t : {SymmetryTag::z3, SymmetryTag::d4, SymmetryTag::cubic, SymmetryTag::icosahedral}) {
    CAPTURE(tag_name(t));
    const auto elements = enumerate_group(generators(t));
    const SgeMatrix avg = group_average(m, elements);
    const SgeMatrix proj = project(m, class_basis(t));
    CHECK((avg - proj).frobenius_norm() <= 1e-10 * m.frobenius_norm());
    for (const auto& q : elements) CHECK(is_invariant(avg, q, 1e-11));
  }
  // Two of the four elements of D2: not closed.
  auto partial = enumerate_group(generators(SymmetryTag::d2));
  partial.resize(2);
  partial[1] = axis_angle(Vec3::UnitZ(), std::numbers::pi / 2);
  CHECK_THROWS_AS(group_average(m, partial), std::runtime_error);
}

TEST_CASE("verify_builder") {
  const auto d6 = verify_builder(SymmetryTag::d6, 30, 42);
  CHECK(d6.passed);
  CHECK(d6.oracle_dimension == 22);
  CHECK(d6.builder_rank == 22);
  CHECK(verify_builder(SymmetryTag::isotropic, 10, 1).oracle_dimension == 5);
  CHECK(verify_builder(SymmetryTag::z5, 40, 7).builder_rank == 35);
  CHECK_THROWS_AS(verify_builder(SymmetryTag::cubic, 5, 0), std::invalid_argument);

  const auto z3 = verify_builder(SymmetryTag::z3, 57, 3);
  CHECK(z3.passed);
  const std::vector<std::string> fixed = {"f12", "f13", "f14", "f15", "g11", "g21"};
  CHECK(z3.corrected_directions == fixed);
  const auto j = to_json(z3);
  CHECK(j["class"] == "z3");
  CHECK(j["seed"] == 3);
  CHECK(j["passed"] == true);
  CHECK(j["printed_residuals"].size() == 57);

  // Same seed, same report.
  CHECK(to_json(verify_builder(SymmetryTag::d3, 40, 9)).dump() == to_json(verify_builder(SymmetryTag::d3, 40, 9)).dump());
}

TEST_CASE("residual_to_class") {
  std::mt19937_64 rng(54);
  const SgeMatrix d4 = build(SymmetryTag::d4, random_params(SymmetryTag::d4, rng));
  CHECK(residual_to_class(d4, SymmetryTag::d4) <= 1e-10);
  CHECK(residual_to_class(d4, SymmetryTag::z4) <= 1e-10);
  CHECK(residual_to_class(d4, SymmetryTag::cubic) > 1e-3);
  CHECK(residual_to_class(random_matrix(rng), SymmetryTag::triclinic) == 0.0);
  CHECK_THROWS_AS(residual_to_class(SgeMatrix{}, SymmetryTag::d4), std::invalid_argument);
}

TEST_CASE("classify") {
  std::mt19937_64 rng(55);
  const SgeMatrix c = build(SymmetryTag::cubic, random_params(SymmetryTag::cubic, rng));
  const auto matches = classify(c, 1e-8);
  REQUIRE(matches.size() >= 3);
  CHECK(matches[0].cls.tag == SymmetryTag::cubic);
  CHECK(matches[1].cls.tag == SymmetryTag::tetrahedral);
  CHECK(matches[2].cls.tag == SymmetryTag::d4);
  CHECK(matches.back().cls.tag == SymmetryTag::triclinic);

  const auto generic = classify(random_matrix(rng), 1e-8);
  REQUIRE(generic.size() == 1);
  CHECK(generic[0].cls.tag == SymmetryTag::triclinic);

  const Rotation q(oracle::random_rotation(rng));
  const SgeMatrix turned = rotate_matrix(build(SymmetryTag::d4, random_params(SymmetryTag::d4, rng)), q);
  CHECK(classify(turned, 1e-8).size() == 1);
  const auto found = classify(turned, 1e-8, {q});
  REQUIRE(found.size() >= 2);
  CHECK(found[0].cls.tag == SymmetryTag::d4);
  CHECK_FALSE(found[0].cls.canonical());

  // Same parameter count: larger group first.
  const SgeMatrix iso = build(SymmetryTag::isotropic, random_params(SymmetryTag::isotropic, rng));
  const auto iso_matches = classify(iso, 1e-8);
  CHECK(iso_matches[0].cls.tag == SymmetryTag::isotropic);
  CHECK(iso_matches[1].cls.tag == SymmetryTag::icosahedral);
}

TEST_CASE("conjugacy covariance") {
  std::mt19937_64 rng(56);
  for (SymmetryTag t : {SymmetryTag::z4, SymmetryTag::d3, SymmetryTag::cubic}) {
    const Rotation q(oracle::random_rotation(rng));
    const auto turned = invariant_basis(conjugated(generators(t), q));
    const auto& base = class_basis(t);
    REQUIRE(turned.dimension() == base.dimension());
    double worst = 0.0;
    for (const auto& e : base.elements) {
      const SgeMatrix r = rotate_matrix(e, q);
      worst = std::max(worst, (project(r, turned) - r).frobenius_norm());
    }
    CHECK(worst < 1e-9);
  }
}
