#include "oracles.hpp"
#include "sge/basis_index.hpp"
#include "sge/rotations.hpp"

#include <doctest.h>

#include <numbers>

using namespace sge;
using std::numbers::pi;

TEST_CASE("rotation validation") {
  Mat3 bad = Mat3::Identity();
  bad(0, 0) = -1.0;  // reflection
  CHECK_THROWS_AS(Rotation{bad}, std::invalid_argument);
  CHECK_THROWS_AS(axis_angle(Vec3::Zero(), 1.0), std::invalid_argument);
  const Rotation q = axis_angle(Vec3(1, 2, 3), 0.7);
  CHECK(q.matrix().isApprox(oracle::rotation(Vec3(1, 2, 3), 0.7), 1e-14));
}

TEST_CASE("special rotations") {
  const Mat3 t = special_tilde().matrix();
  // e1 -> e2 -> e3.
  CHECK((t * Vec3::UnitX() - Vec3::UnitY()).norm() < 1e-15);
  CHECK((t * Vec3::UnitY() - Vec3::UnitZ()).norm() < 1e-15);
  const Mat3 h = special_hat().matrix();
  CHECK((h * h * h - Mat3::Identity()).norm() < 1e-14);
}

TEST_CASE("group orders") {
  auto order = [](SymmetryTag t) { return enumerate_group(generators(t)).size(); };
  CHECK(order(SymmetryTag::triclinic) == 1);
  CHECK(order(SymmetryTag::z2) == 2);
  CHECK(order(SymmetryTag::d2) == 4);
  CHECK(order(SymmetryTag::z4) == 4);
  CHECK(order(SymmetryTag::d4) == 8);
  CHECK(order(SymmetryTag::z3) == 3);
  CHECK(order(SymmetryTag::d3) == 6);
  CHECK(order(SymmetryTag::z6) == 6);
  CHECK(order(SymmetryTag::d6) == 12);
  CHECK(order(SymmetryTag::z5) == 5);
  CHECK(order(SymmetryTag::d5) == 10);
  CHECK(order(SymmetryTag::tetrahedral) == 12);
  CHECK(order(SymmetryTag::cubic) == 24);
  CHECK(order(SymmetryTag::icosahedral) == 60);
  CHECK(enumerate_group(icosahedral_d5_generators()).size() == 60);
  CHECK_THROWS_AS(enumerate_group(generators(SymmetryTag::so2)), std::invalid_argument);
}

TEST_CASE("closure cap") {
  GeneratorSet g;
  g.elements = {axis_angle(Vec3::UnitZ(), 1.0), axis_angle(Vec3::UnitX(), 1.0)};
  CHECK_THROWS_AS(enumerate_group(g), std::runtime_error);
}

TEST_CASE("rep18 commutes with the tensor action") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 20; ++n) {
    const Mat3 q = oracle::random_rotation(rng);
    const Tensor3 t = oracle::random_tensor3(rng);
    const Vec18 expect = oracle::to_vec(oracle::rotate(q, t));
    CHECK((rep18(Rotation(q)) * oracle::to_vec(t) - expect).norm() <= 1e-13);
  }
}

TEST_CASE("rep18 is an orthogonal homomorphism") {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 50; ++n) {
    const Rotation a(oracle::random_rotation(rng));
    const Rotation b(oracle::random_rotation(rng));
    CHECK((rep18(a * b) - rep18(a) * rep18(b)).norm() <= 1e-12);
    CHECK((rep18(a) * rep18(a).transpose() - Mat18::Identity()).norm() <= 1e-12);
  }
  CHECK((rep18(Rotation::identity()) - Mat18::Identity()).norm() == 0.0);
}

TEST_CASE("rotate_matrix matches six-index rotation") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 5; ++n) {
    const Mat3 q = oracle::random_rotation(rng);
    const TensorA A = oracle::random_tensor(rng);
    const Mat18 expect = oracle::to_matrix(oracle::rotate(q, A));
    const Mat18 got = rotate_matrix(tensorA_to_matrix(A), Rotation(q)).dense();
    CHECK((got - expect).norm() <= 1e-11 * expect.norm());
  }
}

TEST_CASE("conjugated generators") {
  const Rotation r = axis_angle(Vec3(1, 1, 0), 0.3);
  const auto g = conjugated(generators(SymmetryTag::z4), r);
  REQUIRE(g.elements.size() == 1);
  const Vec3 axis = r * Vec3::UnitZ();
  CHECK((g.elements[0] * axis - axis).norm() < 1e-14);
}

TEST_CASE("parse_angle") {
  CHECK(parse_angle("pi/4") == doctest::Approx(pi / 4));
  CHECK(parse_angle("2*pi/3") == doctest::Approx(2 * pi / 3));
  CHECK(parse_angle("2pi/3") == doctest::Approx(2 * pi / 3));
  CHECK(parse_angle("-pi") == doctest::Approx(-pi));
  CHECK(parse_angle("pi") == doctest::Approx(pi));
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("-1.25") == -1.25);
  CHECK_THROWS(parse_angle(""));
  CHECK_THROWS(parse_angle("pi/0"));
  CHECK_THROWS(parse_angle("pie"));
  CHECK_THROWS(parse_angle("1.0x"));
}
