#include "oracles.hpp"
#include "sge/basis_index.hpp"

#include <doctest.h>

using namespace sge;

TEST_CASE("alpha_to_ijk returns the table entry") {
  CHECK(alpha_to_ijk(1) == Triple{1, 1, 1});
  CHECK(alpha_to_ijk(3) == Triple{1, 2, 2});
  CHECK(alpha_to_ijk(16) == Triple{1, 2, 3});
  CHECK(alpha_to_ijk(18) == Triple{2, 3, 1});
  CHECK_THROWS_AS(alpha_to_ijk(0), std::out_of_range);
  CHECK_THROWS_AS(alpha_to_ijk(19), std::out_of_range);
}

TEST_CASE("ijk_to_alpha inverts the table up to the first index pair") {
  for (int a = 1; a <= 18; ++a) {
    const auto t = alpha_to_ijk(a);
    CHECK(ijk_to_alpha(t.i, t.j, t.k) == a);
    CHECK(ijk_to_alpha(t.j, t.i, t.k) == a);
  }
  CHECK(ijk_to_alpha(2, 1, 1) == 8);
  CHECK(ijk_to_alpha(2, 1, 2) == 3);
  CHECK_THROWS_AS(ijk_to_alpha(0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(ijk_to_alpha(1, 1, 4), std::out_of_range);
}

TEST_CASE("every (i<=j, k) appears exactly once") {
  std::array<int, 18> hits{};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = 0; k < 3; ++k) ++hits[static_cast<std::size_t>(index_of(i, j, k))];
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("labels agree with the independent table") {
  for (int a = 0; a < 18; ++a) {
    CHECK(index_triple(a) == oracle::triple(a));
    CHECK(basis_scale(a) == oracle::scale(a));
  }
}

TEST_CASE("tensor to matrix matches the direct definition") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 10; ++n) {
    const TensorA A = oracle::random_tensor(rng);
    const Mat18 expect = oracle::to_matrix(A);
    const Mat18 got = tensorA_to_matrix(A).dense();
    CHECK((got - expect).norm() <= 1e-14 * expect.norm());
  }
}

TEST_CASE("round trips and Frobenius isometry") {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 20; ++n) {
    const TensorA A = oracle::random_tensor(rng);
    const SgeMatrix m = tensorA_to_matrix(A);
    const TensorA back = matrix_to_tensorA(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < 729; ++i) worst = std::max(worst, std::abs(back.values()[i] - A.values()[i]));
    CHECK(worst <= 1e-15 * oracle::frobenius(A) + 1e-16);
    CHECK(std::abs(m.frobenius_norm() - oracle::frobenius(A)) <= 1e-14 * oracle::frobenius(A));

    const Tensor3 t = oracle::random_tensor3(rng);
    const Tensor3 tb = vec_to_tensor3(tensor3_to_vec(t));
    for (std::size_t i = 0; i < 27; ++i) CHECK(std::abs(tb.values()[i] - t.values()[i]) <= 1e-15);
    CHECK(std::abs(tensor3_to_vec(t).norm() - t.frobenius_norm()) <= 1e-14);
  }
}

TEST_CASE("asymmetric input is rejected") {
  std::mt19937_64 rng(13);
  TensorA A = oracle::random_tensor(rng);
  A(0, 1, 2, 0, 0, 0) += 1e-6;
  CHECK_THROWS_AS(tensorA_to_matrix(A), std::invalid_argument);

  Tensor3 t;
  t(0, 1, 2) = 1.0;
  CHECK_THROWS_AS(tensor3_to_vec(t), std::invalid_argument);

  Mat18 d = Mat18::Identity();
  d(0, 1) = 1e-3;
  CHECK_THROWS_AS(SgeMatrix::from_dense(d), std::invalid_argument);
  d(1, 0) = 1e-3;
  CHECK(SgeMatrix::from_dense(d)(1, 0) == 1e-3);
}

TEST_CASE("SgeMatrix storage") {
  CHECK(kUpperSize == 171);
  CHECK(SgeMatrix::slot(0, 0) == 0);
  CHECK(SgeMatrix::slot(0, 17) == 17);
  CHECK(SgeMatrix::slot(1, 1) == 18);
  CHECK(SgeMatrix::slot(17, 17) == 170);
  CHECK(SgeMatrix::slot(5, 2) == SgeMatrix::slot(2, 5));

  SgeMatrix m;
  m.set(3, 7, 2.5);
  CHECK(m(7, 3) == 2.5);
  CHECK(m.dense()(7, 3) == 2.5);
  CHECK(m.frobenius_norm() == doctest::Approx(2.5 * std::sqrt(2.0)));

  std::mt19937_64 rng(14);
  const SgeMatrix a = tensorA_to_matrix(oracle::random_tensor(rng));
  CHECK(SgeMatrix::from_coords(a.coords()).dense().isApprox(a.dense(), 1e-15));
  CHECK(a.coords().norm() == doctest::Approx(a.frobenius_norm()).epsilon(1e-14));
  CHECK(SgeMatrix::from_upper(a.upper()) == a);
  std::vector<double> short_upper(170);
  CHECK_THROWS_AS(SgeMatrix::from_upper(short_upper), std::invalid_argument);
}

TEST_CASE("restrict_2d picks the in-plane rows") {
  SgeMatrix m;
  for (int r = 0; r < 18; ++r)
    for (int c = r; c < 18; ++c) m.set(r, c, 100 * r + c);
  const Mat6 p = restrict_2d(m);
  const int idx[6] = {0, 1, 2, 5, 6, 7};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) CHECK(p(r, c) == m(idx[r], idx[c]));
  // Every planar label uses only the digits 1 and 2.
  for (int a : kPlanarIndices)
    for (int x : index_triple(a)) CHECK(x < 2);
}
