#include "doctest.h"

#include <random>

#include "knotcg/linalg.hpp"
#include "oracles.hpp"

using namespace knotcg;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t r = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < r; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < r && d(i, i) != 0) {
      if (d(i + 1, i + 1) % d(i, i) != 0) return false;
    } else if (i + 1 < r && d(i + 1, i + 1) != 0) {
      return false;
    }
  }
  return true;
}

void check_smith(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  CHECK(snf.U * a * snf.W == snf.D);
  CHECK(abs(determinant(snf.U)) == 1);
  CHECK(abs(determinant(snf.W)) == 1);
  CHECK(is_diagonal_chain(snf.D));
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{}) == 1);
  CHECK(determinant(IntMatrix{{0, 3}, {3, 0}}) == -9);
  CHECK(determinant(IntMatrix{{-2, 1}, {1, -2}}) == 3);
  CHECK(determinant(IntMatrix{{1, 1}, {1, 1}}) == 0);
  CHECK(determinant(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), Error);
}

TEST_CASE("smith normal form examples") {
  IntMatrix d3(4, 4);
  for (std::size_t i = 0; i < 4; ++i) d3(i, i) = 3;
  auto snf = smith_normal_form(d3);
  CHECK(snf.invariant_factors == std::vector<mpz_class>{3, 3, 3, 3});

  snf = smith_normal_form(IntMatrix{{0, 3}, {3, 0}});
  CHECK(snf.invariant_factors == std::vector<mpz_class>{3, 3});
  CHECK(snf.U * IntMatrix{{0, 3}, {3, 0}} * snf.W == snf.D);

  snf = smith_normal_form(IntMatrix::identity(2));
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1, 1});

  snf = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1, 6});

  snf = smith_normal_form(IntMatrix{{-2, 1}, {1, -2}});
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1, 3});
}

TEST_CASE("smith normal form shapes") {
  check_smith(IntMatrix{});
  check_smith(IntMatrix{{0, 0}, {0, 0}});
  check_smith(IntMatrix{{1, 2, 3}, {4, 5, 6}});
  check_smith(IntMatrix{{2, 4}, {6, 8}, {10, 12}});
  check_smith(IntMatrix{{1, 1}, {1, 1}});
  const auto snf = smith_normal_form(IntMatrix{{1, 1}, {1, 1}});
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1});
  CHECK(snf.D(1, 1) == 0);
}

TEST_CASE("smith normal form reconstructs random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    check_smith(a);
  }
}

TEST_CASE("rational inverse") {
  const RatMatrix inv = rational_inverse(IntMatrix{{0, 3}, {3, 0}});
  CHECK(inv(0, 0) == 0);
  CHECK(inv(0, 1) == mpq_class(1, 3));
  CHECK(inv(1, 0) == mpq_class(1, 3));
  CHECK(inv(1, 1) == 0);

  CHECK(rational_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));

  try {
    rational_inverse(IntMatrix{{1, 1}, {1, 1}});
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }

  // 2x2 closed form (1/det) [[d,-b],[-c,a]]
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    const long det = a * d - b * c;
    if (det == 0) continue;
    const RatMatrix inv2 = rational_inverse(IntMatrix{{a, b}, {c, d}});
    CHECK(inv2(0, 0) == mpq_class(d, 1) / det);
    CHECK(inv2(0, 1) == mpq_class(-b, 1) / det);
    CHECK(inv2(1, 0) == mpq_class(-c, 1) / det);
    CHECK(inv2(1, 1) == mpq_class(a, 1) / det);
  }
}

TEST_CASE("mod one") {
  CHECK(mod_one(mpq_class(-1, 3)) == mpq_class(2, 3));
  CHECK(mod_one(mpq_class(7, 3)) == mpq_class(1, 3));
  CHECK(mod_one(mpq_class(-2)) == 0);
  CHECK(to_string(mpq_class(-2, 6)) == "-1/3");
  CHECK(to_string(mpq_class(4)) == "4");
}

TEST_CASE("mod p arithmetic") {
  CHECK(mod_p(-1, 3) == 2);
  CHECK(mod_p(mpz_class(-7), 3) == 2);
  CHECK(inverse_mod_p(2, 3) == 2);
  CHECK(inverse_mod_p(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod_p(0, 5), Error);
  CHECK(is_prime(3));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("rref and subspaces") {
  const auto rows = rref_mod_p({{0, 2, 1}, {0, 1, 2}, {1, 1, 1}}, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == ModPVector{1, 0, 2});
  CHECK(rows[1] == ModPVector{0, 1, 2});

  const ModPSubspace a(3, 3, {{1, 1, 0}, {2, 2, 0}});
  const ModPSubspace b(3, 3, {{2, 2, 0}});
  CHECK(a == b);
  CHECK(a.dim() == 1);
  CHECK(a.contains({2, 2, 0}));
  CHECK_FALSE(a.contains({1, 0, 0}));
  CHECK(a.is_subspace_of(ModPSubspace::full(3, 3)));
  CHECK(ModPSubspace::zero(3, 3).is_subspace_of(a));
  CHECK(a.elements() == std::vector<ModPVector>{{0, 0, 0}, {1, 1, 0}, {2, 2, 0}});
  CHECK(to_string(ModPVector{0, 1, 2}) == "(0,1,2)");
  CHECK_THROWS_AS(ModPSubspace(3, 2, {{1, 0, 0}}), Error);
  CHECK_THROWS_AS(ModPSubspace(4, 2, {}), Error);
}

TEST_CASE("enumerate subspaces examples") {
  CHECK(enumerate_subspaces(3, 4, 2).size() == 130);

  const auto zero = enumerate_subspaces(3, 2, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == ModPSubspace::zero(3, 2));

  const auto full = enumerate_subspaces(3, 2, 2);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == ModPSubspace::full(3, 2));

  CHECK_THROWS_AS(enumerate_subspaces(3, 4, 5), Error);
  try {
    enumerate_subspaces(3, 16, 8);
    FAIL("expected EnumerationTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationTooLarge);
  }
}

TEST_CASE("enumerated subspaces match the element-set oracle") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto oracle = oracle::brute_force_subspaces(3, n, k);
      const auto listed = enumerate_subspaces(3, static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      std::set<oracle::ElementSet> ours;
      for (const auto& s : listed) {
        oracle::ElementSet e;
        for (const auto& v : s.elements()) e.insert(std::vector<int>(v.begin(), v.end()));
        ours.insert(e);
      }
      CHECK(ours.size() == listed.size());
      CHECK(ours == oracle);
    }
}

TEST_CASE("annihilator examples") {
  const ModPSubspace s(3, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(annihilator(s) == ModPSubspace(3, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK(annihilator(ModPSubspace::zero(3, 4)) == ModPSubspace::full(3, 4));
  CHECK(annihilator(ModPSubspace::full(3, 4)) == ModPSubspace::zero(3, 4));
}
