#include "doctest.h"

#include <algorithm>

#include "knotcg/branched_cover.hpp"
#include "knotcg/corpus.hpp"
#include "oracles.hpp"

using namespace knotcg;

namespace {

// Hand-entered: V_K + V_K^t = [[0,3],[3,0]] + [[0,3],[3,0]], inverse
// (1/3)[[0,1],[1,0]] in each block.
mpq_class paper_gram(std::size_t i, std::size_t j) {
  const bool linked = (i / 2 == j / 2) && i != j;
  return linked ? mpq_class(1, 3) : mpq_class(0);
}

bool isotropic_by_hand(const std::set<std::vector<int>>& elements) {
  for (const auto& x : elements)
    for (const auto& y : elements) {
      mpq_class acc = 0;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) acc += paper_gram(i, j) * x[i] * y[j];
      if (acc.get_den() != 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("cover homology") {
  const auto k = cover_homology(corpus::paper_knot());
  CHECK(k.invariant_factors == std::vector<mpz_class>{3, 3, 3, 3});
  CHECK(k.order == 81);

  const auto u = cover_homology(SeifertMatrix::unknot());
  CHECK(u.invariant_factors.empty());
  CHECK(u.order == 1);

  const auto t = cover_homology(corpus::right_trefoil());
  CHECK(t.invariant_factors == std::vector<mpz_class>{3});
  CHECK(t.order == 3);

  const auto tf = cover_homology(connected_sum(corpus::right_trefoil(), corpus::figure_eight()));
  CHECK(tf.invariant_factors == std::vector<mpz_class>{15});
}

TEST_CASE("linking form of the genus-two example") {
  const auto f = linking_form(corpus::paper_knot());
  CHECK(f.p_elementary == 3L);
  CHECK(f.rank() == 4);
  CHECK(f.generators == IntMatrix::identity(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(f.gram(i, j) == paper_gram(i, j));
      CHECK(f.presentation_gram(i, j) == paper_gram(i, j));
    }
  CHECK(is_nondegenerate(f));
}

TEST_CASE("linking form of the trefoil and unknot") {
  const auto t = linking_form(corpus::right_trefoil());
  REQUIRE(t.rank() == 1);
  CHECK(t.orders == std::vector<mpz_class>{3});
  CHECK((t.gram(0, 0) == mpq_class(1, 3) || t.gram(0, 0) == mpq_class(2, 3)));
  CHECK(is_nondegenerate(t));
  // inverse of [[-2,1],[1,-2]] is (1/3)[[-2,-1],[-1,-2]]
  CHECK(t.presentation_gram(0, 0) == mpq_class(1, 3));
  CHECK(t.presentation_gram(0, 1) == mpq_class(2, 3));

  const auto u = linking_form(SeifertMatrix::unknot());
  CHECK(u.rank() == 0);
  CHECK_FALSE(u.p_elementary.has_value());
  CHECK(is_nondegenerate(u));

  const auto tf = linking_form(connected_sum(corpus::right_trefoil(), corpus::figure_eight()));
  CHECK(tf.orders == std::vector<mpz_class>{15});
  CHECK_FALSE(tf.p_elementary.has_value());
  CHECK(is_nondegenerate(tf));
}

TEST_CASE("metabolizers of the genus-two example") {
  const auto f = linking_form(corpus::paper_knot());
  const auto mets = metabolizers(f);
  CHECK(mets.size() == 8);
  const ModPSubspace e13(3, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  const ModPSubspace e12(3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(std::find(mets.begin(), mets.end(), e13) != mets.end());
  CHECK(std::find(mets.begin(), mets.end(), e12) == mets.end());
  CHECK(std::is_sorted(mets.begin(), mets.end()));

  // oracle: isotropic element sets among all 130 planes, with a hand Gram
  const auto planes = oracle::brute_force_subspaces(3, 4, 2);
  CHECK(planes.size() == 130);
  std::set<oracle::ElementSet> isotropic;
  for (const auto& s : planes)
    if (isotropic_by_hand(s)) isotropic.insert(s);
  std::set<oracle::ElementSet> ours;
  for (const auto& h : mets) {
    oracle::ElementSet e;
    for (const auto& v : h.elements()) e.insert(std::vector<int>(v.begin(), v.end()));
    ours.insert(e);
  }
  CHECK(ours == isotropic);
  for (const auto& h : mets) {
    CHECK(h.elements().size() * h.elements().size() == 81);
    CHECK(vanishing_characters(h).size() == 9);
  }
}

TEST_CASE("metabolizers edge cases") {
  CHECK(metabolizers(linking_form(corpus::right_trefoil())).empty());
  const auto u = metabolizers(linking_form(SeifertMatrix::unknot()));
  REQUIRE(u.size() == 1);
  CHECK(u[0].dim() == 0);
  try {
    metabolizers(linking_form(connected_sum(corpus::right_trefoil(), corpus::figure_eight())));
    FAIL("expected NotPElementary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPElementary);
  }
  // trefoil # trefoil: (Z_3)^2 with form diag(q, q), q = +-1/3; isotropic
  // lines need x^2 + y^2 = 0 mod 3, which has no nonzero solution.
  CHECK(metabolizers(linking_form(connected_sum(corpus::right_trefoil(), corpus::right_trefoil()))).empty());
  // trefoil # mirror: form diag(q, -q) has isotropic lines (1, +-1)
  CHECK(metabolizers(linking_form(connected_sum(corpus::right_trefoil(), corpus::left_trefoil()))).size() == 2);
}

TEST_CASE("vanishing characters") {
  const ModPSubspace h(3, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  const auto chars = vanishing_characters(h);
  REQUIRE(chars.size() == 9);
  CHECK(chars.front().values == ModPVector{0, 0, 0, 0});
  for (const auto& c : chars) {
    CHECK(c.p == 3);
    CHECK(c.values[1] == 0);
    CHECK(c.values[2] == 0);
  }
  CHECK(vanishing_characters(ModPSubspace::zero(3, 4)).size() == 81);
  const auto only_zero = vanishing_characters(ModPSubspace::full(3, 4));
  REQUIRE(only_zero.size() == 1);
  CHECK(only_zero[0].values == ModPVector{0, 0, 0, 0});
}

TEST_CASE("character well-definedness") {
  const IntMatrix pres = symmetrize(corpus::paper_knot());
  for (const auto& v : ModPSubspace::full(3, 4).elements())
    CHECK(is_well_defined({3, v}, pres));
  const IntMatrix tp = symmetrize(corpus::right_trefoil());
  CHECK(is_well_defined({3, {1, 2}}, tp));
  CHECK_FALSE(is_well_defined({3, {1, 0}}, tp));
  CHECK_THROWS_AS(is_well_defined({3, {1}}, tp), Error);
}

TEST_CASE("linking pairing") {
  const auto f = linking_form(corpus::paper_knot());
  CHECK(linking_pairing(f, {1, 0, 0, 0}, {0, 1, 0, 0}) == mpq_class(1, 3));
  CHECK(linking_pairing(f, {1, 0, 0, 0}, {0, 2, 0, 0}) == mpq_class(2, 3));
  CHECK(linking_pairing(f, {1, 1, 0, 0}, {1, 1, 0, 0}) == mpq_class(2, 3));
  CHECK_THROWS_AS(linking_pairing(f, {1}, {1}), Error);
}
