#include <doctest.h>

#include "../support/properties.hpp"
#include "systole/macbeath.hpp"
#include "systole/prime.hpp"
#include "systole/triangle_order.hpp"

using namespace systole;

namespace {

GFq field_of_size(int q) {
  switch (q) {
    case 9: return GFq(3, {1, 0, 1});
    case 25: return GFq(5, {2, 0, 1});
    case 49: return GFq(7, {1, 0, 1});
    default: return GFq::prime_field(q);
  }
}

// residue fields of the primes of F above p
std::vector<GFq> residue_fields(const Triple& tau, std::int64_t p) {
  std::vector<GFq> out;
  auto tf = field_build(tau);
  for (auto& P : prime_decompose(*tf.F, p)) out.emplace_back(p, P.factor);
  return out;
}

}  // namespace

TEST_SUITE("fingroup") {
  TEST_CASE("finite field axioms") {
    for (int q : {5, 9, 25, 49}) {
      GFq F = field_of_size(q);
      CHECK(F.q() == static_cast<std::uint32_t>(q));
      for (std::uint32_t a = 0; a < F.q(); ++a) {
        GFqElem x{a};
        CHECK(F.add(x, F.neg(x)) == F.zero());
        if (a) CHECK(F.mul(x, F.inv(x)) == F.one());
        CHECK(F.pow(x, q) == x);
        if (auto r = F.sqrt(F.mul(x, x))) CHECK(F.mul(*r, *r) == F.mul(x, x));
      }
    }
    CHECK_THROWS(GFq(3, {2, 0, 1}));  // x^2 + 2 = (x+1)(x+2) mod 3
  }

  TEST_CASE("PSL2 orders") {
    CHECK(enumerate_psl2(field_of_size(5)).size() == 60);
    CHECK(enumerate_psl2(field_of_size(7)).size() == 168);
    CHECK(enumerate_psl2(field_of_size(9)).size() == 360);
    CHECK(psl2_order(field_of_size(13)) == 1092);
    CHECK(psl2_order(field_of_size(25)) == 7800);
  }

  TEST_CASE("element orders and projective normalization") {
    GFq F = field_of_size(7);
    Mat2 m{F.from_int(0), F.from_int(6), F.from_int(1), F.from_int(1)};  // trace 1: order 3 in PSL2
    ProjMat g = canonical(F, m);
    CHECK(pm_order(F, g) == 3);
    CHECK(pm_pow(F, g, 3) == pm_identity(F));
    CHECK(canonical(F, mat_scale(F, F.from_int(6), m)) == g);
    CHECK(pm_mul(F, g, pm_inv(F, g)) == pm_identity(F));
  }

  TEST_CASE("kappa values") {
    CHECK(kappa(2, 13, 13) == 1);
    CHECK(kappa(7, 13, 13) == 3);
    CHECK(kappa(7, 11, 11) == 0);
    CHECK(kappa(3, 13, 13) == 1);
    // q^2 = 1 mod 2n alone is not enough
    CHECK(kappa(4, 5, 5) == 0);
    CHECK(kappa(15, 11, 11) == 0);
    CHECK(kappa(12, 23, 23) == 2);
    CHECK_THROWS_AS(kappa(7, 49, 7), std::domain_error);
  }

  TEST_CASE("class counts match brute force") {
    auto r = props::class_counts();
    CHECK_MESSAGE(r.ok, r.detail);
    CHECK(r.checks > 30);
  }

  TEST_CASE("commutative test matches exhaustive search") {
    auto r = props::commutative_triples();
    CHECK_MESSAGE(r.ok, r.detail);
    CHECK(r.checks == 125 + 343);
  }

  TEST_CASE("exceptional triples") {
    CHECK(exceptional_test({2, 3, 5}));
    CHECK(exceptional_test({2, 2, 9}));
    CHECK_FALSE(exceptional_test({2, 3, 7}));
    CHECK_FALSE(exceptional_test({2, 7, 7}));
  }

  TEST_CASE("count bound") {
    for (int p : {13, 29})
      for (auto& F : residue_fields({2, 3, 7}, p)) CHECK(count_bound({2, 3, 7}, F) == 3);
    for (int p : {11, 13, 23, 37, 47, 59})
      for (auto& F : residue_fields({2, 3, 12}, p)) CHECK(count_bound({2, 3, 12}, F) == 2);
    for (int p : {13, 29})
      for (auto& F : residue_fields({2, 7, 7}, p)) CHECK(count_bound({2, 7, 7}, F) == 9);
    CHECK_FALSE(count_bound({2, 3, 7}, GFq::prime_field(7)));
  }

  TEST_CASE("trace triples are realized") {
    GFq F = field_of_size(13);
    auto t2 = order_class_traces(2, F), t3 = order_class_traces(3, F), t7 = order_class_traces(7, F);
    for (auto c : t7) {
      auto sols = solve_trace_triple(F, {t2[0], t3[0], c, false}, 1, 4);
      REQUIRE_FALSE(sols.empty());
      for (auto& s : sols) {
        CHECK(mat_mul(F, mat_mul(F, s[0], s[1]), s[2]) == mat_identity(F));
        CHECK(pm_order(F, canonical(F, s[0])) == 2);
        CHECK(pm_order(F, canonical(F, s[1])) == 3);
      }
    }
    GFq big = GFq::prime_field(29);
    auto b7 = order_class_traces(7, big);
    auto sols = solve_trace_triple(big, {order_class_traces(2, big)[0], order_class_traces(3, big)[0], b7[0], false}, 5, 2);
    REQUIRE_FALSE(sols.empty());
    CHECK(pm_order(big, canonical(big, sols[0][2])) == 7);
  }

  TEST_CASE("PGL2 inside PSL2 of the quadratic extension") {
    GFq small = field_of_size(11);
    auto ext = QuadraticExtension::of(small);
    // a matrix of non-square determinant
    Mat2 g{small.from_int(1), small.from_int(0), small.from_int(0), small.from_int(2)};
    ProjMat h = pgl_to_psl(small, ext, g);
    CHECK(pm_order(ext.big, h) == 10);
  }
}
