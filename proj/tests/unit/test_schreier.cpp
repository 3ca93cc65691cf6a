#include <cmath>
#include <doctest.h>

#include <algorithm>
#include <set>

#include "systole/schreier.hpp"
#include "systole/sysbound.hpp"

using namespace systole;

namespace {

struct Built {
  TriangleOrder O;
  SplitData sd;
  CosetGraph g;
};

Built build_for(const Triple& tau, const PrimeIdeal& P, std::uint64_t seed = 1) {
  Built b{build_order(tau), {}, {}};
  b.sd = split_order_mod(b.O, P, seed);
  b.g = build_coset_graph({{b.sd.gfq, b.sd.img_alpha, b.sd.img_beta}}, 1000000, tau.a, tau.b);
  return b;
}

PrimeIdeal prime_of(const Triple& tau, std::int64_t p, std::size_t k = 0) {
  return prime_decompose(*field_build(tau).F, p).at(k);
}

}  // namespace

TEST_SUITE("schreier") {
  TEST_CASE("word normalization") {
    Word w(2, 3);
    w.append('x', 1);
    w.append('x', 1);
    CHECK(w.empty());
    w.append('y', 2);
    CHECK(w.to_string() == "y^-1");
    w.append('x', 3);
    w.append('y', -1);
    CHECK(w.to_string() == "y^-1 x y^-1");
    CHECK(w.letters() == 3);
    Word v = w;
    v.append(w.inverse());
    CHECK(v.empty());
    CHECK(Word::parse("x y^-1 x y^2", 2, 3).to_string() == "x y^-1 x y^-1");
    CHECK(Word(2, 3).to_string() == "1");
  }

  TEST_CASE("trivial images give one node") {
    GFq F = GFq::prime_field(7);
    auto sp = std::make_shared<const GFq>(F);
    auto g = build_coset_graph({{sp, pm_identity(F), pm_identity(F)}}, 10, 2, 3);
    CHECK(g.size() == 1);
    auto s = schreier_generators(g);
    REQUIRE(s.gens.size() == 2);
    CHECK(s.word(0).to_string() == "x");
    CHECK(s.word(1).to_string() == "y");
  }

  TEST_CASE("cap is enforced") {
    auto O = build_order(Triple{2, 3, 7});
    auto sd = split_order_mod(O, prime_of({2, 3, 7}, 13), 1);
    CHECK_THROWS_AS(build_coset_graph(std::vector<QuotientComponent>{{sd.gfq, sd.img_alpha, sd.img_beta}}, 100, 2, 3), CapExceeded);
  }

  TEST_CASE("Hurwitz kernel at 7") {
    auto b = build_for({2, 3, 7}, prime_of({2, 3, 7}, 7));
    CHECK(b.g.size() == 168);
    auto s = schreier_generators(b.g);
    CHECK(s.gens.size() == 169);
    attach_traces(s, b.O, 2);
    const PrimeIdeal& P = b.sd.prime;
    for (std::size_t i = 0; i < s.gens.size(); ++i) {
      Word w = s.word(i);
      for (auto& img : word_image(b.g, w)) CHECK(img == pm_identity(*b.sd.gfq));
      CHECK(membership_test(s.quat(i, b.O), b.O, P));
      { FieldElem t = b.O.alg->trd(word_eval(w, b.O)); CHECK_MESSAGE((s.traces[i] == t || s.traces[i] == -t), w.to_string() << " " << s.traces[i].to_string() << " vs " << t.to_string()); }
    }
    CHECK(membership_test(Word(2, 3), b.O, P));
    CHECK_FALSE(membership_test(Word::parse("x", 2, 3), b.O, P));
  }

  TEST_CASE("transversal words reach every node once") {
    auto b = build_for({2, 3, 12}, prime_of({2, 3, 12}, 11));
    CHECK(b.g.size() == 1320);
    SchreierSet s = schreier_generators(b.g);
    std::set<std::uint64_t> seen;
    for (std::uint32_t u = 0; u < b.g.size(); ++u) {
      auto img = word_image(b.g, s.transversal(u));
      CHECK(img[0] == b.g.element(u, 0));
      seen.insert(img[0].key());
    }
    CHECK(seen.size() == b.g.size());
    CHECK(s.transversal(0).empty());
    // Schreier property: t_u = t_parent(u) * label(u)
    for (std::uint32_t u = 1; u < b.g.size(); ++u) {
      Word w = s.transversal(b.g.parent[u]);
      std::uint8_t lab = b.g.parent_label[u];
      w.append(lab < 2 ? 'x' : 'y', lab % 2 ? -1 : 1);
      CHECK(w == s.transversal(u));
    }
  }

  TEST_CASE("kernel generators are hyperbolic away from 2abc delta") {
    auto b = build_for({2, 3, 7}, prime_of({2, 3, 7}, 13, 1));
    auto s = schreier_generators(b.g);
    attach_traces(s, b.O, 4);
    int root = b.O.F()->distinguished();
    // trivial generators (e.g. t x x t^-1) are central; everything else is hyperbolic
    for (std::size_t i = 0; i < s.traces.size(); ++i) {
      const FieldElem& t = s.traces[i];
      if (t.is_rational() && abs(t.coeff(0)) == 2) {
        Quat q = word_eval(s.word(i), b.O);
        CHECK((q.c[1].is_zero() && q.c[2].is_zero() && q.c[3].is_zero()));
      } else {
        CHECK(std::fabs(t.approx(root)) > 2.0);
      }
    }
  }

  TEST_CASE("trace multiset does not depend on the splitting seed") {
    auto P = prime_of({2, 3, 7}, 13, 2);
    auto collect = [&](std::uint64_t seed) {
      auto b = build_for({2, 3, 7}, P, seed);
      auto s = schreier_generators(b.g);
      attach_traces(s, b.O, 1);
      std::vector<std::string> v;
      for (auto& t : s.traces) v.push_back(t.to_string());
      std::sort(v.begin(), v.end());
      return v;
    };
    auto a = collect(1), c = collect(99);
    CHECK(a == c);
    auto min_of = [&](std::uint64_t seed) {
      auto b = build_for({2, 3, 7}, P, seed);
      auto s = schreier_generators(b.g);
      attach_traces(s, b.O, 1);
      auto i = min_hyperbolic_trace(s.traces, b.O.F()->distinguished(), 1);
      FieldElem t = s.traces[*i];
      return (t.sign_at(b.O.F()->distinguished()) < 0 ? -t : t).to_string();
    };
    CHECK(min_of(1) == min_of(99));
  }

  TEST_CASE("identify the prime of a congruence kernel") {
    auto tf = field_build({2, 3, 7});
    auto cands = prime_decompose(*tf.F, 13);
    for (auto& P : cands) {
      auto b = build_for({2, 3, 7}, P);
      auto s = schreier_generators(b.g);
      attach_traces(s, b.O, 2);
      auto found = identify_ideal(s, b.O, cands);
      REQUIRE(found);
      CHECK(*found == P);
    }
  }
}
