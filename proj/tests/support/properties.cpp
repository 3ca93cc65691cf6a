#include "properties.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "systole/sysbound.hpp"

namespace systole::props {

namespace {

GFq field_of_size(int q) {
  switch (q) {
    case 9: return GFq(3, {1, 0, 1});
    default: return GFq::prime_field(q);
  }
}

std::map<std::uint64_t, int> brute_classes(const GFq& F) {
  auto G = enumerate_psl2(F);
  std::set<std::uint64_t> seen;
  std::map<std::uint64_t, int> out;
  for (const auto& g : G) {
    if (seen.count(g.key())) continue;
    for (const auto& h : G) seen.insert(pm_mul(F, pm_mul(F, h, g), pm_inv(F, h)).key());
    out[pm_order(F, g)]++;
  }
  return out;
}

const std::vector<std::pair<Triple, std::vector<std::int64_t>>>& table_triples() {
  static const std::vector<std::pair<Triple, std::vector<std::int64_t>>> t = {
      {{2, 3, 7}, {3, 7, 13, 29, 41, 43}},
      {{2, 3, 12}, {5, 7, 11, 13, 23, 37, 47}},
      {{2, 7, 7}, {3, 7, 13, 29}},
      {{3, 3, 10}, {3, 19, 41}},
      {{2, 3, 8}, {3, 5, 7, 17, 23}},
  };
  return t;
}

}  // namespace

Result class_counts() {
  Result r;
  for (int q : {5, 7, 9, 11, 13}) {
    GFq F = field_of_size(q);
    auto brute = brute_classes(F);
    for (int n = 2; n <= q + 1; ++n) {
      if (n % F.p() == 0) continue;
      int expect = brute.count(n) ? brute.at(n) : 0;
      std::ostringstream what;
      what << "kappa(" << n << ", " << q << ") = " << kappa(n, F.q(), F.p()) << ", brute force " << expect;
      r.check(kappa(n, F.q(), F.p()) == expect, what.str());
      if (expect) r.check(order_class_traces(n, F).size() == static_cast<std::size_t>(expect), "traces " + what.str());
    }
  }
  return r;
}

Result commutative_triples() {
  Result r;
  for (int p : {5, 7}) {
    GFq F = field_of_size(p);
    auto sl = enumerate_sl2(F);
    // traces of commuting pairs (g1, g2) with their product trace
    std::set<std::array<std::uint32_t, 3>> commuting;
    for (const auto& g1 : sl)
      for (const auto& g2 : sl) {
        Mat2 g12 = mat_mul(F, g1, g2);
        if (g12 == mat_mul(F, g2, g1)) commuting.insert({mat_trace(F, g1).v, mat_trace(F, g2).v, mat_trace(F, g12).v});
      }
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c) {
          std::array<std::uint32_t, 3> key{F.from_int(a).v, F.from_int(b).v, F.from_int(c).v};
          TraceTriple t{F.from_int(a), F.from_int(b), F.from_int(c), false};
          std::ostringstream what;
          what << "p=" << p << " traces " << a << "," << b << "," << c;
          r.check(commutative_test(F, t) == (commuting.count(key) > 0), what.str());
        }
  }
  return r;
}

Result order_relations() {
  Result r;
  for (auto& [tau, primes] : table_triples()) {
    TriangleOrder O = build_order(tau);
    const QuatAlg& Q = *O.alg;
    Quat minus_one = Q.scalar(O.F()->from_int(-1));
    std::string t = tau.str();
    r.check(Q.pow(O.alpha, tau.a) == minus_one, t + " alpha^a");
    r.check(Q.pow(O.beta, tau.b) == minus_one, t + " beta^b");
    Quat abc = Q.pow(O.alphabeta, tau.c);
    r.check(abc == minus_one || abc == Q.one(), t + " (alpha beta)^c");
    r.check(Q.nrd(O.alpha) == O.F()->one() && Q.nrd(O.beta) == O.F()->one(), t + " nrd");
    for (auto p : primes)
      for (auto& P : prime_decompose(*O.F(), p)) {
        SplitData sd;
        try {
          sd = split_order_mod(O, P, 17);
        } catch (const std::length_error&) {
          continue;
        }
        const GFq& F = *sd.gfq;
        std::string at = t + " at " + P.describe();
        r.check(pm_order(F, sd.img_alpha) == static_cast<std::uint64_t>(tau.a), at + " order of x");
        r.check(pm_order(F, sd.img_beta) == static_cast<std::uint64_t>(tau.b), at + " order of y");
        r.check(pm_order(F, pm_mul(F, sd.img_alpha, sd.img_beta)) == static_cast<std::uint64_t>(tau.c), at + " order of xy");
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            Coords4 c = coords_in_order(Q.mul(O.basis(k), O.basis(l)), O);
            std::array<GFqElem, 4> red;
            for (int m = 0; m < 4; ++m) red[m] = reduce_elem(F, c[m], P);
            r.check(sd.image(red) == mat_mul(F, sd.img_basis[k], sd.img_basis[l]), at + " multiplicativity");
          }
      }
  }
  return r;
}

Result numeric_traces(int words_per_triple) {
  Result r;
  std::mt19937_64 rng(2024);
  for (auto& [tau, primes] : table_triples()) {
    TriangleOrder O = build_order(tau);
    auto gens = iota_numeric(tau, 256);
    int root = O.F()->distinguished();
    std::uniform_int_distribution<int> ex(1, tau.a - 1), ey(1, tau.b - 1), len(2, 12);
    for (int n = 0; n < words_per_triple; ++n) {
      Word w(tau.a, tau.b);
      int tokens = len(rng);
      for (int i = 0; i < tokens; ++i) {
        if (i % 2 == 0)
          w.append('x', ex(rng));
        else
          w.append('y', ey(rng));
      }
      double exact = std::fabs(O.alg->trd(word_eval(w, O)).approx(root));
      double numeric = std::fabs(iota_trace(gens, w, 256).mid_double());
      r.check(std::fabs(exact - numeric) < 1e-6, tau.str() + " word " + w.to_string());
    }
  }
  return r;
}

Result determinism() {
  Result r;
  auto O = build_order(Triple{2, 3, 7});
  FieldElem x = parse_label("4u-3", O.fields);
  IdealSpec spec = make_spec(O.fields, primes_of_label(x, O.fields));
  spec.label = x;
  SysOptions one, eight;
  one.threads = 1;
  eight.threads = 8;
  std::string a = sys_upper(O, spec, one).to_json();
  r.check(a == sys_upper(O, spec, eight).to_json(), "1 vs 8 threads");
  r.check(a == sys_upper(O, spec, one).to_json(), "second run");
  return r;
}

}  // namespace systole::props
