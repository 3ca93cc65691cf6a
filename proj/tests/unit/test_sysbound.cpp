#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "../support/properties.hpp"
#include "systole/sysbound.hpp"

using namespace systole;

namespace {

IdealSpec spec_of(const TriangleFields& tf, const std::string& label) {
  FieldElem x = parse_label(label, tf);
  IdealSpec s = make_spec(tf, primes_of_label(x, tf));
  s.label = x;
  return s;
}

}  // namespace

TEST_SUITE("sysbound") {
  TEST_CASE("genus formula") {
    CHECK(genus_of({2, 3, 7}, 168) == 3);
    CHECK(genus_of({3, 3, 10}, 3420) == 400);
    CHECK(genus_of({2, 3, 12}, 1320) == 56);
    for (std::uint64_t n : {168u, 1092u, 9828u, 12180u}) CHECK(genus_of({2, 3, 7}, n) == static_cast<std::int64_t>(n / 84 + 1));
    CHECK_THROWS_AS(genus_of({2, 3, 7}, 100), std::logic_error);
  }

  TEST_CASE("log reference") {
    CHECK(log_ref(3, 1) == doctest::Approx(1.465).epsilon(0.0005));
    CHECK(log_ref(400, 2) == doctest::Approx(3.994).epsilon(0.0005));
    CHECK(log_ref(1, 1) == 0.0);
  }

  TEST_CASE("quotient types") {
    auto h = field_build({2, 3, 7});
    for (auto& P : prime_decompose(*h.E, 13)) {
      auto qi = quotient_type(h, P);
      CHECK(qi.kind == QuotientKind::PSL);
      CHECK(qi.order == 1092);
    }
    auto t = field_build({2, 3, 12});
    for (auto& P : prime_decompose(*t.E, 11)) {
      auto qi = quotient_type(t, P);
      CHECK(qi.kind == QuotientKind::PGL);
      CHECK(qi.order == 1320);
    }
    for (auto& P : prime_decompose(*t.E, 23)) CHECK(quotient_type(t, P).kind == QuotientKind::PSL);
    auto n = field_build({3, 3, 10});
    auto P3 = prime_decompose(*n.E, 3);
    REQUIRE(P3.size() == 1);
    CHECK(quotient_type(n, P3[0]).q == 81);
    CHECK(quotient_type(n, P3[0]).order == 265680);
  }

  TEST_CASE("the F-prime above a split E-prime does not change the kernel") {
    auto O = build_order(Triple{2, 3, 12});
    for (auto& pE : prime_decompose(*O.fields.E, 23)) {
      auto Fs = primes_F_above(O.fields, pE);
      REQUIRE(Fs.size() == 2);
      std::vector<QuotientComponent> comps;
      for (auto& P : Fs) {
        auto sd = split_order_mod(O, P, 3);
        comps.push_back({sd.gfq, sd.img_alpha, sd.img_beta});
      }
      CHECK(build_coset_graph(comps, 100000, 2, 3).size() == 6072);
    }
  }

  TEST_CASE("label parsing") {
    auto h = field_build({2, 3, 7});
    FieldElem u = h.F->gen();
    CHECK(parse_label("u+2", h) == u + h.F->from_int(2));
    CHECK(parse_label("\xCE\xBC + 2", h) == u + h.F->from_int(2));
    CHECK(parse_label("2mu-5", h) == u.scaled(2) - h.F->from_int(5));
    CHECK(parse_label("(u+2)(u-3)", h) == (u + h.F->from_int(2)) * (u - h.F->from_int(3)));
    CHECK(parse_label("-u^2 + 3*u", h) == -(u * u) + u.scaled(3));
    CHECK_THROWS_AS(parse_label("u+", h), std::invalid_argument);
    CHECK_THROWS_AS(parse_label("sqrt(3)", h), std::invalid_argument);
    auto t = field_build({2, 3, 12});
    FieldElem s3 = t.F->gen() * t.F->gen() - t.F->from_int(2);
    CHECK(parse_label("1-2sqrt(3)", t) == t.F->one() - s3.scaled(2));
    CHECK(parse_label("1 \xE2\x88\x92 2\xE2\x88\x9A" "3", t) == t.F->one() - s3.scaled(2));
    CHECK(format_E(t.F->one() - s3.scaled(2), t) == "1-2*sqrt(3)");
  }

  TEST_CASE("labels resolve to squarefree ideals") {
    auto h = field_build({2, 3, 7});
    CHECK(primes_of_label(parse_label("u+2", h), h).size() == 1);
    auto two = primes_of_label(parse_label("(u+2)(u-3)", h), h);
    CHECK(two.size() == 2);
    CHECK_THROWS_AS(primes_of_label(parse_label("(u+2)^2", h), h), UnsupportedPrime);
    CHECK_THROWS_AS(primes_of_label(parse_label("u", h), h), std::invalid_argument);
    // search recovers a generator of the same ideal
    auto g = search_generator(two, h);
    REQUIRE(g);
    CHECK(abs(g->norm()) == 91);
  }

  TEST_CASE("listing ideals") {
    auto h = field_build({2, 3, 7});
    auto rows = list_ideals(h, 30, false);
    std::vector<std::uint64_t> norms;
    for (auto& r : rows)
      if (r.skip_reason.empty()) norms.push_back(r.norm);
    CHECK(norms == std::vector<std::uint64_t>{7, 13, 13, 13, 27, 29, 29, 29});
    bool skipped8 = false;
    for (auto& r : rows) skipped8 = skipped8 || (r.norm == 8 && !r.skip_reason.empty());
    CHECK(skipped8);
    auto n = field_build({3, 3, 10});
    std::map<std::uint64_t, int> count;
    for (auto& r : list_ideals(n, 45, true))
      if (r.skip_reason.empty()) count[r.norm]++;
    CHECK(count[19] == 4);
    CHECK(count[41] == 4);
    CHECK(list_ideals(h, 1, true).empty());
    auto t = field_build({2, 3, 12});
    int sk = 0, ok11 = 0;
    for (auto& r : list_ideals(t, 12, false)) {
      if (r.norm <= 3) sk += !r.skip_reason.empty();
      if (r.norm == 11) ok11 += r.skip_reason.empty();
    }
    CHECK(sk == 2);
    CHECK(ok11 == 2);
  }

  TEST_CASE("prime powers are listed as skipped") {
    auto h = field_build({2, 3, 7});
    std::map<std::string, std::string> skipped;
    int computed = 0;
    for (auto& r : list_ideals(h, 100, true)) {
      if (r.skip_reason.empty())
        ++computed;
      else
        skipped[r.label] = r.skip_reason;
    }
    CHECK(computed == 26);
    REQUIRE(skipped.count("(u+2)^2"));
    CHECK(skipped["(u+2)^2"].find("prime-power") != std::string::npos);
    REQUIRE(skipped.count("(2)^2"));
    CHECK(skipped["(2)^2"].find("characteristic 2") != std::string::npos);
    CHECK(skipped.count("(2)(u+2)"));
    CHECK(skipped.size() == 4);
    // no powers without composites
    for (auto& r : list_ideals(h, 100, false)) CHECK(r.label.find('^') == std::string::npos);
  }

  TEST_CASE("systole bounds for small ideals") {
    SysOptions opt;
    opt.threads = 2;
    auto O = build_order(Triple{2, 3, 7});
    auto r = sys_upper(O, spec_of(O.fields, "u+2"), opt);
    CHECK(r.min_trace.to_string() == "2*u^2+u-1");
    CHECK(r.sys_upper == doctest::Approx(3.936).epsilon(0.0003));
    CHECK(r.genus == 3);
    CHECK(r.index == 168);
    CHECK(r.generators_scanned == 169);
    CHECK(r.min_trace_float > 2);

    auto T = build_order(Triple{2, 3, 12});
    auto r2 = sys_upper(T, spec_of(T.fields, "1-2sqrt3"), opt);
    CHECK(r2.min_trace_alt == "31+19*sqrt(3)");
    CHECK(std::fabs(r2.sys_upper - 8.314) < 0.001);
    CHECK(r2.genus == 56);
    CHECK(r2.quotient_kind == QuotientKind::PGL);

    auto S = build_order(Triple{2, 7, 7});
    auto r3 = sys_upper(S, spec_of(S.fields, "2u+3"), opt);
    CHECK(r3.min_trace.to_string() == "6*u^2+5*u-4");
    CHECK(std::fabs(r3.sys_upper - 6.393) < 0.001);
    CHECK(r3.genus == 118);
  }

  TEST_CASE("reports are deterministic across thread counts and runs") {
    auto r = props::determinism();
    CHECK_MESSAGE(r.ok, r.detail);
  }

  TEST_CASE("exact minimum ignores elliptic traces and keeps the first of equals") {
    auto F = field_build({2, 3, 7}).F;
    FieldElem u = F->gen();
    std::vector<FieldElem> t = {u, F->from_int(2), u * u + u, -(u * u + u), F->from_int(-6), u * u + u};
    for (int th : {1, 2, 3, 6}) {
      auto i = min_hyperbolic_trace(t, F->distinguished(), th);
      REQUIRE(i);
      CHECK(*i == 2);
    }
  }

  TEST_CASE("product kernel projects onto the prime kernels") {
    auto O = build_order(Triple{2, 3, 7});
    auto k = congruence_kernel(O, spec_of(O.fields, "(u+2)(u-3)"), 1, 1000000);
    CHECK(k.graph.size() == 183456);
    for (std::size_t c = 0; c < 2; ++c) {
      std::set<std::uint64_t> proj;
      for (std::uint32_t v = 0; v < k.graph.size(); ++v) proj.insert(k.graph.element(v, c).key());
      CHECK(proj.size() == (c == 0 ? 168u : 1092u));
    }
  }

  TEST_CASE("randomized epimorphisms") {
    GFq F7 = GFq::prime_field(7);
    auto hit = find_epimorphism_random({2, 3, 7}, F7, std::nullopt, 5, 1000);
    REQUIRE(hit);
    auto sp = std::make_shared<const GFq>(F7);
    CHECK(build_coset_graph({{sp, hit->z1, hit->z2}}, 1000, 2, 3).size() == 168);
    // no elements of order 7 in PSL2(5)
    CHECK_FALSE(find_epimorphism_random({2, 3, 7}, GFq::prime_field(5), std::nullopt, 5, 100));
  }

  TEST_CASE("report serialization") {
    SysOptions opt;
    auto O = build_order(Triple{2, 3, 7});
    auto r = sys_upper(O, spec_of(O.fields, "u+2"), opt);
    std::string j = r.to_json();
    CHECK(j.find("\"pretty\":\"2*u^2+u-1\"") != std::string::npos);
    CHECK(j.find("elapsed_ms") == std::string::npos);
    CHECK(csv_header() == "ideal_label,norm,trace_pretty,sys_upper,genus,log_ref");
    CHECK(r.csv_row() == "u+2,7,2*u^2+u-1,3.936,3,1.465");
  }
}
