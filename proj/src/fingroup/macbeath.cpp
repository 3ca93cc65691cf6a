#include "systole/macbeath.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "systole/intpoly.hpp"

namespace systole {

int kappa(int n, std::uint64_t q, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("kappa: n must be positive");
  if (n % p == 0) throw std::domain_error("kappa: n divisible by p");
  std::uint64_t m = 2 * static_cast<std::uint64_t>(n);
  if (n <= 2) return 1;
  // eigenvalues of order 2n live in F_q* or in the norm-one part of F_{q^2}
  if ((q - 1) % m != 0 && (q + 1) % m != 0) return 0;
  if (n % 2) return static_cast<int>(euler_phi(n) / 2);
  return static_cast<int>(euler_phi(2 * n) / 4);
}

std::vector<GFqElem> order_class_traces(int n, const GFq& F) {
  int k = kappa(n, F.q(), F.p());
  // zeta of order n (odd) or 2n (even); t = zeta + 1/zeta is a root of the real cyclotomic polynomial
  IntPoly r = real_cyclotomic(n % 2 ? n : 2 * n);
  modp::Poly rp = modp::reduce(r, F.p());
  std::vector<GFqElem> out;
  for (std::uint32_t c = 0; c < F.q(); ++c) {
    GFqElem t{c};
    GFqElem acc = F.zero();
    for (int i = modp::deg(rp); i >= 0; --i) acc = F.add(F.mul(acc, t), F.from_int(rp[i]));
    if (acc.v != 0) continue;
    GFqElem cs = F.canonical_sign(t);
    if (std::find(out.begin(), out.end(), cs) == out.end()) out.push_back(cs);
  }
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != k) throw std::logic_error("order_class_traces: count disagrees with kappa");
  return out;
}

bool commutative_test(const GFq& F, const TraceTriple& t) {
  auto expr = [&](GFqElem t3) {
    GFqElem s = F.add(F.add(F.mul(t.t1, t.t1), F.mul(t.t2, t.t2)), F.mul(t3, t3));
    s = F.sub(s, F.mul(F.mul(t.t1, t.t2), t3));
    return F.sub(s, F.from_int(4)).v == 0;
  };
  if (expr(t.t3)) return true;
  return t.up_to_sign && expr(F.neg(t.t3));
}

bool exceptional_test(std::array<int, 3> o) {
  static const std::array<std::array<int, 3>, 9> list = {{{2, 3, 3},
                                                          {2, 3, 4},
                                                          {2, 3, 5},
                                                          {2, 5, 5},
                                                          {3, 3, 3},
                                                          {3, 3, 5},
                                                          {3, 4, 4},
                                                          {3, 5, 5},
                                                          {5, 5, 5}}};
  if (o[0] == 2 && o[1] == 2 && o[2] >= 2) return true;
  return std::find(list.begin(), list.end(), o) != list.end();
}

std::optional<int> count_bound(const Triple& tau, const GFq& F) {
  std::int64_t p = F.p();
  if (p == 2 || tau.a % p == 0 || tau.b % p == 0 || tau.c % p == 0) return std::nullopt;
  auto divisors = [](int n) {
    std::vector<int> d;
    for (int k = 2; k <= n; ++k)
      if (n % k == 0) d.push_back(k);
    return d;
  };
  int total = 0;
  std::vector<std::array<int, 3>> seen;
  for (int a1 : divisors(tau.a))
    for (int b1 : divisors(tau.b))
      for (int c1 : divisors(tau.c)) {
        std::array<int, 3> o{a1, b1, c1};
        std::sort(o.begin(), o.end());
        long a = o[0], b = o[1], c = o[2];
        if (b * c + a * c + a * b >= a * b * c) continue;  // spherical or Euclidean
        if (std::find(seen.begin(), seen.end(), o) != seen.end()) continue;
        seen.push_back(o);
        int ka = kappa(o[0], F.q(), p), kb = kappa(o[1], F.q(), p), kc = kappa(o[2], F.q(), p);
        if (!ka || !kb || !kc) continue;
        if (exceptional_test(o)) return std::nullopt;
        for (GFqElem t1 : order_class_traces(o[0], F))
          for (GFqElem t2 : order_class_traces(o[1], F))
            for (GFqElem t3 : order_class_traces(o[2], F)) {
              if (commutative_test(F, {t1, t2, t3, true})) return std::nullopt;
              int deg = std::lcm(std::lcm(F.degree_of(t1), F.degree_of(t2)), F.degree_of(t3));
              if (deg != F.f()) return std::nullopt;
            }
        total += ka * kb * kc * (o[0] > 2 ? 2 : 1);
      }
  return total;
}

std::vector<MatTriple> solve_trace_triple(const GFq& F, const TraceTriple& t, std::uint64_t seed,
                                          std::size_t max_results) {
  std::vector<MatTriple> out;
  auto finish = [&](const Mat2& g1, const Mat2& g2) {
    Mat2 g12 = mat_mul(F, g1, g2);
    Mat2 g3{g12.d, F.neg(g12.b), F.neg(g12.c), g12.a};
    out.push_back({g1, g2, g3});
  };
  if (F.q() <= 13) {
    std::vector<Mat2> s1, s2;
    for (const auto& m : enumerate_sl2(F)) {
      if (mat_trace(F, m) == t.t1) s1.push_back(m);
      if (mat_trace(F, m) == t.t2) s2.push_back(m);
    }
    for (const auto& g1 : s1)
      for (const auto& g2 : s2)
        if (mat_trace(F, mat_mul(F, g1, g2)) == t.t3) finish(g1, g2);
    return out;
  }
  // g1 = [[0,-1],[1,t1]], g2 = [[a,b],[c,d]] with a + d = t2, b - c + t1 d = t3, ad - bc = 1
  Mat2 g1{F.zero(), F.neg(F.one()), F.one(), t.t1};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
  for (int attempt = 0; attempt < 100000 && out.size() < max_results; ++attempt) {
    GFqElem a{dist(rng)};
    GFqElem d = F.sub(t.t2, a);
    GFqElem k = F.sub(t.t3, F.mul(t.t1, d));  // b = c + k
    // c^2 + k c - (ad - 1) = 0
    GFqElem rhs = F.sub(F.mul(a, d), F.one());
    GFqElem disc = F.add(F.mul(k, k), F.mul(F.from_int(4), rhs));
    auto s = F.sqrt(disc);
    if (!s) continue;
    GFqElem inv2 = F.inv(F.from_int(2));
    GFqElem c = F.mul(F.sub(*s, k), inv2);
    if (dist(rng) % 2) c = F.mul(F.sub(F.neg(*s), k), inv2);
    GFqElem b = F.add(c, k);
    finish(g1, {a, b, c, d});
  }
  if (out.empty()) throw std::runtime_error("solve_trace_triple: search failed");
  return out;
}

}  // namespace systole
