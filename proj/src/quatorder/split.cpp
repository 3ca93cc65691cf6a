#include <random>
#include <stdexcept>

#include "systole/triangle_order.hpp"

namespace systole {

GFqElem reduce_elem(const GFq& F, const FieldElem& x, const PrimeIdeal& P) { return F.from_poly(residue(x, P)); }

bool membership_coords(const Coords4& v, const PrimeIdeal& P) {
  for (int k = 1; k < 4; ++k)
    if (!element_in_ideal(v[k], P)) return false;
  FieldPtr F = v[0].field();
  return element_in_ideal(v[0] - F->one(), P) || element_in_ideal(v[0] + F->one(), P);
}

Mat2 SplitData::image(const std::array<GFqElem, 4>& v) const {
  const GFq& F = *gfq;
  Mat2 m{F.zero(), F.zero(), F.zero(), F.zero()};
  for (int k = 0; k < 4; ++k) m = mat_add(F, m, mat_scale(F, v[k], img_basis[k]));
  return m;
}

namespace {

using Vec4 = std::array<GFqElem, 4>;

struct Table {
  const GFq& F;
  GFqElem mt[4][4][4];  // e_i e_j = sum_k mt[i][j][k] e_k
  Vec4 mul(const Vec4& u, const Vec4& v) const {
    Vec4 r{F.zero(), F.zero(), F.zero(), F.zero()};
    for (int i = 0; i < 4; ++i) {
      if (u[i].v == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (v[j].v == 0) continue;
        GFqElem s = F.mul(u[i], v[j]);
        for (int k = 0; k < 4; ++k) r[k] = F.add(r[k], F.mul(s, mt[i][j][k]));
      }
    }
    return r;
  }
};

bool is_zero(const Vec4& v) {
  for (auto e : v)
    if (e.v) return false;
  return true;
}

// coordinates (s, t) with w = s b1 + t b2, if any
std::optional<std::pair<GFqElem, GFqElem>> solve2(const GFq& F, const Vec4& b1, const Vec4& b2, const Vec4& w) {
  for (int r = 0; r < 4; ++r)
    for (int r2 = r + 1; r2 < 4; ++r2) {
      GFqElem det = F.sub(F.mul(b1[r], b2[r2]), F.mul(b1[r2], b2[r]));
      if (det.v == 0) continue;
      GFqElem di = F.inv(det);
      GFqElem s = F.mul(F.sub(F.mul(w[r], b2[r2]), F.mul(w[r2], b2[r])), di);
      GFqElem t = F.mul(F.sub(F.mul(b1[r], w[r2]), F.mul(b1[r2], w[r])), di);
      for (int k = 0; k < 4; ++k)
        if (F.add(F.mul(s, b1[k]), F.mul(t, b2[k])) != w[k]) return std::nullopt;
      return std::make_pair(s, t);
    }
  return std::nullopt;
}

}  // namespace

SplitData split_order_mod(const TriangleOrder& O, const PrimeIdeal& P, std::uint64_t seed) {
  if (P.level != Level::F) throw BadPrime("split_order_mod: prime must be at level F");
  if (P.p == 2) throw BadPrime("characteristic 2");
  if (element_in_ideal(O.delta, P)) throw BadPrime("prime divides delta");
  auto gfq = std::make_shared<const GFq>(P.p, P.factor);
  const GFq& F = *gfq;
  const QuatAlg& Q = *O.alg;
  auto red = [&](const FieldElem& x) {
    try {
      return reduce_elem(F, x, P);
    } catch (const UnsupportedPrime&) {
      throw BadPrime("prime divides a structure-constant denominator");
    }
  };
  Table T{F, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Coords4 c = coords_in_order(Q.mul(O.basis(i), O.basis(j)), O);
      for (int k = 0; k < 4; ++k) T.mt[i][j][k] = red(c[k]);
    }
  // norm form: N(v) = sum_i n_i v_i^2 + sum_{i<j} m_ij v_i v_j
  GFqElem qf[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      qf[i][j] = red(i == j ? Q.nrd(O.basis(i)) : Q.pair(O.basis(i), O.basis(j)));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
  GFqElem inv2 = F.inv(F.from_int(2));
  Vec4 z{};
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100000) throw std::runtime_error("split_order_mod: no zero divisor found");
    Vec4 v{F.zero(), GFqElem{dist(rng)}, GFqElem{dist(rng)}, GFqElem{dist(rng)}};
    if (v[1].v == 0 && v[2].v == 0 && v[3].v == 0) continue;
    GFqElem lin = F.zero(), cst = F.zero();
    for (int j = 1; j < 4; ++j) lin = F.add(lin, F.mul(qf[0][j], v[j]));
    for (int i = 1; i < 4; ++i)
      for (int j = i; j < 4; ++j) cst = F.add(cst, F.mul(qf[i][j], F.mul(v[i], v[j])));
    // qf[0][0] = nrd(1) = 1
    GFqElem disc = F.sub(F.mul(lin, lin), F.mul(F.from_int(4), cst));
    auto s = F.sqrt(disc);
    if (!s) continue;
    GFqElem root = (dist(rng) & 1) ? *s : F.neg(*s);
    v[0] = F.mul(F.sub(root, lin), inv2);
    z = v;
    break;
  }
  // left ideal spanned by e_k z
  std::vector<Vec4> span;
  for (int k = 0; k < 4; ++k) {
    Vec4 ek{F.zero(), F.zero(), F.zero(), F.zero()};
    ek[k] = F.one();
    span.push_back(T.mul(ek, z));
  }
  Vec4 b1{}, b2{};
  bool have1 = false, have2 = false;
  for (const auto& w : span) {
    if (is_zero(w)) continue;
    if (!have1) {
      b1 = w;
      have1 = true;
    } else if (!have2) {
      bool indep = false;
      for (int r = 0; r < 4 && !indep; ++r)
        for (int r2 = r + 1; r2 < 4 && !indep; ++r2)
          indep = F.sub(F.mul(b1[r], w[r2]), F.mul(b1[r2], w[r])).v != 0;
      if (indep) {
        b2 = w;
        have2 = true;
      }
    }
  }
  if (!have2) throw std::logic_error("split_order_mod: left ideal is not two-dimensional");

  SplitData sd;
  sd.prime = P;
  sd.gfq = gfq;
  sd.seed = seed;
  for (int k = 0; k < 4; ++k) {
    Vec4 ek{F.zero(), F.zero(), F.zero(), F.zero()};
    ek[k] = F.one();
    auto c1 = solve2(F, b1, b2, T.mul(ek, b1));
    auto c2 = solve2(F, b1, b2, T.mul(ek, b2));
    if (!c1 || !c2) throw std::logic_error("split_order_mod: ideal not stable");
    sd.img_basis[k] = {c1->first, c2->first, c1->second, c2->second};
  }
  if (mat_det(F, sd.img_basis[1]) != F.one() || mat_det(F, sd.img_basis[2]) != F.one())
    throw std::logic_error("split_order_mod: images not in SL2");
  sd.xbar = red(Q.x());
  sd.ybar = red(Q.y());
  // i = 2 alpha - A
  Coords4 ci = coords_in_order(Q.i(), O);
  Vec4 vi;
  for (int k = 0; k < 4; ++k) vi[k] = red(ci[k]);
  sd.img_i = sd.image(vi);
  Coords4 cj = coords_in_order(Q.j(), O);
  try {
    Vec4 vj;
    for (int k = 0; k < 4; ++k) vj[k] = reduce_elem(F, cj[k], P);
    sd.img_j = sd.image(vj);
  } catch (const UnsupportedPrime&) {
  }
  sd.img_alpha = canonical(F, sd.img_basis[1]);
  sd.img_beta = canonical(F, sd.img_basis[2]);
  return sd;
}

}  // namespace systole
