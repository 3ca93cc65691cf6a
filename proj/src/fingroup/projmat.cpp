#include "systole/projmat.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace systole {

ProjMat ProjMat::from_key(std::uint64_t k, GroupKind kind) {
  ProjMat r;
  r.m.a.v = static_cast<std::uint32_t>((k >> 48) & 0xffff);
  r.m.b.v = static_cast<std::uint32_t>((k >> 32) & 0xffff);
  r.m.c.v = static_cast<std::uint32_t>((k >> 16) & 0xffff);
  r.m.d.v = static_cast<std::uint32_t>(k & 0xffff);
  r.kind = kind;
  return r;
}

Mat2 mat_identity(const GFq& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }

Mat2 mat_mul(const GFq& F, const Mat2& x, const Mat2& y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Mat2 mat_add(const GFq& F, const Mat2& x, const Mat2& y) {
  return {F.add(x.a, y.a), F.add(x.b, y.b), F.add(x.c, y.c), F.add(x.d, y.d)};
}

Mat2 mat_scale(const GFq& F, GFqElem s, const Mat2& x) {
  return {F.mul(s, x.a), F.mul(s, x.b), F.mul(s, x.c), F.mul(s, x.d)};
}

GFqElem mat_det(const GFq& F, const Mat2& x) { return F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c)); }

GFqElem mat_trace(const GFq& F, const Mat2& x) { return F.add(x.a, x.d); }

ProjMat canonical(const GFq& F, const Mat2& m, GroupKind kind) {
  if (F.q() > 65536) throw std::length_error("ProjMat: field too large for packed keys");
  GFqElem lead = m.a.v ? m.a : m.b.v ? m.b : m.c.v ? m.c : m.d;
  if (lead.v == 0) throw std::domain_error("ProjMat: zero matrix");
  ProjMat r{m, kind};
  if (F.neg(lead) < lead) r.m = {F.neg(m.a), F.neg(m.b), F.neg(m.c), F.neg(m.d)};
  return r;
}

ProjMat pm_identity(const GFq& F) { return canonical(F, mat_identity(F)); }

ProjMat pm_mul(const GFq& F, const ProjMat& x, const ProjMat& y) { return canonical(F, mat_mul(F, x.m, y.m), x.kind); }

ProjMat pm_inv(const GFq& F, const ProjMat& x) {
  return canonical(F, {x.m.d, F.neg(x.m.b), F.neg(x.m.c), x.m.a}, x.kind);
}

ProjMat pm_pow(const GFq& F, ProjMat x, std::uint64_t e) {
  ProjMat r = pm_identity(F);
  r.kind = x.kind;
  while (e) {
    if (e & 1) r = pm_mul(F, r, x);
    x = pm_mul(F, x, x);
    e >>= 1;
  }
  return r;
}

std::uint64_t psl2_order(const GFq& F) {
  std::uint64_t q = F.q();
  return q * (q * q - 1) / 2;
}

std::uint64_t pm_order(const GFq& F, const ProjMat& x) {
  std::uint64_t n = psl2_order(F), m = n;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t r = 2; r * r <= m; ++r)
    if (m % r == 0) {
      primes.push_back(r);
      while (m % r == 0) m /= r;
    }
  if (m > 1) primes.push_back(m);
  ProjMat id = pm_identity(F);
  std::uint64_t ord = n;
  for (auto r : primes)
    while (ord % r == 0 && pm_pow(F, x, ord / r) == id) ord /= r;
  return ord;
}

GFqElem pm_trace(const GFq& F, const ProjMat& x) { return F.canonical_sign(mat_trace(F, x.m)); }

std::string pm_dump(const GFq& F, const ProjMat& x) {
  auto e = [&](GFqElem v) {
    std::string s = "[";
    auto p = F.to_poly(v);
    p.resize(F.f(), 0);
    for (int i = 0; i < F.f(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
  };
  return "[[" + e(x.m.a) + "," + e(x.m.b) + "],[" + e(x.m.c) + "," + e(x.m.d) + "]]";
}

ProjMat pgl_to_psl(const GFq& small, const QuadraticExtension& ext, const Mat2& g) {
  GFqElem dt = mat_det(small, g);
  if (dt.v == 0) throw std::domain_error("pgl_to_psl: singular matrix");
  const GFq& B = ext.big;
  Mat2 m{ext.embed[g.a.v], ext.embed[g.b.v], ext.embed[g.c.v], ext.embed[g.d.v]};
  auto s = B.sqrt(ext.embed[dt.v]);
  if (!s) throw std::logic_error("pgl_to_psl: determinant not a square in the extension");
  return canonical(B, mat_scale(B, B.inv(*s), m), GroupKind::PGLinPSL);
}

std::vector<ProjMat> subgroup_closure(const GFq& F, const std::vector<ProjMat>& gens, std::size_t cap) {
  ProjMat id = pm_identity(F);
  std::unordered_set<std::uint64_t> seen{id.key()};
  std::vector<ProjMat> out{id};
  std::deque<ProjMat> queue{id};
  while (!queue.empty()) {
    ProjMat u = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ProjMat v = pm_mul(F, u, g);
      if (seen.insert(v.key()).second) {
        if (out.size() >= cap) throw std::length_error("subgroup_closure: cap exceeded");
        out.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ProjMat& a, const ProjMat& b) { return a.key() < b.key(); });
  return out;
}

std::vector<Mat2> enumerate_sl2(const GFq& F) {
  std::vector<Mat2> out;
  for (std::uint32_t a = 0; a < F.q(); ++a)
    for (std::uint32_t b = 0; b < F.q(); ++b)
      for (std::uint32_t c = 0; c < F.q(); ++c) {
        GFqElem A{a}, B{b}, C{c};
        if (a != 0) {
          GFqElem D = F.div(F.add(F.one(), F.mul(B, C)), A);
          out.push_back({A, B, C, D});
        } else if (F.mul(B, C) == F.neg(F.one())) {
          for (std::uint32_t d = 0; d < F.q(); ++d) out.push_back({A, B, C, GFqElem{d}});
        }
      }
  return out;
}

std::vector<ProjMat> enumerate_psl2(const GFq& F) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<ProjMat> out;
  for (const auto& m : enumerate_sl2(F)) {
    ProjMat c = canonical(F, m);
    if (seen.insert(c.key()).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const ProjMat& a, const ProjMat& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace systole
