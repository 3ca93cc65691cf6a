#include "systole/gfq.hpp"

#include <stdexcept>

namespace systole {

namespace {

std::uint32_t encode(const modp::Poly& r, std::int64_t p) {
  std::uint64_t v = 0;
  for (size_t i = r.size(); i-- > 0;) v = v * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(r[i]);
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GFq::GFq(std::int64_t p, modp::Poly defining) : p_(p), def_(modp::monic(defining, p)) {
  if (p == 2) throw std::domain_error("GFq: characteristic 2 is not supported");
  if (!modp::is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("GFq: p not prime");
  if (!modp::is_irreducible(def_, p)) throw std::invalid_argument("GFq: defining polynomial reducible");
  f_ = modp::deg(def_);
  std::uint64_t q = 1;
  for (int i = 0; i < f_; ++i) q *= static_cast<std::uint64_t>(p);
  if (q > (1u << 24)) throw std::length_error("GFq: field too large for tables");
  q_ = static_cast<std::uint32_t>(q);
  // digitwise negation
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t x = a, r = 0, scale = 1;
    for (int i = 0; i < f_; ++i) {
      std::uint32_t dgt = x % static_cast<std::uint32_t>(p);
      x /= static_cast<std::uint32_t>(p);
      r += ((static_cast<std::uint32_t>(p) - dgt) % static_cast<std::uint32_t>(p)) * scale;
      scale *= static_cast<std::uint32_t>(p);
    }
    neg_[a] = r;
  }
  // find the smallest primitive element
  auto factors = prime_factors(q - 1);
  for (std::uint32_t g = 2; g < q_; ++g) {
    modp::Poly gp = to_poly({g});
    bool prim = true;
    for (auto r : factors) {
      modp::Poly t = modp::powmod_poly(gp, (q - 1) / r, def_, p);
      if (t == modp::Poly{1}) {
        prim = false;
        break;
      }
    }
    if (!prim) continue;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, kNone);
    modp::Poly cur{1};
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      std::uint32_t c = encode(cur, p);
      exp_[k] = c;
      log_[c] = k;
      cur = modp::mulmod_poly(cur, gp, def_, p);
    }
    break;
  }
  if (exp_.empty()) throw std::logic_error("GFq: no primitive element");
  // Zech logarithms: g^z = 1 + g^k
  zech_.assign(q_ - 1, kNone);
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    modp::Poly a = to_poly({exp_[k]});
    modp::Poly s = modp::add(a, modp::Poly{1}, p);
    std::uint32_t c = encode(s, p);
    zech_[k] = (c == 0) ? kNone : log_[c];
  }
}

GFq GFq::prime_field(std::int64_t p) { return GFq(p, modp::Poly{0, 1}); }

GFqElem GFq::from_int(std::int64_t v) const { return {static_cast<std::uint32_t>(modp::mod(v, p_))}; }

GFqElem GFq::from_poly(const modp::Poly& r) const { return {encode(modp::rem(r, def_, p_), p_)}; }

modp::Poly GFq::to_poly(GFqElem a) const {
  modp::Poly r;
  std::uint32_t x = a.v;
  for (int i = 0; i < f_; ++i) {
    r.push_back(x % static_cast<std::uint32_t>(p_));
    x /= static_cast<std::uint32_t>(p_);
  }
  modp::trim(r);
  return r;
}

GFqElem GFq::add(GFqElem a, GFqElem b) const {
  if (a.v == 0) return b;
  if (b.v == 0) return a;
  if (f_ == 1) {
    std::uint32_t s = a.v + b.v;
    if (s >= q_) s -= q_;
    return {s};
  }
  std::uint32_t la = log_[a.v], lb = log_[b.v];
  std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
  std::uint32_t z = zech_[d];
  if (z == kNone) return {0};
  std::uint32_t s = la + z;
  if (s >= q_ - 1) s -= q_ - 1;
  return {exp_[s]};
}

GFqElem GFq::inv(GFqElem a) const {
  if (a.v == 0) throw std::domain_error("GFq: division by zero");
  std::uint32_t l = log_[a.v];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

GFqElem GFq::pow(GFqElem a, std::int64_t e) const {
  if (a.v == 0) {
    if (e < 0) throw std::domain_error("GFq: zero to negative power");
    return e == 0 ? one() : zero();
  }
  std::int64_t m = static_cast<std::int64_t>(q_ - 1);
  std::int64_t k = static_cast<std::int64_t>(log_[a.v]) * (e % m) % m;
  if (k < 0) k += m;
  return {exp_[k]};
}

std::optional<GFqElem> GFq::sqrt(GFqElem a) const {
  if (a.v == 0) return zero();
  std::uint32_t l = log_[a.v];
  if (l % 2) return std::nullopt;
  return canonical_sign({exp_[l / 2]});
}

int GFq::degree_of(GFqElem a) const {
  if (a.v == 0) return 1;
  std::uint64_t l = log_[a.v];
  std::uint64_t pk = 1;
  for (int k = 1; k <= f_; ++k) {
    pk *= static_cast<std::uint64_t>(p_);
    if ((l * (pk - 1)) % (q_ - 1) == 0 && f_ % k == 0) return k;
  }
  return f_;
}

QuadraticExtension QuadraticExtension::of(const GFq& small) {
  std::int64_t p = small.p();
  int n = 2 * small.f();
  // smallest monic irreducible polynomial of degree n (by code)
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
  modp::Poly def;
  for (std::uint64_t code = 0; code < total; ++code) {
    modp::Poly cand;
    std::uint64_t x = code;
    for (int i = 0; i < n; ++i) {
      cand.push_back(static_cast<std::int64_t>(x % static_cast<std::uint64_t>(p)));
      x /= static_cast<std::uint64_t>(p);
    }
    cand.push_back(1);
    if (modp::is_irreducible(cand, p)) {
      def = cand;
      break;
    }
  }
  GFq big(p, def);
  // root of small's defining polynomial inside big
  const modp::Poly& sd = small.defining();
  GFqElem root{0};
  bool found = false;
  for (std::uint32_t c = 0; c < big.q() && !found; ++c) {
    GFqElem acc = big.zero();
    for (int i = modp::deg(sd); i >= 0; --i) acc = big.add(big.mul(acc, {c}), big.from_int(sd[i]));
    if (acc.v == 0) {
      root = {c};
      found = true;
    }
  }
  if (!found) throw std::logic_error("QuadraticExtension: no embedding");
  std::vector<GFqElem> emb(small.q());
  for (std::uint32_t c = 0; c < small.q(); ++c) {
    modp::Poly r = small.to_poly({c});
    GFqElem acc = big.zero();
    for (int i = modp::deg(r); i >= 0; --i) acc = big.add(big.mul(acc, root), big.from_int(r[i]));
    emb[c] = acc;
  }
  return {big, emb};
}

}  // namespace systole
