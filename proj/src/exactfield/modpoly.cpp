#include "systole/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace systole::modp {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) throw std::domain_error("invmod: zero");
  std::int64_t g = p, x = 0, x1 = 1, b = a;
  while (b) {
    std::int64_t t = g / b;
    std::swap(g, b);
    b -= t * g;
    std::swap(x, x1);
    x1 -= t * x;
  }
  return mod(x, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntPoly& f, std::int64_t p) {
  Poly r;
  mpz_class pp(static_cast<long>(p));
  for (const auto& c : f.coeffs()) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    r.push_back(m.get_si());
  }
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] + b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + mulmod(a[i], b[j], p), p);
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::int64_t s, std::int64_t p) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], mod(s, p), p);
  trim(r);
  return r;
}

void divrem(const Poly& a, const Poly& b, std::int64_t p, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("modp::divrem: division by zero");
  r = a;
  trim(r);
  int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(deg(r) - db + 1, 0);
  std::int64_t inv = invmod(b.back(), p);
  for (int i = deg(r); i >= db; --i) {
    std::int64_t c = mulmod(r[i], inv, p);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - mulmod(c, b[j], p), p);
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& a, const Poly& b, std::int64_t p) {
  Poly q, r;
  divrem(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, std::int64_t p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::int64_t p) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], static_cast<std::int64_t>(i) % p, p));
  trim(r);
  return r;
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  return rem(mul(a, b, p), m, p);
}

Poly powmod_poly(Poly a, std::uint64_t e, const Poly& m, std::int64_t p) {
  Poly r{1};
  r = rem(r, m, p);
  a = rem(a, m, p);
  while (e) {
    if (e & 1) r = mulmod_poly(r, a, m, p);
    a = mulmod_poly(a, a, m, p);
    e >>= 1;
  }
  return r;
}

std::int64_t eval(const Poly& a, std::int64_t t, std::int64_t p) {
  std::int64_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = mod(mulmod(acc, t, p) + a[i], p);
  return acc;
}

namespace {

// x^(p^k) mod f by repeated p-th powering
Poly frob_power(const Poly& f, std::int64_t p, int k) {
  Poly x{0, 1};
  Poly r = rem(x, f, p);
  for (int i = 0; i < k; ++i) r = powmod_poly(r, static_cast<std::uint64_t>(p), f, p);
  return r;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// squarefree monic f, all irreducible factors of degree d
void equal_degree(const Poly& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  int n = deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  while (true) {
    Poly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly g;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly t = a, s = a;
      for (int i = 1; i < d; ++i) {
        s = mulmod_poly(s, s, f, p);
        t = add(t, s, p);
      }
      g = gcd(f, t, p);
    } else {
      std::uint64_t e = (ipow(static_cast<std::uint64_t>(p), d) - 1) / 2;
      Poly b = powmod_poly(a, e, f, p);
      b = sub(b, Poly{1}, p);
      g = gcd(f, b, p);
    }
    if (deg(g) > 0 && deg(g) < n) {
      Poly q, r;
      divrem(f, g, p, q, r);
      equal_degree(g, d, p, rng, out);
      equal_degree(monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// distinct-degree + equal-degree on a squarefree monic polynomial
std::vector<Poly> factor_squarefree(Poly f, std::int64_t p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod_poly(h, static_cast<std::uint64_t>(p), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      Poly q, r;
      divrem(f, g, p, q, r);
      f = monic(q, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

Poly pth_root(const Poly& f, std::int64_t p) {
  Poly r;
  for (size_t i = 0; i < f.size(); i += static_cast<size_t>(p)) r.push_back(f[i]);
  trim(r);
  return r;
}

void squarefree_decompose(const Poly& f, std::int64_t p, int mult, std::vector<std::pair<Poly, int>>& out) {
  // Yun-style with p-th root handling
  Poly fd = derivative(f, p);
  if (fd.empty()) {
    squarefree_decompose(pth_root(f, p), p, mult * static_cast<int>(p), out);
    return;
  }
  Poly c = gcd(f, fd, p);
  Poly w, r;
  divrem(f, c, p, w, r);
  w = monic(w, p);
  int i = 1;
  while (deg(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly z;
    divrem(w, y, p, z, r);
    if (deg(z) > 0) out.emplace_back(monic(z, p), i * mult);
    w = y;
    Poly c2;
    divrem(c, y, p, c2, r);
    c = monic(c2, p);
    ++i;
  }
  if (deg(c) > 0) squarefree_decompose(pth_root(c, p), p, mult * static_cast<int>(p), out);
}

}  // namespace

bool is_irreducible(const Poly& f0, std::int64_t p) {
  Poly f = monic(f0, p);
  int n = deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  Poly x{0, 1};
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n
  if (frob_power(f, p, n) != rem(x, f, p)) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    Poly g = gcd(f, sub(frob_power(f, p, n / r), x, p), p);
    if (deg(g) > 0) return false;
  }
  return true;
}

std::vector<Factor> factor(const Poly& f0, std::int64_t p) {
  Poly f = f0;
  trim(f);
  if (f.empty()) throw std::domain_error("modp::factor: zero polynomial");
  f = monic(f, p);
  std::vector<Factor> out;
  if (deg(f) == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decompose(f, p, 1, sqf);
  std::mt19937_64 rng(0x5eed0000ULL ^ static_cast<std::uint64_t>(p));
  for (auto& [g, e] : sqf)
    for (auto& h : factor_squarefree(g, p, rng)) out.push_back({h, e});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.g < b.g; });
  // merge identical factors arising from different squarefree layers
  std::vector<Factor> merged;
  for (auto& fa : out) {
    if (!merged.empty() && merged.back().g == fa.g)
      merged.back().e += fa.e;
    else
      merged.push_back(fa);
  }
  return merged;
}

std::string to_string(const Poly& a, const std::string& var) {
  std::vector<Integer> c;
  for (auto v : a) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c)).to_string(var);
}

}  // namespace systole::modp
