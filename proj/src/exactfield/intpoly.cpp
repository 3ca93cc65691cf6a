#include "systole/intpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace systole {

std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& s, const IntPoly& a) {
  std::vector<Integer> r = a.c_;
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

void IntPoly::divrem_monic(const IntPoly& m, IntPoly& q, IntPoly& r) const {
  if (!m.is_monic()) throw std::invalid_argument("divrem_monic: divisor not monic");
  std::vector<Integer> rem = c_;
  int dm = m.degree();
  std::vector<Integer> quo(std::max(0, degree() - dm + 1));
  for (int i = degree(); i >= dm; --i) {
    Integer lead = rem[i];
    if (lead == 0) continue;
    quo[i - dm] = lead;
    for (int j = 0; j <= dm; ++j) rem[i - dm + j] -= lead * m.c_[j];
  }
  q = IntPoly(std::move(quo));
  r = IntPoly(std::move(rem));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    const Integer& v = c_[k];
    if (v == 0) continue;
    Integer a = abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (k == 0 || !unit) out += a.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPoly dickson_poly(unsigned m) {
  IntPoly p0({2});
  if (m == 0) return p0;
  IntPoly p1 = IntPoly::x();
  for (unsigned k = 1; k < m; ++k) {
    IntPoly p2 = IntPoly::x() * p1 - p0;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

IntPoly cyclotomic(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic: m = 0");
  std::vector<Integer> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  IntPoly num(std::move(c));
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    IntPoly q, r;
    num.divrem_monic(cyclotomic(d), q, r);
    if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    num = q;
  }
  return num;
}

IntPoly real_cyclotomic(unsigned m) {
  if (m == 1) return IntPoly({-2, 1});
  if (m == 2) return IntPoly({2, 1});
  // Phi_m(z) = z^h R(z + 1/z) with h = phi(m)/2; read R off the palindromic coefficients.
  IntPoly phi = cyclotomic(m);
  int h = phi.degree() / 2;
  IntPoly r = IntPoly::constant(phi.coeff(h));
  for (int k = 1; k <= h; ++k) r += phi.coeff(h + k) * dickson_poly(k);
  return r;
}

IntPoly min_poly_2cos(unsigned n) {
  if (n < 2) throw std::invalid_argument("min_poly_2cos: n must be >= 2");
  return real_cyclotomic(2 * n);
}

namespace {

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  size_t sz = m + n;
  if (sz == 0) return 1;
  std::vector<std::vector<Integer>> s(sz, std::vector<Integer>(sz));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  return bareiss_det(std::move(s));
}

Integer discriminant(const IntPoly& f) {
  int n = f.degree();
  Integer r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace systole
