#include "systole/real.hpp"

#include <algorithm>
#include <stdexcept>

namespace systole {

double RatInterval::mid_double() const { return Rational((lo + hi) / 2).get_d(); }

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b.back();
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(std::min<size_t>(a.size(), db));
  qtrim(a);
  return a;
}

// scale by a positive rational so coefficients are coprime integers
void normalize(QPoly& a) {
  Integer l = 1, g = 0;
  for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : a) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : a) c /= g;
}

int sgn_eval(const QPoly& a, const Rational& t) {
  Rational acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = acc * t + a[i];
  return sgn(acc);
}

struct Sturm {
  std::vector<QPoly> seq;
  explicit Sturm(const IntPoly& f) {
    QPoly p0(f.coeffs().begin(), f.coeffs().end());
    IntPoly fd = f.derivative();
    QPoly p1(fd.coeffs().begin(), fd.coeffs().end());
    seq.push_back(p0);
    seq.push_back(p1);
    while (seq.back().size() > 1) {
      QPoly r = qrem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      normalize(r);
      seq.push_back(r);
    }
  }
  int changes(const Rational& t) const {
    int prev = 0, n = 0;
    for (const auto& s : seq) {
      int v = sgn_eval(s, t);
      if (v == 0) continue;
      if (prev != 0 && v != prev) ++n;
      prev = v;
    }
    return n;
  }
};

void isolate(const Sturm& st, const IntPoly& f, Rational lo, Rational hi, int vlo, int vhi,
             std::vector<RatInterval>& out) {
  int n = vlo - vhi;
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (f.eval(mid) == 0) {
    // nudge off a rational root; only possible for reducible input
    throw std::domain_error("isolate_real_roots: rational root encountered");
  }
  int vm = st.changes(mid);
  isolate(st, f, lo, mid, vlo, vm, out);
  isolate(st, f, mid, hi, vm, vhi, out);
}

}  // namespace

std::vector<RatInterval> isolate_real_roots(const IntPoly& f) {
  if (f.degree() < 1) return {};
  if (f.degree() == 1) {
    Rational r = Rational(-f.coeff(0), f.coeff(1));
    r.canonicalize();
    return {{r, r}};
  }
  // Cauchy bound, rounded up to a power of two
  Integer m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max<Integer>(m, abs(f.coeff(i)));
  Integer lead = abs(f.leading());
  Integer bound = m / lead + 2;
  Integer b = 1;
  while (b < bound) b *= 2;
  Sturm st(f);
  Rational lo(-b), hi(b);
  std::vector<RatInterval> out;
  isolate(st, f, lo, hi, st.changes(lo), st.changes(hi), out);
  std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& c) { return a.lo < c.lo; });
  return out;
}

RatInterval refine_root(const IntPoly& f, RatInterval I, const Rational& w) {
  if (I.lo == I.hi) return I;
  int slo = sgn(f.eval(I.lo));
  while (I.width() > w) {
    Rational mid = (I.lo + I.hi) / 2;
    int sm = sgn(f.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      I.lo = mid;
    else
      I.hi = mid;
  }
  return I;
}

RatInterval eval_interval(const std::vector<Rational>& c, const RatInterval& I) {
  RatInterval acc{0, 0};
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * I;
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

BigFloat::BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

Rational BigFloat::to_rational() const {
  Rational r;
  mpfr_get_q(r.get_mpq_t(), v_);
  return r;
}

BigFloat two_cos_pi(long k, long n, mpfr_prec_t bits) {
  BigFloat r(bits + 16);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  mpfr_mul_si(r.get(), r.get(), k, MPFR_RNDN);
  mpfr_div_si(r.get(), r.get(), n, MPFR_RNDN);
  mpfr_cos(r.get(), r.get(), MPFR_RNDN);
  mpfr_mul_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

BigFloat from_rational(const Rational& q, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

double length_from_trace(const BigFloat& x) {
  BigFloat t(mpfr_get_prec(x.get()));
  mpfr_abs(t.get(), x.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  mpfr_acosh(t.get(), t.get(), MPFR_RNDN);
  mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  return t.to_double();
}

double natural_log(const Integer& n, mpfr_prec_t bits) {
  BigFloat t(bits);
  mpfr_set_z(t.get(), n.get_mpz_t(), MPFR_RNDN);
  mpfr_log(t.get(), t.get(), MPFR_RNDN);
  return t.to_double();
}

}  // namespace systole
