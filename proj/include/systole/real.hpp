#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "systole/intpoly.hpp"

namespace systole {

// Closed interval with exact rational endpoints.
struct RatInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  double mid_double() const;
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);

// Sorted disjoint isolating intervals for the real roots of a squarefree polynomial.
std::vector<RatInterval> isolate_real_roots(const IntPoly& f);
// Bisect until width <= w; f squarefree with exactly one root in I and no rational root.
RatInterval refine_root(const IntPoly& f, RatInterval I, const Rational& w);
// Evaluate sum c_i t^i over t in I.
RatInterval eval_interval(const std::vector<Rational>& c, const RatInterval& I);

// Small RAII wrapper over mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const BigFloat& o);
  BigFloat& operator=(const BigFloat& o);
  ~BigFloat();
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rational to_rational() const;

 private:
  mpfr_t v_;
};

// 2cos(k*pi/n)
BigFloat two_cos_pi(long k, long n, mpfr_prec_t bits);
BigFloat from_rational(const Rational& r, mpfr_prec_t bits);
// 2 arcosh(x/2)
double length_from_trace(const BigFloat& x);
double natural_log(const Integer& n, mpfr_prec_t bits);

}  // namespace systole
