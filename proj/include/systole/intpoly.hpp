#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace systole {

using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_str(const Rational& r);  // "num/den"
Rational parse_rational(const std::string& s);

// Dense integer polynomial, lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly x();
  static IntPoly constant(const Integer& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const;
  const Integer& leading() const { return c_.back(); }

  IntPoly derivative() const;
  Rational eval(const Rational& t) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& s, const IntPoly& a);
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // Division by a monic polynomial; both results are exact integer polynomials.
  void divrem_monic(const IntPoly& m, IntPoly& q, IntPoly& r) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Psi_0 = 2, Psi_1 = x, Psi_{m+1} = x Psi_m - Psi_{m-1}; Psi_m(2cos t) = 2cos(mt).
IntPoly dickson_poly(unsigned m);
IntPoly cyclotomic(unsigned m);
// Minimal polynomial of zeta_m + zeta_m^{-1}.
IntPoly real_cyclotomic(unsigned m);
IntPoly min_poly_2cos(unsigned n);

Integer resultant(const IntPoly& f, const IntPoly& g);
Integer discriminant(const IntPoly& f);

unsigned euler_phi(unsigned n);

}  // namespace systole
