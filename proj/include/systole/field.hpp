#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "systole/intpoly.hpp"
#include "systole/linalg.hpp"
#include "systole/real.hpp"
#include "systole/triple.hpp"

namespace systole {

class FieldElem;

class FieldMismatch : public std::logic_error {
 public:
  FieldMismatch() : std::logic_error("field mismatch") {}
};

// Totally real number field Q[x]/(min_poly) with isolated real roots.
class FieldDesc : public std::enable_shared_from_this<FieldDesc> {
 public:
  // approx: numeric value of the distinguished root (closest root is chosen).
  static std::shared_ptr<FieldDesc> create(IntPoly min_poly, const Rational& approx, std::string symbol = "u");

  int degree() const { return min_poly_.degree(); }
  const IntPoly& min_poly() const { return min_poly_; }
  const std::vector<RatInterval>& real_roots() const { return roots_; }
  int distinguished() const { return dist_; }
  double root_double(int k) const { return root_d_[k]; }
  const std::string& symbol() const { return symbol_; }
  // xi^(d+k) = sum_i reduction()[k][i] xi^i
  const std::vector<std::vector<Integer>>& reduction() const { return red_; }

  std::vector<FieldElem> generator_exprs() const;
  void set_generator_exprs(std::vector<std::vector<Rational>> g) { gens_ = std::move(g); }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem gen() const;
  FieldElem from_int(long v) const;
  FieldElem from_rational(const Rational& r) const;
  FieldElem from_coeffs(const std::vector<Rational>& c) const;
  FieldElem from_poly(const IntPoly& p) const;  // evaluate p at the generator

 private:
  FieldDesc() = default;
  IntPoly min_poly_;
  std::vector<RatInterval> roots_;
  std::vector<double> root_d_;
  int dist_ = 0;
  std::string symbol_;
  std::vector<std::vector<Integer>> red_;
  std::vector<std::vector<Rational>> gens_;
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

// Element as (integer numerators) / (common positive denominator), reduced.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr f, std::vector<Integer> num, Integer den);

  const FieldPtr& field() const { return f_; }
  int degree() const { return static_cast<int>(num_.size()); }
  Rational coeff(int i) const;
  std::vector<Rational> coeffs() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const { return den_ == 1; }

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;
  FieldElem scaled(const Rational& r) const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // exact rational norm and trace over Q
  Rational norm() const;
  Rational trace() const;
  QMatrix mult_matrix() const;

  // real embeddings
  RatInterval embed(int root, int bits) const;
  double approx(int root) const;
  double approx(int root, double& err) const;  // with a rigorous bound on |error|
  int sign_at(int root) const;
  BigFloat to_bigfloat(int root, int bits) const;

  std::string to_string() const;  // "2*u^2+u-1"
  std::string to_json() const;    // array of "num/den"

 private:
  void normalize();
  FieldPtr f_;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

// sign of |v(a)| - |v(b)| at the given root, exact
int compare_abs_at(const FieldElem& a, const FieldElem& b, int root);

// Subfield E = Q(theta) inside F.
class SubfieldDesc {
 public:
  SubfieldDesc(FieldPtr parent, FieldElem theta, FieldPtr sub);
  const FieldPtr& parent() const { return parent_; }
  const FieldPtr& field() const { return sub_; }
  const FieldElem& theta() const { return theta_; }
  const IntPoly& min_poly_E() const { return sub_->min_poly(); }
  int relative_degree() const { return parent_->degree() / sub_->degree(); }
  FieldElem to_parent(const FieldElem& e) const;
  std::optional<FieldElem> to_sub(const FieldElem& x) const;

 private:
  FieldPtr parent_;
  FieldElem theta_;
  FieldPtr sub_;
  std::vector<FieldElem> theta_pows_;
  ColumnSolver solver_;
};

using SubfieldPtr = std::shared_ptr<const SubfieldDesc>;

struct TriangleFields {
  Triple tau;
  FieldPtr F;
  SubfieldPtr E;
  int ambient_degree = 0;
};

TriangleFields field_build(const Triple& tau);

}  // namespace systole
