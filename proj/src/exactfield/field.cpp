#include "systole/field.hpp"

#include <cmath>
#include <stdexcept>

namespace systole {

std::shared_ptr<FieldDesc> FieldDesc::create(IntPoly min_poly, const Rational& approx, std::string symbol) {
  if (!min_poly.is_monic() || min_poly.degree() < 1) throw std::invalid_argument("FieldDesc: min_poly must be monic");
  std::shared_ptr<FieldDesc> f(new FieldDesc());
  f->min_poly_ = std::move(min_poly);
  f->symbol_ = std::move(symbol);
  int d = f->min_poly_.degree();
  auto roots = isolate_real_roots(f->min_poly_);
  if (static_cast<int>(roots.size()) != d) throw std::domain_error("FieldDesc: min_poly not totally real");
  Rational w(1);
  w /= Rational(Integer(1) << 80);
  for (auto& r : roots) r = refine_root(f->min_poly_, r, w);
  f->roots_ = roots;
  int best = 0;
  for (int k = 0; k < d; ++k) {
    f->root_d_.push_back(roots[k].mid_double());
    Rational dist = abs(Rational((roots[k].lo + roots[k].hi) / 2) - approx);
    Rational bd = abs(Rational((roots[best].lo + roots[best].hi) / 2) - approx);
    if (dist < bd) best = k;
  }
  f->dist_ = best;
  // powers xi^d .. xi^(2d-2) in the power basis
  std::vector<Integer> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -f->min_poly_.coeff(i);
  for (int k = 0; k + 1 < d; ++k) {
    f->red_.push_back(cur);
    std::vector<Integer> nxt(d);
    Integer top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) nxt[i] = cur[i - 1];
    for (int i = 0; i < d; ++i) nxt[i] -= top * f->min_poly_.coeff(i);
    cur = nxt;
  }
  return f;
}

std::vector<FieldElem> FieldDesc::generator_exprs() const {
  std::vector<FieldElem> out;
  for (const auto& g : gens_) out.push_back(from_coeffs(g));
  return out;
}

FieldElem FieldDesc::zero() const { return FieldElem(shared_from_this(), std::vector<Integer>(degree()), 1); }

FieldElem FieldDesc::one() const { return from_int(1); }

FieldElem FieldDesc::from_int(long v) const {
  std::vector<Integer> n(degree());
  n[0] = v;
  return FieldElem(shared_from_this(), std::move(n), 1);
}

FieldElem FieldDesc::from_rational(const Rational& r) const {
  std::vector<Integer> n(degree());
  n[0] = r.get_num();
  return FieldElem(shared_from_this(), std::move(n), r.get_den());
}

FieldElem FieldDesc::gen() const {
  if (degree() == 1) return from_rational(roots_[0].lo);
  std::vector<Integer> n(degree());
  n[1] = 1;
  return FieldElem(shared_from_this(), std::move(n), 1);
}

FieldElem FieldDesc::from_coeffs(const std::vector<Rational>& c) const {
  if (static_cast<int>(c.size()) != degree()) throw std::invalid_argument("from_coeffs: wrong length");
  Integer den = 1;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> n(degree());
  for (int i = 0; i < degree(); ++i) n[i] = c[i].get_num() * (den / c[i].get_den());
  return FieldElem(shared_from_this(), std::move(n), den);
}

FieldElem FieldDesc::from_poly(const IntPoly& p) const {
  FieldElem g = gen(), acc = zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc *= g;
    acc += from_rational(Rational(p.coeff(i)));
  }
  return acc;
}

FieldElem::FieldElem(FieldPtr f, std::vector<Integer> num, Integer den)
    : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("FieldElem: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  normalize();
}

void FieldElem::normalize() {
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& v : num_) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Rational FieldElem::coeff(int i) const {
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> FieldElem::coeffs() const {
  std::vector<Rational> c;
  for (int i = 0; i < degree(); ++i) c.push_back(coeff(i));
  return c;
}

bool FieldElem::is_zero() const {
  for (const auto& v : num_)
    if (v != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

static void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field() || !a.field()) throw FieldMismatch();
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(*this, o);
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= o.den_;
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(*this, o);
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= o.den_;
      mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  int d = a.degree();
  std::vector<Integer> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < d; ++j) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  const auto& red = a.f_->reduction();
  for (int k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& r = red[k - d];
    for (int i = 0; i < d; ++i)
      if (r[i] != 0) mpz_addmul(prod[i].get_mpz_t(), prod[k].get_mpz_t(), r[i].get_mpz_t());
  }
  prod.resize(d);
  return FieldElem(a.f_, std::move(prod), a.den_ * b.den_);
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  *this = *this * o;
  return *this;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& v : r.num_) v = -v;
  return r;
}

FieldElem FieldElem::scaled(const Rational& r) const {
  FieldElem out = *this;
  for (auto& v : out.num_) v *= r.get_num();
  out.den_ *= r.get_den();
  if (out.den_ < 0) {
    out.den_ = -out.den_;
    for (auto& v : out.num_) v = -v;
  }
  out.normalize();
  return out;
}

QMatrix FieldElem::mult_matrix() const {
  int d = degree();
  QMatrix m(d, QVector(d));
  FieldElem cur = *this;
  FieldElem g = f_->gen();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = cur.coeff(i);
    if (j + 1 < d) cur = cur * g;
  }
  return m;
}

FieldElem FieldElem::inverse() const {
  if (!f_) throw FieldMismatch();
  if (is_zero()) throw std::domain_error("division by zero");
  QVector e(degree());
  e[0] = 1;
  auto x = solve_full_column_rank(mult_matrix(), e);
  if (!x) throw std::logic_error("inverse: singular multiplication matrix");
  return f_->from_coeffs(*x);
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r = f_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const { return f_ == o.f_ && den_ == o.den_ && num_ == o.num_; }

Rational FieldElem::norm() const { return det(mult_matrix()); }

Rational FieldElem::trace() const {
  QMatrix m = mult_matrix();
  Rational t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

RatInterval FieldElem::embed(int root, int bits) const {
  if (root < 0 || root >= f_->degree()) throw std::out_of_range("embed: root index");
  std::vector<Rational> c = coeffs();
  if (is_rational()) return {c[0], c[0]};
  Rational target(1);
  target /= Rational(Integer(1) << (bits + 1));
  RatInterval I = f_->real_roots()[root];
  Rational w = I.width();
  while (true) {
    RatInterval v = eval_interval(c, I);
    if (v.width() <= target) {
      // round outward to a dyadic grid of spacing 2^-(bits+2)
      Integer scale = Integer(1) << (bits + 2);
      Rational lo = v.lo * scale, hi = v.hi * scale;
      Integer l, h;
      mpz_fdiv_q(l.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_cdiv_q(h.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      RatInterval out{Rational(l, scale), Rational(h, scale)};
      out.lo.canonicalize();
      out.hi.canonicalize();
      return out;
    }
    w /= Rational(Integer(1) << 32);
    I = refine_root(f_->min_poly(), I, w);
  }
}

double FieldElem::approx(int root) const {
  double e;
  return approx(root, e);
}

double FieldElem::approx(int root, double& err) const {
  double r = f_->root_double(root);
  double ar = std::fabs(r);
  double acc = 0, mag = 0;
  for (int i = degree() - 1; i >= 0; --i) {
    double c = num_[i].get_d();
    acc = acc * r + c;
    mag = mag * ar + std::fabs(c);
  }
  double den = den_.get_d();
  err = (mag / den) * (4.0 * degree() + 8.0) * 0x1p-52 + 1e-300;
  return acc / den;
}

int FieldElem::sign_at(int root) const {
  if (is_zero()) return 0;
  double err;
  double v = approx(root, err);
  if (std::isfinite(v) && std::isfinite(err) && std::fabs(v) > err) return v > 0 ? 1 : -1;
  for (int bits = 64;; bits *= 2) {
    RatInterval I = embed(root, bits);
    if (I.lo > 0) return 1;
    if (I.hi < 0) return -1;
  }
}

BigFloat FieldElem::to_bigfloat(int root, int bits) const {
  RatInterval I = embed(root, bits + 8);
  return from_rational((I.lo + I.hi) / 2, bits);
}

int compare_abs_at(const FieldElem& a, const FieldElem& b, int root) {
  if (a == b || a == -b) return 0;
  return (a * a - b * b).sign_at(root);
}

std::string FieldElem::to_string() const {
  const std::string& s = f_->symbol();
  std::string out;
  for (int k = degree() - 1; k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    bool unit = (a == 1);
    if (k == 0 || !unit) out += a.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += s;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string FieldElem::to_json() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    Rational c = coeff(i);
    // integers that fit a JSON number are written bare, everything else as "num/den"
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
      out += c.get_num().get_str();
    else
      out += "\"" + rational_str(c) + "\"";
  }
  return out + "]";
}

SubfieldDesc::SubfieldDesc(FieldPtr parent, FieldElem theta, FieldPtr sub)
    : parent_(std::move(parent)), theta_(std::move(theta)), sub_(std::move(sub)) {
  int de = sub_->degree();
  if (parent_->degree() % de) throw std::domain_error("SubfieldDesc: degree does not divide");
  QMatrix cols;
  FieldElem cur = parent_->one();
  for (int j = 0; j < de; ++j) {
    theta_pows_.push_back(cur);
    cols.push_back(cur.coeffs());
    cur *= theta_;
  }
  solver_ = ColumnSolver(cols);
  // min_poly_E(theta) = 0
  FieldElem acc = parent_->zero();
  for (int i = sub_->min_poly().degree(); i >= 0; --i) {
    acc *= theta_;
    acc += parent_->from_rational(Rational(sub_->min_poly().coeff(i)));
  }
  if (!acc.is_zero()) throw std::logic_error("SubfieldDesc: theta is not a root of min_poly_E");
}

FieldElem SubfieldDesc::to_parent(const FieldElem& e) const {
  if (e.field() != sub_) throw FieldMismatch();
  FieldElem acc = parent_->zero();
  for (int i = 0; i < sub_->degree(); ++i) acc += theta_pows_[i].scaled(e.coeff(i));
  return acc;
}

std::optional<FieldElem> SubfieldDesc::to_sub(const FieldElem& x) const {
  if (x.field() != parent_) throw FieldMismatch();
  auto c = solver_.coords(x.coeffs());
  if (!c) return std::nullopt;
  return sub_->from_coeffs(*c);
}

}  // namespace systole
