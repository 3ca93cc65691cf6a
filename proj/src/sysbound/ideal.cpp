#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "systole/sysbound.hpp"

namespace systole {

std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::PSL: return "PSL";
    case QuotientKind::PGL: return "PGL";
    default: return "product";
  }
}

std::vector<PrimeIdeal> primes_F_above(const TriangleFields& tf, const PrimeIdeal& pE) {
  std::vector<PrimeIdeal> out;
  for (auto& P : prime_decompose(*tf.F, pE.p))
    if (subfield_ideal_under(P, *tf.E) == pE) out.push_back(P);
  if (out.empty()) throw UnsupportedPrime("no prime of F above " + pE.describe());
  return out;
}

QuotientInfo quotient_type(const TriangleFields& tf, const PrimeIdeal& pE) {
  if (pE.p == 2) throw UnsupportedPrime("characteristic 2");
  std::uint64_t q = pE.norm;
  bool psl = true;
  for (auto& P : primes_F_above(tf, pE)) psl = psl && P.f == pE.f;
  std::uint64_t psl_order = q * (q * q - 1) / 2;
  return psl ? QuotientInfo{QuotientKind::PSL, q, psl_order} : QuotientInfo{QuotientKind::PGL, q, 2 * psl_order};
}

void check_supported(const TriangleFields& tf, const PrimeIdeal& pE) {
  const Triple& t = tf.tau;
  if (pE.p == 2) throw UnsupportedPrime("characteristic 2");
  bool divides_abc = t.a % pE.p == 0 || t.b % pE.p == 0 || t.c % pE.p == 0;
  bool e_is_f = tf.E->relative_degree() == 1;
  if (divides_abc && !e_is_f) throw UnsupportedPrime("p divides abc and E != F");
  for (auto& P : primes_F_above(tf, pE)) {
    std::uint64_t q = 1;
    for (int i = 0; i < P.f; ++i) q *= static_cast<std::uint64_t>(P.p);
    if (q > 65536) throw UnsupportedPrime("residue field of F too large (q = " + std::to_string(q) + ")");
  }
}

IdealSpec make_spec(const TriangleFields& tf, const std::vector<PrimeIdeal>& primes_E) {
  IdealSpec s;
  for (std::size_t i = 0; i < primes_E.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (primes_E[i] == primes_E[j]) throw UnsupportedPrime("ideal is not squarefree");
    check_supported(tf, primes_E[i]);
    s.factors.push_back({primes_E[i], primes_F_above(tf, primes_E[i]).front()});
    s.norm *= primes_E[i].norm;
  }
  if (s.factors.empty()) throw std::invalid_argument("empty ideal");
  return s;
}

// ---- labels ---------------------------------------------------------------

namespace {

// sqrt(m) inside E when E is quadratic: returns 2w + b scaled, where w^2 + b w + c = 0.
std::optional<FieldElem> sqrt_in_E(long m, const TriangleFields& tf) {
  const FieldDesc& E = *tf.E->field();
  if (E.degree() != 2 || m <= 0) return std::nullopt;
  const IntPoly& f = E.min_poly();
  Integer b = f.coeff(1), c = f.coeff(0);
  Integer D = b * b - 4 * c;  // (2w + b)^2 = D
  Rational ratio(D, Integer(m));
  ratio.canonicalize();
  Integer kn, kd;
  if (!mpz_perfect_square_p(ratio.get_num().get_mpz_t()) || !mpz_perfect_square_p(ratio.get_den().get_mpz_t()))
    return std::nullopt;
  kn = sqrt(ratio.get_num());
  kd = sqrt(ratio.get_den());
  FieldElem s = E.gen().scaled(2) + E.from_rational(Rational(b));
  return tf.E->to_parent(s.scaled(Rational(kd, kn)));
}

// quadratic E: (k, m, b) with 2w + b = k sqrt(m), m squarefree
struct QuadForm {
  Integer b, k;
  long m;
};

std::optional<QuadForm> quad_form(const TriangleFields& tf) {
  const FieldDesc& E = *tf.E->field();
  if (E.degree() != 2) return std::nullopt;
  const IntPoly& f = E.min_poly();
  Integer b = f.coeff(1), c = f.coeff(0);
  Integer D = b * b - 4 * c;
  long m = D.get_si(), k = 1;
  for (long d = 2; d * d <= m; ++d)
    while (m % (d * d) == 0) {
      m /= d * d;
      k *= d;
    }
  return QuadForm{b, Integer(k), m};
}

class LabelParser {
 public:
  LabelParser(const std::string& s, const TriangleFields& tf) : s_(s), tf_(tf) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw std::invalid_argument("bad label '" + s_ + "': " + why); }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  bool eat_minus() { return eat("-") || eat("\xE2\x88\x92"); }  // ASCII or U+2212

  FieldElem expr() {
    const FieldDesc& F = *tf_.F;
    FieldElem acc = F.zero();
    bool neg = eat_minus();
    if (!neg) eat("+");
    FieldElem t = term();
    acc = neg ? acc - t : acc + t;
    for (;;) {
      if (eat_minus()) {
        acc -= term();
      } else if (eat("+")) {
        acc += term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  FieldElem term() {
    FieldElem acc = factor();
    for (;;) {
      if (eat("*")) {
        acc = acc * factor();
      } else if (eat("/")) {
        long d = integer();
        if (d == 0) fail("division by zero");
        acc = acc.scaled(Rational(1, d));
      } else if (starts_factor() && !(s_.compare(pos_, 3, "\xE2\x88\x92") == 0)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  FieldElem factor() {
    FieldElem base = primary();
    if (eat("^")) {
      skip_ws();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("exponent expected");
      base = base.pow(std::stol(s_.substr(st, pos_ - st)));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("integer expected");
    if (pos_ - st > 12) fail("integer too large");
    return std::stol(s_.substr(st, pos_ - st));
  }

  FieldElem root_of(long m) {
    auto r = sqrt_in_E(m, tf_);
    if (!r) fail("sqrt(" + std::to_string(m) + ") is not in E");
    return *r;
  }

  FieldElem primary() {
    const FieldDesc& F = *tf_.F;
    skip_ws();
    if (eat("(")) {
      FieldElem v = expr();
      if (!eat(")")) fail("')' expected");
      return v;
    }
    if (eat("sqrt")) {
      bool paren = eat("(");
      long m = integer();
      if (paren && !eat(")")) fail("')' expected");
      return root_of(m);
    }
    if (eat("\xE2\x88\x9A")) return root_of(integer());  // U+221A
    if (eat("\xCE\xBC") || eat("\xCE\xBD") || eat("mu") || eat("nu") || eat("u")) return F.gen();
    if (eat("w")) return tf_.E->theta();
    skip_ws();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return F.from_int(integer());
    fail("unexpected character");
  }

  const std::string& s_;
  const TriangleFields& tf_;
  std::size_t pos_ = 0;
};

std::string rat_term(const Rational& c, const std::string& what, bool first) {
  std::string out;
  Rational a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? "-" : "+";
  }
  if (what.empty() || a != 1) out += a.get_str() + (what.empty() ? "" : "*");
  out += what;
  return out;
}

}  // namespace

FieldElem parse_label(const std::string& s, const TriangleFields& tf) { return LabelParser(s, tf).parse(); }

std::string format_E(const FieldElem& x, const TriangleFields& tf) {
  auto e = tf.E->to_sub(x);
  if (!e) throw std::invalid_argument("format_E: element not in E");
  if (tf.E->relative_degree() == 1) return x.to_string();
  auto qf = quad_form(tf);
  if (!qf) return e->to_string();
  // c0 + c1 w, w = (k sqrt(m) - b)/2
  Rational c0 = e->coeff(0), c1 = e->coeff(1);
  Rational r = c0 - c1 * Rational(qf->b) / 2;
  Rational s = c1 * Rational(qf->k) / 2;
  std::string root = "sqrt(" + std::to_string(qf->m) + ")";
  std::string out;
  if (r != 0) out = rat_term(r, "", true);
  if (s != 0) out += rat_term(s, root, out.empty());
  return out.empty() ? "0" : out;
}

std::optional<std::string> format_alt(const FieldElem& t, const TriangleFields& tf) {
  if (tf.E->relative_degree() == 1 || tf.E->field()->degree() != 2) return std::nullopt;
  if (tf.E->to_sub(t)) return format_E(t, tf);
  if (tf.E->relative_degree() != 2) return std::nullopt;
  // t = e * cos(pi/n) where the generator of F is 2cos(pi/n)
  const FieldDesc& F = *tf.F;
  auto g = F.generator_exprs();
  const int orders[3] = {tf.tau.a, tf.tau.b, tf.tau.c};
  for (int k = 2; k >= 0; --k) {
    if (g[k] != F.gen()) continue;
    FieldElem e = (t * F.gen().inverse()).scaled(2);
    if (!tf.E->to_sub(e)) return std::nullopt;
    return "(" + format_E(e, tf) + ")cos(pi/" + std::to_string(orders[k]) + ")";
  }
  return std::nullopt;
}

std::vector<PrimeIdeal> primes_of_label(const FieldElem& x, const TriangleFields& tf) {
  auto xe = tf.E->to_sub(x);
  if (!xe) throw std::invalid_argument("label is not an element of E");
  Rational nr = abs(xe->norm());
  if (nr.get_den() != 1 || !xe->is_integral()) throw std::invalid_argument("label is not an algebraic integer");
  Integer n = nr.get_num();
  if (n <= 1) throw std::invalid_argument("label is a unit or zero");
  if (n > Integer("1000000000000")) throw std::invalid_argument("label norm too large");
  std::uint64_t N = n.get_ui(), rest = N;
  std::vector<PrimeIdeal> out;
  std::uint64_t prod = 1;
  for (std::uint64_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    for (auto& P : prime_decompose(*tf.E, static_cast<std::int64_t>(p)))
      if (element_in_ideal(*xe, P)) {
        out.push_back(P);
        prod *= P.norm;
      }
  }
  if (prod != N) throw UnsupportedPrime("label generates a non-squarefree ideal (prime powers are not supported)");
  return out;
}

namespace {
bool c_first_negative(const FieldElem& x, const std::vector<FieldElem>& basis) {
  // x = c0 + c1 * basis[1]
  Rational c1 = x.coeff(1) / basis[1].coeff(1);
  Rational c0 = x.coeff(0) - c1 * basis[1].coeff(0);
  return c0 != 0 ? c0 < 0 : c1 < 0;
}
}  // namespace

std::optional<FieldElem> search_generator(const std::vector<PrimeIdeal>& primes_E, const TriangleFields& tf) {
  const FieldDesc& E = *tf.E->field();
  int d = E.degree();
  std::uint64_t N = 1;
  for (auto& P : primes_E) N *= P.norm;
  auto qf = quad_form(tf);
  // basis of E: 1, sqrt(m) for quadratic E (nicer labels), power basis otherwise
  std::vector<FieldElem> basis;
  for (int i = 0; i < d; ++i) basis.push_back(E.gen().pow(i));
  if (qf && tf.E->relative_degree() > 1) {
    // sqrt(m) = (2w + b)/k; only usable as a Z-basis when it generates O_E with 1
    FieldElem s = (E.gen().scaled(2) + E.from_rational(Rational(qf->b))).scaled(Rational(1) / Rational(qf->k));
    if (s.is_integral()) basis[1] = s;
  }
  std::vector<std::vector<double>> basis_emb(d);
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d; ++r) basis_emb[i].push_back(basis[i].approx(r));
  auto try_coeffs = [&](const std::vector<long>& c) -> std::optional<FieldElem> {
    double nrm = 1;
    for (int r = 0; r < d; ++r) {
      double v = 0;
      for (int i = 0; i < d; ++i) v += static_cast<double>(c[i]) * basis_emb[i][r];
      nrm *= v;
    }
    if (std::fabs(std::fabs(nrm) - static_cast<double>(N)) > 1e-6 * static_cast<double>(N)) return std::nullopt;
    FieldElem x = E.zero();
    for (int i = 0; i < d; ++i) x += basis[i].scaled(Rational(c[i]));
    if (abs(x.norm()) != Rational(static_cast<unsigned long>(N))) return std::nullopt;
    for (auto& P : primes_E)
      if (!element_in_ideal(x, P)) return std::nullopt;
    return x;
  };
  // increasing (top index, height); top coefficient positive
  for (int top = 0; top < d; ++top) {
    for (long H = 1; H <= 12; ++H) {
      std::vector<long> c(d, 0);
      std::optional<FieldElem> hit;
      std::function<void(int)> rec = [&](int i) {
        if (hit) return;
        if (i < 0) {
          bool has_h = false;
          for (int k = 0; k <= top; ++k) has_h = has_h || std::labs(c[k]) == H;
          if (has_h) hit = try_coeffs(c);
          return;
        }
        long lo = i == top ? 1 : -H;
        for (long v = lo; v <= H && !hit; ++v) {
          c[i] = v;
          rec(i - 1);
        }
        c[i] = 0;
      };
      rec(top);
      if (hit) {
        // a+b*sqrt(m) labels read better with a > 0
        if (qf && tf.E->relative_degree() > 1 && c_first_negative(*hit, basis)) *hit = -*hit;
        return tf.E->to_parent(*hit);
      }
    }
  }
  return std::nullopt;
}

std::vector<TableRow> list_ideals(const TriangleFields& tf, std::uint64_t max_norm, bool composites) {
  struct Entry {
    PrimeIdeal P;
    std::string reason;
    std::string label;
  };
  std::vector<Entry> primes;
  std::vector<TableRow> rows;
  for (std::uint64_t p = 2; p <= max_norm; ++p) {
    if (!modp::is_prime(static_cast<std::int64_t>(p))) continue;
    std::vector<PrimeIdeal> dec;
    try {
      dec = prime_decompose(*tf.E, static_cast<std::int64_t>(p));
    } catch (const UnsupportedPrime& e) {
      rows.push_back({std::nullopt, {}, "p=" + std::to_string(p), p, e.what()});
      continue;
    }
    for (auto& P : dec) {
      if (P.norm > max_norm) continue;
      std::string reason;
      try {
        check_supported(tf, P);
      } catch (const UnsupportedPrime& e) {
        reason = e.what();
      }
      primes.push_back({P, reason, ""});
    }
  }
  for (auto& e : primes) {
    auto g = search_generator({e.P}, tf);
    e.label = g ? format_E(*g, tf) : "[" + e.P.describe() + "]";
  }
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t norm) {
    if (!pick.empty() && (pick.size() == 1 || composites)) {
      std::vector<PrimeIdeal> ps;
      std::string reason;
      bool power = false;
      for (std::size_t k = 0; k < pick.size(); ++k) {
        if (k > 0 && pick[k] == pick[k - 1]) {
          power = true;
          continue;
        }
        ps.push_back(primes[pick[k]].P);
        if (reason.empty()) reason = primes[pick[k]].reason;
      }
      // PSL2 over O/P^e with e >= 2 is not implemented; such ideals are listed but skipped
      if (reason.empty() && power) reason = "prime-power ideal (exponent >= 2) not supported";
      std::string lab;
      if (pick.size() == 1) {
        lab = primes[pick[0]].label;
      } else {
        for (std::size_t k = 0; k < pick.size();) {
          std::size_t e = 1;
          while (k + e < pick.size() && pick[k + e] == pick[k]) ++e;
          lab += "(" + primes[pick[k]].label + ")";
          if (e > 1) lab += "^" + std::to_string(e);
          k += e;
        }
      }
      rows.push_back({std::nullopt, ps, lab, norm, reason});
    }
    if (!composites && !pick.empty()) return;
    for (std::size_t i = start; i < primes.size(); ++i) {
      if (norm * primes[i].P.norm > max_norm) continue;
      pick.push_back(i);
      rec(i, norm * primes[i].P.norm);
      pick.pop_back();
    }
  };
  rec(0, 1);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const TableRow& a, const TableRow& b) { return std::tie(a.norm, a.label) < std::tie(b.norm, b.label); });
  return rows;
}

}  // namespace systole
