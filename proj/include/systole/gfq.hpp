#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "systole/modpoly.hpp"

namespace systole {

// Element code: sum c_i p^i for the residue polynomial sum c_i x^i.
// Integer order on codes equals lexicographic order from the highest power.
struct GFqElem {
  std::uint32_t v = 0;
  auto operator<=>(const GFqElem&) const = default;
};

class GFq {
 public:
  GFq(std::int64_t p, modp::Poly defining);
  static GFq prime_field(std::int64_t p);

  std::int64_t p() const { return p_; }
  int f() const { return f_; }
  std::uint32_t q() const { return q_; }
  const modp::Poly& defining() const { return def_; }

  GFqElem zero() const { return {0}; }
  GFqElem one() const { return {1}; }
  GFqElem from_int(std::int64_t v) const;
  GFqElem from_poly(const modp::Poly& r) const;  // r reduced mod defining
  modp::Poly to_poly(GFqElem a) const;
  GFqElem generator() const { return {exp_[1]}; }  // multiplicative generator

  GFqElem add(GFqElem a, GFqElem b) const;
  GFqElem sub(GFqElem a, GFqElem b) const { return add(a, neg(b)); }
  GFqElem neg(GFqElem a) const { return {neg_[a.v]}; }
  GFqElem mul(GFqElem a, GFqElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
  }
  GFqElem inv(GFqElem a) const;
  GFqElem div(GFqElem a, GFqElem b) const { return mul(a, inv(b)); }
  GFqElem pow(GFqElem a, std::int64_t e) const;
  bool is_square(GFqElem a) const { return a.v == 0 || log_[a.v] % 2 == 0; }
  // canonical root: the smaller code of {s, -s}
  std::optional<GFqElem> sqrt(GFqElem a) const;
  GFqElem canonical_sign(GFqElem a) const { return neg(a) < a ? neg(a) : a; }
  // degree over F_p of the subfield generated by a
  int degree_of(GFqElem a) const;
  std::uint32_t log(GFqElem a) const { return log_[a.v]; }
  GFqElem exp(std::uint64_t k) const { return {exp_[k % (q_ - 1)]}; }

 private:
  std::int64_t p_;
  int f_;
  std::uint32_t q_;
  modp::Poly def_;
  std::vector<std::uint32_t> exp_, log_, neg_, zech_;
  static constexpr std::uint32_t kNone = 0xffffffffu;
};

// Quadratic extension F_{q^2} with an embedding of F_q.
struct QuadraticExtension {
  GFq big;
  std::vector<GFqElem> embed;  // indexed by code in the small field
  static QuadraticExtension of(const GFq& small);
};

}  // namespace systole
