#include "systole/prime.hpp"

namespace systole {

std::string PrimeIdeal::to_json() const {
  std::string s = "{\"p\":" + std::to_string(p) + ",\"factor\":[";
  for (size_t i = 0; i < factor.size(); ++i) s += (i ? "," : "") + std::to_string(factor[i]);
  s += "],\"f\":" + std::to_string(f) + ",\"e\":" + std::to_string(e) + ",\"norm\":" + std::to_string(norm) + "}";
  return s;
}

std::string PrimeIdeal::describe() const {
  return "p=" + std::to_string(p) + " factor=" + modp::to_string(factor) + " f=" + std::to_string(f) +
         " e=" + std::to_string(e);
}

std::vector<PrimeIdeal> prime_decompose(const FieldDesc& K, std::int64_t p, Level level) {
  if (!modp::is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("prime_decompose: p not prime");
  const IntPoly& f = K.min_poly();
  auto facs = modp::factor(modp::reduce(f, p), p);
  bool repeated = false;
  for (const auto& fa : facs) repeated |= fa.e > 1;
  if (repeated) {
    // product of integer lifts; reducing it mod p first would lose the p-adic information
    IntPoly G(std::vector<Integer>{Integer(1)});
    for (const auto& fa : facs) {
      std::vector<Integer> lc;
      for (auto v : fa.g) lc.emplace_back(static_cast<long>(v));
      for (int i = 0; i < fa.e; ++i) G = G * IntPoly(lc);
    }
    IntPoly diff = f - G;
    std::vector<Integer> f1;
    for (const auto& c : diff.coeffs()) {
      Integer q = c / static_cast<long>(p);
      if (q * static_cast<long>(p) != c) throw std::logic_error("Dedekind: inexact");
      f1.push_back(q);
    }
    modp::Poly F1 = modp::reduce(IntPoly(f1), p);
    for (const auto& fa : facs)
      if (fa.e > 1 && modp::rem(F1, fa.g, p).empty())
        throw UnsupportedPrime("p = " + std::to_string(p) + " divides the index of the power basis order");
  }
  std::vector<PrimeIdeal> out;
  for (const auto& fa : facs) {
    PrimeIdeal P;
    P.p = p;
    P.factor = fa.g;
    P.f = modp::deg(fa.g);
    P.e = fa.e;
    P.norm = 1;
    for (int i = 0; i < P.f; ++i) P.norm *= static_cast<std::uint64_t>(p);
    P.level = level;
    out.push_back(P);
  }
  return out;
}

std::vector<PrimeIdeal> prime_decompose(const SubfieldDesc& E, std::int64_t p) {
  return prime_decompose(*E.field(), p, Level::E);
}

modp::Poly residue(const FieldElem& x, const PrimeIdeal& P) {
  std::int64_t p = P.p;
  Integer pp(static_cast<long>(p));
  Integer dm;
  mpz_fdiv_r(dm.get_mpz_t(), x.denominator().get_mpz_t(), pp.get_mpz_t());
  if (dm == 0) throw UnsupportedPrime("denominator divisible by p = " + std::to_string(p));
  IntPoly num(std::vector<Integer>(x.numerators().begin(), x.numerators().end()));
  modp::Poly r = modp::rem(modp::reduce(num, p), P.factor, p);
  return modp::scale(r, modp::invmod(dm.get_si(), p), p);
}

bool element_in_ideal(const FieldElem& x, const PrimeIdeal& P) { return residue(x, P).empty(); }

PrimeIdeal subfield_ideal_under(const PrimeIdeal& P, const SubfieldDesc& E) {
  modp::Poly r = residue(E.theta(), P);
  for (const auto& Q : prime_decompose(E, P.p)) {
    modp::Poly acc;
    for (int i = modp::deg(Q.factor); i >= 0; --i) {
      acc = modp::mulmod_poly(acc, r, P.factor, P.p);
      acc = modp::add(acc, modp::Poly{Q.factor[i]}, P.p);
    }
    if (acc.empty()) return Q;
  }
  throw UnsupportedPrime("no prime of E below the given prime");
}

}  // namespace systole
