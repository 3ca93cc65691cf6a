#include <cmath>

#include "systole/triangle_order.hpp"

namespace systole {

namespace {

Rational round_down(const Rational& v, int bits) {
  Integer s = Integer(1) << bits;
  Rational t = v * s;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational r(f, s);
  r.canonicalize();
  return r;
}

Rational round_up(const Rational& v, int bits) {
  Integer s = Integer(1) << bits;
  Rational t = v * s;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational r(c, s);
  r.canonicalize();
  return r;
}

RatInterval enclose(const BigFloat& v, int bits) {
  Rational q = v.to_rational();
  Rational eps(1);
  eps /= Rational(Integer(1) << bits);
  return {round_down(q - eps, bits + 4), round_up(q + eps, bits + 4)};
}

RealMat2 mul(const RealMat2& x, const RealMat2& y, int bits) {
  RealMat2 r;
  r.e[0] = x.e[0] * y.e[0] + x.e[1] * y.e[2];
  r.e[1] = x.e[0] * y.e[1] + x.e[1] * y.e[3];
  r.e[2] = x.e[2] * y.e[0] + x.e[3] * y.e[2];
  r.e[3] = x.e[2] * y.e[1] + x.e[3] * y.e[3];
  for (auto& iv : r.e) iv = {round_down(iv.lo, bits + 8), round_up(iv.hi, bits + 8)};
  return r;
}

RealMat2 inverse(const RealMat2& m) {
  auto neg = [](const RatInterval& i) { return RatInterval{-i.hi, -i.lo}; };
  return {{m.e[3], neg(m.e[1]), neg(m.e[2]), m.e[0]}};
}

}  // namespace

std::array<RealMat2, 2> iota_numeric(const Triple& tau, int bits) {
  mpfr_prec_t prec = bits + 64;
  auto cs = [&](int n, BigFloat& c, BigFloat& s) {
    mpfr_const_pi(c.get(), MPFR_RNDN);
    mpfr_div_si(c.get(), c.get(), n, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), c.get(), MPFR_RNDN);
  };
  BigFloat ca(prec), sa(prec), cb(prec), sb(prec), cc(prec), sc(prec);
  cs(tau.a, ca, sa);
  cs(tau.b, cb, sb);
  cs(tau.c, cc, sc);
  // t^2 - 2k t + 1 = 0, k = (ca cb + cc) / (sa sb); larger root k + sqrt(k^2 - 1)
  BigFloat k(prec), t(prec), tmp(prec);
  mpfr_mul(k.get(), ca.get(), cb.get(), MPFR_RNDN);
  mpfr_add(k.get(), k.get(), cc.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), sa.get(), sb.get(), MPFR_RNDN);
  mpfr_div(k.get(), k.get(), tmp.get(), MPFR_RNDN);
  mpfr_sqr(tmp.get(), k.get(), MPFR_RNDN);
  mpfr_sub_ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
  mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_add(t.get(), k.get(), tmp.get(), MPFR_RNDN);
  BigFloat sbt(prec), sbit(prec), nsa(prec);
  mpfr_mul(sbt.get(), sb.get(), t.get(), MPFR_RNDN);
  mpfr_div(sbit.get(), sb.get(), t.get(), MPFR_RNDN);
  mpfr_neg(sbit.get(), sbit.get(), MPFR_RNDN);
  mpfr_neg(nsa.get(), sa.get(), MPFR_RNDN);
  RealMat2 x{{enclose(ca, bits), enclose(sa, bits), enclose(nsa, bits), enclose(ca, bits)}};
  RealMat2 y{{enclose(cb, bits), enclose(sbt, bits), enclose(sbit, bits), enclose(cb, bits)}};
  return {x, y};
}

RatInterval iota_trace(const std::array<RealMat2, 2>& gens, const Word& w, int bits) {
  RealMat2 r{{RatInterval{1, 1}, RatInterval{0, 0}, RatInterval{0, 0}, RatInterval{1, 1}}};
  for (const auto& t : w.tokens()) {
    RealMat2 g = gens[t.base == 'x' ? 0 : 1];
    if (t.exp < 0) g = inverse(g);
    for (int i = 0; i < std::abs(t.exp); ++i) r = mul(r, g, bits);
  }
  return r.e[0] + r.e[3];
}

}  // namespace systole
