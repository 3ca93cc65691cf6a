#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "systole/field.hpp"

namespace systole {

namespace {

struct Ambient {
  FieldPtr K;
  std::vector<long> ks;
  std::vector<FieldElem> sigma_eta;

  explicit Ambient(long L) {
    auto f = FieldDesc::create(min_poly_2cos(static_cast<unsigned>(L)), two_cos_pi(1, L, 128).to_rational(), "eta");
    K = f;
    for (long k = 1; k < L; ++k)
      if (std::gcd(k, 2 * L) == 1) {
        ks.push_back(k);
        sigma_eta.push_back(K->from_poly(dickson_poly(static_cast<unsigned>(k))));
      }
  }

  FieldElem apply(size_t idx, const FieldElem& x) const {
    FieldElem acc = K->zero();
    for (int i = x.degree() - 1; i >= 0; --i) {
      acc *= sigma_eta[idx];
      acc += K->from_rational(x.coeff(i));
    }
    return acc;
  }

  std::vector<FieldElem> distinct_conjugates(const FieldElem& x) const {
    std::vector<FieldElem> out;
    for (size_t i = 0; i < ks.size(); ++i) {
      FieldElem y = apply(i, x);
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
  }

  // number of distinct conjugate tuples of the given elements
  size_t tuple_orbit(const std::vector<FieldElem>& gens) const {
    std::vector<std::vector<FieldElem>> seen;
    for (size_t i = 0; i < ks.size(); ++i) {
      std::vector<FieldElem> t;
      for (const auto& g : gens) t.push_back(apply(i, g));
      if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
    }
    return seen.size();
  }

  IntPoly orbit_poly(const std::vector<FieldElem>& conj) const {
    std::vector<FieldElem> poly{K->one()};
    for (const auto& r : conj) {
      std::vector<FieldElem> nxt(poly.size() + 1, K->zero());
      for (size_t i = 0; i < poly.size(); ++i) {
        nxt[i + 1] += poly[i];
        nxt[i] -= poly[i] * r;
      }
      poly = std::move(nxt);
    }
    std::vector<Integer> c;
    for (const auto& e : poly) {
      if (!e.is_rational() || !e.is_integral()) throw std::logic_error("orbit polynomial is not integral");
      c.push_back(e.numerators()[0]);
    }
    return IntPoly(std::move(c));
  }

  Rational numeric(const FieldElem& x) const {
    RatInterval I = x.embed(K->distinguished(), 128);
    return (I.lo + I.hi) / 2;
  }
};

// weight vectors with entries <= wmax, ordered by total weight and then by priority
std::vector<std::vector<int>> weight_candidates(size_t n, const std::vector<size_t>& priority, int wmax) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      if (std::any_of(w.begin(), w.end(), [](int v) { return v != 0; })) out.push_back(w);
      return;
    }
    for (int v = 0; v <= wmax; ++v) {
      w[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  auto key = [&](const std::vector<int>& v) {
    std::vector<int> k;
    for (size_t idx : priority) k.push_back(-v[idx]);
    return k;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    int sx = std::accumulate(x.begin(), x.end(), 0), sy = std::accumulate(y.begin(), y.end(), 0);
    if (sx != sy) return sx < sy;
    return key(x) < key(y);
  });
  return out;
}

FieldElem primitive_element(const Ambient& amb, const std::vector<FieldElem>& gens, const std::vector<size_t>& priority,
                            size_t target) {
  for (int wmax = 1; wmax <= 4; ++wmax)
    for (const auto& w : weight_candidates(gens.size(), priority, wmax)) {
      FieldElem x = amb.K->zero();
      for (size_t i = 0; i < gens.size(); ++i)
        if (w[i]) x += gens[i].scaled(Rational(w[i]));
      if (amb.distinct_conjugates(x).size() == target) return x;
    }
  throw std::logic_error("no primitive element found");
}

}  // namespace

TriangleFields field_build(const Triple& tau) {
  validate_hyperbolic(tau);
  long L = std::lcm(std::lcm(static_cast<long>(tau.a), static_cast<long>(tau.b)), static_cast<long>(tau.c));
  Ambient amb(L);
  auto two_cos = [&](int s) { return amb.K->from_poly(dickson_poly(static_cast<unsigned>(L / s))); };
  std::vector<FieldElem> fg{two_cos(tau.a), two_cos(tau.b), two_cos(tau.c)};
  size_t dF = amb.tuple_orbit(fg);
  FieldElem xi = primitive_element(amb, fg, {2, 1, 0}, dF);
  auto Fdesc = FieldDesc::create(amb.orbit_poly(amb.distinct_conjugates(xi)), amb.numeric(xi), "u");

  QMatrix cols;
  FieldElem cur = amb.K->one();
  for (size_t j = 0; j < dF; ++j) {
    cols.push_back(cur.coeffs());
    cur *= xi;
  }
  ColumnSolver toF(cols);
  auto in_F = [&](const FieldElem& x) {
    auto c = toF.coords(x.coeffs());
    if (!c) throw std::logic_error("element not in F");
    return *c;
  };
  Fdesc->set_generator_exprs({in_F(fg[0]), in_F(fg[1]), in_F(fg[2])});
  FieldPtr F = Fdesc;

  std::vector<FieldElem> eg{fg[0] * fg[0], fg[1] * fg[1], fg[2] * fg[2], fg[0] * fg[1] * fg[2]};
  size_t dE = amb.tuple_orbit(eg);
  FieldElem theta = (dE == dF) ? xi : primitive_element(amb, eg, {2, 1, 0, 3}, dE);
  auto Edesc = FieldDesc::create(amb.orbit_poly(amb.distinct_conjugates(theta)), amb.numeric(theta),
                                 dE == dF ? "u" : "w");
  FieldElem thetaF = F->from_coeffs(in_F(theta));
  auto E = std::make_shared<SubfieldDesc>(F, thetaF, FieldPtr(Edesc));
  return {tau, F, E, amb.K->degree()};
}

}  // namespace systole
