#include "systole/triangle_order.hpp"

#include <stdexcept>

namespace systole {

Quat TriangleOrder::basis(int k) const {
  return alg->make(basis_mat[k][0], basis_mat[k][1], basis_mat[k][2], basis_mat[k][3]);
}

FieldElem delta_of(const TriangleFields& tf) {
  auto g = tf.F->generator_exprs();
  const FieldElem &A = g[0], &B = g[1], &C = g[2];
  return A * A + B * B + C * C + A * B * C - tf.F->from_int(4);
}

namespace {

std::array<Coords4, 4> invert4(const std::array<Coords4, 4>& m, const FieldPtr& F) {
  std::array<std::array<FieldElem, 8>, 4> a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) a[i][j] = j < 4 ? m[i][j] : (j - 4 == i ? F->one() : F->zero());
  for (int c = 0; c < 4; ++c) {
    int s = c;
    while (s < 4 && a[s][c].is_zero()) ++s;
    if (s == 4) throw std::domain_error("invert4: singular");
    std::swap(a[s], a[c]);
    FieldElem inv = a[c][c].inverse();
    for (auto& v : a[c]) v = v * inv;
    for (int i = 0; i < 4; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      FieldElem f = a[i][c];
      for (int j = 0; j < 8; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::array<Coords4, 4> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j + 4];
  return out;
}

FieldElem det4(std::array<Coords4, 4> a, const FieldPtr& F) {
  FieldElem d = F->one();
  for (int c = 0; c < 4; ++c) {
    int s = c;
    while (s < 4 && a[s][c].is_zero()) ++s;
    if (s == 4) return F->zero();
    if (s != c) {
      std::swap(a[s], a[c]);
      d = -d;
    }
    d *= a[c][c];
    FieldElem inv = a[c][c].inverse();
    for (int i = c + 1; i < 4; ++i) {
      if (a[i][c].is_zero()) continue;
      FieldElem f = a[i][c] * inv;
      for (int j = c; j < 4; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace

TriangleOrder build_order(const Triple& tau) { return build_order(field_build(tau)); }

TriangleOrder build_order(const TriangleFields& tf) {
  TriangleOrder O;
  O.tau = tf.tau;
  O.fields = tf;
  const FieldPtr& F = tf.F;
  auto g = F->generator_exprs();
  O.A = g[0];
  O.B = g[1];
  O.C = g[2];
  O.delta = delta_of(tf);
  FieldElem x = O.A * O.A - F->from_int(4);
  O.alg = std::make_shared<QuatAlg>(x, O.delta);
  const QuatAlg& Q = *O.alg;
  Rational half(1, 2);
  FieldElem z = F->zero();
  O.alpha = Q.make(O.A.scaled(half), F->from_rational(half), z, z);
  FieldElem xinv = x.inverse();
  O.beta = Q.make(O.B.scaled(half), -((O.A * O.B + O.C + O.C) * xinv).scaled(half), z, xinv);
  O.alphabeta = Q.mul(O.alpha, O.beta);
  O.basis_mat = {Coords4{F->one(), z, z, z}, O.alpha.c, O.beta.c, O.alphabeta.c};
  O.basis_mat_inv = invert4(O.basis_mat, F);

  if (Q.nrd(O.alpha) != F->one() || Q.nrd(O.beta) != F->one()) throw std::logic_error("build_order: norm check failed");
  if (Q.trd(O.alphabeta) != -O.C) throw std::logic_error("build_order: trace of alpha*beta");
  Quat m1 = Q.scalar(F->from_int(-1));
  if (Q.pow(O.alpha, O.tau.a) != m1 || Q.pow(O.beta, O.tau.b) != m1)
    throw std::logic_error("build_order: order relations failed");
  Quat abc = Q.pow(O.alphabeta, O.tau.c);
  if (abc == Q.one())
    O.alphabeta_c_sign = 1;
  else if (abc == m1)
    O.alphabeta_c_sign = -1;
  else
    throw std::logic_error("build_order: (alpha beta)^c is not +-1");
  return O;
}

Coords4 coords_in_order(const Quat& q, const TriangleOrder& O) {
  FieldPtr F = O.F();
  Coords4 v{F->zero(), F->zero(), F->zero(), F->zero()};
  for (int r = 0; r < 4; ++r) {
    if (q.c[r].is_zero()) continue;
    for (int k = 0; k < 4; ++k)
      if (!O.basis_mat_inv[r][k].is_zero()) v[k] += q.c[r] * O.basis_mat_inv[r][k];
  }
  return v;
}

Quat from_order_coords(const Coords4& v, const TriangleOrder& O) {
  FieldPtr F = O.F();
  Quat q{{F->zero(), F->zero(), F->zero(), F->zero()}};
  for (int k = 0; k < 4; ++k)
    for (int r = 0; r < 4; ++r) q.c[r] += v[k] * O.basis_mat[k][r];
  return q;
}

Quat word_eval(const Word& w, const TriangleOrder& O) {
  const QuatAlg& Q = *O.alg;
  Quat r = Q.one();
  for (const auto& t : w.tokens()) {
    const Quat& g = t.base == 'x' ? O.alpha : O.beta;
    r = Q.mul(r, t.exp > 0 ? Q.pow(g, t.exp) : Q.pow(Q.conj(g), -t.exp));
  }
  return r;
}

Discriminant order_reduced_discriminant(const TriangleOrder& O) {
  std::array<Coords4, 4> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = O.alg->pair(O.basis(i), O.basis(j));
  return {O.delta, det4(m, O.F())};
}

EvenOrderData even_order(const TriangleFields& tf) {
  const FieldPtr& F = tf.F;
  auto g = F->generator_exprs();
  const FieldElem &A = g[0], &B = g[1], &C = g[2];
  FieldElem delta = delta_of(tf);
  auto toE = [&](const FieldElem& v) {
    auto e = tf.E->to_sub(v);
    if (!e) throw std::logic_error("even_order: element not in E");
    return *e;
  };
  FieldElem B2 = B * B, C2 = C * C;
  FieldElem four = F->from_int(4), two = F->from_int(2), one = F->one();
  FieldElem X = B2 * (B2 - four);
  FieldElem Y = delta * B2 * C2;
  FieldElem cos2b = (B2 - two).scaled(Rational(1, 2));
  FieldElem cos2c = (C2 - two).scaled(Rational(1, 2));
  FieldElem s = one - cos2b * cos2b;
  FieldElem N = cos2b + cos2b * cos2c + cos2c + (A * B * C).scaled(Rational(1, 2)) + one;
  auto alg = std::make_shared<QuatAlg>(toE(X), toE(Y));
  FieldElem z = alg->base()->zero();
  EvenOrderData d;
  d.tau = tf.tau;
  d.alg = alg;
  d.gamma1 = alg->make(toE(cos2b), alg->base()->from_rational(Rational(1, 2)), z, z);
  d.gamma2 = alg->make(toE(cos2c), toE(N * (s + s).inverse()), z, toE((four * s).inverse()));
  if (alg->nrd(d.gamma1) != alg->base()->one() || alg->nrd(d.gamma2) != alg->base()->one())
    throw std::logic_error("even_order: norm check failed");
  return d;
}

int r_tau(const TriangleFields& tf) {
  EvenOrderData d = even_order(tf);
  FieldElem X = tf.E->to_parent(d.alg->x());
  FieldElem Y = tf.E->to_parent(d.alg->y());
  int count = 0;
  for (int k = 0; k < tf.F->degree(); ++k)
    if (!(X.sign_at(k) < 0 && Y.sign_at(k) < 0)) ++count;
  return count / tf.E->relative_degree();
}

}  // namespace systole
