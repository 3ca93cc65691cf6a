#pragma once

#include <array>
#include <memory>
#include <optional>

#include "systole/field.hpp"
#include "systole/gfq.hpp"
#include "systole/prime.hpp"
#include "systole/projmat.hpp"
#include "systole/quat.hpp"
#include "systole/word.hpp"

namespace systole {

using Coords4 = std::array<FieldElem, 4>;

// Order O = Z_F<1, alpha, beta, alpha*beta> in B = <A^2 - 4, delta | F>.
struct TriangleOrder {
  Triple tau;
  TriangleFields fields;
  std::shared_ptr<const QuatAlg> alg;
  FieldElem A, B, C;  // 2cos(pi/a), 2cos(pi/b), 2cos(pi/c)
  FieldElem delta;
  Quat alpha, beta, alphabeta;
  std::array<Coords4, 4> basis_mat;      // row k: basis element k in 1, i, j, ij
  std::array<Coords4, 4> basis_mat_inv;
  int alphabeta_c_sign = 0;              // (alpha beta)^c = sign

  const FieldPtr& F() const { return fields.F; }
  Quat basis(int k) const;
};

FieldElem delta_of(const TriangleFields& tf);
TriangleOrder build_order(const Triple& tau);
TriangleOrder build_order(const TriangleFields& tf);

Coords4 coords_in_order(const Quat& q, const TriangleOrder& O);
Quat from_order_coords(const Coords4& v, const TriangleOrder& O);
Quat word_eval(const Word& w, const TriangleOrder& O);

struct Discriminant {
  FieldElem generator;  // delta
  FieldElem det;        // det(trd(e_i conj(e_j)))
};
Discriminant order_reduced_discriminant(const TriangleOrder& O);

// Even order over E: basis 1, gamma1, gamma2, gamma1*gamma2.
struct EvenOrderData {
  Triple tau;
  std::shared_ptr<const QuatAlg> alg;
  Quat gamma1, gamma2;
};
EvenOrderData even_order(const TriangleFields& tf);
int r_tau(const TriangleFields& tf);

struct SplitData {
  PrimeIdeal prime;
  std::shared_ptr<const GFq> gfq;
  std::uint64_t seed = 0;
  std::array<Mat2, 4> img_basis;  // images of 1, alpha, beta, alpha*beta
  Mat2 img_i;
  std::optional<Mat2> img_j;      // present when j is integral at the prime
  GFqElem xbar, ybar;
  ProjMat img_alpha, img_beta;

  Mat2 image(const std::array<GFqElem, 4>& order_coords) const;
};

class BadPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GFqElem reduce_elem(const GFq& F, const FieldElem& x, const PrimeIdeal& P);
SplitData split_order_mod(const TriangleOrder& O, const PrimeIdeal& P, std::uint64_t seed);
bool membership_coords(const Coords4& v, const PrimeIdeal& P);  // v0 = +-1, v1..v3 = 0 mod P

struct RealMat2 {
  std::array<RatInterval, 4> e;  // a, b, c, d
};
// iota(x), iota(y) with the larger root t.
std::array<RealMat2, 2> iota_numeric(const Triple& tau, int bits);
RatInterval iota_trace(const std::array<RealMat2, 2>& gens, const Word& w, int bits);

}  // namespace systole
