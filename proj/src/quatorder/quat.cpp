#include "systole/quat.hpp"

#include <stdexcept>

namespace systole {

QuatAlg::QuatAlg(FieldElem x, FieldElem y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero() || y_.is_zero()) throw std::domain_error("QuatAlg: parameters must be nonzero");
  if (x_.field() != y_.field()) throw FieldMismatch();
  xy_ = x_ * y_;
}

Quat QuatAlg::scalar(const FieldElem& s) const {
  FieldElem z = base()->zero();
  return Quat{{s, z, z, z}};
}

Quat QuatAlg::i() const {
  FieldElem z = base()->zero();
  return Quat{{z, base()->one(), z, z}};
}

Quat QuatAlg::j() const {
  FieldElem z = base()->zero();
  return Quat{{z, z, base()->one(), z}};
}

Quat QuatAlg::mul(const Quat& u, const Quat& v) const {
  const auto& a = u.c;
  const auto& b = v.c;
  FieldElem c0 = a[0] * b[0] + x_ * (a[1] * b[1]) + y_ * (a[2] * b[2]) - xy_ * (a[3] * b[3]);
  FieldElem c1 = a[0] * b[1] + a[1] * b[0] + y_ * (a[3] * b[2] - a[2] * b[3]);
  FieldElem c2 = a[0] * b[2] + a[2] * b[0] + x_ * (a[1] * b[3] - a[3] * b[1]);
  FieldElem c3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1];
  return Quat{{c0, c1, c2, c3}};
}

Quat QuatAlg::add(const Quat& u, const Quat& v) const {
  return Quat{{u.c[0] + v.c[0], u.c[1] + v.c[1], u.c[2] + v.c[2], u.c[3] + v.c[3]}};
}

Quat QuatAlg::sub(const Quat& u, const Quat& v) const {
  return Quat{{u.c[0] - v.c[0], u.c[1] - v.c[1], u.c[2] - v.c[2], u.c[3] - v.c[3]}};
}

Quat QuatAlg::neg(const Quat& u) const { return Quat{{-u.c[0], -u.c[1], -u.c[2], -u.c[3]}}; }

Quat QuatAlg::scale(const FieldElem& s, const Quat& u) const {
  return Quat{{s * u.c[0], s * u.c[1], s * u.c[2], s * u.c[3]}};
}

Quat QuatAlg::conj(const Quat& u) const { return Quat{{u.c[0], -u.c[1], -u.c[2], -u.c[3]}}; }

FieldElem QuatAlg::trd(const Quat& u) const { return u.c[0] + u.c[0]; }

FieldElem QuatAlg::nrd(const Quat& u) const {
  return u.c[0] * u.c[0] - x_ * (u.c[1] * u.c[1]) - y_ * (u.c[2] * u.c[2]) + xy_ * (u.c[3] * u.c[3]);
}

FieldElem QuatAlg::pair(const Quat& u, const Quat& v) const {
  FieldElem s = u.c[0] * v.c[0] - x_ * (u.c[1] * v.c[1]) - y_ * (u.c[2] * v.c[2]) + xy_ * (u.c[3] * v.c[3]);
  return s + s;
}

Quat QuatAlg::inv(const Quat& u) const {
  FieldElem n = nrd(u);
  if (n.is_zero()) throw std::domain_error("QuatAlg::inv: zero reduced norm");
  return scale(n.inverse(), conj(u));
}

Quat QuatAlg::pow(const Quat& u, long n) const {
  if (n < 0) return pow(inv(u), -n);
  Quat r = one(), b = u;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

std::string QuatAlg::to_json(const Quat& u) const {
  return "{\"basis\":\"1,i,j,ij\",\"coords\":[" + u.c[0].to_json() + "," + u.c[1].to_json() + "," +
         u.c[2].to_json() + "," + u.c[3].to_json() + "]}";
}

std::string QuatAlg::to_string(const Quat& u) const {
  return "(" + u.c[0].to_string() + ") + (" + u.c[1].to_string() + ")i + (" + u.c[2].to_string() + ")j + (" +
         u.c[3].to_string() + ")ij";
}

}  // namespace systole
