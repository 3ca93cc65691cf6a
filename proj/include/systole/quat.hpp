#pragma once

#include <array>
#include <memory>
#include <string>

#include "systole/field.hpp"

namespace systole {

// Coordinates in the basis 1, i, j, ij.
struct Quat {
  std::array<FieldElem, 4> c;
  bool operator==(const Quat& o) const { return c == o.c; }
};

// <x, y | F>: i^2 = x, j^2 = y, ij = -ji.
class QuatAlg {
 public:
  QuatAlg(FieldElem x, FieldElem y);

  const FieldPtr& base() const { return x_.field(); }
  const FieldElem& x() const { return x_; }
  const FieldElem& y() const { return y_; }

  Quat make(FieldElem c0, FieldElem c1, FieldElem c2, FieldElem c3) const { return Quat{{c0, c1, c2, c3}}; }
  Quat scalar(const FieldElem& s) const;
  Quat one() const { return scalar(base()->one()); }
  Quat i() const;
  Quat j() const;

  Quat mul(const Quat& u, const Quat& v) const;
  Quat add(const Quat& u, const Quat& v) const;
  Quat sub(const Quat& u, const Quat& v) const;
  Quat neg(const Quat& u) const;
  Quat scale(const FieldElem& s, const Quat& u) const;
  Quat conj(const Quat& u) const;
  Quat inv(const Quat& u) const;
  Quat pow(const Quat& u, long n) const;
  FieldElem trd(const Quat& u) const;
  FieldElem nrd(const Quat& u) const;
  // trd(u * conj(v))
  FieldElem pair(const Quat& u, const Quat& v) const;

  std::string to_json(const Quat& u) const;
  std::string to_string(const Quat& u) const;

 private:
  FieldElem x_, y_, xy_;
};

}  // namespace systole
