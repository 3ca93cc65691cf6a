#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "systole/field.hpp"
#include "systole/modpoly.hpp"

namespace systole {

enum class Level { F, E };

class UnsupportedPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimeIdeal {
  std::int64_t p = 0;
  modp::Poly factor;
  int f = 0;
  int e = 0;
  std::uint64_t norm = 0;
  Level level = Level::F;

  bool operator==(const PrimeIdeal& o) const { return p == o.p && factor == o.factor && level == o.level; }
  std::string to_json() const;
  std::string describe() const;  // "p=13 factor=x + 2"
};

// Dedekind's criterion certifies the factorization when min_poly mod p has repeated factors.
std::vector<PrimeIdeal> prime_decompose(const FieldDesc& K, std::int64_t p, Level level = Level::F);
std::vector<PrimeIdeal> prime_decompose(const SubfieldDesc& E, std::int64_t p);

// x mod P as a polynomial reduced modulo P.factor; throws if a denominator meets p.
modp::Poly residue(const FieldElem& x, const PrimeIdeal& P);
bool element_in_ideal(const FieldElem& x, const PrimeIdeal& P);
PrimeIdeal subfield_ideal_under(const PrimeIdeal& P, const SubfieldDesc& E);

}  // namespace systole
