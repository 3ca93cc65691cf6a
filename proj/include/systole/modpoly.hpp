#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "systole/intpoly.hpp"

namespace systole::modp {

// Polynomial over F_p, lowest degree first, coefficients in [0, p), trimmed.
using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p);
std::int64_t invmod(std::int64_t a, std::int64_t p);
bool is_prime(std::uint64_t n);

void trim(Poly& a);
int deg(const Poly& a);
Poly reduce(const IntPoly& f, std::int64_t p);
Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
Poly scale(const Poly& a, std::int64_t s, std::int64_t p);
void divrem(const Poly& a, const Poly& b, std::int64_t p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, std::int64_t p);
Poly monic(const Poly& a, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
Poly derivative(const Poly& a, std::int64_t p);
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m, std::int64_t p);
Poly powmod_poly(Poly a, std::uint64_t e, const Poly& m, std::int64_t p);
std::int64_t eval(const Poly& a, std::int64_t t, std::int64_t p);

bool is_irreducible(const Poly& f, std::int64_t p);

struct Factor {
  Poly g;  // monic irreducible
  int e;
};

// Complete factorization of a nonzero polynomial into monic irreducibles,
// sorted lexicographically by coefficient list. Leading coefficient dropped.
std::vector<Factor> factor(const Poly& f, std::int64_t p);

std::string to_string(const Poly& a, const std::string& var = "x");

}  // namespace systole::modp
