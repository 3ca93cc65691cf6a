#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "systole/projmat.hpp"
#include "systole/triple.hpp"

namespace systole {

struct TraceTriple {
  GFqElem t1, t2, t3;
  bool up_to_sign = false;
};

// Number of PSL2(F_q) classes of element order n.
int kappa(int n, std::uint64_t q, std::int64_t p);
// Canonical (up to sign) traces of the order-n classes; size kappa(n, q).
std::vector<GFqElem> order_class_traces(int n, const GFq& F);

bool commutative_test(const GFq& F, const TraceTriple& t);
bool exceptional_test(std::array<int, 3> orders);

// Upper bound for the number of normal subgroups with quotient inside PSL2(F), F the
// residue field of a prime of F_tau above p. nullopt means "unavailable".
std::optional<int> count_bound(const Triple& tau, const GFq& F);

using MatTriple = std::array<Mat2, 3>;
// Triples in SL2(F_q) with g1 g2 g3 = 1 and traces t; exhaustive for q <= 13, else seeded search.
std::vector<MatTriple> solve_trace_triple(const GFq& F, const TraceTriple& t, std::uint64_t seed = 1,
                                          std::size_t max_results = 16);

}  // namespace systole
