#include <random>

#include "systole/sysbound.hpp"

namespace systole {

EpimorphismSearch::EpimorphismSearch(const Triple& tau, const GFq& F, std::optional<TraceTriple> targets)
    : tau_(tau), F_(F), targets_(targets) {
  for (const auto& g : enumerate_psl2(F)) {
    std::uint64_t o = pm_order(F, g);
    if (o == static_cast<std::uint64_t>(tau.a)) of_a_.push_back(g);
    if (o == static_cast<std::uint64_t>(tau.b)) of_b_.push_back(g);
  }
}

std::optional<EpiResult> EpimorphismSearch::run(std::uint64_t seed, std::uint64_t budget) const {
  if (of_a_.empty() || of_b_.empty()) return std::nullopt;
  auto trace_ok = [&](const ProjMat& g, GFqElem t) { return pm_trace(F_, g) == F_.canonical_sign(t); };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> da(0, of_a_.size() - 1), db(0, of_b_.size() - 1);
  std::uint64_t full = psl2_order(F_);
  for (std::uint64_t attempt = 1; attempt <= budget; ++attempt) {
    const ProjMat& z1 = of_a_[da(rng)];
    const ProjMat& z2 = of_b_[db(rng)];
    ProjMat z3 = pm_mul(F_, z1, z2);
    if (pm_order(F_, z3) != static_cast<std::uint64_t>(tau_.c)) continue;
    if (targets_ && !(trace_ok(z1, targets_->t1) && trace_ok(z2, targets_->t2) && trace_ok(z3, targets_->t3)))
      continue;
    try {
      if (subgroup_closure(F_, {z1, z2}, full).size() != full) continue;
    } catch (const std::length_error&) {
      continue;
    }
    return EpiResult{z1, z2, attempt};
  }
  return std::nullopt;
}

std::optional<EpiResult> find_epimorphism_random(const Triple& tau, const GFq& F,
                                                 const std::optional<TraceTriple>& targets, std::uint64_t seed,
                                                 std::uint64_t budget) {
  return EpimorphismSearch(tau, F, targets).run(seed, budget);
}

}  // namespace systole
