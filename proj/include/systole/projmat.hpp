#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "systole/gfq.hpp"

namespace systole {

enum class GroupKind { PSL, PGLinPSL };

struct Mat2 {
  GFqElem a, b, c, d;
  bool operator==(const Mat2&) const = default;
};

// Element of PSL2(F_q) stored as the canonical representative of {m, -m}.
struct ProjMat {
  Mat2 m;
  GroupKind kind = GroupKind::PSL;
  bool operator==(const ProjMat& o) const { return m == o.m; }
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(m.a.v) << 48) | (static_cast<std::uint64_t>(m.b.v) << 32) |
           (static_cast<std::uint64_t>(m.c.v) << 16) | m.d.v;
  }
  static ProjMat from_key(std::uint64_t k, GroupKind kind = GroupKind::PSL);
};

Mat2 mat_identity(const GFq& F);
Mat2 mat_mul(const GFq& F, const Mat2& x, const Mat2& y);
Mat2 mat_add(const GFq& F, const Mat2& x, const Mat2& y);
Mat2 mat_scale(const GFq& F, GFqElem s, const Mat2& x);
GFqElem mat_det(const GFq& F, const Mat2& x);
GFqElem mat_trace(const GFq& F, const Mat2& x);

ProjMat canonical(const GFq& F, const Mat2& m, GroupKind kind = GroupKind::PSL);
ProjMat pm_identity(const GFq& F);
ProjMat pm_mul(const GFq& F, const ProjMat& x, const ProjMat& y);
ProjMat pm_inv(const GFq& F, const ProjMat& x);
ProjMat pm_pow(const GFq& F, ProjMat x, std::uint64_t e);
std::uint64_t psl2_order(const GFq& F);
std::uint64_t pm_order(const GFq& F, const ProjMat& x);
GFqElem pm_trace(const GFq& F, const ProjMat& x);  // canonical representative of {t, -t}
std::string pm_dump(const GFq& F, const ProjMat& x);

// g -> g / sqrt(det g) in PSL2 of the quadratic extension.
ProjMat pgl_to_psl(const GFq& small, const QuadraticExtension& ext, const Mat2& g);

// Closure under multiplication; throws std::length_error if cap is exceeded.
std::vector<ProjMat> subgroup_closure(const GFq& F, const std::vector<ProjMat>& gens, std::size_t cap);

// All elements of PSL2(F_q) (oracle use).
std::vector<ProjMat> enumerate_psl2(const GFq& F);
std::vector<Mat2> enumerate_sl2(const GFq& F);

}  // namespace systole
