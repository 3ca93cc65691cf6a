#include <unordered_map>

#include "systole/schreier.hpp"

namespace systole {

namespace {

constexpr std::size_t kMaxComponents = 4;
using Key = std::array<std::uint64_t, kMaxComponents>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : k) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

}  // namespace

ProjMat CosetGraph::element(std::uint32_t node, std::size_t comp) const {
  return ProjMat::from_key(keys[node * comps.size() + comp], comps[comp].x.kind);
}

CosetGraph build_coset_graph(const std::vector<QuotientComponent>& comps, std::size_t cap, int order_x,
                             int order_y) {
  if (comps.empty() || comps.size() > kMaxComponents) throw std::invalid_argument("coset graph: 1 to 4 components");
  CosetGraph g;
  g.comps = comps;
  g.order_x = order_x;
  g.order_y = order_y;
  std::size_t k = comps.size();
  std::array<std::vector<ProjMat>, 4> gen;  // per label, per component
  for (std::size_t c = 0; c < k; ++c) {
    const GFq& F = *comps[c].field;
    gen[kX].push_back(comps[c].x);
    gen[kXinv].push_back(pm_inv(F, comps[c].x));
    gen[kY].push_back(comps[c].y);
    gen[kYinv].push_back(pm_inv(F, comps[c].y));
  }
  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  auto add_node = [&](const Key& key, std::uint32_t parent, std::uint8_t label, std::uint32_t depth) {
    if (g.succ_x.size() >= cap) throw CapExceeded("coset graph exceeds cap of " + std::to_string(cap) + " nodes");
    std::uint32_t id = static_cast<std::uint32_t>(g.succ_x.size());
    index.emplace(key, id);
    for (std::size_t c = 0; c < k; ++c) g.keys.push_back(key[c]);
    g.succ_x.push_back(0);
    g.succ_y.push_back(0);
    g.parent.push_back(parent);
    g.parent_label.push_back(label);
    g.depth.push_back(depth);
    return id;
  };
  Key root{};
  for (std::size_t c = 0; c < k; ++c) root[c] = pm_identity(*comps[c].field).key();
  add_node(root, CosetGraph::kNoParent, 0, 0);
  for (std::uint32_t u = 0; u < g.succ_x.size(); ++u) {
    for (std::uint8_t lab = 0; lab < 4; ++lab) {
      Key nk{};
      for (std::size_t c = 0; c < k; ++c) {
        const GFq& F = *comps[c].field;
        nk[c] = pm_mul(F, g.element(u, c), gen[lab][c]).key();
      }
      auto it = index.find(nk);
      std::uint32_t v = it == index.end() ? add_node(nk, u, lab, g.depth[u] + 1) : it->second;
      if (lab == kX) g.succ_x[u] = v;
      if (lab == kY) g.succ_y[u] = v;
    }
  }
  return g;
}

std::vector<ProjMat> word_image(const CosetGraph& g, const Word& w) {
  std::vector<ProjMat> out;
  for (const auto& comp : g.comps) {
    const GFq& F = *comp.field;
    ProjMat r = pm_identity(F);
    for (const auto& t : w.tokens()) {
      ProjMat b = t.base == 'x' ? comp.x : comp.y;
      if (t.exp < 0) b = pm_inv(F, b);
      for (int i = 0; i < std::abs(t.exp); ++i) r = pm_mul(F, r, b);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace systole
