#include <algorithm>

#include "systole/parallel.hpp"
#include "systole/schreier.hpp"

namespace systole {

namespace {

void append_label(Word& w, std::uint8_t lab) {
  switch (lab) {
    case kX: w.append('x', 1); break;
    case kXinv: w.append('x', -1); break;
    case kY: w.append('y', 1); break;
    default: w.append('y', -1); break;
  }
}

const Quat& gen_quat(const TriangleOrder& O, char label) { return label == 'x' ? O.alpha : O.beta; }

Quat label_quat(const TriangleOrder& O, std::uint8_t lab) {
  switch (lab) {
    case kX: return O.alpha;
    case kXinv: return O.alg->conj(O.alpha);
    case kY: return O.beta;
    default: return O.alg->conj(O.beta);
  }
}

}  // namespace

Word SchreierSet::transversal(std::uint32_t node) const {
  const CosetGraph& g = *graph;
  std::vector<std::uint8_t> labels;
  for (std::uint32_t u = node; g.parent[u] != CosetGraph::kNoParent; u = g.parent[u]) labels.push_back(g.parent_label[u]);
  Word w(g.order_x, g.order_y);
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) append_label(w, *it);
  return w;
}

Word SchreierSet::word(std::size_t i) const {
  const Generator& gen = gens[i];
  Word w = transversal(gen.node);
  w.append(gen.label, 1);
  w.append(transversal(gen.target).inverse());
  return w;
}

Quat SchreierSet::quat(std::size_t i, const TriangleOrder& O) const {
  if (node_quats.empty()) throw std::logic_error("SchreierSet::quat: traces not attached");
  const Generator& gen = gens[i];
  const QuatAlg& Q = *O.alg;
  return Q.mul(Q.mul(node_quats[gen.node], gen_quat(O, gen.label)), Q.conj(node_quats[gen.target]));
}

SchreierSet schreier_generators(const CosetGraph& g) {
  SchreierSet s;
  s.graph = &g;
  auto is_tree = [&](std::uint32_t u, std::uint8_t lab, std::uint8_t inv, std::uint32_t v) {
    return (g.parent[v] == u && g.parent_label[v] == lab) || (g.parent[u] == v && g.parent_label[u] == inv);
  };
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    if (!is_tree(u, kX, kXinv, g.succ_x[u])) s.gens.push_back({u, 'x', g.succ_x[u]});
    if (!is_tree(u, kY, kYinv, g.succ_y[u])) s.gens.push_back({u, 'y', g.succ_y[u]});
  }
  if (s.gens.size() != g.size() + 1) throw std::logic_error("schreier_generators: count is not index + 1");
  return s;
}

void attach_traces(SchreierSet& s, const TriangleOrder& O, int threads) {
  const CosetGraph& g = *s.graph;
  const QuatAlg& Q = *O.alg;
  std::array<Quat, 4> lq{label_quat(O, 0), label_quat(O, 1), label_quat(O, 2), label_quat(O, 3)};
  s.node_quats.assign(g.size(), Q.one());
  // BFS order keeps each depth layer contiguous; parents live in earlier layers.
  std::size_t b = 1;
  while (b < g.size()) {
    std::size_t e = b;
    while (e < g.size() && g.depth[e] == g.depth[b]) ++e;
    parallel_slices(e - b, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t k = b + lo; k < b + hi; ++k)
        s.node_quats[k] = Q.mul(s.node_quats[g.parent[k]], lq[g.parent_label[k]]);
    });
    b = e;
  }
  s.traces.assign(s.gens.size(), O.F()->zero());
  parallel_slices(s.gens.size(), threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Generator& gen = s.gens[i];
      s.traces[i] = Q.pair(Q.mul(s.node_quats[gen.node], gen_quat(O, gen.label)), s.node_quats[gen.target]);
    }
  });
}

bool membership_test(const Quat& q, const TriangleOrder& O, const PrimeIdeal& P) {
  return membership_coords(coords_in_order(q, O), P);
}

bool membership_test(const Word& w, const TriangleOrder& O, const PrimeIdeal& P) {
  return membership_test(word_eval(w, O), O, P);
}

std::optional<PrimeIdeal> identify_ideal(const SchreierSet& s, const TriangleOrder& O,
                                         const std::vector<PrimeIdeal>& candidates) {
  // Generator quaternions computed lazily and shared across candidates.
  std::vector<std::optional<Coords4>> coords(s.gens.size());
  auto coords_of = [&](std::size_t i) -> const Coords4& {
    if (!coords[i]) coords[i] = coords_in_order(s.node_quats.empty() ? word_eval(s.word(i), O) : s.quat(i, O), O);
    return *coords[i];
  };
  std::optional<PrimeIdeal> found;
  for (const auto& P : candidates) {
    bool ok = true;
    for (std::size_t i = 0; i < s.gens.size() && ok; ++i) ok = membership_coords(coords_of(i), P);
    if (!ok) continue;
    if (found) return std::nullopt;  // two candidates contain H: not a single congruence kernel
    found = P;
  }
  return found;
}

}  // namespace systole
