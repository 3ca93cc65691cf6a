#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "systole/projmat.hpp"
#include "systole/triangle_order.hpp"
#include "systole/word.hpp"

namespace systole {

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// One factor of the quotient: images of x and y in PSL2 over a finite field.
struct QuotientComponent {
  std::shared_ptr<const GFq> field;
  ProjMat x, y;
};

// Labels in BFS order.
enum Label : std::uint8_t { kX = 0, kXinv = 1, kY = 2, kYinv = 3 };

class CosetGraph {
 public:
  static constexpr std::uint32_t kNoParent = 0xffffffffu;

  std::size_t size() const { return succ_x.size(); }
  std::size_t num_components() const { return comps.size(); }
  ProjMat element(std::uint32_t node, std::size_t comp) const;

  std::vector<QuotientComponent> comps;
  std::vector<std::uint64_t> keys;  // node-major, one packed ProjMat per component
  std::vector<std::uint32_t> succ_x, succ_y;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> parent_label;
  std::vector<std::uint32_t> depth;
  std::uint32_t root = 0;
  int order_x = 0, order_y = 0;
};

CosetGraph build_coset_graph(const std::vector<QuotientComponent>& comps, std::size_t cap, int order_x,
                             int order_y);

struct Generator {
  std::uint32_t node;
  char label;  // 'x' or 'y'
  std::uint32_t target;
};

struct SchreierSet {
  const CosetGraph* graph = nullptr;
  std::vector<Generator> gens;
  std::vector<FieldElem> traces;  // exact trd, filled by attach_traces
  std::vector<Quat> node_quats;   // transversal images, filled by attach_traces

  Word transversal(std::uint32_t node) const;
  Word word(std::size_t g) const;
  Quat quat(std::size_t g, const TriangleOrder& O) const;  // requires node_quats
};

SchreierSet schreier_generators(const CosetGraph& graph);
// Exact traces of all generators; data-parallel over generator slices.
void attach_traces(SchreierSet& s, const TriangleOrder& O, int threads);

bool membership_test(const Word& w, const TriangleOrder& O, const PrimeIdeal& P);
bool membership_test(const Quat& q, const TriangleOrder& O, const PrimeIdeal& P);
std::optional<PrimeIdeal> identify_ideal(const SchreierSet& s, const TriangleOrder& O,
                                         const std::vector<PrimeIdeal>& candidates);

// Image of a word in the quotient, through the graph's components.
std::vector<ProjMat> word_image(const CosetGraph& g, const Word& w);

}  // namespace systole
