#pragma once

#include <string>

namespace systole::props {

struct Result {
  bool ok = true;
  int checks = 0;
  std::string detail;  // first failure
  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Result class_counts();          // kappa vs brute-force classes, q in {5,7,9,11,13}
Result commutative_triples();   // trace-triple test vs exhaustive commuting pairs over F_5, F_7
Result order_relations();       // relations, norms and splitting homomorphisms, five triples
Result numeric_traces(int words_per_triple);  // iota vs exact trace on random words
Result determinism();           // identical reports for 1 and 8 threads and two runs

}  // namespace systole::props
