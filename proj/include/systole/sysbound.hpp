#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "systole/macbeath.hpp"
#include "systole/schreier.hpp"

namespace systole {

enum class QuotientKind { PSL, PGL, Product };
std::string to_string(QuotientKind k);

struct IdealFactor {
  PrimeIdeal prime_E;
  PrimeIdeal prime_F;  // chosen prime of F above prime_E
};

struct IdealSpec {
  std::vector<IdealFactor> factors;
  std::uint64_t norm = 1;
  std::optional<FieldElem> label;  // element of E generating the ideal
  bool single() const { return factors.size() == 1; }
};

struct QuotientInfo {
  QuotientKind kind;
  std::uint64_t q;      // residue field size at level E
  std::uint64_t order;  // |PSL2(q)| or |PGL2(q)|
};

// PSL iff every prime of F above pE has the residue degree of pE.
QuotientInfo quotient_type(const TriangleFields& tf, const PrimeIdeal& pE);
std::vector<PrimeIdeal> primes_F_above(const TriangleFields& tf, const PrimeIdeal& pE);

// Throws UnsupportedPrime with a reason when the pipeline cannot handle the E-prime.
void check_supported(const TriangleFields& tf, const PrimeIdeal& pE);
IdealSpec make_spec(const TriangleFields& tf, const std::vector<PrimeIdeal>& primes_E);

struct Kernel {
  std::vector<SplitData> splits;
  CosetGraph graph;
  std::uint64_t expected_index;
};

Kernel congruence_kernel(const TriangleOrder& O, const IdealSpec& spec, std::uint64_t seed, std::size_t cap);

std::int64_t genus_of(const Triple& tau, std::uint64_t index);
double log_ref(std::int64_t genus, int r_tau);

struct SysReport {
  Triple tau;
  IdealSpec ideal;
  std::string label;  // printed generator of the ideal, "" when unknown
  QuotientKind quotient_kind;
  std::vector<std::uint64_t> q_list;
  std::uint64_t index = 0;
  std::int64_t genus = 0;
  FieldElem min_trace;
  std::string min_trace_alt;  // optional presentation over E (quadratic E only)
  double min_trace_float = 0;
  double sys_upper = 0;
  double log_ref = 0;
  std::uint64_t generators_scanned = 0;
  std::uint64_t seed = 0;
  std::optional<double> elapsed_ms;
  bool outside_coprimality = false;  // p | abc

  std::string to_json() const;
  std::string csv_row() const;
  std::string pretty() const;
};

std::string csv_header();

struct SysOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  int threads = 1;
  int precision_bits = 128;
  std::size_t cap = 4000000;
  bool timing = false;
  std::string dump_generators;  // path, empty for none
};

// Index of the exact minimum of |v0(t)| over traces with |v0(t)| > 2; ties go to the lowest index.
std::optional<std::size_t> min_hyperbolic_trace(const std::vector<FieldElem>& traces, int root, int threads);

SysReport sys_upper(const TriangleOrder& O, const IdealSpec& spec, const SysOptions& opt);

// Randomized search for (z1, z2) in PSL2(F) with orders (a, b, c) generating PSL2(F).
struct EpiResult {
  ProjMat z1, z2;
  std::uint64_t attempts;
};
class EpimorphismSearch {
 public:
  EpimorphismSearch(const Triple& tau, const GFq& F, std::optional<TraceTriple> targets = std::nullopt);
  std::optional<EpiResult> run(std::uint64_t seed, std::uint64_t budget) const;

 private:
  Triple tau_;
  const GFq& F_;
  std::optional<TraceTriple> targets_;
  std::vector<ProjMat> of_a_, of_b_;
};
std::optional<EpiResult> find_epimorphism_random(const Triple& tau, const GFq& F,
                                                 const std::optional<TraceTriple>& targets, std::uint64_t seed,
                                                 std::uint64_t budget);

// Labels: integer polynomials in u (aliases mu, nu, w, and sqrt(m) when E is quadratic), products of
// parenthesized factors allowed.
FieldElem parse_label(const std::string& s, const TriangleFields& tf);
std::string format_E(const FieldElem& e, const TriangleFields& tf);  // element of E, printed over E
std::optional<std::string> format_alt(const FieldElem& t, const TriangleFields& tf);
// E-primes containing x whose product has norm |N(x)|; nullopt if x generates no squarefree supported ideal.
std::vector<PrimeIdeal> primes_of_label(const FieldElem& x, const TriangleFields& tf);
std::optional<FieldElem> search_generator(const std::vector<PrimeIdeal>& primes_E, const TriangleFields& tf);

struct TableRow {
  std::optional<SysReport> report;
  std::vector<PrimeIdeal> primes;  // level E
  std::string label;
  std::uint64_t norm;
  std::string skip_reason;  // non-empty when skipped
};

struct TableOptions {
  SysOptions sys;
  bool composites = true;
  bool include_skipped = false;
};

// Prime (and squarefree composite) E-ideals of norm <= max_norm, sorted by (norm, label).
std::vector<TableRow> list_ideals(const TriangleFields& tf, std::uint64_t max_norm, bool composites);
std::vector<TableRow> table_emit(const TriangleOrder& O, std::uint64_t max_norm, const TableOptions& opt);

}  // namespace systole
