#include <chrono>
#include <cmath>
#include <zlib.h>

#include "systole/parallel.hpp"
#include "systole/sysbound.hpp"

namespace systole {

Kernel congruence_kernel(const TriangleOrder& O, const IdealSpec& spec, std::uint64_t seed, std::size_t cap) {
  Kernel k;
  std::vector<QuotientComponent> comps;
  k.expected_index = 1;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    k.expected_index *= quotient_type(O.fields, f.prime_E).order;
    k.splits.push_back(split_order_mod(O, f.prime_F, seed + i));
    const SplitData& sd = k.splits.back();
    comps.push_back({sd.gfq, sd.img_alpha, sd.img_beta});
  }
  if (k.expected_index > cap) throw CapExceeded("index " + std::to_string(k.expected_index) + " exceeds cap");
  k.graph = build_coset_graph(comps, cap, O.tau.a, O.tau.b);
  if (k.graph.size() != k.expected_index)
    throw std::logic_error("quotient order " + std::to_string(k.graph.size()) + " differs from predicted " +
                           std::to_string(k.expected_index));
  return k;
}

std::int64_t genus_of(const Triple& tau, std::uint64_t index) {
  Integer a = tau.a, b = tau.b, c = tau.c;
  Integer num = Integer(static_cast<unsigned long>(index)) * (a * b * c - b * c - a * c - a * b);
  Integer den = 2 * a * b * c;
  if (num % den != 0) throw std::logic_error("genus_of: non-integral genus for index " + std::to_string(index));
  Integer g = num / den + 1;
  return g.get_si();
}

double log_ref(std::int64_t genus, int r) {
  if (genus < 1) throw std::invalid_argument("log_ref: genus must be >= 1");
  return 4.0 / (3.0 * r) * natural_log(Integer(static_cast<long>(genus)), 128);
}

std::optional<std::size_t> min_hyperbolic_trace(const std::vector<FieldElem>& traces, int root, int threads) {
  if (traces.empty()) return std::nullopt;
  FieldElem four = traces.front().field()->from_int(4);
  int slices = std::max(1, threads);
  std::vector<std::optional<std::size_t>> local(static_cast<std::size_t>(slices));
  parallel_slices(traces.size(), slices, [&](std::size_t s, std::size_t lo, std::size_t hi) {
    std::optional<std::size_t> best;
    double bv = 0, be = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const FieldElem& t = traces[i];
      double e;
      double v = std::fabs(t.approx(root, e));
      e = 4 * e + 1e-12 * v;  // slack for the root approximation
      if (v + e < 2) continue;
      if (v - e <= 2 && (t * t - four).sign_at(root) <= 0) continue;
      if (best) {
        if (v - e > bv + be) continue;
        if (!(v + e < bv - be) && compare_abs_at(t, traces[*best], root) >= 0) continue;
      }
      best = i;
      bv = v;
      be = e;
    }
    local[s] = best;
  });
  // slices are contiguous and in order, so a strict comparison keeps the lowest index on ties
  std::optional<std::size_t> best;
  for (auto& l : local) {
    if (!l) continue;
    if (!best || compare_abs_at(traces[*l], traces[*best], root) < 0) best = l;
  }
  return best;
}

namespace {

void dump_generators(const std::string& path, const SchreierSet& s) {
  gzFile f = gzopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path);
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    std::string line = s.word(i).to_string() + "\t" + s.traces[i].to_json() + "\n";
    gzwrite(f, line.data(), static_cast<unsigned>(line.size()));
  }
  gzclose(f);
}

}  // namespace

SysReport sys_upper(const TriangleOrder& O, const IdealSpec& spec, const SysOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  const TriangleFields& tf = O.fields;
  int root = O.F()->distinguished();
  Kernel k = congruence_kernel(O, spec, opt.seed, opt.cap);
  SchreierSet s = schreier_generators(k.graph);
  attach_traces(s, O, opt.threads);
  auto idx = min_hyperbolic_trace(s.traces, root, opt.threads);
  if (!idx) throw std::logic_error("no hyperbolic Schreier generator");

  // the minimizer must lie in the kernel at every component
  Quat gq = s.quat(*idx, O);
  for (const auto& f : spec.factors)
    if (!membership_test(gq, O, f.prime_F)) throw std::logic_error("minimal generator fails the membership test");
  for (std::size_t c = 0; c < k.graph.num_components(); ++c) {
    const GFq& F = *k.graph.comps[c].field;
    if (!(word_image(k.graph, s.word(*idx))[c] == pm_identity(F)))
      throw std::logic_error("minimal generator is not trivial in the quotient");
  }
  if (!opt.dump_generators.empty()) dump_generators(opt.dump_generators, s);

  SysReport r;
  r.tau = O.tau;
  r.ideal = spec;
  if (spec.label) r.label = format_E(*spec.label, tf);
  if (spec.single()) {
    r.quotient_kind = quotient_type(tf, spec.factors[0].prime_E).kind;
  } else {
    r.quotient_kind = QuotientKind::Product;
  }
  for (const auto& f : spec.factors) {
    r.q_list.push_back(f.prime_E.norm);
    if (O.tau.a % f.prime_E.p == 0 || O.tau.b % f.prime_E.p == 0 || O.tau.c % f.prime_E.p == 0)
      r.outside_coprimality = true;
  }
  r.index = k.graph.size();
  r.genus = genus_of(O.tau, r.index);
  FieldElem t = s.traces[*idx];
  if (t.sign_at(root) < 0) t = -t;
  r.min_trace = t;
  if (auto alt = format_alt(t, tf)) r.min_trace_alt = *alt;
  BigFloat bf = t.to_bigfloat(root, opt.precision_bits);
  r.min_trace_float = bf.to_double();
  r.sys_upper = length_from_trace(bf);
  r.log_ref = log_ref(r.genus, r_tau(tf));
  r.generators_scanned = s.gens.size();
  r.seed = opt.seed;
  if (opt.timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<TableRow> table_emit(const TriangleOrder& O, std::uint64_t max_norm, const TableOptions& opt) {
  std::vector<TableRow> rows = list_ideals(O.fields, max_norm, opt.composites);
  std::vector<TableRow> out;
  for (auto& row : rows) {
    if (row.skip_reason.empty()) {
      try {
        IdealSpec spec = make_spec(O.fields, row.primes);
        spec.label = search_generator(row.primes, O.fields);
        row.report = sys_upper(O, spec, opt.sys);
        row.report->label = row.label;
      } catch (const UnsupportedPrime& e) {
        row.skip_reason = e.what();
      } catch (const BadPrime& e) {
        row.skip_reason = e.what();
      } catch (const CapExceeded& e) {
        row.skip_reason = e.what();
      }
    }
    if (row.report || opt.include_skipped) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace systole
