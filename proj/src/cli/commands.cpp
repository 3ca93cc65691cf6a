#include <json.hpp>
#include <ostream>

#include "systole/commands.hpp"
#include "systole/sysbound.hpp"

namespace systole {

namespace {

using nlohmann::json;

void cmd_info(const RunConfig& cfg, std::ostream& out) {
  TriangleOrder O = build_order(cfg.tau);
  const TriangleFields& tf = O.fields;
  int r = r_tau(tf);
  Discriminant disc = order_reduced_discriminant(O);
  const FieldDesc& F = *tf.F;
  const FieldDesc& E = *tf.E->field();
  if (cfg.format == "json") {
    json j;
    j["tau"] = {cfg.tau.a, cfg.tau.b, cfg.tau.c};
    j["F"] = {{"degree", F.degree()}, {"min_poly", F.min_poly().to_string("u")}, {"root", F.root_double(F.distinguished())}};
    j["E"] = {{"degree", E.degree()}, {"min_poly", E.min_poly().to_string("w")}, {"w", tf.E->theta().to_string()}};
    j["delta"] = O.delta.to_string();
    j["algebra"] = {{"x", O.alg->x().to_string()}, {"y", O.alg->y().to_string()}};
    j["discriminant"] = {{"generator", disc.generator.to_string()}, {"det", disc.det.to_string()},
                         {"norm_generator", disc.generator.norm().get_str()}};
    j["r_tau"] = r;
    j["arithmetic"] = r == 1;
    out << j.dump() << "\n";
    return;
  }
  out << "triangle group " << cfg.tau.str() << "\n";
  out << "  F = Q(u), u = " << F.root_double(F.distinguished()) << ", degree " << F.degree() << ", "
      << F.min_poly().to_string("u") << "\n";
  out << "  E = Q(w), w = " << tf.E->theta().to_string() << ", degree " << E.degree() << ", "
      << E.min_poly().to_string("w") << "\n";
  out << "  delta = " << O.delta.to_string() << "\n";
  out << "  algebra <" << O.alg->x().to_string() << ", " << O.alg->y().to_string() << " | F>\n";
  out << "  reduced discriminant (" << disc.generator.to_string() << "), det trd form = " << disc.det.to_string()
      << "\n";
  out << "  r_tau = " << r << (r == 1 ? "  (arithmetic)" : "  (not arithmetic)") << "\n";
}

void cmd_primes(const RunConfig& cfg, std::ostream& out) {
  TriangleFields tf = field_build(cfg.tau);
  auto rows = list_ideals(tf, cfg.max_norm, false);
  if (cfg.format == "json") {
    json arr = json::array();
    for (auto& r : rows) {
      json j{{"label", r.label}, {"norm", r.norm}, {"supported", r.skip_reason.empty()}};
      if (!r.primes.empty()) j["prime"] = json::parse(r.primes[0].to_json());
      if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
      if (r.skip_reason.empty()) {
        auto qi = quotient_type(tf, r.primes[0]);
        j["quotient"] = {{"kind", to_string(qi.kind)}, {"q", qi.q}, {"order", qi.order}};
      }
      arr.push_back(j);
    }
    out << arr.dump() << "\n";
    return;
  }
  if (cfg.format == "csv") out << "label,norm,p,f,status\n";
  for (auto& r : rows) {
    std::string p = r.primes.empty() ? "" : std::to_string(r.primes[0].p);
    std::string f = r.primes.empty() ? "" : std::to_string(r.primes[0].f);
    std::string status = r.skip_reason.empty() ? "supported" : "skipped: " + r.skip_reason;
    if (cfg.format == "csv") {
      out << r.label << "," << r.norm << "," << p << "," << f << "," << status << "\n";
    } else {
      out << "(" << r.label << ")  N=" << r.norm << "  p=" << p << " f=" << f << "  " << status;
      if (r.skip_reason.empty()) {
        auto qi = quotient_type(tf, r.primes[0]);
        out << "  " << to_string(qi.kind) << "2(" << qi.q << ")";
      }
      out << "\n";
    }
  }
}

SysOptions sys_options(const RunConfig& cfg) {
  SysOptions o;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  o.precision_bits = cfg.precision_bits;
  o.timing = cfg.timing;
  o.dump_generators = cfg.dump_generators;
  return o;
}

void emit(const std::vector<SysReport>& reports, const RunConfig& cfg, std::ostream& out, bool as_array) {
  if (cfg.format == "json") {
    if (!as_array) {
      out << reports.at(0).to_json() << "\n";
      return;
    }
    json arr = json::array();
    for (auto& r : reports) arr.push_back(json::parse(r.to_json()));
    out << arr.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << csv_header() << "\n";
    for (auto& r : reports) out << r.csv_row() << "\n";
  } else {
    for (auto& r : reports) out << r.pretty();
  }
}

void cmd_sysbound(const RunConfig& cfg, std::ostream& out) {
  TriangleOrder O = build_order(cfg.tau);
  const TriangleFields& tf = O.fields;
  IdealSpec spec;
  if (cfg.ideal) {
    if (cfg.p) throw std::invalid_argument("use either --ideal or --p");
    FieldElem x = parse_label(*cfg.ideal, tf);
    spec = make_spec(tf, primes_of_label(x, tf));
    spec.label = x;
  } else if (cfg.p) {
    auto primes = prime_decompose(*tf.E, *cfg.p);
    if (primes.size() > 1 && !cfg.which)
      throw std::invalid_argument(std::to_string(primes.size()) + " primes above p; choose one with --which");
    int w = cfg.which.value_or(0);
    if (w < 0 || static_cast<std::size_t>(w) >= primes.size())
      throw std::invalid_argument("--which out of range (0.." + std::to_string(primes.size() - 1) + ")");
    spec = make_spec(tf, {primes[static_cast<std::size_t>(w)]});
    spec.label = search_generator({primes[static_cast<std::size_t>(w)]}, tf);
  } else {
    throw std::invalid_argument("sysbound needs --ideal or --p");
  }
  emit({sys_upper(O, spec, sys_options(cfg))}, cfg, out, false);
}

void cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  TriangleOrder O = build_order(cfg.tau);
  TableOptions opt;
  opt.sys = sys_options(cfg);
  opt.sys.dump_generators.clear();
  opt.composites = cfg.composites;
  opt.include_skipped = true;
  std::vector<SysReport> reports;
  for (auto& row : table_emit(O, cfg.max_norm, opt)) {
    if (row.report) {
      reports.push_back(*row.report);
    } else if (cfg.show_skipped || cfg.format == "pretty") {
      err << "skipped (" << row.label << ") N=" << row.norm << ": " << row.skip_reason << "\n";
    }
  }
  emit(reports, cfg, out, true);
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "pretty")
      throw std::invalid_argument("unknown format " + cfg.format);
    if (cfg.precision_bits < 64) throw std::invalid_argument("--precision-bits must be >= 64");
    if (cfg.threads < 1) throw std::invalid_argument("--threads must be >= 1");
    validate_hyperbolic(cfg.tau);
    if (cfg.command == "info") {
      cmd_info(cfg, out);
    } else if (cfg.command == "primes") {
      cmd_primes(cfg, out);
    } else if (cfg.command == "sysbound") {
      cmd_sysbound(cfg, out);
    } else if (cfg.command == "table") {
      cmd_table(cfg, out, err);
    } else {
      throw std::invalid_argument("unknown command " + cfg.command);
    }
    return kExitOk;
  } catch (const UnsupportedPrime& e) {
    err << "unsupported ideal: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const BadPrime& e) {
    err << "unsupported ideal: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::length_error& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace systole
