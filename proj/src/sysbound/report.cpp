#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "systole/sysbound.hpp"

namespace systole {

namespace {

double round_to(double x, int digits) {
  double s = std::pow(10.0, digits);
  return std::round(x * s) / s;
}

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string SysReport::to_json() const {
  using nlohmann::json;
  json ideal;
  json ps = json::array(), facs = json::array(), fprimes = json::array();
  for (const auto& f : this->ideal.factors) {
    ps.push_back(f.prime_E.p);
    facs.push_back(json::parse(f.prime_E.to_json()));
    fprimes.push_back(json::parse(f.prime_F.to_json()));
  }
  ideal["p"] = ps;
  ideal["factors"] = facs;
  ideal["primes_F"] = fprimes;
  ideal["norm"] = this->ideal.norm;
  ideal["label"] = label;
  json mt;
  mt["coeffs"] = json::parse(min_trace.to_json());
  mt["pretty"] = min_trace.to_string();
  if (!min_trace_alt.empty()) mt["alt"] = min_trace_alt;
  mt["float"] = round_to(min_trace_float, 6);
  json j;
  j["tau"] = {tau.a, tau.b, tau.c};
  j["ideal"] = ideal;
  j["quotient"] = {{"kind", to_string(quotient_kind)}, {"q", q_list}};
  j["index"] = index;
  j["genus"] = genus;
  j["min_trace"] = mt;
  j["sys_upper"] = round_to(sys_upper, 6);
  j["log_ref"] = round_to(log_ref, 6);
  j["generators_scanned"] = generators_scanned;
  j["seed"] = seed;
  if (outside_coprimality) j["flags"] = {"outside CV coprimality"};
  if (elapsed_ms) j["elapsed_ms"] = round_to(*elapsed_ms, 1);
  return j.dump();
}

std::string csv_header() { return "ideal_label,norm,trace_pretty,sys_upper,genus,log_ref"; }

std::string SysReport::csv_row() const {
  return csv_field(label) + "," + std::to_string(ideal.norm) + "," + csv_field(min_trace.to_string()) + "," +
         fixed3(sys_upper) + "," + std::to_string(genus) + "," + fixed3(log_ref);
}

std::string SysReport::pretty() const {
  std::string q;
  for (auto v : q_list) q += (q.empty() ? "" : "x") + std::to_string(v);
  std::string kind = quotient_kind == QuotientKind::Product ? "product over q=" + q
                                                              : to_string(quotient_kind) + "2(" + q + ")";
  std::string out = tau.str() + "  ideal (" + label + ")  N=" + std::to_string(ideal.norm) + "  " + kind +
                    "  index " + std::to_string(index) + "  g=" + std::to_string(genus) + "\n";
  out += "  min trace " + min_trace.to_string();
  if (!min_trace_alt.empty()) out += " = " + min_trace_alt;
  out += "  (" + fixed3(min_trace_float) + ")\n";
  out += "  sys <= " + fixed3(sys_upper) + "   log ref " + fixed3(log_ref) + "   generators " +
         std::to_string(generators_scanned);
  if (outside_coprimality) out += "   [outside CV coprimality]";
  return out + "\n";
}

}  // namespace systole
