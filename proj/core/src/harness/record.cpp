#include "eisenlab/harness/record.hpp"

#include <chrono>

#include "eisenlab/corering/arith.hpp"
#include "eisenlab/corering/dlog.hpp"
#include "eisenlab/error.hpp"
#include "json.hpp"

namespace eisenlab::harness {

using nlohmann::json;

namespace {

json valuation_to_json(const Valuation& v) {
  switch (v.kind()) {
    case Valuation::Kind::finite:
      return v.value();
    case Valuation::Kind::at_least:
      return json{{"geq", v.value()}};
    case Valuation::Kind::infinite:
      break;
  }
  return "inf";
}

Valuation valuation_from_json(const json& j) {
  if (j.is_number_unsigned()) return Valuation::finite(j.get<unsigned>());
  if (j.is_string() && j.get<std::string>() == "inf") return Valuation::infinite();
  if (j.is_object() && j.contains("geq")) return Valuation::at_least(j.at("geq").get<unsigned>());
  throw DomainError("record: malformed valuation " + j.dump());
}

json ord_to_json(const OrdValue& o) {
  if (o.capped) return json{{"geq", o.value}};
  return o.value;
}

OrdValue ord_from_json(const json& j) {
  if (j.is_number_unsigned()) return OrdValue{j.get<unsigned>(), false};
  if (j.is_object() && j.contains("geq")) return OrdValue{j.at("geq").get<unsigned>(), true};
  throw DomainError("record: malformed ord value " + j.dump());
}

// JSON object keys are strings; maps keyed by integers go through decimal text.
template <typename V, typename F>
json int_map_to_json(const std::map<unsigned, V>& m, F&& conv) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = conv(v);
  return out;
}

template <typename K, typename V, typename F>
std::map<K, V> int_map_from_json(const json& j, F&& conv) {
  std::map<K, V> out;
  for (const auto& [k, v] : j.items()) out.emplace(static_cast<K>(std::stoull(k)), conv(v));
  return out;
}

json hecke_to_json(const HeckeSummary& h) {
  json comps = json::array();
  for (const auto& c : h.components)
    comps.push_back({{"slope", {c.slope.num, c.slope.den}}, {"degree", c.degree}, {"resolved", c.resolved}});
  json np = json::array();
  for (const auto& v : h.np) np.push_back({v.i, v.v});
  json tseq = json::array();
  for (const auto& v : h.t_seq) tseq.push_back(valuation_to_json(v));
  json gens = json::object();
  for (const auto& [l, ok] : h.generator_checks) gens[std::to_string(l)] = ok;
  return {{"ell", h.ell},
          {"M", h.M},
          {"e", h.e},
          {"f", h.f},
          {"t_seq", tseq},
          {"np", np},
          {"components", comps},
          {"diagnostics",
           {{"f0_valuation", valuation_to_json(h.f0_valuation)},
            {"generator_checks", gens},
            {"zero_multiplicity", h.zero_multiplicity},
            {"refined", h.refined},
            {"genus", h.genus},
            {"rank_consistent", h.rank_consistent}}}};
}

HeckeSummary hecke_from_json(const json& j) {
  HeckeSummary h;
  h.ell = j.at("ell").get<u64>();
  h.M = j.at("M").get<unsigned>();
  h.e = j.at("e").get<unsigned>();
  h.f = j.at("f").get<std::vector<u64>>();
  for (const auto& v : j.at("t_seq")) h.t_seq.push_back(valuation_from_json(v));
  for (const auto& v : j.at("np")) h.np.push_back(Vertex{v.at(0).get<unsigned>(), v.at(1).get<unsigned>()});
  for (const auto& c : j.at("components"))
    h.components.push_back(Component{Slope{c.at("slope").at(0).get<unsigned>(), c.at("slope").at(1).get<unsigned>()},
                                     c.at("degree").get<unsigned>(), c.at("resolved").get<bool>()});
  const json& d = j.at("diagnostics");
  h.f0_valuation = valuation_from_json(d.at("f0_valuation"));
  h.generator_checks = int_map_from_json<u64, bool>(d.at("generator_checks"), [](const json& v) { return v.get<bool>(); });
  h.zero_multiplicity = d.at("zero_multiplicity").get<unsigned>();
  h.refined = d.at("refined").get<bool>();
  h.genus = d.at("genus").get<unsigned>();
  h.rank_consistent = d.at("rank_consistent").get<bool>();
  return h;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::optional<OrdValue> ResultRecord::ord1() const {
  auto it = ord_zeta.find(1);
  if (it == ord_zeta.end()) return std::nullopt;
  return it->second;
}

std::string to_json_line(const ResultRecord& r) {
  json j;
  j["schema_version"] = r.schema;
  j["N"] = r.N;
  j["p"] = r.p;
  j["t"] = r.t;
  j["kind"] = r.invariants_only() ? "invariants-only" : "full";
  j["merel"] = {{"value", r.merel.value},
                {"log_sum", int_map_to_json(r.merel.log_sum, [](u64 v) { return json(v); })},
                {"is_power", int_map_to_json(r.merel.is_power, [](bool v) { return json(v); })}};
  j["ord_cap"] = r.ord_cap;
  j["ord_zeta"] = int_map_to_json(r.ord_zeta, ord_to_json);
  j["zeta_degenerate"] = r.zeta_degenerate;
  j["lecouturier"] = int_map_to_json(r.lecouturier, [](bool v) { return json(v); });
  if (r.hecke) j["hecke"] = hecke_to_json(*r.hecke);
  if (r.timing) j["timing"] = {{"invariants_s", r.timing->invariants_s}, {"hecke_s", r.timing->hecke_s}};
  return j.dump();
}

ResultRecord parse_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw DomainError(std::string("record: invalid JSON: ") + e.what());
  }
  try {
    ResultRecord r;
    r.schema = j.at("schema_version").get<int>();
    if (r.schema != schema_version) throw DomainError("record: unsupported schema_version " + std::to_string(r.schema));
    r.N = j.at("N").get<u64>();
    r.p = j.at("p").get<u64>();
    r.t = j.at("t").get<unsigned>();
    const json& m = j.at("merel");
    r.merel.value = m.at("value").get<u64>();
    r.merel.log_sum = int_map_from_json<unsigned, u64>(m.at("log_sum"), [](const json& v) { return v.get<u64>(); });
    r.merel.is_power = int_map_from_json<unsigned, bool>(m.at("is_power"), [](const json& v) { return v.get<bool>(); });
    r.ord_cap = j.at("ord_cap").get<unsigned>();
    r.ord_zeta = int_map_from_json<unsigned, OrdValue>(j.at("ord_zeta"), ord_from_json);
    r.zeta_degenerate = j.at("zeta_degenerate").get<bool>();
    r.lecouturier = int_map_from_json<unsigned, bool>(j.at("lecouturier"), [](const json& v) { return v.get<bool>(); });
    if (j.contains("hecke")) r.hecke = hecke_from_json(j.at("hecke"));
    if (j.contains("timing"))
      r.timing = Timing{j.at("timing").at("invariants_s").get<double>(), j.at("timing").at("hecke_s").get<double>()};
    const bool invariants_only = j.at("kind").get<std::string>() == "invariants-only";
    if (invariants_only != r.invariants_only()) throw DomainError("record: kind does not match the hecke field");
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("record: missing or mistyped field: ") + e.what());
  }
}

HeckeSummary summarize(const EisensteinReport& report, bool rank_consistent) {
  HeckeSummary h;
  h.ell = report.ell;
  h.M = report.M;
  h.e = report.e;
  h.f = report.f.coeffs();
  h.t_seq = report.t_seq;
  h.np = report.np.vertices();
  h.components = report.components;
  h.f0_valuation = report.diagnostics.f0_valuation;
  h.generator_checks = report.diagnostics.generator_checks;
  h.zero_multiplicity = report.diagnostics.zero_multiplicity;
  h.refined = report.diagnostics.refined;
  h.genus = report.diagnostics.genus;
  h.rank_consistent = rank_consistent;
  return h;
}

ResultRecord compute_record(u64 N, u64 p, const ComputeOptions& opts) {
  if (!is_prime(N) || N < 5) throw DomainError("compute_record: N must be a prime >= 5");
  if (!is_prime(p) || p <= 3) throw DomainError("compute_record: p must be a prime > 3");
  ResultRecord r;
  r.N = N;
  r.p = p;
  r.t = tval(N, p);
  Timing timing;

  auto t0 = std::chrono::steady_clock::now();
  if (r.t > 0) {
    const unsigned s_max = opts.s_max == 0 ? r.t : opts.s_max;
    if (s_max > r.t) throw DomainError("compute_record: s_max exceeds v_p(N-1)");
    const DlogTable dlog = build_dlog_table(N);
    MerelReport merel = merel_report(N, p, s_max, dlog);
    r.merel = MerelSummary{merel.merel_value, merel.log_sum, merel.is_power};
    ZetaReport zeta = zeta_report(N, p, s_max, dlog);
    r.ord_cap = zeta.cap;
    r.ord_zeta = zeta.ord;
    r.zeta_degenerate = zeta.degenerate;
    for (unsigned s = 1; s <= s_max; ++s) r.lecouturier[s] = lecouturier_check(N, p, s, dlog);
  } else {
    r.merel.value = merel_number(N);
  }
  timing.invariants_s = seconds_since(t0);

  if (opts.hecke) {
    t0 = std::chrono::steady_clock::now();
    EisensteinOptions eo;
    eo.ell = opts.ell;
    eo.precision = opts.precision;
    if (r.t == 0) {
      r.hecke = summarize(eisenstein_local_factor(N, p, eo), true);
    } else {
      HeckeContext ctx(N, p, opts.precision.value_or(working_precision(N, p)));
      EisensteinReport report = eisenstein_local_factor(ctx, eo);
      const bool consistent = rank_consistency_check(ctx, report).ok;
      r.hecke = summarize(report, consistent);
    }
    timing.hecke_s = seconds_since(t0);
  }
  if (opts.timing) r.timing = timing;
  return r;
}

}  // namespace eisenlab::harness
