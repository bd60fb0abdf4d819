#include "cgeo/report.hpp"

#include <json.hpp>

#include <sstream>

namespace cgeo {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "cgeo-report/1";

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::SoftFail:
      return "soft-fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

json tuple_to_json(const GeodesicConfig& config, const CijTuple& t) {
  json j;
  j["N"] = t.N.get_str();
  j["epsilon"] = t.epsilon.get_str();
  j["mbar"] = t.mbar;
  j["Mbar"] = t.Mbar;
  j["M0"] = t.M0.get_str();
  j["geodesics"] = json::array();
  for (size_t k = 0; k < config.geodesics.size(); ++k) {
    json jg;
    jg["name"] = config.geodesics[k].name;
    jg["m"] = t.m[k].get_str();
    jg["chi"] = t.chi[k];
    jg["delta"] = t.delta[k];
    jg["C"] = t.c_total[k];
    const long mk = t.m[k].get_si();
    jg["i_2mk"] = iterate_index_general(config.geodesics[k], 2 * mk).get_str();
    j["geodesics"].push_back(std::move(jg));
  }
  return j;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown output format \"" + name + "\" (expected text|json|csv)");
}

std::string emit_betti_table(const BettiTable& table, OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Csv: {
      out << "degree,betti\n";
      for (long i = 0; i <= table.max_k; ++i)
        if (table.values[i] != 0) out << i << "," << table.values[i] << "\n";
      break;
    }
    case OutputFormat::Json: {
      json j;
      j["schema"] = kSchema;
      j["d"] = table.mc.d;
      j["n"] = table.mc.n;
      j["max_k"] = table.max_k;
      j["B"] = resonance_constant(table.mc).get_str();
      j["betti"] = json::object();
      for (long i = 0; i <= table.max_k; ++i)
        if (table.values[i] != 0) j["betti"][std::to_string(i)] = table.values[i];
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Text: {
      out << "Betti numbers of the free loop space, (d,n) = (" << table.mc.d << ","
          << table.mc.n << "), B(d,n) = " << resonance_constant(table.mc).get_str() << "\n";
      for (long i = 0; i <= table.max_k; ++i)
        if (table.values[i] != 0) out << "  b_" << i << " = " << table.values[i] << "\n";
      break;
    }
  }
  return out.str();
}

std::string emit_iterate_table(const GeodesicRecord& rec, const std::vector<IterateRow>& rows,
                               OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Csv:
      out << "m,index,nullity\n";
      for (const IterateRow& r : rows)
        out << r.m << "," << r.index.get_str() << "," << r.nullity << "\n";
      break;
    case OutputFormat::Json: {
      json j;
      j["schema"] = kSchema;
      j["name"] = rec.name;
      j["mean_index"] = mean_index(rec).str();
      j["gamma"] = gamma_invariant(rec).get_str();
      j["rows"] = json::array();
      for (const IterateRow& r : rows)
        j["rows"].push_back({{"m", r.m}, {"index", r.index.get_str()}, {"nullity", r.nullity}});
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Text:
      out << rec.name << ": mean index " << mean_index(rec).str() << " ~ "
          << mean_index(rec).approx() << ", gamma = " << gamma_invariant(rec).get_str() << "\n";
      for (const IterateRow& r : rows)
        out << "  i(c^" << r.m << ") = " << r.index.get_str() << "  nu = " << r.nullity << "\n";
      break;
  }
  return out.str();
}

std::string emit_morse_table(const GeodesicConfig& config, const MorseTable& table,
                             OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::Csv:
      out << "p,M_p,b_p\n";
      for (long p = 0; p <= table.P; ++p) {
        const long bp = betti(config.mc, p);
        if (table.at(p) != 0 || bp != 0) out << p << "," << table.at(p) << "," << bp << "\n";
      }
      break;
    case OutputFormat::Json: {
      json j;
      j["schema"] = kSchema;
      j["P"] = table.P;
      j["morse"] = json::object();
      j["betti"] = json::object();
      for (long p = 0; p <= table.P; ++p) {
        if (table.at(p) != 0) j["morse"][std::to_string(p)] = table.at(p);
        const long bp = betti(config.mc, p);
        if (bp != 0) j["betti"][std::to_string(p)] = bp;
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Text:
      out << "Morse-type numbers up to p = " << table.P << " (M_p vs b_p)\n";
      for (long p = 0; p <= table.P; ++p) {
        const long bp = betti(config.mc, p);
        if (table.at(p) == 0 && bp == 0) continue;
        out << "  p = " << p << ": M = " << table.at(p) << ", b = " << bp
            << (table.at(p) == bp ? "" : "   <-- mismatch") << "\n";
      }
      break;
  }
  return out.str();
}

std::string emit_resonance(const ManifoldClass& mc, const ResonanceResult& result,
                           OutputFormat fmt) {
  std::ostringstream out;
  if (fmt == OutputFormat::Json) {
    json j;
    j["schema"] = kSchema;
    j["B"] = result.constant.get_str();
    j["sum"] = result.sum.str();
    j["residual"] = result.residual.str();
    j["pass"] = result.pass;
    out << j.dump(2) << "\n";
  } else {
    out << "resonance: sum gamma/ihat = " << result.sum.str() << ", B(" << mc.d << "," << mc.n
        << ") = " << result.constant.get_str() << " -> " << (result.pass ? "pass" : "FAIL")
        << "\n";
    if (!result.pass) out << "  residual = " << result.residual.str() << "\n";
  }
  return out.str();
}

std::string emit_tuple(const GeodesicConfig& config, const CijTuple& tuple,
                       const CijTuple* paired, OutputFormat fmt) {
  std::ostringstream out;
  if (fmt == OutputFormat::Json) {
    json j;
    j["schema"] = kSchema;
    j["tuple"] = tuple_to_json(config, tuple);
    if (paired) j["paired"] = tuple_to_json(config, *paired);
    out << j.dump(2) << "\n";
  } else {
    out << "N = " << tuple.N.get_str() << " (mbar = " << tuple.mbar << ", Mbar = " << tuple.Mbar
        << ", M0 = " << tuple.M0.get_str() << ")\n";
    for (size_t k = 0; k < config.geodesics.size(); ++k)
      out << "  " << config.geodesics[k].name << ": m = " << tuple.m[k].get_str()
          << ", chi = " << tuple.chi[k] << ", Delta = " << tuple.delta[k]
          << ", C = " << tuple.c_total[k] << "\n";
    if (paired) {
      out << "paired N' = " << paired->N.get_str() << "\n";
      for (size_t k = 0; k < config.geodesics.size(); ++k)
        out << "  " << config.geodesics[k].name << ": m' = " << paired->m[k].get_str()
            << ", Delta' = " << paired->delta[k] << "\n";
    }
  }
  return out.str();
}

std::string emit_audit_report(const GeodesicConfig& config, const AuditReport& report,
                              OutputFormat fmt) {
  std::ostringstream out;
  if (fmt == OutputFormat::Json) {
    json j;
    j["schema"] = kSchema;
    j["verdict"] = report.verdict();
    j["exit_code"] = report.exit_code;
    j["q"] = report.q;
    j["q_expected"] = report.q_expected;
    j["realizable"] = report.realizable;
    j["checks"] = json::array();
    for (const CheckResult& c : report.checks)
      j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)},
                             {"detail", c.detail}});
    if (report.tuple) j["tuple"] = tuple_to_json(config, *report.tuple);
    if (report.paired) j["paired"] = tuple_to_json(config, *report.paired);
    if (report.classification) {
      const Classification& cl = *report.classification;
      json jc;
      jc["n_plus"] = cl.n_plus;
      jc["n_minus"] = cl.n_minus;
      jc["at_2N"] = cl.at_2N;
      jc["buckets"] = cl.bucket;
      j["classification"] = std::move(jc);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "audit of " << (config.description.empty() ? "config" : config.description) << "\n";
    for (const CheckResult& c : report.checks) {
      out << "  [" << status_name(c.status) << "] " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    if (report.classification)
      out << "  buckets: N+ = " << report.classification->n_plus
          << ", N- = " << report.classification->n_minus
          << ", at 2N: " << report.classification->at_2N.size() << "\n";
    out << "  q = " << report.q << " (predicted " << report.q_expected << ")\n";
    out << "verdict: " << report.verdict() << "\n";
  }
  return out.str();
}

}  // namespace cgeo
