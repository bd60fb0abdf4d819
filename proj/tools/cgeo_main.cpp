// cgeo: exact-arithmetic toolkit for closed-geodesic multiplicity audits.
//
// Subcommands: betti, classify, iterate, resonance, morse, cij, audit,
// synthesize. Configs are JSON files; "-" reads standard input. Exit codes:
// 0 success, 2 structural check failed, 3 invalid config, 4 search exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cgeo/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw cgeo::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

cgeo::Rat parse_rational(const std::string& text, const char* what) {
  cgeo::Rat r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw cgeo::ConfigError(std::string("bad ") + what + " '" + text + "' (exact rational expected)");
  r.canonicalize();
  return r;
}

std::optional<cgeo::Int> parse_m0(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  return cgeo::Int(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact index-iteration, resonance and common-index-jump audits"};
  app.require_subcommand(1);

  std::string config_path = "-";
  std::string output = "text";
  std::string epsilon = "3/100";
  std::string max_n = "1000000";
  std::string m0 = "auto";
  std::string geodesic_name;
  long d = 2, n = 1, max_k = 100, max_m = 50, max_p = 0, attempts = 1000;
  unsigned long seed = 0;
  bool literal_omega = false, pair = false, serial = false;
  std::string out_file;

  auto* betti_cmd = app.add_subcommand("betti", "free-loop-space Betti table");
  betti_cmd->add_option("--d", d)->required();
  betti_cmd->add_option("--n", n)->required();
  betti_cmd->add_option("--max-k", max_k);
  betti_cmd->add_flag("--literal-omega", literal_omega,
                      "use the uncorrected Omega index-set convention");
  betti_cmd->add_option("--output", output);

  auto add_config_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("config", config_path, "config file or - for stdin");
    c->add_option("--output", output);
    return c;
  };

  auto* classify_cmd = add_config_cmd("classify", "spectral classification per geodesic");
  auto* iterate_cmd = add_config_cmd("iterate", "index iteration table");
  iterate_cmd->add_option("--name", geodesic_name, "restrict to one geodesic");
  iterate_cmd->add_option("--max-m", max_m);
  auto* resonance_cmd = add_config_cmd("resonance", "exact resonance identity check");
  auto* morse_cmd = add_config_cmd("morse", "Morse-type numbers vs Betti numbers");
  morse_cmd->add_option("--max-p", max_p)->required();
  auto* cij_cmd = add_config_cmd("cij", "common index jump tuple search");
  cij_cmd->add_option("--epsilon", epsilon);
  cij_cmd->add_option("--max-N", max_n);
  cij_cmd->add_option("--m0", m0, "divisor for N: auto (D or d-1) or an integer");
  cij_cmd->add_flag("--pair", pair, "also search a complementary tuple");
  cij_cmd->add_flag("--serial", serial, "disable the parallel scan");
  auto* audit_cmd = add_config_cmd("audit", "full multiplicity-theorem audit");
  audit_cmd->add_option("--epsilon", epsilon);
  audit_cmd->add_option("--max-N", max_n);
  audit_cmd->add_option("--max-p", max_p, "Morse window (default: 2N+1)");
  audit_cmd->add_option("--m0", m0);

  auto* synth_cmd = app.add_subcommand("synthesize", "randomized resonance-exact config search");
  synth_cmd->add_option("--d", d)->required();
  synth_cmd->add_option("--n", n)->required();
  synth_cmd->add_option("--seed", seed);
  synth_cmd->add_option("--attempts", attempts);
  synth_cmd->add_option("-o,--out", out_file, "write the config here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const cgeo::OutputFormat fmt = cgeo::parse_output_format(output);

    if (betti_cmd->parsed()) {
      const auto mc = cgeo::ManifoldClass::make(d, n);
      std::cout << cgeo::emit_betti_table(cgeo::build_betti_table(mc, max_k, literal_omega), fmt);
      return 0;
    }
    if (synth_cmd->parsed()) {
      const cgeo::GeodesicConfig cfg = cgeo::synthesize_config(d, n, seed, attempts);
      const std::string text = cgeo::emit_config(cfg);
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_file);
        f << text;
      }
      std::cerr << "# " << cfg.source << "\n";
      return 0;
    }

    const cgeo::GeodesicConfig cfg = cgeo::parse_config(read_input(config_path));

    if (classify_cmd->parsed()) {
      for (const auto& rec : cfg.geodesics) {
        const auto sc = cgeo::classify(rec.decomp, cfg.dn_minus_1());
        std::cout << rec.name << ": e(P) = " << cgeo::elliptic_height(rec.decomp)
                  << (sc.elliptic ? ", elliptic" : "") << (sc.hyperbolic ? ", hyperbolic" : "")
                  << (sc.non_degenerate ? ", non-degenerate" : ", degenerate")
                  << (sc.irrationally_elliptic ? ", irrationally elliptic" : "") << "\n";
      }
      return 0;
    }
    if (iterate_cmd->parsed()) {
      for (const auto& rec : cfg.geodesics) {
        if (!geodesic_name.empty() && rec.name != geodesic_name) continue;
        std::cout << cgeo::emit_iterate_table(rec, cgeo::iterate_table(rec, max_m), fmt);
      }
      return 0;
    }
    if (resonance_cmd->parsed()) {
      const auto res = cgeo::resonance_check(cfg.mc, cfg.geodesics);
      std::cout << cgeo::emit_resonance(cfg.mc, res, fmt);
      return res.pass ? 0 : 2;
    }
    if (morse_cmd->parsed()) {
      const auto table = cgeo::morse_numbers(cfg, max_p);
      std::cout << cgeo::emit_morse_table(cfg, table, fmt);
      return cgeo::morse_identity_check(cfg, table).pass ? 0 : 2;
    }
    if (cij_cmd->parsed()) {
      cgeo::CijParams params;
      params.epsilon = parse_rational(epsilon, "epsilon");
      params.N_max = cgeo::Int(max_n);
      params.M0_override = parse_m0(m0);
      params.parallel = !serial;
      const cgeo::CijTuple tuple = cgeo::find_tuple(cfg, params);
      std::optional<cgeo::CijTuple> paired;
      if (pair) paired = cgeo::find_paired_tuple(cfg, tuple, params);
      std::cout << cgeo::emit_tuple(cfg, tuple, paired ? &*paired : nullptr, fmt);
      return 0;
    }
    if (audit_cmd->parsed()) {
      cgeo::AuditParams params;
      params.epsilon = parse_rational(epsilon, "epsilon");
      params.N_max = cgeo::Int(max_n);
      params.max_p = max_p;
      params.M0_override = parse_m0(m0);
      const cgeo::AuditReport rep = cgeo::audit(cfg, params);
      std::cout << cgeo::emit_audit_report(cfg, rep, fmt);
      return rep.exit_code;
    }
  } catch (const cgeo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const cgeo::SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return 4;
  } catch (const cgeo::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const cgeo::FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
