#include "cgeo/config.hpp"

#include <json.hpp>

#include <random>
#include <set>

#include "cgeo/cij.hpp"
#include "cgeo/morse.hpp"

namespace cgeo {

using json = nlohmann::ordered_json;

namespace {

BlockSpec parse_block(const json& jb, long radicand, const std::string& path) {
  if (!jb.is_object() || !jb.contains("type"))
    throw ConfigError(path + ": block must be an object with a \"type\" field");
  const std::string type = jb.at("type").get<std::string>();
  try {
    if (type == "R") {
      return BlockSpec::rot(ExactScalar::parse(jb.at("angle").get<std::string>(), radicand));
    } else if (type == "N2") {
      return BlockSpec::n2(ExactScalar::parse(jb.at("angle").get<std::string>(), radicand),
                           jb.at("nontrivial").get<bool>());
    } else if (type == "N1") {
      return BlockSpec::n1(jb.at("lambda").get<int>(), jb.at("a").get<int>());
    } else if (type == "H") {
      return BlockSpec::h(jb.at("sign").get<int>());
    }
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  } catch (const FieldError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ": unknown block type \"" + type + "\"");
}

json block_to_json(const BlockSpec& b) {
  json jb;
  switch (b.type) {
    case BlockType::R:
      jb["type"] = "R";
      jb["angle"] = b.angle.str();
      break;
    case BlockType::N2:
      jb["type"] = "N2";
      jb["angle"] = b.angle.str();
      jb["nontrivial"] = b.nontrivial;
      break;
    case BlockType::N1:
      jb["type"] = "N1";
      jb["lambda"] = b.lambda;
      jb["a"] = b.a;
      break;
    case BlockType::H:
      jb["type"] = "H";
      jb["sign"] = b.h_sign;
      break;
  }
  return jb;
}

// The config format forbids floating literals entirely: one rounded angle
// would invalidate every downstream floor.
void reject_floats(const json& j, const std::string& path) {
  if (j.is_number_float())
    throw ConfigError(path + ": floating-point literal; scalars must be exact strings");
  if (j.is_object())
    for (const auto& [k, v] : j.items()) reject_floats(v, path + "." + k);
  if (j.is_array())
    for (size_t i = 0; i < j.size(); ++i) reject_floats(j[i], path + "[" + std::to_string(i) + "]");
}

}  // namespace

GeodesicConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("syntax error: ") + e.what());
  }
  reject_floats(j, "$");
  GeodesicConfig cfg;
  try {
    cfg.mc = ManifoldClass::make(j.at("manifold").at("d").get<long>(),
                                 j.at("manifold").at("n").get<long>());
    cfg.radicand = j.at("field").at("radicand").get<long>();
    cfg.description = j.value("description", "");
    cfg.source = j.value("source", "");
    if (!is_square_free(cfg.radicand) || cfg.radicand < 2)
      throw ConfigError("field.radicand: must be a square-free integer >= 2");
    std::set<std::string> names;
    for (const json& jg : j.at("geodesics")) {
      GeodesicRecord rec;
      rec.name = jg.at("name").get<std::string>();
      rec.initial_index = jg.at("initial_index").get<long>();
      if (rec.initial_index < 0)
        throw ConfigError(rec.name + ": initial_index must be non-negative");
      if (!names.insert(rec.name).second)
        throw ConfigError("duplicate geodesic name \"" + rec.name + "\"");
      const json& jblocks = jg.at("blocks");
      for (size_t i = 0; i < jblocks.size(); ++i)
        rec.decomp.blocks.push_back(parse_block(
            jblocks[i], cfg.radicand, rec.name + ".blocks[" + std::to_string(i) + "]"));
      if (rec.decomp.dim_half() != cfg.dn_minus_1())
        throw ConfigError(rec.name + ": block dimensions sum to " +
                          std::to_string(rec.decomp.dim_half()) + ", expected dn-1 = " +
                          std::to_string(cfg.dn_minus_1()));
      for (const Violation& v : validate(rec.decomp, cfg.dn_minus_1(), ValidationMode::General))
        throw ConfigError(rec.name + ": " + v.what);
      cfg.geodesics.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  } catch (const FieldError& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
  return cfg;
}

std::string emit_config(const GeodesicConfig& config) {
  json j;
  j["manifold"] = {{"d", config.mc.d}, {"n", config.mc.n}};
  j["field"] = {{"radicand", config.radicand}};
  if (!config.description.empty()) j["description"] = config.description;
  if (!config.source.empty()) j["source"] = config.source;
  j["geodesics"] = json::array();
  for (const GeodesicRecord& rec : config.geodesics) {
    json jg;
    jg["name"] = rec.name;
    jg["initial_index"] = rec.initial_index;
    jg["blocks"] = json::array();
    for (const BlockSpec& b : rec.decomp.blocks) jg["blocks"].push_back(block_to_json(b));
    j["geodesics"].push_back(std::move(jg));
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> validate_config(const GeodesicConfig& config, ValidationMode mode) {
  std::vector<std::string> out;
  for (const GeodesicRecord& rec : config.geodesics)
    for (const Violation& v : validate(rec.decomp, config.dn_minus_1(), mode))
      out.push_back(rec.name + ": " + v.what);
  return out;
}

namespace {

// Random irrational a + b sqrt(D) in (lo, hi), b != 0.
ExactScalar random_irrational(std::mt19937_64& rng, long radicand, const Rat& lo, const Rat& hi) {
  std::uniform_int_distribution<long> num(1, 400);
  std::uniform_int_distribution<long> den(7, 512);
  for (;;) {
    const long bd = den(rng);
    const Rat b(num(rng) % bd + 1, bd);
    const long ad = den(rng);
    const Rat a(num(rng) % (2 * ad + 1) - ad, ad);
    ExactScalar x(a, b, radicand);
    if (ExactScalar(lo) < x && x < ExactScalar(hi)) return x;
  }
}

long morse_window_score(const GeodesicConfig& cfg, long window) {
  const MorseTable t = morse_numbers(cfg, window);
  const MorseIdentityResult r = morse_identity_check(cfg, t);
  return r.pass ? window + 1 : r.first_fail_p;
}

// Katok-style family on a d=2 class: two geodesics with mean indices
// 2/(1 ± alpha) realized by a single rotation block each.
std::optional<GeodesicConfig> katok_even(std::mt19937_64& rng, long radicand) {
  const ExactScalar alpha = random_irrational(rng, radicand, Rat(1, 100), Rat(99, 100));
  GeodesicConfig cfg;
  cfg.mc = ManifoldClass::make(2, 1);
  cfg.radicand = radicand;
  cfg.description = "synthesized Katok-style S^2 configuration";
  int idx = 1;
  for (int s : {+1, -1}) {
    const ExactScalar ihat = ExactScalar(2) / (1 + s * alpha);
    const Int i_lo = ihat.floor();
    long i = i_lo.get_si();
    if (i % 2 == 0) ++i;  // odd parity, and i-1 < ihat < i+1
    if (i < 1 || !(ExactScalar(Rat(i - 1)) < ihat && ihat < ExactScalar(Rat(i + 1))))
      return std::nullopt;
    const ExactScalar x = (ihat - Rat(i - 1)) / 2;
    if (x.sign() <= 0 || x >= ExactScalar(1) || x.is_rational() || x == ExactScalar(Rat(1, 2)))
      return std::nullopt;
    GeodesicRecord rec;
    rec.name = "c" + std::to_string(idx++);
    rec.initial_index = i;
    rec.decomp.blocks.push_back(BlockSpec::rot(x));
    cfg.geodesics.push_back(std::move(rec));
  }
  return cfg;
}

// Katok-style family on S^3 (d=3): four geodesics with mean indices
// 4/(1 ± alpha_i); the transverse angles of each are the fractional parts of
// (1 ± alpha_other)/(1 ± alpha_self) and the initial index absorbs the
// integer parts.
std::optional<GeodesicConfig> katok_s3(std::mt19937_64& rng, long radicand) {
  const ExactScalar a1 = random_irrational(rng, radicand, Rat(1, 20), Rat(9, 20));
  const ExactScalar a2 = random_irrational(rng, radicand, Rat(1, 20), Rat(9, 20));
  if (a1 == a2) return std::nullopt;
  GeodesicConfig cfg;
  cfg.mc = ManifoldClass::make(3, 1);
  cfg.radicand = radicand;
  cfg.description = "synthesized Katok-style S^3 configuration";
  int idx = 1;
  for (auto [self, other, s] : {std::tuple{a1, a2, +1}, {a2, a1, +1}, {a1, a2, -1}, {a2, a1, -1}}) {
    const ExactScalar rho = ExactScalar(1) / (1 + s * self);
    long floors = 0;
    std::vector<ExactScalar> angles;
    for (int t : {+1, -1}) {
      const ExactScalar u = (1 + t * other) * rho;
      floors += u.floor().get_si();
      const ExactScalar x = u.frac();
      if (x.sign() <= 0 || x.is_rational() || x == ExactScalar(Rat(1, 2))) return std::nullopt;
      angles.push_back(x);
    }
    GeodesicRecord rec;
    rec.name = "c" + std::to_string(idx++);
    rec.initial_index = 2 + 2 * floors;
    for (ExactScalar& x : angles) rec.decomp.blocks.push_back(BlockSpec::rot(std::move(x)));
    cfg.geodesics.push_back(std::move(rec));
  }
  return cfg;
}

// Generic resonance solver: q-1 random records, the last mean index solved
// from the resonance identity and realized as an all-rotation decomposition.
std::optional<GeodesicConfig> generic_family(std::mt19937_64& rng, long d, long n, long radicand) {
  const ManifoldClass mc = ManifoldClass::make(d, n);
  const long q = mc.expected_count();
  const long r = mc.dim() - 1;
  const long parity = (mc.dim() - 1) % 2;
  GeodesicConfig cfg;
  cfg.mc = mc;
  cfg.radicand = radicand;
  cfg.description = "synthesized generic configuration";
  // In the bumpy elliptic case all gamma agree: sum 1/ihat_k = |B(d,n)|.
  ExactScalar remaining = ExactScalar(abs(resonance_constant(mc)));
  std::uniform_int_distribution<long> ipick(0, 2);
  for (long k = 0; k < q; ++k) {
    GeodesicRecord rec;
    rec.name = "c" + std::to_string(k + 1);
    ExactScalar ihat;
    if (k + 1 < q) {
      // keep enough resonance budget for the remaining geodesics
      for (int tries = 0;; ++tries) {
        if (tries > 32) return std::nullopt;
        long i = d - 1 + (k == 0 ? 0 : 2 * (1 + ipick(rng)));
        if ((i - parity) % 2 != 0) ++i;
        std::vector<ExactScalar> xs;
        ExactScalar sum;
        for (long jb = 0; jb < r; ++jb) {
          ExactScalar x = random_irrational(rng, radicand, Rat(1, 16), Rat(15, 16));
          sum += x;
          xs.push_back(std::move(x));
        }
        ihat = ExactScalar(Rat(i - r)) + 2 * sum;
        if (ihat.sign() <= 0) continue;
        ExactScalar budget = remaining - ExactScalar(1) / ihat;
        if (budget.sign() <= 0) continue;
        rec.initial_index = i;
        for (ExactScalar& x : xs) rec.decomp.blocks.push_back(BlockSpec::rot(std::move(x)));
        remaining = budget;
        break;
      }
    } else {
      ihat = ExactScalar(1) / remaining;
      // pick i with i - r < ihat - 2*(r-1 small angles) ... realize greedily:
      // choose i of the right parity with 0 < ihat - (i - r) < 2r.
      const long i_center = ihat.floor().get_si() + r - r;  // ~ [ihat]
      bool done = false;
      for (long i = std::max(d - 1, i_center - 2 * r); i <= i_center + 2 * r && !done; ++i) {
        if ((i - parity) % 2 != 0) continue;
        ExactScalar target = (ihat - Rat(i - r)) / 2;  // sum of r angles
        if (target.sign() <= 0 || target >= ExactScalar(Rat(r))) continue;
        std::vector<ExactScalar> xs;
        ExactScalar acc;
        for (long jb = 0; jb + 1 < r; ++jb) {
          ExactScalar x = random_irrational(rng, radicand, Rat(1, 64), Rat(63, 64));
          xs.push_back(x);
          acc += x;
        }
        ExactScalar last = target - acc;
        if (last.sign() <= 0 || last >= ExactScalar(1) || last.is_rational() ||
            last == ExactScalar(Rat(1, 2)))
          continue;
        xs.push_back(last);
        bool ok = true;
        for (const ExactScalar& x : xs)
          if (x.sign() <= 0 || x >= ExactScalar(1) || x.is_rational() ||
              x == ExactScalar(Rat(1, 2)))
            ok = false;
        if (!ok) continue;
        rec.initial_index = i;
        for (ExactScalar& x : xs) rec.decomp.blocks.push_back(BlockSpec::rot(std::move(x)));
        done = true;
      }
      if (!done) return std::nullopt;
    }
    cfg.geodesics.push_back(std::move(rec));
  }
  return cfg;
}

}  // namespace

GeodesicConfig synthesize_config(long d, long n, unsigned long seed, long attempts) {
  const ManifoldClass mc = ManifoldClass::make(d, n);
  std::mt19937_64 rng(seed);
  const long radicand = (seed % 2 == 0) ? 2 : 5;
  const long window = 2 * (mc.dim() + 2) * 10;
  std::optional<GeodesicConfig> best;
  long best_score = -1;
  for (long attempt = 0; attempt < attempts; ++attempt) {
    std::optional<GeodesicConfig> cand;
    if (d == 2 && n == 1)
      cand = katok_even(rng, radicand);
    else if (d == 3 && n == 1)
      cand = katok_s3(rng, radicand);
    else
      cand = generic_family(rng, d, n, radicand);
    if (!cand) continue;
    if (!validate_config(*cand, ValidationMode::BumpyElliptic).empty()) continue;
    if (!resonance_check(mc, cand->geodesics).pass) continue;
    if (!claim2_check(*cand).pass) continue;
    const long score = morse_window_score(*cand, window);
    if (score > best_score) {
      best_score = score;
      best = std::move(cand);
      if (best_score > window) break;  // Morse window fully passed
    }
  }
  if (!best)
    throw SearchExhausted("no resonance-exact candidate in " + std::to_string(attempts) +
                          " attempts for (d,n) = (" + std::to_string(d) + "," +
                          std::to_string(n) + ")");
  best->source = "synthesize_config(seed=" + std::to_string(seed) +
                 "), morse window score " + std::to_string(best_score);
  return *best;
}

}  // namespace cgeo
