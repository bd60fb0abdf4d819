#include "cgeo/morse.hpp"

#include <algorithm>

namespace cgeo {

MorseTable morse_numbers(const GeodesicConfig& config, long P) {
  MorseTable t;
  t.P = P;
  t.totals.assign(P + 1, 0);
  const long q = static_cast<long>(config.geodesics.size());
  std::vector<std::vector<std::pair<long, std::pair<long, long>>>> partial(q);
  std::vector<long> m_bound(q);
  for (long k = 0; k < q; ++k) {
    const GeodesicRecord& rec = config.geodesics[k];
    const ExactScalar ihat = mean_index(rec);
    if (ihat.sign() <= 0) throw FieldError(rec.name + ": mean index must be positive");
    const long r = rec.decomp.counts().bar_r();
    // i(c^m) >= m*ihat - r, so iterates beyond this bound cannot reach P.
    m_bound[k] = static_cast<long>((ExactScalar(Rat(P + r)) / ihat).floor().get_si()) + 1;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < q; ++k) {
    const GeodesicRecord& rec = config.geodesics[k];
    const long m_hi = m_bound[k];
    const Int i1(rec.initial_index);
    for (long m = 1; m <= m_hi; ++m) {
      const Int im = iterate_index_general(rec, m);
      if (im < 0 || im > P) continue;
      // counting rule: an iterate contributes iff i(c^m) - i(c) is even
      if ((im - i1) % 2 != 0) continue;
      partial[k].push_back({im.get_si(), {k, m}});
    }
  }
  for (long k = 0; k < q; ++k)
    for (const auto& [p, km] : partial[k]) {
      t.totals[p]++;
      t.contributors[p].push_back(km);
    }
  return t;
}

MorseIdentityResult morse_identity_check(const GeodesicConfig& config, const MorseTable& table) {
  MorseIdentityResult r;
  long alt_m = 0, alt_b = 0;
  for (long p = 0; p <= table.P; ++p) {
    const long bp = betti(config.mc, p);
    const long mp = table.at(p);
    const long sign = (p % 2 == 0) ? 1 : -1;
    alt_m += sign * mp;
    alt_b += sign * bp;
    if (mp < bp) {
      r.pass = false;
      r.first_fail_p = p;
      r.detail = "M_" + std::to_string(p) + " = " + std::to_string(mp) + " < b_" +
                 std::to_string(p) + " = " + std::to_string(bp);
      return r;
    }
    if (sign * (alt_m - alt_b) < 0) {
      r.pass = false;
      r.first_fail_p = p;
      r.detail = "alternating-sum inequality fails at p = " + std::to_string(p);
      return r;
    }
    if (mp != bp) {
      r.pass = false;
      r.first_fail_p = p;
      r.detail = "M_" + std::to_string(p) + " = " + std::to_string(mp) + " != b_" +
                 std::to_string(p) + " = " + std::to_string(bp);
      return r;
    }
  }
  return r;
}

Claim2Result claim2_check(const GeodesicConfig& config) {
  Claim2Result r;
  const long d = config.mc.d;
  for (const GeodesicRecord& rec : config.geodesics) {
    if (rec.initial_index < d - 1) {
      r.pass = false;
      r.detail = rec.name + ": i(c) = " + std::to_string(rec.initial_index) + " < d-1 = " +
                 std::to_string(d - 1);
      return r;
    }
    if (mean_index(rec).sign() <= 0) {
      r.pass = false;
      r.detail = rec.name + ": mean index not positive";
      return r;
    }
  }
  const MorseTable t = morse_numbers(config, d - 1);
  const auto it = t.contributors.find(d - 1);
  const long count = t.at(d - 1);
  if (count != 1) {
    r.pass = false;
    r.detail = "M_{d-1} = " + std::to_string(count) + ", expected exactly 1";
    return r;
  }
  if (it->second.front().second != 1) {
    r.pass = false;
    r.detail = "the unique contributor to M_{d-1} is not the first iterate";
  }
  return r;
}

Classification classify_counts(const GeodesicConfig& config, const CijTuple& tuple) {
  Classification c;
  c.even_d = config.mc.even_d();
  const Int twoN = 2 * tuple.N;
  for (size_t k = 0; k < config.geodesics.size(); ++k) {
    const long mk = tuple.m[k].get_si();
    const Int v = iterate_index_general(config.geodesics[k], 2 * mk);
    if (c.even_d) {
      // Parity forbids i(c_k^{2m_k}) = 2N here; bucket by >= 2N+1 / <= 2N-1.
      if (v >= twoN + 1) {
        c.n_plus++;
        c.bucket.push_back("+");
      } else {
        c.n_minus++;
        c.bucket.push_back("-");
      }
    } else {
      if (v == twoN) {
        c.at_2N.push_back(static_cast<long>(k));
        c.bucket.push_back("2N");
      } else if (v >= twoN + 2) {
        c.n_plus++;
        c.bucket.push_back("+");
      } else {
        c.n_minus++;
        c.bucket.push_back("-");
      }
    }
  }
  return c;
}

std::string AuditReport::verdict() const {
  switch (exit_code) {
    case 0:
      return "pass";
    case 2:
      return "fail";
    case 3:
      return "invalid-config";
    case 4:
      return "exhausted";
  }
  return "unknown";
}

namespace {

void push(AuditReport& rep, const std::string& name, CheckStatus st, const std::string& detail) {
  rep.checks.push_back({name, st, detail});
  if (st == CheckStatus::Fail && rep.exit_code == 0) rep.exit_code = 2;
}

}  // namespace

AuditReport audit(const GeodesicConfig& config, const AuditParams& params) {
  AuditReport rep;
  rep.q = static_cast<long>(config.geodesics.size());
  rep.q_expected = config.mc.expected_count();

  const auto violations = validate_config(config, ValidationMode::BumpyElliptic);
  if (!violations.empty()) {
    std::string detail;
    for (const auto& v : violations) detail += (detail.empty() ? "" : "; ") + v;
    push(rep, "validation", CheckStatus::Fail, detail);
    rep.exit_code = 3;
    return rep;
  }
  push(rep, "validation", CheckStatus::Pass, "bumpy elliptic, dimensions consistent");

  // Claim 1: index parity i(c^m) = dn-1 (mod 2)
  {
    bool ok = true;
    std::string detail;
    for (const GeodesicRecord& rec : config.geodesics) {
      if (auto bad = parity_check(rec, config.dn_minus_1(), 100)) {
        ok = false;
        detail = rec.name + ": parity violated at m = " + std::to_string(*bad);
        break;
      }
    }
    push(rep, "claim1_parity", ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
    if (!ok) return rep;
  }

  {
    const Claim2Result c2 = claim2_check(config);
    push(rep, "claim2_minimal_index", c2.pass ? CheckStatus::Pass : CheckStatus::SoftFail,
         c2.detail);
    if (!c2.pass) rep.realizable = false;
  }

  try {
    const ResonanceResult res = resonance_check(config.mc, config.geodesics);
    push(rep, "resonance", res.pass ? CheckStatus::Pass : CheckStatus::SoftFail,
         res.pass ? "sum gamma_k/ihat_k = " + res.constant.get_str()
                  : "residual " + res.residual.str());
    if (!res.pass) rep.realizable = false;
  } catch (const FieldError& e) {
    push(rep, "resonance", CheckStatus::Fail, e.what());
    return rep;
  }

  // Tuple search first: the default Morse window is the proof's 2N+1.
  CijParams cp{params.epsilon, params.N_max, params.M0_override, true};
  try {
    rep.tuple = find_tuple(config, cp);
  } catch (const SearchExhausted& e) {
    push(rep, "cij_tuple", CheckStatus::Fail, e.what());
    rep.exit_code = 4;
    return rep;
  } catch (const VerificationFailure& e) {
    push(rep, "cij_tuple", CheckStatus::Fail, e.what());
    return rep;
  }
  push(rep, "cij_tuple", CheckStatus::Pass,
       "N = " + rep.tuple->N.get_str() + ", verified through mbar = " +
           std::to_string(rep.tuple->mbar));

  long P = params.max_p;
  if (P <= 0) P = 2 * rep.tuple->N.get_si() + 1;
  {
    const MorseTable mt = morse_numbers(config, P);
    const MorseIdentityResult mi = morse_identity_check(config, mt);
    push(rep, "morse_identity", mi.pass ? CheckStatus::Pass : CheckStatus::SoftFail,
         mi.pass ? "M_p = b_p for p <= " + std::to_string(P) : mi.detail);
    if (!mi.pass) rep.realizable = false;
  }

  try {
    rep.paired = find_paired_tuple(config, *rep.tuple, cp);
    push(rep, "cij_paired_tuple", CheckStatus::Pass, "N' = " + rep.paired->N.get_str());
  } catch (const SearchExhausted& e) {
    push(rep, "cij_paired_tuple", CheckStatus::SoftFail, e.what());
  } catch (const VerificationFailure& e) {
    push(rep, "cij_paired_tuple", CheckStatus::Fail, e.what());
    return rep;
  }

  {
    const Claim3Result c3 = claim3_check(config, *rep.tuple);
    CheckStatus st = CheckStatus::Skipped;
    if (c3.status == Claim3Status::Pass) st = CheckStatus::Pass;
    // Claim 3 is unconditional under its preconditions: a failure there is
    // an internal inconsistency, hence hard.
    if (c3.status == Claim3Status::Fail) st = CheckStatus::Fail;
    push(rep, "claim3", st, c3.detail);
    if (st == CheckStatus::Fail) return rep;
  }

  rep.classification = classify_counts(config, *rep.tuple);
  const Classification& cl = *rep.classification;
  {
    const long buckets_total =
        cl.n_plus + cl.n_minus + static_cast<long>(cl.at_2N.size());
    push(rep, "bucket_partition", buckets_total == rep.q ? CheckStatus::Pass : CheckStatus::Fail,
         "N+ = " + std::to_string(cl.n_plus) + ", N- = " + std::to_string(cl.n_minus) +
             ", at 2N: " + std::to_string(cl.at_2N.size()));
  }
  if (rep.paired) {
    const Classification swapped = classify_counts(config, *rep.paired);
    const bool ok = swapped.n_plus == cl.n_minus && swapped.n_minus == cl.n_plus &&
                    swapped.at_2N == cl.at_2N;
    push(rep, "bucket_swap", ok ? CheckStatus::Pass : CheckStatus::Fail,
         ok ? "paired tuple swaps the buckets" : "paired buckets are not the mirror image");
  }

  // Predicted counts are asserted only on configs passing the Morse precheck.
  if (rep.realizable) {
    bool ok;
    std::string detail;
    if (config.mc.even_d()) {
      const long expect_half = config.mc.expected_count() / 2;
      ok = rep.q == rep.q_expected && cl.n_plus == expect_half && cl.n_minus == expect_half &&
           cl.at_2N.empty();
      detail = "q = " + std::to_string(rep.q) + " vs dn(n+1)/2 = " +
               std::to_string(rep.q_expected);
    } else {
      const long half = (config.mc.d - 1) / 2;
      ok = rep.q == rep.q_expected && cl.n_plus == half && cl.n_minus == half &&
           cl.at_2N.size() == 2;
      detail = "q = " + std::to_string(rep.q) + " vs d+1 = " + std::to_string(rep.q_expected) +
               ", at-2N count " + std::to_string(cl.at_2N.size());
    }
    push(rep, "predicted_counts", ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
  } else {
    push(rep, "predicted_counts", CheckStatus::Skipped,
         "config failed the realizability precheck; count prediction not asserted");
  }
  return rep;
}

}  // namespace cgeo
