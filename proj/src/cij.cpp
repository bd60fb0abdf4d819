#include "cgeo/cij.hpp"

#include <algorithm>

#include "cgeo/config.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cgeo {

namespace {

// Precomputed per-geodesic scan state: w_k = 1/(Mbar ihat_k) and the exact
// floor/frac increments of one M0-sized step of N. Fractional parts keep a
// fixed denominator, so the incremental scan does not grow coefficients.
struct ScanSetup {
  long q = 0;
  long M0 = 1;
  long Mbar = 1;
  long mbar = 1;
  Rat eps;
  std::vector<ExactScalar> w;
  std::vector<Int> step_floor;
  std::vector<ExactScalar> step_frac;
};

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw FieldError(std::string(what) + " exceeds the scan range");
  return v.get_si();
}

ScanSetup make_setup(const GeodesicConfig& config, const CijParams& params,
                     const CijDerived& derived) {
  ScanSetup s;
  s.q = static_cast<long>(config.geodesics.size());
  s.M0 = to_long(params.M0_override.value_or(derived.M0), "M0");
  if (s.M0 < 1) throw FieldError("M0 must be positive");
  s.Mbar = derived.Mbar;
  s.mbar = derived.mbar;
  s.eps = params.epsilon;
  if (s.eps <= 0) throw FieldError("epsilon must be positive");
  for (const GeodesicRecord& rec : config.geodesics) {
    const ExactScalar ihat = mean_index(rec);
    if (ihat.sign() <= 0) throw FieldError(rec.name + ": mean index must be positive");
    ExactScalar w = ExactScalar(1) / (ExactScalar(Rat(s.Mbar)) * ihat);
    ExactScalar step = s.M0 * w;
    s.w.push_back(w);
    s.step_floor.push_back(step.floor());
    s.step_frac.push_back(step.frac());
  }
  return s;
}

struct ScanState {
  std::vector<Int> ip;
  std::vector<ExactScalar> fr;
};

ScanState state_at(const ScanSetup& s, long N) {
  ScanState st;
  for (long k = 0; k < s.q; ++k) {
    ExactScalar v = N * s.w[k];
    st.ip.push_back(v.floor());
    st.fr.push_back(v.frac());
  }
  return st;
}

void advance(const ScanSetup& s, ScanState& st) {
  const ExactScalar one(1);
  for (long k = 0; k < s.q; ++k) {
    st.fr[k] += s.step_frac[k];
    Int carry = s.step_floor[k];
    if (st.fr[k] >= one) {
      st.fr[k] -= one;
      carry += 1;
    }
    st.ip[k] += carry;
  }
}

// chi patterns for an admissible N; nullopt when some geodesic misses both
// targets. chi_k = 0 wins ties.
std::optional<std::vector<int>> admissible_chi(const ScanSetup& s, const ScanState& st) {
  const ExactScalar eps((s.eps));
  std::vector<int> chi(s.q, 0);
  for (long k = 0; k < s.q; ++k) {
    if (st.fr[k] < eps) {
      chi[k] = 0;
    } else if (ExactScalar(1) - st.fr[k] < eps) {
      chi[k] = 1;
    } else {
      return std::nullopt;
    }
    Int mk = (st.ip[k] + chi[k]) * s.Mbar;
    if (mk < 1 || 2 * mk < s.mbar + 2) return std::nullopt;
  }
  return chi;
}

CijTuple build_tuple(const ScanSetup& s, long N, const ScanState& st,
                     const std::vector<int>& chi) {
  CijTuple t;
  t.N = N;
  t.chi = chi;
  t.epsilon = s.eps;
  t.mbar = s.mbar;
  t.Mbar = s.Mbar;
  t.M0 = s.M0;
  for (long k = 0; k < s.q; ++k) t.m.push_back((st.ip[k] + chi[k]) * s.Mbar);
  return t;
}

// Q_k(m) of the jump theorem: S^- mass at eigenvalue angles x with
// {2 m_k x} = 0 and {m x} = 0.
long q_term(const SplittingProfile& profile, const Int& mk, long m) {
  long q = 0;
  for (const auto& [x, sp] : profile.at) {
    if (x == ExactScalar(1)) continue;
    if ((ExactScalar(Rat(2 * mk)) * x).is_integer() && (m * x).is_integer()) q += sp.second;
  }
  return q;
}

void verify_and_extract(const GeodesicConfig& config, CijTuple& t) {
  const long q = static_cast<long>(config.geodesics.size());
  const Int twoN = 2 * t.N;
  t.delta.assign(q, 0);
  t.c_total.assign(q, 0);
  for (long k = 0; k < q; ++k) {
    const GeodesicRecord& rec = config.geodesics[k];
    const SplittingProfile profile = splitting_profile(rec.decomp);
    const long s_plus_one = profile.s_plus_at_one();
    const long C = profile.c_total();
    const long mk = to_long(t.m[k], "m_k");
    for (long m = 1; m <= t.mbar; ++m) {
      const long nu = nullity_of_iterate(rec.decomp, m);
      if (nullity_of_iterate(rec.decomp, 2 * mk + m) != nu ||
          nullity_of_iterate(rec.decomp, 2 * mk - m) != nu)
        throw VerificationFailure(rec.name + ": nullity relation fails at m=" +
                                  std::to_string(m));
      const Int im = iterate_index_general(rec, m);
      if (iterate_index_general(rec, 2 * mk + m) != twoN + im)
        throw VerificationFailure(rec.name + ": i(c^{2m_k+m}) != 2N + i(c^m) at m=" +
                                  std::to_string(m));
      const Int correction = 2 * Int(s_plus_one + q_term(profile, t.m[k], m));
      if (iterate_index_general(rec, 2 * mk - m) != twoN - im - correction)
        throw VerificationFailure(rec.name + ": i(c^{2m_k-m}) relation fails at m=" +
                                  std::to_string(m));
    }
    const Int i2mk = iterate_index_general(rec, 2 * mk);
    const Int twice_delta = i2mk - twoN + s_plus_one + C;
    if (twice_delta % 2 != 0)
      throw VerificationFailure(rec.name + ": Delta_k extraction is not an integer");
    const Int delta = twice_delta / 2;
    if (delta < 0 || delta > C)
      throw VerificationFailure(rec.name + ": Delta_k = " + delta.get_str() +
                                " outside [0, C(M_k)=" + std::to_string(C) + "]");
    t.delta[k] = to_long(delta, "Delta_k");
    t.c_total[k] = C;
  }
}

// Serial scan from N = start (inclusive) calling visit on each admissible
// candidate until it returns true. Returns the accepted N or nullopt.
template <typename Visit>
std::optional<long> scan_serial(const ScanSetup& s, long start, long N_max, Visit visit) {
  if (start > N_max) return std::nullopt;
  ScanState st = state_at(s, start);
  for (long N = start;; N += s.M0) {
    if (auto chi = admissible_chi(s, st)) {
      if (visit(N, st, *chi)) return N;
    }
    if (N + s.M0 > N_max) return std::nullopt;
    advance(s, st);
  }
}

// Chunked parallel scan for the first admissible N. Chunks are scanned
// independently; the minimum over per-chunk first hits is the global first
// hit, so the result is schedule-independent.
std::optional<long> scan_parallel_first(const ScanSetup& s, long start, long N_max) {
  const long steps = N_max / s.M0;
  const long chunk = 4096;
  const long nchunks = (steps + chunk - 1) / chunk;
  const long wave = 64;
  const long first_wanted = (start + s.M0 - 1) / s.M0;
  for (long wave_start = (first_wanted - 1) / chunk; wave_start < nchunks; wave_start += wave) {
    const long wave_end = std::min(nchunks, wave_start + wave);
    long best = -1;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best)
    for (long c = wave_start; c < wave_end; ++c) {
      const long first_step = std::max(c * chunk + 1, first_wanted);
      const long last_step = std::min(steps, (c + 1) * chunk);
      long hit = -1;
      ScanState st = state_at(s, first_step * s.M0);
      for (long step = first_step; step <= last_step; ++step) {
        if (admissible_chi(s, st)) {
          hit = step * s.M0;
          break;
        }
        advance(s, st);
      }
      // encode "smallest hit" through a max-reduction
      best = std::max(best, hit < 0 ? -1 : (1l << 62) - hit);
    }
    if (best > 0) return (1l << 62) - best;
  }
  return std::nullopt;
}

}  // namespace

CijDerived mbar_M0_Mbar(const GeodesicConfig& config) {
  CijDerived d;
  d.mbar = mbar_threshold(config.geodesics);
  d.M0 = config.mc.even_d() ? Int(config.mc.D()) : Int(config.mc.d - 1);
  Int lcm_den(1);
  for (const GeodesicRecord& rec : config.geodesics)
    for (const BlockSpec& b : rec.decomp.blocks)
      if ((b.type == BlockType::R || b.type == BlockType::N2) && b.angle.is_rational()) {
        Rat half_turns = b.angle.rational_part() * 2;  // theta/pi
        half_turns.canonicalize();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), half_turns.get_den_mpz_t());
      }
  d.Mbar = to_long(lcm_den, "Mbar");
  return d;
}

CijTuple find_tuple_serial(const GeodesicConfig& config, const CijParams& params) {
  const ScanSetup s = make_setup(config, params, mbar_M0_Mbar(config));
  const long N_max = to_long(params.N_max, "N_max");
  CijTuple result;
  auto hit = scan_serial(s, s.M0, N_max, [&](long N, const ScanState& st,
                                             const std::vector<int>& chi) {
    CijTuple cand = build_tuple(s, N, st, chi);
    try {
      verify_and_extract(config, cand);
    } catch (const VerificationFailure&) {
      return false;  // admissible but fails the jump relations; keep scanning
    }
    result = std::move(cand);
    return true;
  });
  if (!hit)
    throw SearchExhausted("no verifiable admissible N <= " + std::to_string(N_max) +
                          " with epsilon " + params.epsilon.get_str());
  return result;
}

CijTuple find_tuple(const GeodesicConfig& config, const CijParams& params) {
  if (!params.parallel) return find_tuple_serial(config, params);
  const ScanSetup s = make_setup(config, params, mbar_M0_Mbar(config));
  const long N_max = to_long(params.N_max, "N_max");
  long start = s.M0;
  while (true) {
    auto hit = scan_parallel_first(s, start, N_max);
    if (!hit)
      throw SearchExhausted("no verifiable admissible N <= " + std::to_string(N_max) +
                            " with epsilon " + params.epsilon.get_str());
    ScanState st = state_at(s, *hit);
    auto chi = admissible_chi(s, st);
    CijTuple result = build_tuple(s, *hit, st, *chi);
    try {
      verify_and_extract(config, result);
    } catch (const VerificationFailure&) {
      start = *hit + s.M0;  // same skip rule as the serial scan
      continue;
    }
    return result;
  }
}

CijTuple find_paired_tuple(const GeodesicConfig& config, const CijTuple& first,
                           const CijParams& params) {
  const ScanSetup s = make_setup(config, params, mbar_M0_Mbar(config));
  const long N_max = to_long(params.N_max, "N_max");
  const long N_first = to_long(first.N, "N");
  CijTuple result;
  bool found = false;
  scan_serial(s, s.M0, N_max, [&](long N, const ScanState& st, const std::vector<int>& chi) {
    if (N == N_first) return false;
    CijTuple cand = build_tuple(s, N, st, chi);
    try {
      verify_and_extract(config, cand);
    } catch (const VerificationFailure&) {
      return false;  // same skip rule as find_tuple
    }
    for (size_t k = 0; k < cand.delta.size(); ++k)
      if (cand.delta[k] + first.delta[k] != first.c_total[k]) return false;
    result = std::move(cand);
    found = true;
    return true;
  });
  if (!found)
    throw SearchExhausted("no complementary tuple below N_max = " + std::to_string(N_max));
  return result;
}

void verify_tuple(const GeodesicConfig& config, const CijTuple& tuple) {
  const long q = static_cast<long>(config.geodesics.size());
  const long N = to_long(tuple.N, "N");
  if (tuple.M0 != 0 && N % to_long(tuple.M0, "M0") != 0)
    throw VerificationFailure("M0 does not divide N");
  for (long k = 0; k < q; ++k) {
    const ExactScalar w =
        ExactScalar(1) / (ExactScalar(Rat(tuple.Mbar)) * mean_index(config.geodesics[k]));
    const ExactScalar v = N * w;
    // m_k reconstruction and the fractional-part admissibility bound.
    if (tuple.m[k] != (v.floor() + tuple.chi[k]) * tuple.Mbar)
      throw VerificationFailure(config.geodesics[k].name + ": m_k mismatch");
    ExactScalar dist = v.frac() - ExactScalar(Rat(tuple.chi[k]));
    if (dist.sign() < 0) dist = -dist;
    if (!(dist < ExactScalar(tuple.epsilon)))
      throw VerificationFailure(config.geodesics[k].name + ": fractional-part bound fails");
  }
  CijTuple copy = tuple;
  verify_and_extract(config, copy);
  if (copy.delta != tuple.delta || copy.c_total != tuple.c_total)
    throw VerificationFailure("stored Delta_k / C(M_k) do not match re-extraction");
}

Rat claim3_epsilon_threshold(const GeodesicConfig& config, long Mbar) {
  Rat sum(0);
  for (const GeodesicRecord& rec : config.geodesics) sum += abs(gamma_invariant(rec));
  return Rat(1) / (1 + 2 * Mbar * sum);
}

Claim3Result claim3_check(const GeodesicConfig& config, const CijTuple& tuple) {
  Claim3Result r;
  r.status = Claim3Status::PreconditionNotMet;
  const ResonanceResult res = resonance_check(config.mc, config.geodesics);
  if (!res.pass) {
    r.detail = "resonance identity does not hold";
    return r;
  }
  const Rat threshold = claim3_epsilon_threshold(config, tuple.Mbar);
  if (tuple.epsilon >= threshold) {
    r.detail = "epsilon " + tuple.epsilon.get_str() + " is not below the threshold " +
               threshold.get_str();
    return r;
  }
  r.rhs = 2 * tuple.N * resonance_constant(config.mc);
  r.rhs.canonicalize();
  if (r.rhs.get_den() != 1 || r.rhs.get_num() % 2 != 0) {
    r.detail = "2 N B(d,n) = " + r.rhs.get_str() + " is not an even integer";
    return r;
  }
  Rat lhs(0);
  for (size_t k = 0; k < config.geodesics.size(); ++k)
    lhs += 2 * Rat(tuple.m[k]) * gamma_invariant(config.geodesics[k]);
  lhs.canonicalize();
  if (lhs.get_den() != 1) {
    r.status = Claim3Status::Fail;
    r.detail = "sum 2 m_k gamma_k is not an integer";
    return r;
  }
  r.lhs = lhs.get_num();
  r.status = (lhs == r.rhs) ? Claim3Status::Pass : Claim3Status::Fail;
  if (r.status == Claim3Status::Fail) r.detail = "sum 2 m_k gamma_k != 2 N B(d,n)";
  return r;
}

}  // namespace cgeo
