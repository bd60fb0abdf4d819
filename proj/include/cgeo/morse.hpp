#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgeo/cij.hpp"
#include "cgeo/config.hpp"

namespace cgeo {

/// Morse-type numbers M_p up to a cutoff, with the contributing iterates.
struct MorseTable {
  long P = 0;
  std::vector<long> totals;  // totals[p] = M_p, 0 <= p <= P
  // contributors[p]: list of (geodesic index k, iterate m) with i(c_k^m) = p
  std::map<long, std::vector<std::pair<long, long>>> contributors;

  long at(long p) const { return (p >= 0 && p <= P) ? totals[p] : 0; }
};

MorseTable morse_numbers(const GeodesicConfig& config, long P);

struct MorseIdentityResult {
  bool pass = true;
  long first_fail_p = -1;
  std::string detail;
};

/// Checks M_p >= b_p, the alternating-sum inequalities, and the bumpy-case
/// equalities M_p = b_p for all p <= P. A failure certifies that the config
/// is not realizable by a metric, not an internal error.
MorseIdentityResult morse_identity_check(const GeodesicConfig& config, const MorseTable& table);

struct Claim2Result {
  bool pass = true;
  std::string detail;
};

/// i(c_k) >= d-1 for all k, positive mean indices, and M_{d-1} = 1 with the
/// unique contributor at m = 1.
Claim2Result claim2_check(const GeodesicConfig& config);

struct Classification {
  bool even_d = true;
  long n_plus = 0;   // N_+ (even d) or N-hat_+ (odd d)
  long n_minus = 0;  // N_- or N-hat_-
  std::vector<long> at_2N;          // geodesic indices with i(c_k^{2m_k}) = 2N (odd d)
  std::vector<std::string> bucket;  // per geodesic: "+", "-", or "2N"
};

Classification classify_counts(const GeodesicConfig& config, const CijTuple& tuple);

enum class CheckStatus { Pass, Fail, SoftFail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct AuditParams {
  Rat epsilon = Rat(3, 100);
  Int N_max = 1000000;
  long max_p = 0;  // 0: default to 2N+1 once the tuple is known
  std::optional<Int> M0_override;
};

struct AuditReport {
  std::vector<CheckResult> checks;
  std::optional<CijTuple> tuple;
  std::optional<CijTuple> paired;
  std::optional<Classification> classification;
  long q = 0;
  long q_expected = 0;
  bool realizable = true;  // Morse precheck verdict on the tested window
  int exit_code = 0;       // 0 pass, 2 structural fail, 3 invalid config, 4 exhausted
  std::string verdict() const;
};

/// Full multiplicity audit pipeline: validation, Claim 1, Claim 2, resonance,
/// Morse identity, tuple search + verification, paired tuple, Claim 3,
/// classification, predicted-count comparison.
AuditReport audit(const GeodesicConfig& config, const AuditParams& params);

}  // namespace cgeo
