#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgeo/loop_betti.hpp"

namespace cgeo {

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A tuple whose verification failed indicates an unsound splitting table or
/// a configuration outside the theorem's hypotheses, never a near-miss.
struct VerificationFailure : std::runtime_error {
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct GeodesicConfig;  // cgeo/config.hpp

/// A common-index-jump tuple (N, {m_k}, {chi_k}) with the extracted index
/// jump defects Delta_k and the search parameters that produced it.
struct CijTuple {
  Int N;
  std::vector<Int> m;
  std::vector<int> chi;
  Rat epsilon;
  long mbar = 1;
  long Mbar = 1;
  Int M0;
  std::vector<long> delta;    // Delta_k, in [0, C(M_k)]
  std::vector<long> c_total;  // C(M_k)
};

struct CijParams {
  Rat epsilon = Rat(3, 100);
  Int N_max = 1000000;
  std::optional<Int> M0_override;
  bool parallel = true;
};

struct CijDerived {
  long mbar;
  Int M0;
  long Mbar;
};

/// (mbar, M0, Mbar) for a config: the index growth threshold, the divisor
/// imposed on N (D for even d, d-1 for odd d), and the lcm of denominators
/// of rational normalized angles theta/pi (1 in bumpy mode).
CijDerived mbar_M0_Mbar(const GeodesicConfig& config);

/// Smallest N <= N_max with M0 | N admitting chi_k in {0,1} with
/// |{N / (Mbar ihat_k)} - chi_k| < epsilon for all k AND passing direct
/// verification of the index jump relations; admissible candidates that
/// fail verification are skipped. Deterministic regardless of
/// parallelization. chi_k = 0 is preferred on ties.
CijTuple find_tuple(const GeodesicConfig& config, const CijParams& params);

/// Serial reference scan; must return exactly what find_tuple returns.
CijTuple find_tuple_serial(const GeodesicConfig& config, const CijParams& params);

/// Second verified tuple with Delta_k + Delta'_k = C(M_k) for every k.
CijTuple find_paired_tuple(const GeodesicConfig& config, const CijTuple& first,
                           const CijParams& params);

/// Re-verifies a tuple from its fields alone (admissibility per the
/// fractional-part bound, m_k reconstruction, nullity and index relations,
/// Delta extraction). Throws VerificationFailure on any broken relation.
void verify_tuple(const GeodesicConfig& config, const CijTuple& tuple);

enum class Claim3Status { Pass, Fail, PreconditionNotMet };

struct Claim3Result {
  Claim3Status status;
  Int lhs;  // sum 2 m_k gamma_k (integer by parity)
  Rat rhs;  // 2 N B(d,n)
  std::string detail;
};

/// Exact integer identity sum_k 2 m_k gamma_k = 2 N B(d,n), valid when
/// resonance holds, epsilon is below 1/(1 + 2 Mbar sum |gamma_k|), and
/// 2 N B(d,n) is an even integer.
Claim3Result claim3_check(const GeodesicConfig& config, const CijTuple& tuple);

/// Upper bound on admissible epsilon for claim3_check.
Rat claim3_epsilon_threshold(const GeodesicConfig& config, long Mbar);

}  // namespace cgeo
