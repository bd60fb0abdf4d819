#pragma once

#include <span>
#include <vector>

#include "cgeo/index_iteration.hpp"

namespace cgeo {

/// Manifold class with rational cohomology the truncated polynomial algebra
/// T_{d,n+1}(x): generator degree d >= 2, height n+1. Odd d forces n = 1.
struct ManifoldClass {
  long d = 2;
  long n = 1;

  static ManifoldClass make(long d, long n);

  long dim() const { return d * n; }
  long D() const { return d * (n + 1) - 2; }
  bool even_d() const { return d % 2 == 0; }
  /// Predicted closed-geodesic count in the finite alternative.
  long expected_count() const { return even_d() ? d * n * (n + 1) / 2 : d + 1; }
};

/// B(d,n): -n(n+1)d / (2d(n+1)-4) for even d, (d+1)/(2d-2) for odd d.
Rat resonance_constant(const ManifoldClass& mc);

/// Free-loop-space Betti number b_i(Lambda M / S^1).
/// literal_omega selects the uncorrected index-set convention k2 in [1,n-1]
/// for even d (documented discrepancy; the default is the self-consistent
/// k2 in [0,n-1]).
long betti(const ManifoldClass& mc, long i, bool literal_omega = false);

/// Theta_{d,n}(k) correction term of the even-d closed-form partial sum.
Rat theta(const ManifoldClass& mc, long k);

/// Closed-form partial sum of b_0..b_k (k >= d-1 for odd d, k >= dn-1 for
/// even d). Exact; throws if the closed form fails to be an integer.
Int betti_partial_sum(const ManifoldClass& mc, long k);

struct BettiTable {
  ManifoldClass mc;
  long max_k = 0;
  std::vector<long> values;  // values[i] = b_i, 0 <= i <= max_k
};

BettiTable build_betti_table(const ManifoldClass& mc, long max_k, bool literal_omega = false);

struct ResonanceResult {
  bool pass = false;
  ExactScalar sum;       // sum of gamma_k / ihat_k
  Rat constant;          // B(d,n)
  ExactScalar residual;  // sum - B(d,n), zero iff pass
};

/// Exact resonance identity check: sum_k gamma_k / ihat(c_k) == B(d,n).
ResonanceResult resonance_check(const ManifoldClass& mc,
                                std::span<const GeodesicRecord> records);

}  // namespace cgeo
