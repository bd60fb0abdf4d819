#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgeo/normal_form.hpp"

namespace cgeo {

struct GeodesicRecord {
  std::string name;
  long initial_index = 0;  // i(c) >= 0
  PoincareDecomposition decomp;
};

/// Full iteration formula for the Morse index of the m-th iterate, valid for
/// any basic normal-form decomposition.
Int iterate_index_general(const GeodesicRecord& rec, long m);

/// Specialized iteration formula m(i-r) + 2 sum [m x_j] + r for bumpy
/// elliptic decompositions (rotation and N2 blocks with irrational angles
/// only). Agrees with iterate_index_general on its domain.
Int iterate_index_elliptic(const GeodesicRecord& rec, long m);

/// Linear growth rate of the iterated index, exact in the quadratic field.
ExactScalar mean_index(const GeodesicRecord& rec);

/// gamma_c in {±1/2, ±1}: positive iff i(c) even, magnitude 1 iff
/// i(c^2) - i(c) even.
Rat gamma_invariant(const GeodesicRecord& rec);

/// Checks i(c^m) = dn-1 (mod 2) for 1 <= m <= m_max. Returns the first
/// violating m, or nullopt when the parity law holds throughout.
std::optional<long> parity_check(const GeodesicRecord& rec, long dn_minus_1, long m_max);

/// Sound over-approximation of the index growth threshold: the smallest m*
/// such that every record satisfies m(i-r) + 2 sum [m x_j] >= 0 for all
/// m >= m*, which forces i(c^{m+l}) >= i(c^l) for every l.
long mbar_threshold(std::span<const GeodesicRecord> records);

struct IterateRow {
  long m;
  Int index;
  long nullity;
};

std::vector<IterateRow> iterate_table(const GeodesicRecord& rec, long m_max);

}  // namespace cgeo
