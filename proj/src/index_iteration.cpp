#include "cgeo/index_iteration.hpp"

namespace cgeo {

Int iterate_index_general(const GeodesicRecord& rec, long m) {
  if (m < 1) throw FieldError("iterate count must be >= 1");
  const BlockCounts c = rec.decomp.counts();
  Int i(rec.initial_index);
  Int result = m * (i + c.p_minus + c.p_zero - c.bar_r());
  for (const BlockSpec& b : rec.decomp.blocks) {
    if (b.type == BlockType::R) result += 2 * (m * b.angle).ceil();
    if (b.type == BlockType::N2 && b.nontrivial) result += 2 * (m * b.angle).phi();
  }
  result -= c.bar_r() + c.p_minus + c.p_zero;
  if (m % 2 == 0) result -= c.q_zero + c.q_plus;
  result -= 2 * c.r_star;
  return result;
}

Int iterate_index_elliptic(const GeodesicRecord& rec, long m) {
  if (m < 1) throw FieldError("iterate count must be >= 1");
  const BlockCounts c = rec.decomp.counts();
  if (c.p_minus + c.p_zero + c.p_plus + c.q_minus + c.q_zero + c.q_plus + c.r_rat + c.h != 0)
    throw FieldError(rec.name + ": decomposition is not bumpy elliptic");
  const long r = c.r_irr;
  Int result = m * Int(rec.initial_index - r) + r;
  for (const BlockSpec& b : rec.decomp.blocks)
    if (b.type == BlockType::R) result += 2 * (m * b.angle).floor();
  return result;
}

ExactScalar mean_index(const GeodesicRecord& rec) {
  const BlockCounts c = rec.decomp.counts();
  ExactScalar slope(Rat(rec.initial_index + c.p_minus + c.p_zero - c.bar_r()));
  for (const BlockSpec& b : rec.decomp.blocks)
    if (b.type == BlockType::R) slope += 2 * b.angle;
  return slope;
}

Rat gamma_invariant(const GeodesicRecord& rec) {
  const Int i1(rec.initial_index);
  const Int i2 = iterate_index_general(rec, 2);
  const bool even_start = (rec.initial_index % 2 == 0);
  Rat mag = (Int(i2 - i1) % 2 == 0) ? Rat(1) : Rat(1, 2);
  return even_start ? mag : -mag;
}

std::optional<long> parity_check(const GeodesicRecord& rec, long dn_minus_1, long m_max) {
  for (long m = 1; m <= m_max; ++m) {
    Int diff = iterate_index_general(rec, m) - dn_minus_1;
    if (diff % 2 != 0) return m;
  }
  return std::nullopt;
}

long mbar_threshold(std::span<const GeodesicRecord> records) {
  long threshold = 1;
  for (const GeodesicRecord& rec : records) {
    const BlockCounts c = rec.decomp.counts();
    const long r = c.bar_r();
    const ExactScalar ihat = mean_index(rec);
    if (ihat.sign() <= 0) throw FieldError(rec.name + ": mean index must be positive");
    // Beyond m_cert, m*ihat - 2r > 0 certifies the floor sum stays
    // non-negative; below it we scan exactly.
    const Int cert = (ExactScalar(Rat(2 * r)) / ihat).floor() + 1;
    const long m_cert = static_cast<long>(cert.get_si());
    auto defect_ok = [&](long m) {
      Int g = m * Int(rec.initial_index - r);
      for (const BlockSpec& b : rec.decomp.blocks)
        if (b.type == BlockType::R) g += 2 * (m * b.angle).floor();
      return sgn(g) >= 0;
    };
    long first_all_ok = 1;
    for (long m = 1; m <= m_cert; ++m)
      if (!defect_ok(m)) first_all_ok = m + 1;
    threshold = std::max(threshold, first_all_ok);
  }
  return threshold;
}

std::vector<IterateRow> iterate_table(const GeodesicRecord& rec, long m_max) {
  std::vector<IterateRow> rows;
  rows.reserve(m_max);
  for (long m = 1; m <= m_max; ++m)
    rows.push_back({m, iterate_index_general(rec, m), nullity_of_iterate(rec.decomp, m)});
  return rows;
}

}  // namespace cgeo
