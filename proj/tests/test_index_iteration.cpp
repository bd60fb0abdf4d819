#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cgeo/index_iteration.hpp"

using namespace cgeo;

namespace {

GeodesicRecord elliptic_record(std::string name, long i, std::vector<ExactScalar> angles) {
  GeodesicRecord r;
  r.name = std::move(name);
  r.initial_index = i;
  for (ExactScalar& x : angles) r.decomp.blocks.push_back(BlockSpec::rot(std::move(x)));
  return r;
}

ExactScalar rand_irrational_angle(std::mt19937_64& rng, long rad) {
  std::uniform_int_distribution<long> num(1, 999);
  return ExactScalar(Rat(0), Rat(num(rng), 1000), rad).frac();
}

}  // namespace

TEST_CASE("iterated index of the S^2 witness geodesics") {
  const ExactScalar x(Rat(0), Rat(1, 2), 2);  // sqrt(2)/2
  const GeodesicRecord c1 = elliptic_record("c1", 1, {x});
  const GeodesicRecord c2 = elliptic_record("c2", 3, {x});
  // i(c1^m) = 2[m sqrt(2)/2] + 1, i(c2^m) = 2m + 2[m sqrt(2)/2] + 1.
  const long floors[] = {0, 0, 1, 2, 2, 3, 4, 4, 5, 6, 7};  // [m sqrt(2)/2], m=0..10
  for (long m = 1; m <= 10; ++m) {
    CHECK(iterate_index_elliptic(c1, m) == 2 * floors[m] + 1);
    CHECK(iterate_index_elliptic(c2, m) == 2 * m + 2 * floors[m] + 1);
    CHECK(iterate_index_general(c1, m) == iterate_index_elliptic(c1, m));
    CHECK(iterate_index_general(c2, m) == iterate_index_elliptic(c2, m));
  }
  CHECK(iterate_index_general(c1, 24) == 33);
  CHECK(iterate_index_general(c2, 10) == 35);
}

TEST_CASE("elliptic and general formulas agree on random bumpy elliptic data") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const long rad = trial % 2 ? 2 : 5;
    std::vector<ExactScalar> angles;
    const long r = 1 + trial % 3;
    for (long j = 0; j < r; ++j) angles.push_back(rand_irrational_angle(rng, rad));
    const GeodesicRecord rec = elliptic_record("t", trial % 9, angles);
    for (long m = 1; m <= 40; ++m) {
      INFO("trial=", trial, " m=", m);
      CHECK(iterate_index_general(rec, m) == iterate_index_elliptic(rec, m));
    }
  }
}

TEST_CASE("elliptic formula rejects non-elliptic input") {
  GeodesicRecord rec;
  rec.initial_index = 1;
  rec.decomp.blocks = {BlockSpec::h(1)};
  CHECK_THROWS_AS(iterate_index_elliptic(rec, 2), FieldError);
  GeodesicRecord rat = elliptic_record("rat", 1, {ExactScalar(Rat(1, 3))});
  CHECK_THROWS_AS(iterate_index_elliptic(rat, 2), FieldError);
}

TEST_CASE("mean index is the exact growth rate") {
  const ExactScalar x(Rat(0), Rat(1, 2), 2);
  const GeodesicRecord c2 = elliptic_record("c2", 3, {x});
  const ExactScalar ihat = mean_index(c2);
  CHECK(ihat == 2 + ExactScalar::root(2));
  // |i(c^m) - m ihat| < r for bumpy elliptic records: check a long prefix.
  for (long m = 1; m <= 200; ++m) {
    const ExactScalar gap = ExactScalar(Rat(Int(iterate_index_elliptic(c2, m)))) - m * ihat;
    CHECK((gap < ExactScalar(1)));
    CHECK((gap > ExactScalar(-1)));
  }
  // Degenerate example: mean index of a single N1(1,0) record with i = 2 is
  // i + p0 = 3 (no rotation terms).
  GeodesicRecord deg;
  deg.initial_index = 2;
  deg.decomp.blocks = {BlockSpec::n1(1, 0)};
  CHECK(mean_index(deg) == ExactScalar(3));
}

TEST_CASE("parity law for elliptic records on spheres") {
  const GeodesicRecord c1 =
      elliptic_record("c1", 1, {ExactScalar(Rat(0), Rat(1, 2), 2)});
  CHECK_FALSE(parity_check(c1, 1, 500).has_value());
  // An even initial index on S^2 breaks parity immediately.
  const GeodesicRecord bad =
      elliptic_record("bad", 2, {ExactScalar(Rat(0), Rat(1, 2), 2)});
  CHECK(parity_check(bad, 1, 500) == 1);
}

TEST_CASE("gamma invariant enumerates its four values") {
  // gamma > 0 iff i(c) even; |gamma| = 1 iff i(c^2) - i(c) even. With r
  // rotation blocks, i(c^2) - i(c) = i - r + 2 sum [2 x_j], so its parity is
  // i + r: one block realizes {-1, +1/2}, two blocks realize {+1, -1/2}.
  const ExactScalar x(Rat(0), Rat(1, 2), 2);
  const ExactScalar y(Rat(0), Rat(1, 4), 2);
  CHECK(gamma_invariant(elliptic_record("a", 1, {x})) == Rat(-1));
  CHECK(gamma_invariant(elliptic_record("b", 2, {x})) == Rat(1, 2));
  CHECK(gamma_invariant(elliptic_record("c", 2, {x, y})) == Rat(1));
  CHECK(gamma_invariant(elliptic_record("d", 1, {x, y})) == Rat(-1, 2));
}

TEST_CASE("mbar threshold is a sound over-approximation") {
  const ExactScalar x(Rat(0), Rat(1, 2), 2);
  std::vector<GeodesicRecord> recs = {elliptic_record("c1", 1, {x}),
                                      elliptic_record("c2", 3, {x})};
  const long mbar = mbar_threshold(recs);
  CHECK(mbar >= 1);
  // Soundness: for every record, m >= mbar implies the growth term
  // m(i - r) + 2 sum [m x_j] is non-negative; spot-check a window, and
  // confirm monotone domination i(c^{m+l}) >= i(c^l).
  for (const GeodesicRecord& rec : recs)
    for (long m = mbar; m <= mbar + 300; ++m)
      for (long l = 1; l <= 5; ++l)
        CHECK(iterate_index_elliptic(rec, m + l) >= iterate_index_elliptic(rec, l));
}

TEST_CASE("iterate table carries indices and nullities") {
  const GeodesicRecord c = elliptic_record("c", 1, {ExactScalar(Rat(0), Rat(1, 2), 2)});
  const auto rows = iterate_table(c, 12);
  REQUIRE(rows.size() == 12);
  for (const IterateRow& row : rows) {
    CHECK(row.index == iterate_index_general(c, row.m));
    CHECK(row.nullity == 0);  // irrational angle: no iterate degenerates
  }
  GeodesicRecord rat = elliptic_record("rat", 1, {ExactScalar(Rat(1, 3))});
  const auto rrows = iterate_table(rat, 6);
  CHECK(rrows[2].nullity == 2);  // m = 3
  CHECK(rrows[5].nullity == 2);  // m = 6
  CHECK(rrows[0].nullity == 0);
}
