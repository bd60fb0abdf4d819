#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cgeo/exact_scalar.hpp"

using namespace cgeo;

namespace {

// Independent floor/sign oracle: bracket sqrt(D) between two rationals that
// agree to `digits` decimal digits (integer square root of D*10^(2*digits)),
// then take the rational floors of the resulting bounds. Only trusts
// mpz_sqrt and exact rational arithmetic, none of ExactScalar's internals.
struct Oracle {
  Rat lo, hi;  // lo <= sqrt(D) < hi
  explicit Oracle(long D, int digits = 100) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int s;
    mpz_sqrt(s.get_mpz_t(), Int(D * scale * scale).get_mpz_t());
    lo = Rat(s, scale);
    hi = Rat(s + 1, scale);
    lo.canonicalize();
    hi.canonicalize();
  }

  static Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
  }

  // Returns floor bounds [f_lo, f_hi] of a + b*sqrt(D); they coincide unless
  // the value sits within 10^-digits of an integer.
  std::pair<Int, Int> floor_bounds(const Rat& a, const Rat& b) const {
    const Rat x1 = a + b * (b >= 0 ? lo : hi);
    const Rat x2 = a + b * (b >= 0 ? hi : lo);
    return {rat_floor(x1), rat_floor(x2)};
  }
};

Rat rand_rat(std::mt19937_64& rng, long max_abs = 1000, long max_den = 1000) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs), den(1, max_den);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("square-free detection") {
  CHECK(is_square_free(2));
  CHECK(is_square_free(3));
  CHECK(is_square_free(5));
  CHECK(is_square_free(6));
  CHECK(is_square_free(2026));
  CHECK_FALSE(is_square_free(4));
  CHECK_FALSE(is_square_free(12));
  CHECK_FALSE(is_square_free(18));
  CHECK_THROWS_AS(ExactScalar(Rat(1), Rat(1), 12), FieldError);
  CHECK_THROWS_AS(ExactScalar(Rat(1), Rat(1), 1), FieldError);
  CHECK_THROWS_AS(ExactScalar(Rat(1), Rat(1), -2), FieldError);
}

TEST_CASE("construction and basic predicates") {
  const ExactScalar x(Rat(1, 2), Rat(3, 14), 2);
  CHECK(x.rational_part() == Rat(1, 2));
  CHECK(x.radical_part() == Rat(3, 14));
  CHECK(x.radicand() == 2);
  CHECK_FALSE(x.is_rational());
  // b = 0 normalizes to the pure-rational encoding regardless of radicand.
  const ExactScalar y(Rat(7, 3), Rat(0), 5);
  CHECK(y.is_rational());
  CHECK(y.radicand() == 0);
  CHECK(ExactScalar(4).is_integer());
  CHECK_FALSE(ExactScalar(Rat(1, 2)).is_integer());
}

TEST_CASE("exact sign against the interval oracle") {
  const Oracle oracle(2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rat a = rand_rat(rng), b = rand_rat(rng);
    const ExactScalar x(a, b, 2);
    const Rat lo = a + b * (b >= 0 ? oracle.lo : oracle.hi);
    const Rat hi = a + b * (b >= 0 ? oracle.hi : oracle.lo);
    if (sgn(lo) == sgn(hi)) CHECK(x.sign() == sgn(lo));
  }
  CHECK(ExactScalar(Rat(0), Rat(0), 2).sign() == 0);
  // a^2 = b^2 D exactly, signs of a and b differ: the value is zero only if
  // both vanish, so these are strict.
  CHECK(ExactScalar(Rat(3), Rat(-2), 2).sign() > 0);   // 3 > 2*sqrt(2)
  CHECK(ExactScalar(Rat(-3), Rat(2), 2).sign() < 0);
  CHECK(ExactScalar(Rat(2), Rat(-1), 5).sign() < 0);   // 2 < sqrt(5)
}

TEST_CASE("floor/ceil/frac against the interval oracle, 10000 random scalars") {
  std::mt19937_64 rng(42);
  for (long D : {2L, 5L}) {
    const Oracle oracle(D);
    for (int trial = 0; trial < 5000; ++trial) {
      const Rat a = rand_rat(rng, 100000, 9999), b = rand_rat(rng, 100000, 9999);
      const ExactScalar x(a, b, D);
      const auto [flo, fhi] = oracle.floor_bounds(a, b);
      REQUIRE(flo == fhi);  // 100-digit window never straddles an integer here
      const Int f = x.floor();
      CHECK(f == flo);
      CHECK(x.ceil() == ((x - ExactScalar(Rat(f))).sign() == 0 ? f : f + 1));
      const ExactScalar fr = x.frac();
      CHECK(fr == x - ExactScalar(Rat(f)));
      CHECK(fr.sign() >= 0);
      CHECK((fr - 1).sign() < 0);
    }
  }
}

TEST_CASE("floor at exact integers and near-integer radicals") {
  CHECK(ExactScalar(Rat(3)).floor() == 3);
  CHECK(ExactScalar(Rat(-3)).floor() == -3);
  CHECK(ExactScalar(Rat(-7, 2)).floor() == -4);
  CHECK(ExactScalar::root(2).floor() == 1);
  CHECK((-ExactScalar::root(2)).floor() == -2);
  // 99/70 is a continued-fraction convergent of sqrt(2) from above:
  // 99/70 - sqrt(2) is about 7e-5 but positive.
  CHECK((ExactScalar(Rat(99, 70)) - ExactScalar::root(2)).sign() > 0);
  CHECK((ExactScalar(Rat(99, 70)) - ExactScalar::root(2)).floor() == 0);
  CHECK((ExactScalar::root(2) - ExactScalar(Rat(99, 70))).floor() == -1);
  // phi(x) = ceil - floor.
  CHECK(ExactScalar(5).phi() == 0);
  CHECK(ExactScalar::root(2).phi() == 1);
  CHECK(ExactScalar(Rat(1, 2)).phi() == 1);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const ExactScalar x(rand_rat(rng), rand_rat(rng), 5);
    const ExactScalar y(rand_rat(rng), rand_rat(rng), 5);
    const ExactScalar z(rand_rat(rng), rand_rat(rng), 5);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == ExactScalar(0));
    CHECK(x - y == x + (-y));
    if (y.sign() != 0) {
      CHECK((x / y) * y == x);
      CHECK(y / y == ExactScalar(1));
    }
  }
  CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), FieldError);
}

TEST_CASE("radicand unification") {
  const ExactScalar r2 = ExactScalar::root(2), r5 = ExactScalar::root(5);
  CHECK_THROWS_AS(r2 + r5, FieldError);
  CHECK_THROWS_AS(r2 * r5, FieldError);
  CHECK(r2 + ExactScalar(Rat(1, 3)) == ExactScalar(Rat(1, 3), Rat(1), 2));
  CHECK(r2 * r2 == ExactScalar(2));
  CHECK(r5 * r5 == ExactScalar(5));
  // Multiplying down to a rational drops the radicand entirely, after which
  // the result combines with the other field.
  const ExactScalar two = r2 * r2;
  CHECK(two.radicand() == 0);
  CHECK(two + r5 == ExactScalar(Rat(2), Rat(1), 5));
}

TEST_CASE("ordering is a total order consistent with approx") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const ExactScalar x(rand_rat(rng), rand_rat(rng), 2);
    const ExactScalar y(rand_rat(rng), rand_rat(rng), 2);
    CHECK(((x < y) + (x == y) + (y < x)) == 1);
    if (x < y) CHECK(x.approx() < y.approx() + 1e-9);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const ExactScalar x(rand_rat(rng), rand_rat(rng), trial % 2 ? 2 : 5);
    CHECK(ExactScalar::parse(x.str()) == x);
  }
  CHECK(ExactScalar(Rat(1, 2), Rat(3, 14), 2).str() == "1/2+3/14√2");
  CHECK(ExactScalar(Rat(0), Rat(-1), 2).str() == "-√2");
  CHECK(ExactScalar(Rat(5, 3)).str() == "5/3");
  CHECK(ExactScalar(Rat(1), Rat(-2, 7), 5).str() == "1-2/7√5");
}

TEST_CASE("parse grammar") {
  CHECK(ExactScalar::parse("1/2+3/14√2") == ExactScalar(Rat(1, 2), Rat(3, 14), 2));
  CHECK(ExactScalar::parse("1/2 + 3/14 sqrt2") == ExactScalar(Rat(1, 2), Rat(3, 14), 2));
  CHECK(ExactScalar::parse("1/2+3/14sqrt(2)") == ExactScalar(Rat(1, 2), Rat(3, 14), 2));
  CHECK(ExactScalar::parse("-√2") == -ExactScalar::root(2));
  CHECK(ExactScalar::parse("√2-1") == ExactScalar(Rat(-1), Rat(1), 2));
  CHECK(ExactScalar::parse("20/7-12/7√2") == ExactScalar(Rat(20, 7), Rat(-12, 7), 2));
  CHECK(ExactScalar::parse("0") == ExactScalar(0));
  CHECK(ExactScalar::parse("-5/3") == ExactScalar(Rat(-5, 3)));
  CHECK_THROWS_AS(ExactScalar::parse(""), FieldError);
  CHECK_THROWS_AS(ExactScalar::parse("1+1"), FieldError);       // duplicate rational term
  CHECK_THROWS_AS(ExactScalar::parse("√2+√2"), FieldError);     // duplicate radical term
  CHECK_THROWS_AS(ExactScalar::parse("1/2+1/3√8"), FieldError); // not square-free
  CHECK_THROWS_AS(ExactScalar::parse("1.5"), FieldError);
  CHECK_THROWS_AS(ExactScalar::parse("√2", 5), FieldError);     // wrong field
  CHECK(ExactScalar::parse("√2", 2) == ExactScalar::root(2));
  CHECK(ExactScalar::parse("3/4", 2) == ExactScalar(Rat(3, 4)));  // rationals fit any field
}
