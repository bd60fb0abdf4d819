#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cgeo {

using Int = mpz_class;
using Rat = mpq_class;

struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

bool is_square_free(long d);

/// An element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), with
/// exact ordering, floor/ceiling and fractional part. A pure rational is
/// encoded with b = 0 (its radicand is the neutral value 0, so rationals
/// combine with scalars of any radicand).
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), rad_(0) {}
  ExactScalar(long v) : a_(v), b_(0), rad_(0) {}  // NOLINT(runtime/explicit)
  ExactScalar(Rat a) : a_(std::move(a)), b_(0), rad_(0) { a_.canonicalize(); }
  ExactScalar(Rat a, Rat b, long radicand);

  /// sqrt(D) itself.
  static ExactScalar root(long radicand) { return ExactScalar(Rat(0), Rat(1), radicand); }

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  long radicand() const { return rad_; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }

  /// Exact sign in {-1, 0, +1}, decided by integer arithmetic.
  int sign() const;

  Int floor() const;
  Int ceil() const;
  ExactScalar frac() const;             // x - [x], in [0,1)
  int phi() const { return is_integer() ? 0 : 1; }  // E(x) - [x]

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  bool operator<(const ExactScalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const ExactScalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const ExactScalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const ExactScalar& o) const { return (*this - o).sign() >= 0; }

  /// Serializes as "a+b√D", e.g. "1/2+3/14√2", "-√2", "5/3".
  std::string str() const;

  /// Parses the "a+b√D" form ("sqrt" accepted as a spelling of "√").
  /// If expected_radicand >= 0, a radical with a different radicand is
  /// rejected.
  static ExactScalar parse(const std::string& text, long expected_radicand = -1);

  /// Double approximation, for diagnostics only. Never used in decisions.
  double approx() const;

 private:
  // Resulting radicand of combining two scalars; throws on a genuine mix.
  static long unify(long r1, long r2);

  Rat a_, b_;
  long rad_;  // 0 iff b_ == 0
};

inline ExactScalar operator+(long v, const ExactScalar& x) { return ExactScalar(v) + x; }
inline ExactScalar operator-(long v, const ExactScalar& x) { return ExactScalar(v) - x; }
inline ExactScalar operator*(long v, const ExactScalar& x) { return ExactScalar(v) * x; }

}  // namespace cgeo
