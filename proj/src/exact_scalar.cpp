#include "cgeo/exact_scalar.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace cgeo {

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

ExactScalar::ExactScalar(Rat a, Rat b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), rad_(radicand) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) {
    rad_ = 0;
  } else {
    if (rad_ < 2 || !is_square_free(rad_))
      throw FieldError("radicand must be a square-free integer >= 2, got " +
                       std::to_string(rad_));
  }
}

long ExactScalar::unify(long r1, long r2) {
  if (r1 == 0) return r2;
  if (r2 == 0 || r1 == r2) return r1;
  throw FieldError("mixed radicands " + std::to_string(r1) + " and " + std::to_string(r2));
}

int ExactScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against D b^2.
  Rat diff = a_ * a_ - b_ * b_ * rad_;
  const int s = sgn(diff);
  // a + b sqrt(D) = 0 would force sqrt(D) rational.
  if (s == 0) throw FieldError("radicand is a perfect square");
  return sa > 0 ? s : -s;
}

Int ExactScalar::floor() const {
  if (b_ == 0) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  // Write x = (A + B sqrt(D)) / C with integers A, B and C > 0, then use
  // [B sqrt(D)] via an integer square root: B sqrt(D) is irrational, so
  // k <= x  <=>  kC - A <= [B sqrt(D)].
  Int C;
  mpz_lcm(C.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  Int A = Int(a_ * C);
  Int B = Int(b_ * C);
  Int t = B * B * rad_;
  Int root;
  mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
  Int v = (sgn(B) > 0) ? root : Int(-root - 1);
  Int q;
  Int num = A + v;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), C.get_mpz_t());
  return q;
}

Int ExactScalar::ceil() const { return floor() + phi(); }

ExactScalar ExactScalar::frac() const {
  return *this - ExactScalar(Rat(floor()));
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.rad_ = rad_;
  return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  ExactScalar r;
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.rad_ = unify(rad_, o.rad_);
  if (r.b_ == 0) r.rad_ = 0;
  return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  const long d = unify(rad_, o.rad_);
  ExactScalar r;
  r.a_ = a_ * o.a_ + b_ * o.b_ * d;
  r.b_ = a_ * o.b_ + b_ * o.a_;
  r.rad_ = (r.b_ == 0) ? 0 : d;
  return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  const long d = unify(rad_, o.rad_);
  Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  if (norm == 0) {
    if (o.a_ == 0 && o.b_ == 0) throw FieldError("division by zero");
    throw FieldError("radicand is a perfect square");
  }
  // Multiply by the conjugate (a - b sqrt(D)) / norm.
  ExactScalar conj;
  conj.a_ = o.a_ / norm;
  conj.b_ = -o.b_ / norm;
  conj.rad_ = (conj.b_ == 0) ? 0 : d;
  return *this * conj;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  if (b_ != 0) unify(rad_, o.rad_);
  return true;
}

std::string ExactScalar::str() const {
  if (b_ == 0) return a_.get_str();
  std::string radical;
  Rat babs = abs(b_);
  if (babs != 1) radical += babs.get_str();
  radical += "√" + std::to_string(rad_);
  if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + radical;
  return a_.get_str() + (sgn(b_) < 0 ? "-" : "+") + radical;
}

namespace {

// One signed term of the "a+b√D" grammar: either a plain rational or
// [rational]√D ("sqrt" accepted for "√").
struct Term {
  Rat coef;
  long radicand = 0;  // 0 => rational term
};

size_t scan_radical_marker(const std::string& s, size_t pos) {
  if (s.compare(pos, 3, "√") == 0) return pos + 3;
  if (s.compare(pos, 4, "sqrt") == 0) return pos + 4;
  return pos;
}

Term parse_term(const std::string& s, size_t& pos) {
  Term t;
  size_t start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    ++pos;
  std::string digits = s.substr(start, pos - start);
  size_t after = scan_radical_marker(s, pos);
  if (after == pos) {
    // Plain rational term.
    if (digits.empty()) throw FieldError("scalar parse error at position " + std::to_string(pos));
    if (t.coef.set_str(digits, 10) != 0 || t.coef.get_den() == 0)
      throw FieldError("bad rational literal '" + digits + "'");
    t.coef.canonicalize();
    return t;
  }
  pos = after;
  if (digits.empty()) {
    t.coef = 1;
  } else {
    if (t.coef.set_str(digits, 10) != 0 || t.coef.get_den() == 0)
      throw FieldError("bad rational literal '" + digits + "'");
    t.coef.canonicalize();
  }
  const bool paren = pos < s.size() && s[pos] == '(';
  if (paren) ++pos;
  start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw FieldError("missing radicand after radical sign");
  t.radicand = std::stol(s.substr(start, pos - start));
  if (paren) {
    if (pos >= s.size() || s[pos] != ')') throw FieldError("unbalanced '(' around radicand");
    ++pos;
  }
  return t;
}

}  // namespace

ExactScalar ExactScalar::parse(const std::string& text, long expected_radicand) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw FieldError("empty scalar");
  size_t pos = 0;
  Rat a = 0, b = 0;
  long rad = 0;
  bool saw_rational = false, saw_radical = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw FieldError("expected '+' or '-' at position " + std::to_string(pos) + " in '" + text + "'");
    }
    Term t = parse_term(s, pos);
    if (t.radicand == 0) {
      if (saw_rational) throw FieldError("duplicate rational term in '" + text + "'");
      saw_rational = true;
      a = sign * t.coef;
    } else {
      if (saw_radical) throw FieldError("duplicate radical term in '" + text + "'");
      saw_radical = true;
      b = sign * t.coef;
      rad = t.radicand;
    }
  }
  if (saw_radical && expected_radicand >= 0 && b != 0 && rad != expected_radicand)
    throw FieldError("radicand " + std::to_string(rad) + " does not match configured " +
                     std::to_string(expected_radicand));
  if (b == 0) return ExactScalar(a);
  return ExactScalar(a, b, rad);
}

double ExactScalar::approx() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(rad_));
  return v;
}

}  // namespace cgeo
