#include "cgeo/loop_betti.hpp"

namespace cgeo {

namespace {

long fdiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// GMP's mpq operations assume canonical operands, so normalize on entry.
Rat rat_frac(Rat x) {
  x.canonicalize();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(q);
}

Rat canon(Rat x) {
  x.canonicalize();
  return x;
}

}  // namespace

ManifoldClass ManifoldClass::make(long d, long n) {
  if (d < 2 || n < 1) throw FieldError("manifold class requires d >= 2, n >= 1");
  if (d % 2 == 1 && n != 1)
    throw FieldError("odd d forces n = 1 (generator squares to zero)");
  return ManifoldClass{d, n};
}

Rat resonance_constant(const ManifoldClass& mc) {
  Rat b = mc.even_d() ? Rat(-mc.n * (mc.n + 1) * mc.d, 2 * mc.d * (mc.n + 1) - 4)
                      : Rat(mc.d + 1, 2 * mc.d - 2);
  b.canonicalize();
  return b;
}

long betti(const ManifoldClass& mc, long i, bool literal_omega) {
  const long d = mc.d, n = mc.n;
  if (i < 0) return 0;
  if (!mc.even_d()) {
    // Sphere case: 2 on K = {k(d-1) | k >= 2}, 1 on the rest of the
    // arithmetic progression d-1+2N_0.
    if (i >= 2 * (d - 1) && i % (d - 1) == 0) return 2;
    if (i >= d - 1 && (i - (d - 1)) % 2 == 0) return 1;
    return 0;
  }
  if (i % 2 == 0 || i <= d - 2) return 0;
  if (i < d - 1 + (n - 1) * d) return fdiv(i - (d - 1), d) + 1;
  // Omega membership: i-(d-1) = k1 D + k2 d, k1 >= 1, k2 in [k2lo, n-1].
  const long k2lo = literal_omega ? 1 : 0;
  const long rem0 = i - (d - 1);
  for (long k1 = 1; k1 * mc.D() <= rem0; ++k1) {
    const long rem = rem0 - k1 * mc.D();
    if (rem % d == 0) {
      const long k2 = rem / d;
      if (k2 >= k2lo && k2 <= n - 1) return n + 1;
    }
  }
  return n;
}

Rat theta(const ManifoldClass& mc, long k) {
  if (!mc.even_d()) throw FieldError("theta is defined for even d only");
  const long d = mc.d, n = mc.n, D = mc.D();
  const Rat u = rat_frac(Rat(k - (d - 1), D));
  return rat_frac(canon(Rat(D, d * n)) * u) -
         (canon(Rat(2, d)) + canon(Rat(d - 2, d * n))) * u -
         n * rat_frac(canon(Rat(D, 2)) * u) - rat_frac(canon(Rat(D, d)) * u);
}

Int betti_partial_sum(const ManifoldClass& mc, long k) {
  const long d = mc.d, n = mc.n;
  if (!mc.even_d()) {
    if (k < d - 1) throw FieldError("partial sum needs k >= d-1");
    return Int(fdiv(k, d - 1) + fdiv(k, 2) - (d - 1) / 2);
  }
  if (k < d * n - 1) throw FieldError("partial sum needs k >= dn-1");
  Rat s = canon(Rat(n * (n + 1) * d, 2 * mc.D())) * (k - (d - 1)) -
          canon(Rat(n * (n - 1) * d, 4)) + 1 + theta(mc, k);
  s.canonicalize();
  if (s.get_den() != 1)
    throw FieldError("closed-form Betti sum is not an integer at k=" + std::to_string(k));
  return s.get_num();
}

BettiTable build_betti_table(const ManifoldClass& mc, long max_k, bool literal_omega) {
  BettiTable t{mc, max_k, std::vector<long>(max_k + 1, 0)};
#pragma omp parallel for schedule(static)
  for (long i = 0; i <= max_k; ++i) t.values[i] = betti(mc, i, literal_omega);
  return t;
}

ResonanceResult resonance_check(const ManifoldClass& mc,
                                std::span<const GeodesicRecord> records) {
  ResonanceResult r;
  r.constant = resonance_constant(mc);
  ExactScalar sum;
  for (const GeodesicRecord& rec : records) {
    const ExactScalar ihat = mean_index(rec);
    if (ihat.sign() == 0) throw FieldError(rec.name + ": zero mean index");
    sum += ExactScalar(gamma_invariant(rec)) / ihat;
  }
  r.sum = sum;
  r.residual = sum - ExactScalar(r.constant);
  r.pass = (r.residual.sign() == 0);
  return r;
}

}  // namespace cgeo
