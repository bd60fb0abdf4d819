#include "cgeo/normal_form.hpp"

namespace cgeo {

BlockSpec BlockSpec::n1(int lambda, int a) {
  if (lambda != 1 && lambda != -1) throw FieldError("N1: lambda must be ±1");
  if (a < -1 || a > 1) throw FieldError("N1: a must be in {-1,0,1}");
  BlockSpec b;
  b.type = BlockType::N1;
  b.lambda = lambda;
  b.a = a;
  return b;
}

BlockSpec BlockSpec::h(int sign) {
  if (sign != 1 && sign != -1) throw FieldError("H: sign must be ±1");
  BlockSpec b;
  b.type = BlockType::H;
  b.h_sign = sign;
  return b;
}

BlockSpec BlockSpec::rot(ExactScalar angle) {
  BlockSpec b;
  b.type = BlockType::R;
  b.angle = std::move(angle);
  return b;
}

BlockSpec BlockSpec::n2(ExactScalar angle, bool nontrivial) {
  BlockSpec b;
  b.type = BlockType::N2;
  b.angle = std::move(angle);
  b.nontrivial = nontrivial;
  return b;
}

std::string BlockSpec::describe() const {
  switch (type) {
    case BlockType::N1:
      return "N1(" + std::to_string(lambda) + "," + std::to_string(a) + ")";
    case BlockType::H:
      return h_sign > 0 ? "H(+)" : "H(-)";
    case BlockType::R:
      return "R(" + angle.str() + ")";
    case BlockType::N2:
      return std::string("N2(") + angle.str() + (nontrivial ? ",nontrivial)" : ",trivial)");
  }
  return "?";
}

BlockCounts PoincareDecomposition::counts() const {
  BlockCounts c;
  for (const BlockSpec& b : blocks) {
    switch (b.type) {
      case BlockType::N1:
        if (b.lambda == 1) {
          (b.a > 0 ? c.p_minus : b.a == 0 ? c.p_zero : c.p_plus)++;
        } else {
          (b.a > 0 ? c.q_minus : b.a == 0 ? c.q_zero : c.q_plus)++;
        }
        break;
      case BlockType::H:
        c.h++;
        break;
      case BlockType::R:
        (b.angle.is_rational() ? c.r_rat : c.r_irr)++;
        break;
      case BlockType::N2:
        (b.nontrivial ? c.r_star : c.r_zero)++;
        break;
    }
  }
  return c;
}

long PoincareDecomposition::dim_half() const {
  long s = 0;
  for (const BlockSpec& b : blocks) s += b.dim_half();
  return s;
}

std::vector<Violation> validate(const PoincareDecomposition& decomp, long dn_minus_1,
                                ValidationMode mode) {
  std::vector<Violation> out;
  for (int i = 0; i < static_cast<int>(decomp.blocks.size()); ++i) {
    const BlockSpec& b = decomp.blocks[i];
    if (b.type == BlockType::R || b.type == BlockType::N2) {
      if (b.angle.sign() <= 0 || b.angle >= ExactScalar(1))
        out.push_back({i, b.describe() + ": angle not in (0,1)"});
      else if (b.angle == ExactScalar(Rat(1, 2)))
        out.push_back({i, b.describe() + ": angle 1/2 (rotation by pi) excluded"});
      if (mode != ValidationMode::General && b.angle.is_rational())
        out.push_back({i, b.describe() + ": rational angle forbidden in bumpy mode"});
    }
    if (mode != ValidationMode::General && b.type == BlockType::N1)
      out.push_back({i, b.describe() + ": N1 block forbidden in bumpy mode (eigenvalue ±1)"});
    if (mode == ValidationMode::BumpyElliptic && b.type == BlockType::H)
      out.push_back({i, "H block forbidden: hyperbolic eigenvalues off the unit circle"});
  }
  if (decomp.dim_half() != dn_minus_1)
    out.push_back({-1, "block dimensions sum to " + std::to_string(decomp.dim_half()) +
                           ", expected " + std::to_string(dn_minus_1)});
  return out;
}

long elliptic_height(const PoincareDecomposition& decomp) {
  long e = 0;
  for (const BlockSpec& b : decomp.blocks) {
    switch (b.type) {
      case BlockType::N1:
      case BlockType::R:
        e += 2;
        break;
      case BlockType::N2:
        e += 4;
        break;
      case BlockType::H:
        break;
    }
  }
  return e;
}

SpectralClass classify(const PoincareDecomposition& decomp, long dn_minus_1) {
  SpectralClass sc;
  const long e = elliptic_height(decomp);
  sc.elliptic = (e == 2 * dn_minus_1);
  sc.hyperbolic = (e == 0);
  sc.non_degenerate = true;
  sc.irrationally_elliptic = true;
  for (const BlockSpec& b : decomp.blocks) {
    if (b.type == BlockType::N1 && b.lambda == 1) sc.non_degenerate = false;
    if (b.type != BlockType::R || b.angle.is_rational()) sc.irrationally_elliptic = false;
  }
  return sc;
}

std::pair<long, long> SplittingProfile::lookup(const ExactScalar& x) const {
  auto it = at.find(x);
  return it == at.end() ? std::pair<long, long>{0, 0} : it->second;
}

long SplittingProfile::s_plus_at_one() const { return lookup(ExactScalar(1)).first; }

long SplittingProfile::c_total() const {
  long c = 0;
  for (const auto& [x, s] : at)
    if (x != ExactScalar(1)) c += s.second;
  return c;
}

namespace {

void add_splitting(SplittingProfile& p, const ExactScalar& x, long sp, long sm) {
  if (sp == 0 && sm == 0) return;
  auto& e = p.at[x];
  e.first += sp;
  e.second += sm;
}

}  // namespace

SplittingProfile splitting_profile(const PoincareDecomposition& decomp) {
  const ExactScalar one(1);
  const ExactScalar half(Rat(1, 2));
  SplittingProfile p;
  for (const BlockSpec& b : decomp.blocks) {
    switch (b.type) {
      case BlockType::R:
        add_splitting(p, b.angle, 0, 1);
        add_splitting(p, one - b.angle, 1, 0);
        break;
      case BlockType::N2:
        if (b.nontrivial) {
          add_splitting(p, b.angle, 1, 1);
          add_splitting(p, one - b.angle, 1, 1);
        }
        break;
      case BlockType::N1:
        // Externally sourced table (version kSplittingTableVersion), pinned
        // by the Bott-sum compatibility tests:
        //   N1(1,1), N1(1,0)   -> (1,1) at eigenvalue +1
        //   N1(1,-1)           -> (0,0)
        //   N1(-1,0), N1(-1,-1)-> (1,1) at eigenvalue -1
        //   N1(-1,1)           -> (0,0)
        if (b.lambda == 1) {
          if (b.a >= 0) add_splitting(p, one, 1, 1);
        } else {
          if (b.a <= 0) add_splitting(p, half, 1, 1);
        }
        break;
      case BlockType::H:
        break;  // no unit-circle spectrum
    }
  }
  return p;
}

long nullity_of_iterate(const PoincareDecomposition& decomp, long m) {
  if (m < 1) throw FieldError("iterate count must be >= 1");
  long nu = 0;
  for (const BlockSpec& b : decomp.blocks) {
    switch (b.type) {
      case BlockType::N1: {
        const bool hits_one = (b.lambda == 1) || (m % 2 == 0);
        if (hits_one) nu += (b.a == 0) ? 2 : 1;
        break;
      }
      case BlockType::R:
      case BlockType::N2:
        if ((m * b.angle).is_integer()) nu += 2;
        break;
      case BlockType::H:
        break;
    }
  }
  return nu;
}

}  // namespace cgeo
