#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgeo/exact_scalar.hpp"

namespace cgeo {

enum class BlockType { N1, H, R, N2 };

/// One basic normal-form block of a linearized Poincaré map.
///   N1(lambda, a): 2x2 Jordan-type block, lambda = ±1, a in {-1,0,+1}
///   H(sign):       2x2 hyperbolic block, sign of b (|b| != 1)
///   R(x):          2x2 rotation, x = theta/2pi in (0,1), x != 1/2
///   N2(x, kind):   4x4 block with conjugate eigenvalue pair, trivial or not
struct BlockSpec {
  BlockType type = BlockType::R;
  int lambda = 1;        // N1
  int a = 0;             // N1
  int h_sign = 1;        // H
  ExactScalar angle;     // R / N2
  bool nontrivial = false;  // N2

  static BlockSpec n1(int lambda, int a);
  static BlockSpec h(int sign);
  static BlockSpec rot(ExactScalar angle);
  static BlockSpec n2(ExactScalar angle, bool nontrivial);

  // 2x2 blocks contribute 1 to the symplectic half-dimension, N2 contributes 2.
  long dim_half() const { return type == BlockType::N2 ? 2 : 1; }
  std::string describe() const;
};

/// Derived multiplicities of a decomposition, in the notation of the basic
/// normal form theorem: p's count N1(1,·), q's count N1(-1,·), r_irr/r_rat
/// split the rotation blocks by angle rationality, r_star / r_zero count
/// nontrivial / trivial N2 blocks.
struct BlockCounts {
  long p_minus = 0, p_zero = 0, p_plus = 0;
  long q_minus = 0, q_zero = 0, q_plus = 0;
  long r_irr = 0, r_rat = 0;
  long r_star = 0, r_zero = 0;
  long h = 0;

  long bar_r() const { return r_irr + r_rat; }
  long total() const {
    return p_minus + p_zero + p_plus + q_minus + q_zero + q_plus + bar_r() +
           2 * r_star + 2 * r_zero + h;
  }
};

struct PoincareDecomposition {
  std::vector<BlockSpec> blocks;

  BlockCounts counts() const;
  long dim_half() const;
};

enum class ValidationMode { General, Bumpy, BumpyElliptic };

struct Violation {
  int block_index;  // -1: whole-decomposition violation
  std::string what;
};

/// Structural validation against a target half-dimension dn-1. Never throws;
/// an empty result means the decomposition is admissible in the given mode.
std::vector<Violation> validate(const PoincareDecomposition& decomp, long dn_minus_1,
                                ValidationMode mode);

/// Total algebraic multiplicity of unit-circle eigenvalues (always even).
long elliptic_height(const PoincareDecomposition& decomp);

struct SpectralClass {
  bool elliptic = false;
  bool hyperbolic = false;
  bool non_degenerate = false;
  bool irrationally_elliptic = false;
};

SpectralClass classify(const PoincareDecomposition& decomp, long dn_minus_1);

/// Splitting numbers (S+, S-) indexed by eigenvalue location. Locations are
/// normalized angles x in (0,1] with e^{2 pi x i} the eigenvalue; x = 1
/// stands for the eigenvalue +1.
struct SplittingProfile {
  std::map<ExactScalar, std::pair<long, long>> at;

  std::pair<long, long> lookup(const ExactScalar& x) const;
  long s_plus_at_one() const;
  /// C(M): sum of S- over eigenvalue angles in (0, 2pi), i.e. excluding +1.
  long c_total() const;
};

/// Version tag of the built-in N1/H splitting-number table. The R/N2 entries
/// are forced by the elliptic theory; the N1 entries are externally sourced
/// and guarded by the Bott-sum compatibility tests.
inline constexpr const char* kSplittingTableVersion = "long-9.1.12/v1";

SplittingProfile splitting_profile(const PoincareDecomposition& decomp);

/// Dimension of the 1-eigenspace of the m-th power of the decomposition.
long nullity_of_iterate(const PoincareDecomposition& decomp, long m);

}  // namespace cgeo
