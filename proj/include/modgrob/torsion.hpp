#pragma once

// Exponent of the torsion subgroup of A/J for A = Z[X]: the least m > 0
// with m * (QJ ∩ A) ⊆ J.

#include "modgrob/groebner.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace modgrob {

struct Multiplier {
  Polynomial generator;
  Integer multiplier;
};

struct TorsionReport {
  Integer exponent;
  /// Y-free part of the elimination basis; generates QJ ∩ A.
  std::vector<Polynomial> saturation_basis;
  std::vector<Multiplier> multipliers;
};

class NonMember : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generators of QJ ∩ A: the Y-free elements of the strong ZZ basis of
/// <J, s*Y - 1> under block(lp(1), <ring order>), s = lcm of the leading
/// coefficients of the ZZ basis of J.
std::vector<Polynomial> saturation_contraction(const RingPtr& ring, std::span<const Polynomial> j_gens,
                                               const Limits& limits = {});

/// Least m_g > 0 with m_g * g ∈ J. `j_basis` is the strong ZZ basis of J,
/// which is also a Q-basis of QJ; cofactor denominators of the division of
/// g by it give a multiple k0 of m_g, and prime factors are stripped while
/// membership holds.
Integer minimal_multiplier(const Polynomial& g, const GroebnerBasis& j_basis);

TorsionReport torsion_exponent(const RingPtr& ring, std::span<const Polynomial> j_gens,
                               const Limits& limits = {});

}  // namespace modgrob
