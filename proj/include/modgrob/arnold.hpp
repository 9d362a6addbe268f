#pragma once

// Checks the hypotheses of E. Arnold's modular criterion: for a homogeneous
// ideal I ⊆ Z[X], a set G ⊆ Z[X] and a prime p,
//   (1) G_p is a Groebner basis of I_p,
//   (2) G is a Groebner basis of the Q-ideal it generates,
//   (3) QI ⊆ <G>_Q,
//   (4) LM(G_p) = LM(G),
// imply that G is a Groebner basis of QI. The conclusion is only asserted
// for homogeneous input; (2x + 1), G = {1}, p = 2 satisfies (1)-(4) but
// {1} is not a basis of <x + 1/2>.

#include "modgrob/groebner.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace modgrob {

enum class ArnoldVerdict { Verified, ConditionFailed, InapplicableNonHomogeneous };

std::string to_string(ArnoldVerdict v);

struct ArnoldReport {
  Integer prime;
  std::array<bool, 4> conditions{};
  bool homogeneous_input = false;
  ArnoldVerdict verdict = ArnoldVerdict::ConditionFailed;

  /// 1-based numbers of the conditions that failed.
  std::vector<int> failed_conditions() const;
};

/// I_gens and G over ZZ in `ring`; p prime; G free of zeros.
ArnoldReport arnold_conditions(const RingPtr& ring, std::span<const Polynomial> i_gens, std::span<const Polynomial> G,
                               const Integer& p, const Limits& limits = {});

struct HomogenizedIdeal {
  RingPtr ring;
  std::vector<Polynomial> generators;
  /// Index of the homogenizing variable (last).
  std::size_t variable = 0;
  /// True when a lex order was replaced by dp.
  bool order_upgraded = false;
};

/// Appends a fresh smallest variable (h, h1, ...) and homogenizes every
/// generator. A lex order becomes dp; other orders are kept and refined by
/// the new last variable.
HomogenizedIdeal homogenize_ideal(const RingPtr& ring, std::span<const Polynomial> gens);

/// Convenience: LM(basis of I mod p) = LM(basis of QI).
bool is_lucky_prime(const RingPtr& ring, std::span<const Polynomial> i_gens, const Integer& p,
                    const Limits& limits = {});

}  // namespace modgrob
