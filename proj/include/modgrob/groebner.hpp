#pragma once

// Normal forms, Buchberger completion over fields (Q, Z/p) and strong
// Groebner bases over Z, reduced-basis canonicalization, ideal membership,
// and Z/m bases computed through Z.

#include "modgrob/polynomial.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace modgrob {

/// Caps on one completion. Exceeding either aborts with
/// ResourceLimitExceeded.
struct Limits {
  std::size_t max_pairs = 2'000'000;
  std::size_t max_reductions = 200'000'000;

  /// Defaults, with max_pairs taken from MODGROB_MAX_PAIRS when set.
  static Limits from_environment();
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const Polynomial& operator[](std::size_t i) const { return elements_[i]; }

  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool reduced_;
};

/// Remainder of f modulo G, reducer = first eligible element of G.
///   field: no term of r is divisible by a leading monomial of G.
///   ZZ:    strong reduction; every term c*x^g of r has 0 <= c < |a| for
///          each element with leading term a*x^b, x^b | x^g.
///   ZZ/m (m composite): f and G are lifted to ZZ, the constant m is
///          appended, and the ZZ remainder is mapped back.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);

Polynomial s_polynomial_field(const Polynomial& f, const Polynomial& g);
/// (c/a)(L/x^A) f - (c/b)(L/x^B) g with c = lcm(a, b), L = lcm(x^A, x^B).
Polynomial s_pair_z(const Polynomial& f, const Polynomial& g);
/// u (L/x^A) f + v (L/x^B) g with u a + v b = gcd(a, b).
Polynomial g_pair_z(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis over a field ring (QQ or ZZ/p).
GroebnerBasis buchberger_field(const RingPtr& ring, std::span<const Polynomial> gens,
                               const Limits& limits = {});
/// Reduced strong Groebner basis over ZZ: positive leading coefficients,
/// content kept.
GroebnerBasis buchberger_z(const RingPtr& ring, std::span<const Polynomial> gens,
                           const Limits& limits = {});
/// Reduced basis of the image of <gens> in (Z/m)[X], via buchberger_z of
/// gens + {m}. gens must live over ZZ or over ZZ/m for the same m.
GroebnerBasis gb_mod_m(const RingPtr& ring, std::span<const Polynomial> gens, const Integer& m,
                       const Limits& limits = {});

/// Dispatch on the ring's domain: ZZ -> buchberger_z, field ->
/// buchberger_field, ZZ/m -> gb_mod_m.
GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                             const Limits& limits = {});

/// Reduced basis from a complete (strong) Groebner basis G.
GroebnerBasis reduce_basis(const RingPtr& ring, std::span<const Polynomial> G);

/// All S-pairs (and, over ZZ, G-pairs) of G have zero normal form.
bool is_groebner(std::span<const Polynomial> G);

/// Both reduced, same ring; identical element lists.
bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b);

bool ideal_member(const Polynomial& f, const GroebnerBasis& G);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// f = sum q_i G_i + r over a field, r = normal_form(f, G).
Division divide_with_cofactors(const Polynomial& f, std::span<const Polynomial> G);

}  // namespace modgrob
