#pragma once

#include "modgrob/monomial.hpp"
#include "modgrob/numbers.hpp"
#include "modgrob/ring.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace modgrob {

struct Term {
  Rational coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

class ZeroPolynomial : public std::domain_error {
 public:
  ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};

/// Sparse polynomial. Terms have nonzero canonical coefficients and strictly
/// descending monomials in the ring's order; terms().front() is leading.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges like terms, normalizes coefficients, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Rational& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }
  Polynomial tail() const;

  std::int64_t total_degree() const;
  bool is_homogeneous() const;
  /// True when no term involves variable `index`.
  bool free_of(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);

  /// this - c * m * g, the reduction step.
  Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  bool operator==(const Polynomial& other) const;

  /// Unchecked: `terms` must already satisfy the class invariants.
  static Polynomial from_canonical(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms), Canonical{});
  }

 private:
  struct Canonical {};
  Polynomial(RingPtr ring, std::vector<Term> terms, Canonical)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

namespace detail {
/// a + c * m * b over canonical descending term lists; m == nullptr means 1.
std::vector<Term> axpy_terms(const RingDescriptor& ring, std::span<const Term> a, const Rational& c,
                             const Monomial* m, std::span<const Term> b);
}  // namespace detail

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Rational& c, const Polynomial& f);

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return f - g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Polynomial poly_scale(const Polynomial& f, const Rational& c) { return c * f; }

/// Same variables, different domain or order. Coefficients pass through
/// `target`'s domain normalization.
Polynomial change_ring(const Polynomial& f, const RingPtr& target);
std::vector<Polynomial> change_ring(std::span<const Polynomial> fs, const RingPtr& target);

/// Lift Z/m coefficients to their representatives in [0, m); Z and Q
/// coefficients pass through. Target ring is over ZZ.
Polynomial lift_to_integers(const Polynomial& f);

/// Multiply by the lcm of the denominators; result over ZZ.
Polynomial clear_denominators(const Polynomial& f);

/// Embed into `target` sending variable i to variable var_map[i].
Polynomial embed(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map);

/// `target` has one more variable than f's ring, inserted at `position`.
/// Every term is padded with a power of the new variable up to deg(f).
Polynomial homogenize(const Polynomial& f, const RingPtr& target, std::size_t position);
/// Sets the variable at `position` to 1 and drops it; `target` has one
/// fewer variable.
Polynomial dehomogenize(const Polynomial& f, const RingPtr& target, std::size_t position);

}  // namespace modgrob
