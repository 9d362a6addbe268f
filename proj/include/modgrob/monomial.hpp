#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modgrob {

using Exponent = std::int32_t;

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector over the ring's variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial one(std::size_t arity) { return Monomial(arity); }
  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
/// a | b, componentwise a <= b.
bool monomial_divides(const Monomial& a, const Monomial& b);
/// a / b; throws std::domain_error unless b | a.
Monomial monomial_div(const Monomial& a, const Monomial& b);
bool monomials_coprime(const Monomial& a, const Monomial& b);

/// Lex, DegRevLex, or a two-block elimination order. In every order the
/// first listed variable is the largest. A block order compares the first
/// `front_size` exponents with the front order and breaks ties on the rest
/// with the back order.
class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex); }
  static TermOrder block(std::size_t front_size, TermOrder front, TermOrder back);

  Kind kind() const { return kind_; }
  std::size_t front_size() const { return front_size_; }
  const TermOrder& front() const { return *front_; }
  const TermOrder& back() const { return *back_; }

  std::strong_ordering compare(std::span<const Exponent> a, std::span<const Exponent> b) const;

  /// True when every monomial comparison starts with total degree.
  bool degree_compatible() const;

  bool operator==(const TermOrder& other) const;

  /// Order keyword as accepted by the problem-file parser: lp, dp,
  /// block(lp(1),dp).
  std::string keyword() const;

 private:
  explicit TermOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::size_t front_size_ = 0;
  std::shared_ptr<const TermOrder> front_;
  std::shared_ptr<const TermOrder> back_;
};

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, const TermOrder& order);

}  // namespace modgrob
