#pragma once

#include "modgrob/monomial.hpp"
#include "modgrob/numbers.hpp"

#include <memory>
#include <string>
#include <vector>

namespace modgrob {

/// Coefficient domain: Z, Q, or Z/m (m >= 2, not necessarily prime).
class Domain {
 public:
  enum class Kind { Integer, Rational, Modular };

  static Domain integers() { return Domain(Kind::Integer, 0); }
  static Domain rationals() { return Domain(Kind::Rational, 0); }
  static Domain modular(const Integer& m);

  Kind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  bool is_integer() const { return kind_ == Kind::Integer; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_modular() const { return kind_ == Kind::Modular; }
  /// Q, or Z/p with p prime.
  bool is_field() const { return field_; }

  /// Canonical representative; throws std::domain_error if c has no image
  /// (non-integral value in Z, non-invertible denominator in Z/m).
  Rational normalize(const Rational& c) const;
  /// Multiplicative inverse in a field.
  Rational inverse(const Rational& c) const;

  /// ZZ, QQ, ZZ/m.
  std::string name() const;

  bool operator==(const Domain& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  Domain(Kind k, Integer m);

  Kind kind_;
  Integer modulus_;
  bool field_ = false;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

class RingDescriptor {
 public:
  RingDescriptor(std::vector<std::string> variables, TermOrder order, Domain domain);

  static RingPtr make(std::vector<std::string> variables, TermOrder order, Domain domain) {
    return std::make_shared<const RingDescriptor>(std::move(variables), std::move(order),
                                                  std::move(domain));
  }

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  const TermOrder& order() const { return order_; }
  const Domain& domain() const { return domain_; }

  RingPtr with_domain(Domain d) const;
  RingPtr with_order(TermOrder o) const;

  /// Index of `name`, or -1.
  std::ptrdiff_t index_of(std::string_view name) const;
  /// `base` if unused, else base1, base2, ...
  std::string fresh_variable(const std::string& base) const;

  std::string describe() const;

  bool operator==(const RingDescriptor& other) const {
    return variables_ == other.variables_ && order_ == other.order_ && domain_ == other.domain_;
  }

 private:
  std::vector<std::string> variables_;
  TermOrder order_;
  Domain domain_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace modgrob
