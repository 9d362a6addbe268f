#include "modgrob/ring.hpp"

#include <set>
#include <sstream>

namespace modgrob {

Domain::Domain(Kind k, Integer m) : kind_(k), modulus_(std::move(m)) {
  field_ = kind_ == Kind::Rational || (kind_ == Kind::Modular && is_prime(modulus_));
}

Domain Domain::modular(const Integer& m) {
  if (m < 2) throw std::invalid_argument("modular domain needs m >= 2, got " + m.get_str());
  return Domain(Kind::Modular, m);
}

Rational Domain::normalize(const Rational& c) const {
  switch (kind_) {
    case Kind::Rational:
      return c;
    case Kind::Integer:
      if (c.get_den() != 1) throw std::domain_error("non-integral coefficient " + c.get_str());
      return c;
    case Kind::Modular: {
      Integer num = floor_mod(c.get_num(), modulus_);
      if (c.get_den() == 1) return Rational(num);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw std::domain_error("denominator of " + c.get_str() + " not invertible mod " +
                                modulus_.get_str());
      }
      return Rational(floor_mod(num * inv, modulus_));
    }
  }
  return c;
}

Rational Domain::inverse(const Rational& c) const {
  if (c == 0) throw std::domain_error("inverse of zero");
  switch (kind_) {
    case Kind::Rational:
      return 1 / c;
    case Kind::Modular: {
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), c.get_num_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw std::domain_error(c.get_str() + " not invertible mod " + modulus_.get_str());
      }
      return Rational(inv);
    }
    case Kind::Integer:
      if (c == 1 || c == -1) return c;
      throw std::domain_error(c.get_str() + " not invertible in ZZ");
  }
  return c;
}

std::string Domain::name() const {
  switch (kind_) {
    case Kind::Integer:
      return "ZZ";
    case Kind::Rational:
      return "QQ";
    case Kind::Modular:
      return "ZZ/" + modulus_.get_str();
  }
  return "?";
}

RingDescriptor::RingDescriptor(std::vector<std::string> variables, TermOrder order, Domain domain)
    : variables_(std::move(variables)), order_(std::move(order)), domain_(std::move(domain)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable " + v);
  }
  if (order_.kind() == TermOrder::Kind::Block && order_.front_size() > variables_.size()) {
    throw std::invalid_argument("block order front larger than variable list");
  }
}

RingPtr RingDescriptor::with_domain(Domain d) const { return make(variables_, order_, std::move(d)); }

RingPtr RingDescriptor::with_order(TermOrder o) const { return make(variables_, std::move(o), domain_); }

std::ptrdiff_t RingDescriptor::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::string RingDescriptor::fresh_variable(const std::string& base) const {
  if (index_of(base) < 0) return base;
  for (int i = 1;; ++i) {
    auto candidate = base + std::to_string(i);
    if (index_of(candidate) < 0) return candidate;
  }
}

std::string RingDescriptor::describe() const {
  std::ostringstream os;
  os << domain_.name() << ", (";
  for (std::size_t i = 0; i < variables_.size(); ++i) os << (i ? "," : "") << variables_[i];
  os << "), " << order_.keyword();
  return os.str();
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace modgrob
