#include "modgrob/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace modgrob {

namespace {

void check_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
}

std::strong_ordering lex_cmp(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering degrevlex_cmp(std::span<const Exponent> a, std::span<const Exponent> b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  std::vector<Exponent> e(arity, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_arity(*this, other);
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::int64_t s = std::int64_t{exps_[i]} + other.exps_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    e[i] = static_cast<Exponent>(s);
  }
  Monomial r;
  r.exps_ = std::move(e);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  if (!monomial_divides(b, a)) throw std::domain_error("monomial_div: divisor does not divide");
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

bool monomials_coprime(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

TermOrder TermOrder::block(std::size_t front_size, TermOrder front, TermOrder back) {
  TermOrder t(Kind::Block);
  t.front_size_ = front_size;
  t.front_ = std::make_shared<const TermOrder>(std::move(front));
  t.back_ = std::make_shared<const TermOrder>(std::move(back));
  return t;
}

std::strong_ordering TermOrder::compare(std::span<const Exponent> a,
                                        std::span<const Exponent> b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::DegRevLex:
      return degrevlex_cmp(a, b);
    case Kind::Block: {
      const auto k = std::min(front_size_, a.size());
      if (auto c = front_->compare(a.first(k), b.first(k)); c != 0) return c;
      return back_->compare(a.subspan(k), b.subspan(k));
    }
  }
  return std::strong_ordering::equal;
}

bool TermOrder::degree_compatible() const { return kind_ == Kind::DegRevLex; }

bool TermOrder::operator==(const TermOrder& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::Block) return true;
  return front_size_ == other.front_size_ && *front_ == *other.front_ && *back_ == *other.back_;
}

std::string TermOrder::keyword() const {
  switch (kind_) {
    case Kind::Lex:
      return "lp";
    case Kind::DegRevLex:
      return "dp";
    case Kind::Block:
      return "block(" + front_->keyword() + "(" + std::to_string(front_size_) + ")," +
             back_->keyword() + ")";
  }
  return "?";
}

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, const TermOrder& order) {
  check_arity(a, b);
  return order.compare(a.exponents(), b.exponents());
}

}  // namespace modgrob
