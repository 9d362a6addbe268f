#include "modgrob/polynomial.hpp"

#include <algorithm>

namespace modgrob {

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) {
    throw RingMismatch("ring mismatch: " + f.ring()->describe() + " vs " + g.ring()->describe());
  }
}

}  // namespace

namespace detail {

std::vector<Term> axpy_terms(const RingDescriptor& ring, std::span<const Term> a, const Rational& c,
                             const Monomial* m, std::span<const Term> b) {
  const auto& order = ring.order();
  const auto& dom = ring.domain();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Term tb;
  bool have_tb = false;
  while (true) {
    if (!have_tb) {
      while (j < b.size()) {
        tb.coeff = dom.normalize(c * b[j].coeff);
        if (tb.coeff != 0) {
          tb.mono = m ? b[j].mono * *m : b[j].mono;
          have_tb = true;
          break;
        }
        ++j;
      }
    }
    if (!have_tb) {
      out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
      break;
    }
    if (i == a.size()) {
      out.push_back(std::move(tb));
      have_tb = false;
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].mono.exponents(), tb.mono.exponents());
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      have_tb = false;
      ++j;
    } else {
      Rational s = dom.normalize(a[i].coeff + tb.coeff);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      have_tb = false;
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
  const auto& order = ring_->order();
  const auto& dom = ring_->domain();
  for (auto& t : terms) {
    if (t.mono.arity() != ring_->arity()) throw ArityMismatch("term arity does not match ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return order.compare(x.mono.exponents(), y.mono.exponents()) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
    } else {
      if (!terms_.empty()) {
        terms_.back().coeff = dom.normalize(terms_.back().coeff);
        if (terms_.back().coeff == 0) terms_.pop_back();
      }
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty()) {
    terms_.back().coeff = dom.normalize(terms_.back().coeff);
    if (terms_.back().coeff == 0) terms_.pop_back();
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const auto n = ring->arity();
  return Polynomial(std::move(ring), {{c, Monomial::one(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const auto n = ring->arity();
  return Polynomial(std::move(ring), {{Rational(1), Monomial::variable(n, index)}});
}

Polynomial Polynomial::term(RingPtr ring, const Rational& c, Monomial m) {
  return Polynomial(std::move(ring), {{c, std::move(m)}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), Canonical{});
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

bool Polynomial::free_of(std::size_t index) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[index] == 0; });
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_ = detail::axpy_terms(*ring_, terms_, Rational(1), nullptr, g.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_ = detail::axpy_terms(*ring_, terms_, Rational(-1), nullptr, g.terms_);
  return *this;
}

Polynomial Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(*this, g);
  return Polynomial(ring_, detail::axpy_terms(*ring_, terms_, -c, &m, g.terms_), Canonical{});
}

Polynomial Polynomial::scaled(const Rational& c) const {
  return mul_term(c, Monomial::one(ring_->arity()));
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  const auto& dom = ring_->domain();
  const Rational cn = dom.normalize(c);
  std::vector<Term> out;
  if (cn == 0) return Polynomial(ring_);
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational v = dom.normalize(cn * t.coeff);
    if (v != 0) out.push_back({std::move(v), t.mono * m});
  }
  return Polynomial(ring_, std::move(out), Canonical{});
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
  }
  return Polynomial(f.ring(), std::move(prod));
}

Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  if (target->arity() != f.ring()->arity()) throw ArityMismatch("change_ring: arity differs");
  return Polynomial(target, f.terms());
}

std::vector<Polynomial> change_ring(std::span<const Polynomial> fs, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(change_ring(f, target));
  return out;
}

Polynomial lift_to_integers(const Polynomial& f) {
  const auto target = f.ring()->with_domain(Domain::integers());
  return Polynomial(target, f.terms());
}

Polynomial clear_denominators(const Polynomial& f) {
  Integer d = 1;
  for (const auto& t : f.terms()) d = lcm(d, Integer(t.coeff.get_den()));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coeff * d, t.mono});
  return Polynomial(f.ring()->with_domain(Domain::integers()), std::move(out));
}

Polynomial embed(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map) {
  if (var_map.size() != f.ring()->arity()) throw ArityMismatch("embed: variable map size");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target->arity(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) e.at(var_map[i]) += t.mono[i];
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(out));
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target, std::size_t position) {
  const auto n = f.ring()->arity();
  if (target->arity() != n + 1 || position > n) throw ArityMismatch("homogenize: target arity");
  const auto d = f.total_degree();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e;
    e.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == position) e.push_back(static_cast<Exponent>(d - t.mono.degree()));
      e.push_back(t.mono[i]);
    }
    if (position == n) e.push_back(static_cast<Exponent>(d - t.mono.degree()));
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, const RingPtr& target, std::size_t position) {
  const auto n = f.ring()->arity();
  if (n == 0 || target->arity() + 1 != n || position >= n) {
    throw ArityMismatch("dehomogenize: target arity");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e;
    e.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != position) e.push_back(t.mono[i]);
    }
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace modgrob
