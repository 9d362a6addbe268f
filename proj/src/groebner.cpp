#include "modgrob/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace modgrob {

namespace {

class Budget {
 public:
  explicit Budget(std::size_t cap) : cap_(cap) {}
  void charge() {
    if (++used_ > cap_) {
      throw ResourceLimitExceeded("reduction limit of " + std::to_string(cap_) + " steps exceeded");
    }
  }

 private:
  std::size_t used_ = 0;
  std::size_t cap_;
};

Budget& unlimited_budget() {
  thread_local Budget b(static_cast<std::size_t>(-1));
  return b;
}

void require_ring(const Polynomial& f, const RingPtr& ring) {
  if (!same_ring(f.ring(), ring)) {
    throw RingMismatch("ring mismatch: " + f.ring()->describe() + " vs " + ring->describe());
  }
}

// Field remainder; optionally records quotient terms per reducer.
Polynomial nf_field(const Polynomial& f, std::span<const Polynomial* const> G, Budget& budget,
                    std::vector<std::vector<Term>>* quotients = nullptr) {
  const auto& ring = *f.ring();
  const auto& dom = ring.domain();
  std::vector<Rational> inv_lc;
  inv_lc.reserve(G.size());
  for (const auto* g : G) inv_lc.push_back(dom.inverse(g->leading_coefficient()));

  std::vector<Term> p = f.terms();
  std::size_t head = 0;
  std::vector<Term> r;
  while (head < p.size()) {
    const Monomial& mono = p[head].mono;
    std::size_t k = 0;
    while (k < G.size() && !monomial_divides(G[k]->leading_monomial(), mono)) ++k;
    if (k == G.size()) {
      r.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    const Rational q = dom.normalize(p[head].coeff * inv_lc[k]);
    const Monomial m = monomial_div(mono, G[k]->leading_monomial());
    if (quotients) (*quotients)[k].push_back({q, m});
    p = detail::axpy_terms(ring, std::span<const Term>(p).subspan(head), -q, &m, G[k]->terms());
    head = 0;
    budget.charge();
  }
  return Polynomial::from_canonical(f.ring(), std::move(r));
}

// Strong remainder over ZZ.
Polynomial nf_integer(const Polynomial& f, std::span<const Polynomial* const> G, Budget& budget) {
  const auto& ring = *f.ring();
  std::vector<Integer> lc;
  std::vector<Integer> abs_lc;
  lc.reserve(G.size());
  for (const auto* g : G) {
    lc.push_back(g->leading_coefficient().get_num());
    abs_lc.push_back(abs(lc.back()));
  }

  std::vector<Term> p = f.terms();
  std::size_t head = 0;
  std::vector<Term> r;
  while (head < p.size()) {
    const Monomial& mono = p[head].mono;
    const Integer c = p[head].coeff.get_num();
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (!monomial_divides(G[k]->leading_monomial(), mono)) continue;
      const Integer rem = floor_mod(c, abs_lc[k]);
      if (rem == c) continue;
      const Integer q = (c - rem) / lc[k];
      const Monomial m = monomial_div(mono, G[k]->leading_monomial());
      p = detail::axpy_terms(ring, std::span<const Term>(p).subspan(head), Rational(-q), &m,
                             G[k]->terms());
      head = 0;
      budget.charge();
      reduced = true;
      break;
    }
    if (!reduced) {
      r.push_back(std::move(p[head]));
      ++head;
    }
  }
  return Polynomial::from_canonical(f.ring(), std::move(r));
}

Polynomial nf_dispatch(const Polynomial& f, std::span<const Polynomial* const> G, Budget& budget) {
  for (const auto* g : G) {
    require_ring(*g, f.ring());
    if (g->is_zero()) throw std::invalid_argument("normal_form: zero polynomial in reducer list");
  }
  const auto& dom = f.ring()->domain();
  if (dom.is_integer()) return nf_integer(f, G, budget);
  if (dom.is_field()) return nf_field(f, G, budget);

  // Composite Z/m: reduce over ZZ against G + {m}.
  const auto zf = lift_to_integers(f);
  std::deque<Polynomial> lifted;
  std::vector<const Polynomial*> zg;
  for (const auto* g : G) zg.push_back(&lifted.emplace_back(lift_to_integers(*g)));
  zg.push_back(&lifted.emplace_back(Polynomial::constant(zf.ring(), Rational(dom.modulus()))));
  return change_ring(nf_integer(zf, zg, budget), f.ring());
}

std::vector<const Polynomial*> pointers(std::span<const Polynomial> G) {
  std::vector<const Polynomial*> out;
  out.reserve(G.size());
  for (const auto& g : G) out.push_back(&g);
  return out;
}

Polynomial normalize_leading(const Polynomial& h) {
  const auto& dom = h.ring()->domain();
  if (dom.is_field()) return h.scaled(dom.inverse(h.leading_coefficient()));
  if (h.leading_coefficient() < 0) return -h;
  return h;
}

// Sort key for reducers and reduced bases: leading monomial ascending, then
// |leading coefficient| ascending.
bool leading_less(const Polynomial& a, const Polynomial& b) {
  const auto& order = a.ring()->order();
  auto c = order.compare(a.leading_monomial().exponents(), b.leading_monomial().exponents());
  if (c != 0) return c < 0;
  return abs(a.leading_coefficient()) < abs(b.leading_coefficient());
}

enum class PairKind { G, S };

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  PairKind kind;
};

struct PairLess {
  const TermOrder* order;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (auto c = order->compare(a.lcm.exponents(), b.lcm.exponents()); c != 0) return c < 0;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

// Buchberger completion with the normal selection strategy. Over ZZ both
// S-pairs and G-pairs are formed and reduction is strong.
class Completion {
 public:
  Completion(RingPtr ring, const Limits& limits)
      : ring_(std::move(ring)),
        over_z_(ring_->domain().is_integer()),
        limits_(limits),
        budget_(limits.max_reductions),
        queue_(PairLess{&ring_->order()}) {}

  void insert(const Polynomial& f) {
    require_ring(f, ring_);
    auto h = reduce(f);
    if (!h.is_zero()) add_element(normalize_leading(h));
  }

  void run() {
    while (!queue_.empty()) {
      auto node = queue_.extract(queue_.begin());
      const auto& pair = node.value();
      const auto& f = basis_[pair.i];
      const auto& g = basis_[pair.j];
      auto h = reduce(pair.kind == PairKind::S ? (over_z_ ? s_pair_z(f, g) : s_polynomial_field(f, g))
                                               : g_pair_z(f, g));
      if (!h.is_zero()) add_element(normalize_leading(h));
    }
  }

  std::vector<Polynomial> elements() const { return {basis_.begin(), basis_.end()}; }

 private:
  Polynomial reduce(const Polynomial& f) {
    return over_z_ ? nf_integer(f, reducers_, budget_) : nf_field(f, reducers_, budget_);
  }

  void add_element(Polynomial h) {
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    const Polynomial& fk = basis_.back();
    auto pos = std::upper_bound(reducers_.begin(), reducers_.end(), &fk,
                                [](const Polynomial* a, const Polynomial* b) { return leading_less(*a, *b); });
    reducers_.insert(pos, &fk);

    const auto& lmk = fk.leading_monomial();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& fi = basis_[i];
      const auto& lmi = fi.leading_monomial();
      const bool coprime = monomials_coprime(lmi, lmk);
      if (!over_z_) {
        if (!coprime) push({i, k, monomial_lcm(lmi, lmk), PairKind::S});
        continue;
      }
      const Integer a = fi.leading_coefficient().get_num();
      const Integer b = fk.leading_coefficient().get_num();
      // Product criterion needs coprime leading terms: monomials and
      // coefficients.
      if (!(coprime && gcd(a, b) == 1)) push({i, k, monomial_lcm(lmi, lmk), PairKind::S});
      const bool divides = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) ||
                           mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
      if (!divides) push({i, k, monomial_lcm(lmi, lmk), PairKind::G});
    }
  }

  void push(CriticalPair p) {
    if (++pairs_created_ > limits_.max_pairs) {
      throw ResourceLimitExceeded("critical pair limit of " + std::to_string(limits_.max_pairs) +
                                  " exceeded");
    }
    queue_.insert(std::move(p));
  }

  RingPtr ring_;
  bool over_z_;
  Limits limits_;
  Budget budget_;
  std::deque<Polynomial> basis_;
  std::vector<const Polynomial*> reducers_;
  std::set<CriticalPair, PairLess> queue_;
  std::size_t pairs_created_ = 0;
};

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  if (const char* env = std::getenv("MODGROB_MAX_PAIRS"); env && *env) {
    l.max_pairs = std::stoull(env);
  }
  return l;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced)
    : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced) {
  for (const auto& g : elements_) require_ring(g, ring_);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  const auto ptrs = pointers(G);
  return nf_dispatch(f, ptrs, unlimited_budget());
}

Polynomial s_polynomial_field(const Polynomial& f, const Polynomial& g) {
  require_ring(g, f.ring());
  const auto& dom = f.ring()->domain();
  if (!dom.is_field()) throw DomainError("s_polynomial_field: domain " + dom.name() + " is not a field");
  const auto L = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  const auto a = f.mul_term(dom.inverse(f.leading_coefficient()), monomial_div(L, f.leading_monomial()));
  return a.sub_scaled(dom.inverse(g.leading_coefficient()), monomial_div(L, g.leading_monomial()), g);
}

Polynomial s_pair_z(const Polynomial& f, const Polynomial& g) {
  require_ring(g, f.ring());
  if (!f.ring()->domain().is_integer()) throw DomainError("s_pair_z: ring is not over ZZ");
  const Integer a = f.leading_coefficient().get_num();
  const Integer b = g.leading_coefficient().get_num();
  const Integer c = lcm(a, b);
  const auto L = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  const auto lhs = f.mul_term(Rational(Integer(c / a)), monomial_div(L, f.leading_monomial()));
  return lhs.sub_scaled(Rational(Integer(c / b)), monomial_div(L, g.leading_monomial()), g);
}

Polynomial g_pair_z(const Polynomial& f, const Polynomial& g) {
  require_ring(g, f.ring());
  if (!f.ring()->domain().is_integer()) throw DomainError("g_pair_z: ring is not over ZZ");
  const auto [g0, u, v] = ext_gcd(f.leading_coefficient().get_num(), g.leading_coefficient().get_num());
  const auto L = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  const auto lhs = f.mul_term(Rational(u), monomial_div(L, f.leading_monomial()));
  return lhs.sub_scaled(Rational(Integer(-v)), monomial_div(L, g.leading_monomial()), g);
}

GroebnerBasis reduce_basis(const RingPtr& ring, std::span<const Polynomial> G) {
  const auto& dom = ring->domain();
  if (!dom.is_integer() && !dom.is_field()) {
    throw DomainError("reduce_basis: unsupported domain " + dom.name());
  }
  std::vector<Polynomial> elems;
  for (const auto& g : G) {
    require_ring(g, ring);
    if (!g.is_zero()) elems.push_back(normalize_leading(g));
  }
  std::stable_sort(elems.begin(), elems.end(), leading_less);

  auto strongly_divides = [&](const Polynomial& a, const Polynomial& b) {
    if (!monomial_divides(a.leading_monomial(), b.leading_monomial())) return false;
    if (dom.is_field()) return true;
    return mpz_divisible_p(b.leading_coefficient().get_num_mpz_t(),
                           a.leading_coefficient().get_num_mpz_t()) != 0;
  };
  std::vector<Polynomial> kept;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < elems.size() && !redundant; ++i) {
      if (i == j || !strongly_divides(elems[i], elems[j])) continue;
      const bool same_lt = elems[i].leading_term() == elems[j].leading_term();
      redundant = !same_lt || i < j;
    }
    if (!redundant) kept.push_back(elems[j]);
  }

  const auto ptrs = pointers(kept);
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& g : kept) {
    const auto rest = nf_dispatch(g.tail(), ptrs, unlimited_budget());
    std::vector<Term> terms;
    terms.reserve(rest.size() + 1);
    terms.push_back(g.leading_term());
    terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
    out.push_back(Polynomial::from_canonical(ring, std::move(terms)));
  }
  return GroebnerBasis(ring, std::move(out), true);
}

GroebnerBasis buchberger_field(const RingPtr& ring, std::span<const Polynomial> gens,
                               const Limits& limits) {
  if (!ring->domain().is_field()) {
    throw DomainError("buchberger_field: domain " + ring->domain().name() + " is not a field");
  }
  Completion c(ring, limits);
  for (const auto& f : gens) c.insert(f);
  c.run();
  const auto elems = c.elements();
  return reduce_basis(ring, elems);
}

GroebnerBasis buchberger_z(const RingPtr& ring, std::span<const Polynomial> gens, const Limits& limits) {
  if (!ring->domain().is_integer()) {
    throw DomainError("buchberger_z: domain " + ring->domain().name() + " is not ZZ");
  }
  Completion c(ring, limits);
  for (const auto& f : gens) c.insert(f);
  c.run();
  const auto elems = c.elements();
  return reduce_basis(ring, elems);
}

GroebnerBasis gb_mod_m(const RingPtr& ring, std::span<const Polynomial> gens, const Integer& m,
                       const Limits& limits) {
  if (m < 2) throw std::invalid_argument("gb_mod_m: modulus must be at least 2, got " + m.get_str());
  const auto& dom = ring->domain();
  if (!dom.is_integer() && !(dom.is_modular() && dom.modulus() == m)) {
    throw DomainError("gb_mod_m: generators over " + dom.name() + " cannot be reduced mod " + m.get_str());
  }
  const auto zring = ring->with_domain(Domain::integers());
  std::vector<Polynomial> zgens;
  zgens.reserve(gens.size() + 1);
  for (const auto& f : gens) {
    require_ring(f, ring);
    zgens.push_back(lift_to_integers(f));
  }
  zgens.push_back(Polynomial::constant(zring, Rational(m)));
  const auto zb = buchberger_z(zring, zgens, limits);

  const auto mring = ring->with_domain(Domain::modular(m));
  std::vector<Polynomial> out;
  for (const auto& b : zb) {
    auto pb = change_ring(b, mring);
    if (pb.is_zero()) continue;
    // Leading coefficients of the ZZ basis of <gens, m> are proper divisors
    // of m, so only the constant m itself can vanish.
    if (!(pb.leading_term() == b.leading_term())) {
      throw std::logic_error("gb_mod_m: leading coefficient not a proper divisor of m");
    }
    out.push_back(std::move(pb));
  }
  return GroebnerBasis(mring, std::move(out), true);
}

GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens, const Limits& limits) {
  const auto& dom = ring->domain();
  if (dom.is_integer()) return buchberger_z(ring, gens, limits);
  if (dom.is_field()) return buchberger_field(ring, gens, limits);
  return gb_mod_m(ring, gens, dom.modulus(), limits);
}

bool is_groebner(std::span<const Polynomial> G) {
  if (G.empty()) return true;
  const auto& ring = G.front().ring();
  const auto& dom = ring->domain();
  if (!dom.is_integer() && !dom.is_field()) {
    throw DomainError("is_groebner: unsupported domain " + dom.name());
  }
  for (const auto& g : G) {
    require_ring(g, ring);
    if (g.is_zero()) throw std::invalid_argument("is_groebner: zero polynomial");
  }
  const auto ptrs = pointers(G);
  auto vanishes = [&](const Polynomial& h) { return nf_dispatch(h, ptrs, unlimited_budget()).is_zero(); };
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (dom.is_field()) {
        if (!vanishes(s_polynomial_field(G[i], G[j]))) return false;
      } else if (!vanishes(s_pair_z(G[i], G[j])) || !vanishes(g_pair_z(G[i], G[j]))) {
        return false;
      }
    }
  }
  return true;
}

bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.reduced() || !b.reduced()) throw std::invalid_argument("gb_equal: bases must be reduced");
  if (!same_ring(a.ring(), b.ring())) {
    throw RingMismatch("gb_equal: " + a.ring()->describe() + " vs " + b.ring()->describe());
  }
  return a.elements() == b.elements();
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& G) {
  require_ring(f, G.ring());
  return normal_form(f, G.elements()).is_zero();
}

Division divide_with_cofactors(const Polynomial& f, std::span<const Polynomial> G) {
  const auto& dom = f.ring()->domain();
  if (!dom.is_field()) throw DomainError("divide_with_cofactors: domain " + dom.name() + " is not a field");
  for (const auto& g : G) {
    require_ring(g, f.ring());
    if (g.is_zero()) throw std::invalid_argument("divide_with_cofactors: zero divisor polynomial");
  }
  std::vector<std::vector<Term>> qterms(G.size());
  const auto ptrs = pointers(G);
  auto r = nf_field(f, ptrs, unlimited_budget(), &qterms);
  Division d{{}, std::move(r)};
  d.quotients.reserve(G.size());
  for (auto& q : qterms) d.quotients.emplace_back(f.ring(), std::move(q));
  return d;
}

}  // namespace modgrob
