#include "modgrob/torsion.hpp"

#include <numeric>

namespace modgrob {

namespace {

void require_integer_ring(const RingPtr& ring, const char* what) {
  if (!ring->domain().is_integer()) {
    throw DomainError(std::string(what) + ": ring must be over ZZ, got " + ring->domain().name());
  }
}

std::vector<Polynomial> contract(const RingPtr& ring, const GroebnerBasis& j_basis, const Limits& limits) {
  if (j_basis.empty()) return {};

  std::vector<Integer> lcs;
  for (const auto& g : j_basis) lcs.push_back(g.leading_coefficient().get_num());
  const Integer s = lcm_many(lcs);

  // Y goes in front, alone in its block.
  std::vector<std::string> vars{ring->fresh_variable("Y")};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  const auto ering = RingDescriptor::make(
      std::move(vars), TermOrder::block(1, TermOrder::lex(), ring->order()), Domain::integers());
  std::vector<std::size_t> shift(ring->arity());
  std::iota(shift.begin(), shift.end(), std::size_t{1});

  std::vector<Polynomial> gens;
  gens.reserve(j_basis.size() + 1);
  for (const auto& g : j_basis) gens.push_back(embed(g, ering, shift));
  const Monomial y = Monomial::variable(ering->arity(), 0);
  gens.push_back(Polynomial(ering, {{Rational(s), y}, {Rational(-1), Monomial::one(ering->arity())}}));

  const auto eb = buchberger_z(ering, gens, limits);
  std::vector<Polynomial> out;
  for (const auto& g : eb) {
    if (!g.free_of(0)) continue;
    std::vector<Term> terms;
    terms.reserve(g.size());
    for (const auto& t : g.terms()) {
      const auto e = t.mono.exponents().subspan(1);
      terms.push_back({t.coeff, Monomial(std::vector<Exponent>(e.begin(), e.end()))});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> saturation_contraction(const RingPtr& ring, std::span<const Polynomial> j_gens,
                                               const Limits& limits) {
  require_integer_ring(ring, "saturation_contraction");
  return contract(ring, buchberger_z(ring, j_gens, limits), limits);
}

Integer minimal_multiplier(const Polynomial& g, const GroebnerBasis& j_basis) {
  const auto& ring = j_basis.ring();
  require_integer_ring(ring, "minimal_multiplier");
  const auto qring = ring->with_domain(Domain::rationals());
  const auto qbasis = change_ring(j_basis.elements(), qring);
  const auto division = divide_with_cofactors(change_ring(g, qring), qbasis);
  if (!division.remainder.is_zero()) throw NonMember("minimal_multiplier: generator is not in QJ");

  Integer k = 1;
  for (const auto& q : division.quotients) {
    for (const auto& t : q.terms()) k = lcm(k, Integer(t.coeff.get_den()));
  }
  // {k : k g ∈ J} is an ideal of Z containing k0, so m_g | k0.
  for (const auto& [p, e] : factorize(k)) {
    for (unsigned i = 0; i < e; ++i) {
      const Integer smaller = k / p;
      if (!ideal_member(g.scaled(Rational(smaller)), j_basis)) break;
      k = smaller;
    }
  }
  return k;
}

TorsionReport torsion_exponent(const RingPtr& ring, std::span<const Polynomial> j_gens, const Limits& limits) {
  require_integer_ring(ring, "torsion_exponent");
  const auto j_basis = buchberger_z(ring, j_gens, limits);
  TorsionReport report{Integer(1), contract(ring, j_basis, limits), {}};
  for (const auto& g : report.saturation_basis) {
    auto m = minimal_multiplier(g, j_basis);
    report.exponent = lcm(report.exponent, m);
    report.multipliers.push_back({g, std::move(m)});
  }
  return report;
}

}  // namespace modgrob
