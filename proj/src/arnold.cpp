#include "modgrob/arnold.hpp"

#include <algorithm>

namespace modgrob {

namespace {

std::vector<Monomial> leading_set(std::span<const Polynomial> G, const TermOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& g : G) lms.push_back(g.leading_monomial());
  auto less = [&](const Monomial& a, const Monomial& b) { return order.compare(a.exponents(), b.exponents()) < 0; };
  std::sort(lms.begin(), lms.end(), less);
  lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
  return lms;
}

}  // namespace

std::string to_string(ArnoldVerdict v) {
  switch (v) {
    case ArnoldVerdict::Verified:
      return "Verified";
    case ArnoldVerdict::ConditionFailed:
      return "ConditionFailed";
    case ArnoldVerdict::InapplicableNonHomogeneous:
      return "InapplicableNonHomogeneous";
  }
  return "?";
}

std::vector<int> ArnoldReport::failed_conditions() const {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) {
    if (!conditions[i]) out.push_back(i + 1);
  }
  return out;
}

ArnoldReport arnold_conditions(const RingPtr& ring, std::span<const Polynomial> i_gens,
                               std::span<const Polynomial> G, const Integer& p, const Limits& limits) {
  if (!is_prime(p)) throw std::invalid_argument("arnold_conditions: " + p.get_str() + " is not prime");
  if (!ring->domain().is_integer()) throw DomainError("arnold_conditions: ring must be over ZZ");
  for (const auto& f : i_gens) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch("arnold_conditions: generator outside ring");
  }
  for (const auto& g : G) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("arnold_conditions: G element outside ring");
    if (g.is_zero()) throw std::invalid_argument("arnold_conditions: zero polynomial in G");
  }

  ArnoldReport report;
  report.prime = p;

  const auto pring = ring->with_domain(Domain::modular(p));
  std::vector<Polynomial> gp;
  for (const auto& g : G) {
    auto h = change_ring(g, pring);
    if (!h.is_zero()) gp.push_back(std::move(h));
  }
  report.conditions[0] =
      is_groebner(gp) && gb_equal(buchberger_field(pring, gp, limits), gb_mod_m(ring, i_gens, p, limits));

  const auto qring = ring->with_domain(Domain::rationals());
  std::vector<Polynomial> gq;
  for (const auto& g : G) {
    auto h = change_ring(g, qring);
    gq.push_back(h.scaled(1 / h.leading_coefficient()));
  }
  report.conditions[1] = is_groebner(gq);

  const auto gq_basis = buchberger_field(qring, gq, limits);
  report.conditions[2] = std::all_of(i_gens.begin(), i_gens.end(), [&](const Polynomial& f) {
    return ideal_member(change_ring(f, qring), gq_basis);
  });

  report.conditions[3] = leading_set(gp, ring->order()) == leading_set(G, ring->order());

  auto homogeneous = [](const Polynomial& f) { return f.is_homogeneous(); };
  report.homogeneous_input = std::all_of(i_gens.begin(), i_gens.end(), homogeneous) &&
                             std::all_of(G.begin(), G.end(), homogeneous);

  const bool all = std::all_of(report.conditions.begin(), report.conditions.end(), [](bool b) { return b; });
  if (!all) {
    report.verdict = ArnoldVerdict::ConditionFailed;
  } else if (!report.homogeneous_input) {
    report.verdict = ArnoldVerdict::InapplicableNonHomogeneous;
  } else {
    report.verdict = ArnoldVerdict::Verified;
  }
  return report;
}

HomogenizedIdeal homogenize_ideal(const RingPtr& ring, std::span<const Polynomial> gens) {
  HomogenizedIdeal out;
  auto vars = ring->variables();
  vars.push_back(ring->fresh_variable("h"));
  out.variable = ring->arity();

  TermOrder order = ring->order();
  if (order.kind() == TermOrder::Kind::Lex) {
    order = TermOrder::degrevlex();
    out.order_upgraded = true;
  }
  out.ring = RingDescriptor::make(std::move(vars), std::move(order), ring->domain());
  for (const auto& f : gens) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch("homogenize_ideal: generator outside ring");
    out.generators.push_back(homogenize(f, out.ring, out.variable));
  }
  return out;
}

bool is_lucky_prime(const RingPtr& ring, std::span<const Polynomial> i_gens, const Integer& p,
                    const Limits& limits) {
  const auto qring = ring->with_domain(Domain::rationals());
  const auto q = buchberger_field(qring, change_ring(i_gens, qring), limits);
  const auto modp = gb_mod_m(ring, i_gens, p, limits);
  return q.leading_monomials() == modp.leading_monomials();
}

}  // namespace modgrob
