#include "modgrob/lemma.hpp"

#include <sstream>

namespace modgrob {

ListStream::ListStream(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("stream generator outside the stream ring");
  }
}

std::optional<Polynomial> ListStream::next() {
  if (exhausted()) return std::nullopt;
  return generators_[pos_++];
}

GeneratorSetOracle::GeneratorSetOracle(RingPtr ring, std::vector<Polynomial> generators, Limits limits)
    : ring_(std::move(ring)), generators_(std::move(generators)), limits_(limits) {
  if (!ring_->domain().is_integer()) throw DomainError("oracle ring must be over ZZ");
  for (const auto& g : generators_) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("oracle generator outside the oracle ring");
  }
}

GroebnerBasis GeneratorSetOracle::rational_basis() const {
  std::lock_guard lock(mutex_);
  if (!rational_) {
    try {
      const auto qring = ring_->with_domain(Domain::rationals());
      rational_ = buchberger_field(qring, change_ring(generators_, qring), limits_);
    } catch (const ResourceLimitExceeded& e) {
      throw OracleFailure(std::string("oracle QQ basis: ") + e.what());
    }
  }
  return *rational_;
}

GroebnerBasis GeneratorSetOracle::modular_basis(const Integer& m) const {
  std::lock_guard lock(mutex_);
  auto it = modular_.find(m);
  if (it == modular_.end()) {
    try {
      it = modular_.emplace(m, gb_mod_m(ring_, generators_, m, limits_)).first;
    } catch (const ResourceLimitExceeded& e) {
      throw OracleFailure("oracle ZZ/" + m.get_str() + " basis: " + e.what());
    }
  }
  return it->second;
}

std::string rejection_reason(const Certificate& c) {
  if (c.accepted) return {};
  if (!c.rational_equal) return "QQ bases differ";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : c.modulus_verdicts) {
    if (v.equal) continue;
    os << (first ? "ZZ/" : ", ZZ/") << v.modulus;
    first = false;
  }
  os << " bases differ";
  return os.str();
}

Certificate main_lemma_check(const IdealOracle& oracle, std::span<const Polynomial> j_gens,
                             const Limits& limits) {
  const auto& ring = oracle.ring();
  for (const auto& g : j_gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("main_lemma_check: generator outside oracle ring");
  }
  Certificate cert;
  cert.prefix_length = j_gens.size();

  const auto qring = ring->with_domain(Domain::rationals());
  cert.oracle_rational = oracle.rational_basis();
  cert.prefix_rational = buchberger_field(qring, change_ring(j_gens, qring), limits);
  cert.rational_equal = gb_equal(*cert.oracle_rational, *cert.prefix_rational);
  if (!cert.rational_equal) return cert;

  cert.torsion = torsion_exponent(ring, j_gens, limits);
  cert.exponent = cert.torsion->exponent;
  cert.factorization = factorize(*cert.exponent);

  // m = 1: QJ ∩ A = J, so I ⊆ QI ∩ A = QJ ∩ A = J with no modular check.
  bool all_equal = true;
  std::vector<Integer> moduli;
  for (const auto& pp : cert.factorization) {
    const Integer mi = pp.value();
    moduli.push_back(mi);
    auto expected = oracle.modular_basis(mi);
    auto actual = gb_mod_m(ring, j_gens, mi, limits);
    const bool eq = gb_equal(expected, actual);
    all_equal = all_equal && eq;
    cert.modulus_verdicts.push_back({mi, eq, std::move(expected), std::move(actual)});
  }
  cert.bezout = crt_coefficients(moduli);
  cert.accepted = all_equal;
  if (cert.accepted) cert.basis = buchberger_z(ring, j_gens, limits);
  return cert;
}

SolveResult solve_problem_p(GeneratorStream& stream, const IdealOracle& oracle, const Limits& limits) {
  if (!same_ring(stream.ring(), oracle.ring())) throw RingMismatch("solve_problem_p: stream and oracle rings differ");
  stream.reset();
  std::vector<Polynomial> prefix;
  std::vector<Certificate> rejected;
  while (auto f = stream.next()) {
    prefix.push_back(std::move(*f));
    auto cert = main_lemma_check(oracle, prefix, limits);
    if (cert.accepted) {
      auto basis = *cert.basis;
      return {std::move(basis), std::move(cert), std::move(rejected)};
    }
    rejected.push_back(std::move(cert));
  }
  std::string what = "stream exhausted after " + std::to_string(prefix.size()) + " generators";
  if (!rejected.empty()) what += "; last rejection: " + rejection_reason(rejected.back());
  throw StreamExhausted(what, std::move(rejected));
}

}  // namespace modgrob
