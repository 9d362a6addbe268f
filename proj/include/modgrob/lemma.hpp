#pragma once

// Equality criterion for J ⊆ I over Z[X]: QJ = QI and, for each prime power
// m_i of the torsion exponent m of A/J, equal images in (Z/m_i)[X]. Drives
// the prefix search over a generator stream.

#include "modgrob/groebner.hpp"
#include "modgrob/torsion.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modgrob {

/// Finite, replayable source of generators over ZZ.
class GeneratorStream {
 public:
  virtual ~GeneratorStream() = default;
  virtual std::optional<Polynomial> next() = 0;
  virtual bool exhausted() const = 0;
  virtual void reset() = 0;
  virtual const RingPtr& ring() const = 0;
};

class ListStream final : public GeneratorStream {
 public:
  ListStream(RingPtr ring, std::vector<Polynomial> generators);

  std::optional<Polynomial> next() override;
  bool exhausted() const override { return pos_ >= generators_.size(); }
  void reset() override { pos_ = 0; }
  const RingPtr& ring() const override { return ring_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::size_t pos_ = 0;
};

class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supplies the reduced basis of QI and of the image of I in (Z/m)[X].
class IdealOracle {
 public:
  virtual ~IdealOracle() = default;
  /// The ZZ ring of I.
  virtual const RingPtr& ring() const = 0;
  virtual GroebnerBasis rational_basis() const = 0;
  virtual GroebnerBasis modular_basis(const Integer& m) const = 0;
};

/// Oracle computed on demand from a complete generating set of I. Answers
/// are cached; safe for concurrent use.
class GeneratorSetOracle final : public IdealOracle {
 public:
  GeneratorSetOracle(RingPtr ring, std::vector<Polynomial> generators, Limits limits = {});

  const RingPtr& ring() const override { return ring_; }
  GroebnerBasis rational_basis() const override;
  GroebnerBasis modular_basis(const Integer& m) const override;
  const std::vector<Polynomial>& generators() const { return generators_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  Limits limits_;
  mutable std::mutex mutex_;
  mutable std::optional<GroebnerBasis> rational_;
  mutable std::map<Integer, GroebnerBasis> modular_;
};

struct ModulusVerdict {
  Integer modulus;
  bool equal = false;
  GroebnerBasis oracle_basis;
  GroebnerBasis prefix_basis;
};

struct Certificate {
  std::size_t prefix_length = 0;
  bool rational_equal = false;
  std::optional<GroebnerBasis> oracle_rational;
  std::optional<GroebnerBasis> prefix_rational;
  /// Torsion exponent of A/J; computed only when the QQ verdict holds.
  std::optional<Integer> exponent;
  std::optional<TorsionReport> torsion;
  PrimePowerFactorization factorization;
  std::vector<ModulusVerdict> modulus_verdicts;
  /// b_i with sum b_i * (m / m_i) = 1 for the prime powers m_i.
  std::vector<Integer> bezout;
  bool accepted = false;
  /// Reduced ZZ basis of J, present when accepted.
  std::optional<GroebnerBasis> basis;
};

/// One-line reason for a rejection; empty when accepted.
std::string rejection_reason(const Certificate& c);

/// J ⊆ I is the caller's obligation (J comes from I's stream).
Certificate main_lemma_check(const IdealOracle& oracle, std::span<const Polynomial> j_gens,
                             const Limits& limits = {});

struct SolveResult {
  GroebnerBasis basis;
  Certificate certificate;
  std::vector<Certificate> rejected;
};

class StreamExhausted : public std::runtime_error {
 public:
  StreamExhausted(const std::string& what, std::vector<Certificate> rejected)
      : std::runtime_error(what), rejected_(std::move(rejected)) {}
  const std::vector<Certificate>& rejected() const { return rejected_; }

 private:
  std::vector<Certificate> rejected_;
};

/// Tries prefixes k = 1, 2, ... of the stream until one is accepted.
SolveResult solve_problem_p(GeneratorStream& stream, const IdealOracle& oracle, const Limits& limits = {});

}  // namespace modgrob
