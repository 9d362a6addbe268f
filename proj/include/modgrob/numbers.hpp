#pragma once

// Exact integer and rational arithmetic: gcd/Bezout data, CRT coefficients,
// factorization into prime powers, lcm.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modgrob {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  Integer value() const;
  bool operator==(const PrimePower&) const = default;
};

/// Prime powers with strictly increasing primes. Empty for n = 1.
using PrimePowerFactorization = std::vector<PrimePower>;

struct ExtGcd {
  Integer g;
  Integer u;
  Integer v;
};

class NotCoprime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// g = gcd(a, b) >= 0 and u*a + v*b = g. ext_gcd(0, 0) = (0, 0, 0).
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// For pairwise coprime moduli m_i > 1 with product m and c_i = m / m_i,
/// returns b_i with sum(b_i * c_i) = 1. Not canonical.
std::vector<Integer> crt_coefficients(std::span<const Integer> moduli);

/// Cofactors c_i = m / m_i for the moduli above.
std::vector<Integer> crt_cofactors(std::span<const Integer> moduli);

PrimePowerFactorization factorize(const Integer& n);
Integer product(const PrimePowerFactorization& f);

/// lcm of |x_i|; 1 for the empty list, 0 if any entry is 0.
Integer lcm_many(std::span<const Integer> xs);

/// Deterministic below 2^64, BPSW-probabilistic above.
bool is_prime(const Integer& n);

/// Remainder in [0, |d|). d != 0.
Integer floor_mod(const Integer& a, const Integer& d);

std::string to_string(const PrimePowerFactorization& f);

}  // namespace modgrob
