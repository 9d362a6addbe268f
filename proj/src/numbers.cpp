#include "modgrob/numbers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modgrob {

namespace {

constexpr unsigned long kTrialDivisionBound = 1'000'000;

// Pollard rho with Brent's cycle detection. n is odd, composite, and has no
// prime factor below the trial division bound.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2;
    Integer x;
    Integer q = 1;
    Integer g = 1;
    Integer ys;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          step(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        Integer diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  Integer rest = n / d;
  factor_into(rest, out);
}

}  // namespace

Integer PrimePower::value() const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), prime.get_mpz_t(), exponent);
  return r;
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

std::vector<Integer> crt_cofactors(std::span<const Integer> moduli) {
  Integer m = 1;
  for (const auto& mi : moduli) m *= mi;
  std::vector<Integer> c;
  c.reserve(moduli.size());
  for (const auto& mi : moduli) c.push_back(m / mi);
  return c;
}

std::vector<Integer> crt_coefficients(std::span<const Integer> moduli) {
  for (const auto& mi : moduli) {
    if (mi <= 1) throw std::invalid_argument("crt_coefficients: modulus must exceed 1");
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (gcd(moduli[i], moduli[j]) != 1) {
        throw NotCoprime("crt_coefficients: " + moduli[i].get_str() + " and " +
                         moduli[j].get_str() + " share a factor");
      }
    }
  }
  if (moduli.empty()) return {};

  // Fold ext_gcd over the cofactors: invariant sum_{j<=i} b_j c_j = g.
  const auto c = crt_cofactors(moduli);
  std::vector<Integer> b(c.size());
  b[0] = 1;
  Integer g = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) {
    auto [gi, u, v] = ext_gcd(g, c[i]);
    for (std::size_t j = 0; j < i; ++j) b[j] *= u;
    b[i] = v;
    g = gi;
  }
  if (g != 1) throw std::logic_error("crt_coefficients: cofactors not coprime");
  return b;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

PrimePowerFactorization factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::map<Integer, unsigned> found;
  Integer rest = n;
  for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) {
      ++found[rest];
      rest = 1;
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[Integer(p)];
      rest /= p;
    }
  }
  factor_into(rest, found);

  PrimePowerFactorization out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

Integer product(const PrimePowerFactorization& f) {
  Integer r = 1;
  for (const auto& pp : f) r *= pp.value();
  return r;
}

Integer lcm_many(std::span<const Integer> xs) {
  Integer r = 1;
  for (const auto& x : xs) r = lcm(r, x);
  return r;
}

Integer floor_mod(const Integer& a, const Integer& d) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string to_string(const PrimePowerFactorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " * ";
    os << f[i].prime;
    if (f[i].exponent != 1) os << '^' << f[i].exponent;
  }
  return os.str();
}

}  // namespace modgrob
