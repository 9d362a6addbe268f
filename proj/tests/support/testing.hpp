#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "modgrob/groebner.hpp"
#include "modgrob/io.hpp"
#include "modgrob/numbers.hpp"
#include "modgrob/polynomial.hpp"
#include "modgrob/ring.hpp"

namespace modgrob::testing {

/// ring("z,y,x", "dp", "ZZ")
RingPtr ring(const std::string& vars, const std::string& order, const std::string& domain);

Polynomial poly(const RingPtr& r, const std::string& text);
std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& texts);

std::string fmt(const GroebnerBasis& G);
std::string fmt(const Polynomial& f);

/// All monomials of total degree <= d (or == d when `exact`) in `arity` variables.
std::vector<Monomial> monomials_up_to(std::size_t arity, int d, bool exact = false);

// Bounded-degree integer linear algebra. The multiples x^a * g with
// deg(x^a) + deg(g) <= bound span a lattice L in the coefficient space of
// monomials of degree <= bound; with modulus m > 0 the vectors m*e_i are
// added. Membership in L implies ideal membership; for homogeneous
// generators and homogeneous f of degree <= bound the converse holds too.
class LatticeOracle {
 public:
  LatticeOracle(std::span<const Polynomial> gens, int bound, const Integer& modulus = 0);
  bool contains(const Polynomial& f) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t column(const Monomial& m) const;
  std::size_t arity_;
  int bound_;
  std::vector<Monomial> monomials_;
  std::vector<std::vector<Integer>> rows_;  // echelon form, pivot columns increasing
  std::vector<std::size_t> pivots_;
};

/// Invariant factors (nonzero diagonal of the Smith form) of an integer matrix.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> a);

/// Exponent of the torsion of A/J restricted to degrees 0..bound, for J
/// generated by homogeneous polynomials: the lcm over d of the largest
/// invariant factor of the degree-d lattice.
Integer lattice_torsion_exponent(std::span<const Polynomial> gens, int bound);

struct RandomShape {
  int max_degree = 4;
  int max_terms = 3;
  int coeff_bound = 9;
  bool homogeneous = false;
};

class RandomPolys {
 public:
  explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}
  Polynomial poly(const RingPtr& r, const RandomShape& shape);
  std::vector<Polynomial> ideal(const RingPtr& r, std::size_t count, const RandomShape& shape);
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace modgrob::testing
