#include "testing.hpp"

#include <sstream>
#include <stdexcept>

namespace modgrob::testing {

RingPtr ring(const std::string& vars, const std::string& order, const std::string& domain) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  for (std::string v; std::getline(ss, v, ',');) names.push_back(v);
  return RingDescriptor::make(names, parse_term_order(order, names.size()), parse_domain(domain));
}

Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(r, t));
  return out;
}

std::string fmt(const GroebnerBasis& G) { return format_basis(G); }
std::string fmt(const Polynomial& f) { return format_polynomial(f); }

namespace {

void enumerate(std::size_t arity, int remaining, std::vector<Exponent>& cur, std::size_t i,
               bool exact, std::vector<Monomial>& out) {
  if (i + 1 == arity || arity == 0) {
    if (arity == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int e = exact ? remaining : 0; e <= remaining; ++e) {
      cur[i] = e;
      out.emplace_back(cur);
    }
    cur[i] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[i] = e;
    enumerate(arity, remaining - e, cur, i + 1, exact, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t arity, int d, bool exact) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(arity, 0);
  if (arity == 0) {
    if (!exact || d == 0) out.emplace_back(cur);
    return out;
  }
  enumerate(arity, d, cur, 0, exact, out);
  return out;
}

LatticeOracle::LatticeOracle(std::span<const Polynomial> gens, int bound, const Integer& modulus)
    : arity_(0), bound_(bound) {
  if (gens.empty()) throw std::invalid_argument("lattice oracle needs a ring");
  arity_ = gens.front().ring()->arity();
  monomials_ = monomials_up_to(arity_, bound);
  auto insert = [&](std::vector<Integer> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
      std::size_t k = it - pivots_.begin();
      if (it == pivots_.end() || *it != c) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        pivots_.insert(it, c);
        rows_.insert(rows_.begin() + k, std::move(v));
        return;
      }
      auto& r = rows_[k];
      Integer a = r[c], b = v[c];
      if (b % a == 0) {
        Integer q = b / a;
        for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * r[j];
        continue;
      }
      ExtGcd e = ext_gcd(a, b);
      Integer ag = a / e.g, bg = b / e.g;
      for (std::size_t j = c; j < v.size(); ++j) {
        Integer nr = e.u * r[j] + e.v * v[j];
        Integer nv = ag * v[j] - bg * r[j];
        r[j] = nr;
        v[j] = nv;
      }
    }
  };
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto deg = g.total_degree();
    if (deg > bound) continue;
    for (const auto& shift : monomials_up_to(arity_, bound - static_cast<int>(deg))) {
      std::vector<Integer> v(monomials_.size());
      for (const auto& t : g.terms()) {
        if (t.coeff.get_den() != 1) throw std::invalid_argument("lattice oracle needs integral input");
        v[column(t.mono * shift)] += t.coeff.get_num();
      }
      insert(std::move(v));
    }
  }
  if (modulus > 0)
    for (std::size_t c = 0; c < monomials_.size(); ++c) {
      std::vector<Integer> v(monomials_.size());
      v[c] = modulus;
      insert(std::move(v));
    }
}

std::size_t LatticeOracle::column(const Monomial& m) const {
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    if (monomials_[i] == m) return i;
  throw std::out_of_range("monomial beyond the degree bound");
}

bool LatticeOracle::contains(const Polynomial& f) const {
  if (f.total_degree() > bound_) throw std::out_of_range("polynomial beyond the degree bound");
  std::vector<Integer> v(monomials_.size());
  for (const auto& t : f.terms()) {
    if (t.coeff.get_den() != 1) return false;
    v[column(t.mono)] += t.coeff.get_num();
  }
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    if (it == pivots_.end() || *it != c) return false;
    const auto& r = rows_[it - pivots_.begin()];
    if (v[c] % r[c] != 0) return false;
    Integer q = v[c] / r[c];
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * r[j];
  }
  return true;
}

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> out;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block to (t, t)
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return out;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

Integer lattice_torsion_exponent(std::span<const Polynomial> gens, int bound) {
  if (gens.empty()) return 1;
  std::size_t arity = gens.front().ring()->arity();
  Integer exponent = 1;
  for (int d = 0; d <= bound; ++d) {
    auto cols = monomials_up_to(arity, d, true);
    std::vector<std::vector<Integer>> m;
    for (const auto& g : gens) {
      if (g.is_zero() || g.total_degree() > d) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("homogeneous generators required");
      for (const auto& shift : monomials_up_to(arity, d - static_cast<int>(g.total_degree()), true)) {
        std::vector<Integer> v(cols.size());
        for (const auto& t : g.terms()) {
          auto mono = t.mono * shift;
          auto it = std::find(cols.begin(), cols.end(), mono);
          v[it - cols.begin()] += t.coeff.get_num();
        }
        m.push_back(std::move(v));
      }
    }
    auto inv = smith_invariants(std::move(m));
    if (!inv.empty()) exponent = lcm(exponent, inv.back());
  }
  return exponent;
}

Polynomial RandomPolys::poly(const RingPtr& r, const RandomShape& shape) {
  for (;;) {
    int terms = uniform(1, shape.max_terms);
    int hdeg = uniform(1, shape.max_degree);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
      int d = shape.homogeneous ? hdeg : uniform(0, shape.max_degree);
      std::vector<Exponent> e(r->arity(), 0);
      for (int k = 0; k < d && r->arity() > 0; ++k) ++e[uniform(0, static_cast<int>(r->arity()) - 1)];
      int c = 0;
      while (c == 0) c = uniform(-shape.coeff_bound, shape.coeff_bound);
      ts.push_back({Rational(c), Monomial(e)});
    }
    Polynomial f(r, std::move(ts));
    if (!f.is_zero()) return f;
  }
}

std::vector<Polynomial> RandomPolys::ideal(const RingPtr& r, std::size_t count, const RandomShape& shape) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(poly(r, shape));
  return out;
}

}  // namespace modgrob::testing
