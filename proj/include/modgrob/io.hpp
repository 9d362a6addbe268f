#pragma once

// Problem-file language and canonical text output.
//
//   // comment            # comment
//   ring r = ZZ, (z,y,x), dp;      coefficients: ZZ | QQ | ZZ/m
//                                  (also integer, (integer,m), 0, p)
//                                  order: lp | dp | block(lp(1),dp)
//   ideal I = 3z-y, 3y-x, 3x;
//   ideal G = 1;
//   stream S = 2x, 3x;             ordered generators for solve-p
//   oracle = I;                    or oracle = "other.problem";
//
// Polynomials: integers, variables, + - * / ^, parentheses. A number right
// after a variable is an exponent (3y2 = 3*y^2); juxtaposition multiplies.

#include "modgrob/groebner.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modgrob {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct IdealSection {
  std::string name;
  std::vector<Polynomial> generators;
};

struct OracleRef {
  enum class Kind { Ideal, Path };
  Kind kind;
  std::string value;
};

struct ProblemFile {
  RingPtr ring;
  std::vector<IdealSection> ideals;
  std::optional<IdealSection> stream;
  std::optional<OracleRef> oracle;

  /// Ideal or stream section with this name, or nullptr.
  const IdealSection* find(std::string_view name) const;
};

/// Replace the declared domain or order before polynomials are read.
struct ParseOverrides {
  std::optional<Domain> domain;
  std::optional<std::string> order;
};

ProblemFile parse_problem(std::string_view text, const ParseOverrides& overrides = {});
/// ZZ | QQ | ZZ/m (and the Singular spellings).
Domain parse_domain(std::string_view text);
TermOrder parse_term_order(std::string_view text, std::size_t arity);
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Terms in descending order, explicit * and ^, "0" for zero.
std::string format_polynomial(const Polynomial& f);
/// One polynomial per line in basis order; "0" for the empty basis.
std::string format_basis(std::span<const Polynomial> G);
std::string format_basis(const GroebnerBasis& G);

}  // namespace modgrob
