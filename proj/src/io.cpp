#include "modgrob/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace modgrob {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Character immediately at the cursor, no whitespace skipping.
  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    if (!is_ident_start(raw_peek())) fail("expected identifier");
    const auto start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer integer() {
    skip_space();
    return raw_integer();
  }

  Integer raw_integer() {
    if (!is_digit(raw_peek())) fail("expected integer");
    const auto start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string quoted() {
    expect('"');
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') ++pos_;
    if (raw_peek() != '"') fail("unterminated string");
    auto s = std::string(text_.substr(start, pos_ - start));
    ++pos_;
    return s;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Recursive descent over Q; the caller maps the result into the target ring.
class PolyParser {
 public:
  PolyParser(Cursor& cur, RingPtr qring) : cur_(cur), ring_(std::move(qring)) {
    for (std::size_t i = 0; i < ring_->arity(); ++i) names_.emplace_back(ring_->variables()[i], i);
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (cur_.accept('-')) {
      negate = true;
    } else {
      cur_.accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (cur_.accept('+')) {
        acc += term();
      } else if (cur_.accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  bool starts_atom(char c) const { return is_digit(c) || is_ident_start(c) || c == '('; }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      const char c = cur_.peek();
      if (c == '*') {
        cur_.advance(1);
        acc = acc * power();
      } else if (c == '/') {
        const auto at = cur_.pos();
        cur_.advance(1);
        auto d = power();
        if (d.is_zero() || !d.is_constant()) cur_.fail_at(at, "division by a non-constant or zero");
        acc = acc.scaled(1 / d.leading_coefficient());
      } else if (starts_atom(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (cur_.accept('^')) {
      const auto e = cur_.integer();
      if (!e.fits_sint_p() || e > 1'000'000) cur_.fail("exponent too large");
      base = pow(base, e.get_si());
    }
    return base;
  }

  Polynomial pow(const Polynomial& f, long e) {
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    for (long i = 0; i < e; ++i) r = r * f;
    return r;
  }

  Polynomial atom() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.advance(1);
      auto inner = expression();
      cur_.expect(')');
      return inner;
    }
    if (is_digit(c)) return Polynomial::constant(ring_, Rational(cur_.raw_integer()));
    if (is_ident_start(c)) return variable();
    cur_.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }

  Polynomial variable() {
    const auto rest = cur_.rest();
    std::size_t ident_len = 0;
    while (ident_len < rest.size() && is_ident_char(rest[ident_len])) ++ident_len;
    std::size_t best_len = 0;
    std::size_t best_index = 0;
    for (const auto& [name, index] : names_) {
      if (name.size() > best_len && name.size() <= ident_len && rest.substr(0, name.size()) == name) {
        best_len = name.size();
        best_index = index;
      }
    }
    if (best_len == 0) cur_.fail("unknown identifier '" + std::string(rest.substr(0, ident_len)) + "'");
    cur_.advance(best_len);
    Exponent e = 1;
    if (is_digit(cur_.raw_peek())) {
      const auto v = cur_.raw_integer();
      if (!v.fits_sint_p() || v > 1'000'000) cur_.fail("exponent too large");
      e = static_cast<Exponent>(v.get_si());
    }
    return Polynomial::term(ring_, Rational(1), Monomial::variable(ring_->arity(), best_index, e));
  }

  Cursor& cur_;
  RingPtr ring_;
  std::vector<std::pair<std::string, std::size_t>> names_;
};

Polynomial parse_expression(Cursor& cur, const RingPtr& ring) {
  const auto qring = ring->with_domain(Domain::rationals());
  const auto start = cur.pos();
  PolyParser parser(cur, qring);
  auto q = parser.expression();
  try {
    return change_ring(q, ring);
  } catch (const std::domain_error& e) {
    cur.fail_at(start, e.what());
  }
}

Domain read_domain(Cursor& cur) {
  const auto at = cur.pos();
  if (cur.accept('(')) {
    const auto word = cur.identifier();
    if (word != "integer") cur.fail_at(at, "expected (integer, m)");
    cur.expect(',');
    const auto m = cur.integer();
    cur.expect(')');
    if (m < 2) cur.fail_at(at, "modulus must be at least 2");
    return Domain::modular(m);
  }
  if (is_digit(cur.peek())) {
    const auto c = cur.integer();
    if (c == 0) return Domain::rationals();
    if (!is_prime(c)) cur.fail_at(at, "characteristic " + c.get_str() + " is not prime");
    return Domain::modular(c);
  }
  const auto word = cur.identifier();
  if (word == "QQ") return Domain::rationals();
  if (word == "integer") return Domain::integers();
  if (word == "ZZ") {
    if (!cur.accept('/')) return Domain::integers();
    const auto m = cur.integer();
    if (m < 2) cur.fail_at(at, "modulus must be at least 2");
    return Domain::modular(m);
  }
  cur.fail_at(at, "unknown coefficient domain '" + word + "'");
}

TermOrder simple_order(Cursor& cur, const std::string& word, std::size_t at) {
  if (word == "lp") return TermOrder::lex();
  if (word == "dp") return TermOrder::degrevlex();
  cur.fail_at(at, "unknown term order '" + word + "'");
}

TermOrder read_order(Cursor& cur, std::size_t arity) {
  const auto at = cur.pos();
  // Singular-style "(lp(1),dp)" or "block(lp(1),dp)".
  if (cur.peek() != '(') {
    const auto word = cur.identifier();
    if (word != "block") return simple_order(cur, word, at);
  }
  cur.expect('(');
  struct Item {
    TermOrder order;
    std::optional<std::size_t> size;
  };
  std::vector<Item> items;
  do {
    const auto item_at = cur.pos();
    auto word = cur.identifier();
    Item it{simple_order(cur, word, item_at), std::nullopt};
    if (cur.accept('(')) {
      const auto n = cur.integer();
      if (!n.fits_ulong_p() || n == 0) cur.fail("block size must be positive");
      it.size = n.get_ui();
      cur.expect(')');
    }
    items.push_back(std::move(it));
  } while (cur.accept(','));
  cur.expect(')');
  if (items.size() != 2) cur.fail_at(at, "block order needs exactly two blocks");
  if (!items[0].size) cur.fail_at(at, "first block needs a size, e.g. lp(1)");
  const auto front = *items[0].size;
  if (front >= arity) cur.fail_at(at, "first block must leave variables for the second");
  if (items[1].size && *items[1].size != arity - front) {
    cur.fail_at(at, "block sizes do not add up to the number of variables");
  }
  return TermOrder::block(front, std::move(items[0].order), std::move(items[1].order));
}

std::vector<Polynomial> parse_list(Cursor& cur, const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (cur.peek() == ';') return out;
  do {
    out.push_back(parse_expression(cur, ring));
  } while (cur.accept(','));
  return out;
}

void write_coeff_abs(std::ostream& os, const Rational& c) {
  const Rational a = abs(c);
  os << a.get_num();
  if (a.get_den() != 1) os << '/' << a.get_den();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const IdealSection* ProblemFile::find(std::string_view name) const {
  for (const auto& s : ideals) {
    if (s.name == name) return &s;
  }
  if (stream && stream->name == name) return &*stream;
  return nullptr;
}

ProblemFile parse_problem(std::string_view text, const ParseOverrides& overrides) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty problem file");
  ProblemFile pf;
  std::set<std::string> names;
  while (!cur.at_end()) {
    const auto at = cur.pos();
    const auto keyword = cur.identifier();
    if (keyword == "ring") {
      if (pf.ring) cur.fail_at(at, "ring declared twice");
      cur.identifier();
      cur.expect('=');
      auto domain = read_domain(cur);
      cur.expect(',');
      cur.expect('(');
      std::vector<std::string> vars;
      std::set<std::string> seen;
      do {
        const auto vat = cur.pos();
        auto v = cur.identifier();
        if (!seen.insert(v).second) cur.fail_at(vat, "duplicate variable '" + v + "'");
        vars.push_back(std::move(v));
      } while (cur.accept(','));
      cur.expect(')');
      cur.expect(',');
      auto order = read_order(cur, vars.size());
      cur.expect(';');
      if (overrides.domain) domain = *overrides.domain;
      if (overrides.order) order = parse_term_order(*overrides.order, vars.size());
      pf.ring = RingDescriptor::make(std::move(vars), std::move(order), std::move(domain));
    } else if (keyword == "ideal" || keyword == "stream") {
      if (!pf.ring) cur.fail_at(at, "'" + keyword + "' before the ring declaration");
      const auto nat = cur.pos();
      IdealSection section{cur.identifier(), {}};
      if (!names.insert(section.name).second) cur.fail_at(nat, "duplicate section '" + section.name + "'");
      if (cur.accept('=')) section.generators = parse_list(cur, pf.ring);
      cur.expect(';');
      if (keyword == "ideal") {
        pf.ideals.push_back(std::move(section));
      } else {
        if (pf.stream) cur.fail_at(at, "only one stream section is allowed");
        pf.stream = std::move(section);
      }
    } else if (keyword == "oracle") {
      if (pf.oracle) cur.fail_at(at, "oracle declared twice");
      cur.expect('=');
      if (cur.peek() == '"') {
        pf.oracle = OracleRef{OracleRef::Kind::Path, cur.quoted()};
      } else {
        pf.oracle = OracleRef{OracleRef::Kind::Ideal, cur.identifier()};
      }
      cur.expect(';');
    } else {
      cur.fail_at(at, "unknown statement '" + keyword + "'");
    }
  }
  if (!pf.ring) cur.fail("missing ring declaration");
  if (pf.oracle && pf.oracle->kind == OracleRef::Kind::Ideal && !pf.find(pf.oracle->value)) {
    throw ParseError("oracle refers to unknown section '" + pf.oracle->value + "'", 0, 0);
  }
  return pf;
}

Domain parse_domain(std::string_view text) {
  Cursor cur(text);
  auto d = read_domain(cur);
  if (!cur.at_end()) cur.fail("trailing input after coefficient domain");
  return d;
}

TermOrder parse_term_order(std::string_view text, std::size_t arity) {
  Cursor cur(text);
  auto o = read_order(cur, arity);
  if (!cur.at_end()) cur.fail("trailing input after term order");
  return o;
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial");
  auto f = parse_expression(cur, ring);
  if (!cur.at_end()) cur.fail("trailing input");
  return f;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (t.coeff < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = abs(t.coeff) == 1;
    if (!unit || t.mono.is_one()) {
      write_coeff_abs(os, t.coeff);
      if (!t.mono.is_one()) os << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << vars[i];
      if (t.mono[i] != 1) os << '^' << t.mono[i];
    }
  }
  return os.str();
}

std::string format_basis(std::span<const Polynomial> G) {
  if (G.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (i) out += '\n';
    out += format_polynomial(G[i]);
  }
  return out;
}

std::string format_basis(const GroebnerBasis& G) { return format_basis(std::span<const Polynomial>(G.elements())); }

}  // namespace modgrob
