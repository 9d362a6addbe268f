#include "cli.hpp"

#include "modgrob/arnold.hpp"
#include "modgrob/io.hpp"
#include "modgrob/lemma.hpp"
#include "modgrob/torsion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace modgrob::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string file;
  std::string order;
  std::string coeff;
  std::size_t max_pairs = 0;
  bool json = false;

  Limits limits() const {
    auto l = Limits::from_environment();
    if (max_pairs) l.max_pairs = max_pairs;
    return l;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile load(const std::string& path, const CommonOptions& opts) {
  ParseOverrides ov;
  if (!opts.coeff.empty()) ov.domain = parse_domain(opts.coeff);
  if (!opts.order.empty()) ov.order = opts.order;
  try {
    return parse_problem(read_file(path), ov);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what(), e.line(), e.column());
  }
}

const IdealSection& section(const ProblemFile& pf, const std::string& name) {
  const auto* s = pf.find(name);
  if (!s) throw UsageError("no section named '" + name + "'");
  return *s;
}

void require_integers(const ProblemFile& pf, const std::string& command) {
  if (!pf.ring->domain().is_integer()) {
    throw UsageError(command + " needs a ring over ZZ, got " + pf.ring->domain().name());
  }
}

json lines(std::span<const Polynomial> G) {
  json a = json::array();
  for (const auto& g : G) a.push_back(format_polynomial(g));
  return a;
}

json lines(const GroebnerBasis& G) { return lines(std::span<const Polynomial>(G.elements())); }

json factorization_json(const PrimePowerFactorization& f) {
  json a = json::array();
  for (const auto& pp : f) a.push_back({pp.prime.get_str(), pp.exponent});
  return a;
}

// Line-oriented machine format: a header object, then one single-key object
// per line.
class Records {
 public:
  Records(std::ostream& out, const std::string& command) : out_(out) {
    out_ << json{{"format", "modgrob"}, {"version", 1}, {"command", command}}.dump() << '\n';
  }
  void put(const std::string& key, json value) { out_ << json{{key, std::move(value)}}.dump() << '\n'; }

 private:
  std::ostream& out_;
};

json certificate_json(const Certificate& c) {
  json j;
  j["prefix_length"] = c.prefix_length;
  j["rational_equal"] = c.rational_equal;
  if (c.exponent) {
    j["exponent"] = c.exponent->get_str();
    j["factorization"] = factorization_json(c.factorization);
  }
  json mods = json::array();
  for (const auto& v : c.modulus_verdicts) {
    mods.push_back({{"modulus", v.modulus.get_str()},
                    {"equal", v.equal},
                    {"oracle_basis", lines(v.oracle_basis)},
                    {"prefix_basis", lines(v.prefix_basis)}});
  }
  j["moduli"] = mods;
  json bez = json::array();
  for (const auto& b : c.bezout) bez.push_back(b.get_str());
  j["bezout"] = bez;
  j["accepted"] = c.accepted;
  if (!c.accepted) j["reason"] = rejection_reason(c);
  if (!c.rational_equal && c.oracle_rational && c.prefix_rational) {
    j["oracle_rational"] = lines(*c.oracle_rational);
    j["prefix_rational"] = lines(*c.prefix_rational);
  }
  if (c.basis) j["basis"] = lines(*c.basis);
  return j;
}

void indent_basis(std::ostream& out, std::span<const Polynomial> G, const char* pad = "  ") {
  std::istringstream in(format_basis(G));
  for (std::string line; std::getline(in, line);) out << pad << line << '\n';
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "prefix k = " << c.prefix_length << '\n';
  out << "QQ bases equal: " << (c.rational_equal ? "yes" : "no") << '\n';
  if (!c.rational_equal && c.oracle_rational && c.prefix_rational) {
    out << "oracle QQ basis:\n";
    indent_basis(out, c.oracle_rational->elements());
    out << "prefix QQ basis:\n";
    indent_basis(out, c.prefix_rational->elements());
  }
  if (c.exponent) out << "torsion exponent m = " << *c.exponent << " = " << to_string(c.factorization) << '\n';
  for (const auto& v : c.modulus_verdicts) {
    out << "ZZ/" << v.modulus << " bases " << (v.equal ? "equal" : "differ") << '\n';
    if (!v.equal) {
      out << "  oracle:\n";
      indent_basis(out, v.oracle_basis.elements(), "    ");
      out << "  prefix:\n";
      indent_basis(out, v.prefix_basis.elements(), "    ");
    }
  }
  if (!c.bezout.empty()) {
    out << "bezout:";
    for (const auto& b : c.bezout) out << ' ' << b;
    out << '\n';
  }
  out << "verdict: " << (c.accepted ? "accepted" : "rejected (" + rejection_reason(c) + ")") << '\n';
}

// The oracle ideal: --oracle (section name, else path), the file's oracle
// statement, else section I.
std::unique_ptr<GeneratorSetOracle> make_oracle(const ProblemFile& pf, const std::string& flag,
                                                const CommonOptions& opts) {
  auto from_section = [&](const IdealSection& s) {
    return std::make_unique<GeneratorSetOracle>(pf.ring, s.generators, opts.limits());
  };
  auto from_path = [&](const std::string& path) {
    auto resolved = std::filesystem::path(path);
    if (resolved.is_relative()) resolved = std::filesystem::path(opts.file).parent_path() / resolved;
    const auto other = load(resolved.string(), opts);
    if (!same_ring(other.ring, pf.ring)) {
      throw UsageError("oracle file ring (" + other.ring->describe() + ") differs from " + pf.ring->describe());
    }
    const IdealSection* s = nullptr;
    if (other.oracle && other.oracle->kind == OracleRef::Kind::Ideal) s = other.find(other.oracle->value);
    if (!s) s = other.find("I");
    if (!s && !other.ideals.empty()) s = &other.ideals.front();
    if (!s) throw UsageError("oracle file '" + path + "' has no ideal");
    return std::make_unique<GeneratorSetOracle>(pf.ring, s->generators, opts.limits());
  };
  if (!flag.empty()) {
    if (const auto* s = pf.find(flag)) return from_section(*s);
    return from_path(flag);
  }
  if (pf.oracle) {
    if (pf.oracle->kind == OracleRef::Kind::Ideal) return from_section(section(pf, pf.oracle->value));
    return from_path(pf.oracle->value);
  }
  return from_section(section(pf, "I"));
}

int cmd_gb(const CommonOptions& opts, const std::string& ideal, const std::string& mod, std::ostream& out) {
  const auto pf = load(opts.file, opts);
  const auto& s = ideal.empty() ? (pf.ideals.empty() ? throw UsageError("no ideal section") : pf.ideals.front())
                                : section(pf, ideal);
  std::optional<GroebnerBasis> basis;
  if (!mod.empty()) {
    const Integer m(mod);
    basis = gb_mod_m(pf.ring, s.generators, m, opts.limits());
  } else {
    basis = groebner_basis(pf.ring, s.generators, opts.limits());
  }
  if (opts.json) {
    Records r(out, "gb");
    r.put("ring", basis->ring()->describe());
    r.put("basis", lines(*basis));
  } else {
    out << format_basis(*basis) << '\n';
  }
  return kOk;
}

int cmd_torsion(const CommonOptions& opts, const std::string& ideal, std::ostream& out) {
  const auto pf = load(opts.file, opts);
  require_integers(pf, "torsion");
  const auto& s = ideal.empty() ? (pf.ideals.empty() ? throw UsageError("no ideal section") : pf.ideals.front())
                                : section(pf, ideal);
  const auto report = torsion_exponent(pf.ring, s.generators, opts.limits());
  const auto fac = factorize(report.exponent);
  if (opts.json) {
    Records r(out, "torsion");
    r.put("exponent", report.exponent.get_str());
    r.put("factorization", factorization_json(fac));
    r.put("saturation_basis", lines(report.saturation_basis));
    json mult = json::array();
    for (const auto& m : report.multipliers) {
      mult.push_back({{"generator", format_polynomial(m.generator)}, {"multiplier", m.multiplier.get_str()}});
    }
    r.put("multipliers", mult);
  } else {
    out << "m = " << report.exponent << '\n';
    out << "factorization: " << to_string(fac) << '\n';
    out << "multiplier  generator\n";
    for (const auto& m : report.multipliers) out << m.multiplier << "  " << format_polynomial(m.generator) << '\n';
  }
  return kOk;
}

int cmd_check_lemma(const CommonOptions& opts, const std::string& ideal, const std::string& oracle_flag,
                    std::ostream& out) {
  const auto pf = load(opts.file, opts);
  require_integers(pf, "check-lemma");
  const auto oracle = make_oracle(pf, oracle_flag, opts);
  const auto& j = section(pf, ideal.empty() ? "J" : ideal);
  const auto cert = main_lemma_check(*oracle, j.generators, opts.limits());
  if (opts.json) {
    Records r(out, "check-lemma");
    for (auto& [k, v] : certificate_json(cert).items()) r.put(k, v);
  } else {
    print_certificate(out, cert);
    if (cert.basis) {
      out << "basis:\n";
      indent_basis(out, cert.basis->elements());
    }
  }
  return cert.accepted ? kOk : kMismatch;
}

int cmd_solve_p(const CommonOptions& opts, const std::string& stream_flag, const std::string& oracle_flag,
                std::ostream& out) {
  const auto pf = load(opts.file, opts);
  require_integers(pf, "solve-p");
  const auto oracle = make_oracle(pf, oracle_flag, opts);
  const IdealSection* s = stream_flag.empty() ? (pf.stream ? &*pf.stream : nullptr) : &section(pf, stream_flag);
  if (!s) throw UsageError("no stream section; pass --stream NAME");
  ListStream stream(pf.ring, s->generators);

  auto report = [&](const std::vector<Certificate>& rejected, const Certificate* accepted) {
    if (opts.json) {
      Records r(out, "solve-p");
      for (const auto& c : rejected) r.put("certificate", certificate_json(c));
      if (accepted) {
        r.put("certificate", certificate_json(*accepted));
        r.put("accepted_prefix", accepted->prefix_length);
        r.put("basis", lines(*accepted->basis));
      } else {
        r.put("accepted_prefix", nullptr);
      }
      return;
    }
    for (const auto& c : rejected) {
      out << "k = " << c.prefix_length << ": rejected (" << rejection_reason(c) << ")";
      if (c.exponent) out << ", m = " << *c.exponent;
      out << '\n';
    }
    if (accepted) {
      out << "k = " << accepted->prefix_length << ": accepted";
      if (accepted->exponent) out << ", m = " << *accepted->exponent;
      out << '\n' << "basis:\n";
      indent_basis(out, accepted->basis->elements());
    }
  };

  try {
    const auto result = solve_problem_p(stream, *oracle, opts.limits());
    report(result.rejected, &result.certificate);
    return kOk;
  } catch (const StreamExhausted& e) {
    report(e.rejected(), nullptr);
    if (!opts.json) out << "stream exhausted before acceptance\n";
    return kMismatch;
  }
}

int cmd_arnold(const CommonOptions& opts, const std::string& ideal, const std::string& basis,
               const std::string& prime, bool homogenize_first, std::ostream& out) {
  const auto pf = load(opts.file, opts);
  require_integers(pf, "arnold-verify");
  const auto& i_sec = section(pf, ideal.empty() ? "I" : ideal);
  const auto& g_sec = section(pf, basis.empty() ? "G" : basis);
  RingPtr ring = pf.ring;
  std::vector<Polynomial> i_gens = i_sec.generators;
  std::vector<Polynomial> g = g_sec.generators;
  bool upgraded = false;
  if (homogenize_first) {
    auto hi = homogenize_ideal(ring, i_gens);
    auto hg = homogenize_ideal(ring, g);
    ring = hi.ring;
    i_gens = std::move(hi.generators);
    g = change_ring(hg.generators, ring);
    upgraded = hi.order_upgraded;
  }
  const auto report = arnold_conditions(ring, i_gens, g, Integer(prime), opts.limits());
  if (opts.json) {
    Records r(out, "arnold-verify");
    r.put("ring", ring->describe());
    if (homogenize_first) {
      r.put("homogenized_ideal", lines(i_gens));
      r.put("homogenized_basis", lines(g));
      r.put("order_upgraded", upgraded);
    }
    r.put("prime", report.prime.get_str());
    r.put("conditions", report.conditions);
    r.put("homogeneous_input", report.homogeneous_input);
    r.put("verdict", to_string(report.verdict));
    r.put("failed", report.failed_conditions());
  } else {
    if (homogenize_first) {
      out << "ring: " << ring->describe() << (upgraded ? " (lp upgraded to dp)" : "") << '\n';
      out << "homogenized I:\n";
      indent_basis(out, i_gens);
      out << "homogenized G:\n";
      indent_basis(out, g);
    }
    out << "p = " << report.prime << '\n';
    for (int i = 0; i < 4; ++i) {
      out << "condition " << i + 1 << ": " << (report.conditions[i] ? "holds" : "fails") << '\n';
    }
    out << "homogeneous input: " << (report.homogeneous_input ? "yes" : "no") << '\n';
    out << "verdict: " << to_string(report.verdict);
    if (report.verdict == ArnoldVerdict::ConditionFailed) {
      out << " [";
      const auto failed = report.failed_conditions();
      for (std::size_t i = 0; i < failed.size(); ++i) out << (i ? "," : "") << failed[i];
      out << ']';
    }
    out << '\n';
  }
  return report.verdict == ArnoldVerdict::Verified ? kOk : kMismatch;
}

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("file", opts.file, "Problem file")->required();
  sub->add_option("--order", opts.order, "Override the term order (lp, dp, block(lp(1),dp))");
  sub->add_option("--coeff", opts.coeff, "Override the coefficient domain (ZZ, QQ, ZZ/m)");
  sub->add_option("--max-pairs", opts.max_pairs, "Critical pair cap (also MODGROB_MAX_PAIRS)");
  sub->add_flag("--json", opts.json, "Line-oriented JSON records");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over Z: modular verification, torsion exponents, Arnold conditions", "modgrob"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string ideal;
  std::string mod;
  std::string oracle;
  std::string stream;
  std::string basis;
  std::string prime;
  bool homogenize_first = false;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis in the declared domain");
  add_common(gb, opts);
  gb->add_option("--ideal", ideal, "Ideal section (default: first)");
  gb->add_option("--mod", mod, "Basis of the image in (Z/m)[X]")->check(CLI::PositiveNumber);

  auto* torsion = app.add_subcommand("torsion", "Torsion exponent of A/J");
  add_common(torsion, opts);
  torsion->add_option("--ideal", ideal, "Ideal section (default: first)");

  auto* check = app.add_subcommand("check-lemma", "Equality criterion for J against the oracle ideal");
  add_common(check, opts);
  check->add_option("--ideal", ideal, "Section holding J (default: J)");
  check->add_option("--oracle", oracle, "Oracle section name or problem-file path");

  auto* solve = app.add_subcommand("solve-p", "Search stream prefixes until the criterion accepts");
  add_common(solve, opts);
  solve->add_option("--stream", stream, "Stream section (default: the file's stream)");
  solve->add_option("--oracle", oracle, "Oracle section name or problem-file path");

  auto* arnold = app.add_subcommand("arnold-verify", "Check Arnold's conditions for G against I at p");
  add_common(arnold, opts);
  arnold->add_option("--ideal", ideal, "Ideal section (default: I)");
  arnold->add_option("--basis", basis, "Candidate basis section (default: G)");
  arnold->add_option("--prime", prime, "The prime p")->required();
  arnold->add_flag("--homogenize", homogenize_first, "Homogenize I and G with a fresh last variable first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "modgrob: " << e.what() << '\n';
    return kError;
  }

  try {
    if (gb->parsed()) return cmd_gb(opts, ideal, mod, out);
    if (torsion->parsed()) return cmd_torsion(opts, ideal, out);
    if (check->parsed()) return cmd_check_lemma(opts, ideal, oracle, out);
    if (solve->parsed()) return cmd_solve_p(opts, stream, oracle, out);
    if (arnold->parsed()) return cmd_arnold(opts, ideal, basis, prime, homogenize_first, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "modgrob: resource limit: " << e.what() << '\n';
    return kError;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "modgrob: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace modgrob::cli
