#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "tlh/algebra.hpp"
#include "tlh/cellular.hpp"
#include "tlh/io.hpp"

namespace tlh::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = -1;
  std::string lambda;
  std::string format = "text";
  std::uint64_t seed = 20240601;
  int cap = -1;
  std::string out;
  std::string suite = "all";
  std::vector<std::string> operands;
  std::string diagram_file;
  std::size_t samples = 10000;
  bool inject_fault = false;

  bool structured() const { return format == "structured"; }
  int m() const { return n + 1; }
};

class Reporter {
 public:
  Reporter(std::ostream& os, bool structured) : os_(os), structured_(structured) {}

  void begin(const std::string& suite, const std::string& certifies, int n) {
    suite_ = suite;
    checks_ = failures_ = 0;
    if (structured_) os_ << Json{{"record", "suite"}, {"suite", suite}, {"n", n}, {"certifies", certifies}}.dump() << "\n";
    else os_ << "== " << suite << " (n = " << n << "): " << certifies << "\n";
  }

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    ++checks_;
    if (!pass) ++failures_;
    if (structured_) {
      Json j{{"record", "check"}, {"suite", suite_}, {"check", name}, {"pass", pass}};
      if (!detail.empty()) j["detail"] = detail;
      os_ << j.dump() << "\n";
    } else {
      os_ << (pass ? "PASS  " : "FAIL  ") << name;
      if (!detail.empty()) os_ << ": " << detail;
      os_ << "\n";
    }
  }

  void record(Json j, const std::string& text) {
    if (structured_) {
      j["suite"] = suite_;
      os_ << j.dump() << "\n";
    } else {
      os_ << "      " << text << "\n";
    }
  }

  void end() {
    total_failures_ += failures_;
    const bool ok = failures_ == 0;
    if (structured_)
      os_ << Json{{"record", "verdict"}, {"suite", suite_}, {"checks", checks_}, {"failures", failures_}, {"verdict", ok ? "pass" : "fail"}}.dump()
          << "\n";
    else
      os_ << "-- " << suite_ << ": " << (ok ? "pass" : "FAIL") << " (" << checks_ << " checks, " << failures_ << " failed)\n";
  }

  void skip(const std::string& suite, const std::string& reason) {
    if (structured_) os_ << Json{{"record", "skip"}, {"suite", suite}, {"reason", reason}}.dump() << "\n";
    else os_ << "== " << suite << ": skipped (" << reason << ")\n";
  }

  std::size_t total_failures() const { return total_failures_; }

 private:
  std::ostream& os_;
  bool structured_;
  std::string suite_;
  std::size_t checks_ = 0, failures_ = 0, total_failures_ = 0;
};

std::string first_of(const std::vector<std::string>& v) { return v.empty() ? "" : v.front(); }

// ---------------------------------------------------------------------------
// Suites

void suite_presentation(const Options& o, Reporter& rep) {
  std::vector<Element> gens;
  for (int i = 1; i < o.m(); ++i) gens.push_back(Element::basis(generator_U(i, o.m())));
  if (o.inject_fault) gens[0] = -gens[0];
  for (const auto& c : verify_presentation(gens).checks) rep.check(c.name, c.pass);
}

void suite_associativity(const Options& o, Reporter& rep) {
  const int m = o.m();
  const std::vector<Diagram> basis = enumerate_diagrams(m);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);

  std::size_t triples = 0, bad = 0;
  std::string detail;
  auto test = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++triples;
    const Element x = Element::basis(basis[i]);
    const Element lhs = multiply(multiply(basis[i], basis[j]), Element::basis(basis[k]));
    const Element rhs = multiply(x, multiply(basis[j], basis[k]));
    if (!(lhs == rhs) && bad++ == 0)
      detail = "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
  };
  const std::size_t b = basis.size();
  if (b * b * b <= o.samples) {
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < b; ++k) test(i, j, k);
    rep.check("associativity, all " + std::to_string(triples) + " basis triples", bad == 0, detail);
  } else {
    for (std::size_t s = 0; s < o.samples; ++s) test(pick(rng), pick(rng), pick(rng));
    rep.check("associativity, " + std::to_string(triples) + " random basis triples", bad == 0, detail);
  }

  std::size_t tangles = 0;
  bad = 0;
  detail.clear();
  for (std::size_t s = 0; s < o.samples; ++s) {
    const int factors = 2 + static_cast<int>(rng() % 2);
    DecoratedTangle t = basis[pick(rng)].tangle();
    for (int f = 1; f < factors; ++f) t = concat(t, basis[pick(rng)].tangle());
    ++tangles;
    if (!(reduce(t) == reduce_by_rewriting(t, rng)) && bad++ == 0) detail = "first mismatch at sample " + std::to_string(s);
  }
  rep.check("confluence of reduction order, " + std::to_string(tangles) + " raw tangles", bad == 0, detail);
}

void suite_positivity(const Options& o, Reporter& rep) {
  const PositivityReport r = positivity_check(o.m(), o.m());
  std::string detail;
  if (!r.ok())
    detail = "(" + std::to_string(r.violations[0].left) + ", " + std::to_string(r.violations[0].right) + "): " + r.violations[0].detail;
  rep.check("coefficients c[2]^k with c > 0 and k <= max level, " + std::to_string(r.products) + " products", r.ok(), detail);
}

void suite_cellular(const Options& o, Reporter& rep) {
  const AxiomReport r = verify_cellular_axioms(o.m(), o.m());
  auto failures_with = [&](const std::string& prefix) {
    std::vector<std::string> out;
    for (const auto& f : r.failures)
      if (f.rfind(prefix, 0) == 0) out.push_back(f);
    return out;
  };
  const auto a1 = failures_with("axiom 1"), a2 = failures_with("axiom 2"), a3 = failures_with("axiom 3");
  rep.check("axiom 1: C injective with image a basis (" + std::to_string(r.cell_basis_size) + " elements, rank " +
                std::to_string(r.rank) + ", " + std::to_string(r.diagram_count) + " diagrams)",
            a1.empty(), first_of(a1));
  rep.check("axiom 2: star C(S,T) = C(T,S), " + std::to_string(r.star_checks) + " elements", a2.empty(), first_of(a2));
  rep.check("axiom 3: action coefficients independent of T for 1 and every U_i, " + std::to_string(r.action_checks) +
                " columns",
            a3.empty(), first_of(a3));
}

void suite_semisimplicity(const Options& o, Reporter& rep) {
  const SemisimplicityReport r = semisimplicity_check(o.m(), o.m());
  for (const GramRecord& g : r.records) {
    const std::string w = "W(" + g.label.to_string() + ")";
    rep.check(w + " Gram matrix symmetric", g.symmetric);
    rep.check(w + " Gram determinant nonzero", !g.determinant.is_zero(), g.determinant.is_zero() ? "determinant is 0" : "");
    rep.check(w + " almost orthogonal", g.almost_orthogonal, g.almost_orthogonal ? "" : first_of(g.issues));
    rep.record({{"record", "gram"}, {"label", g.label.to_string()}, {"dim", g.dim}, {"gram_det", to_json(g.determinant)}, {"verdict", g.ok() ? "pass" : "fail"}},
               w + ": dim " + std::to_string(g.dim) + ", det " + g.determinant.to_string());
  }
}

void suite_branching(const Options& o, Reporter& rep) {
  const auto identities = branching_dimension_identity_failures(o.m());
  rep.check("dimension identities", identities.empty(), first_of(identities));
  for (const CellLabel& l : lambda_poset(o.m())) {
    const BranchingReport r = branching_report(l, o.m());
    std::string factors;
    Json fj = Json::array();
    for (const auto& f : r.factors) {
      factors += (factors.empty() ? "" : " + ") + std::string("W(") + f.label.to_string() + ")[" + std::to_string(f.dim) + "]";
      fj.push_back({{"label", f.label.to_string()}, {"dim", f.dim}, {"multiplicity", 1}});
    }
    rep.check("W(" + l.to_string() + ")[" + std::to_string(r.dim) + "] restricts to " + factors, r.ok(), first_of(r.issues));
    rep.record({{"record", "branching"},
                {"label", l.to_string()},
                {"dim", r.dim},
                {"factors", fj},
                {"block_triangular", r.block_triangular},
                {"blocks_match", r.blocks_match},
                {"direct_sum", r.direct_sum},
                {"verdict", r.ok() ? "pass" : "fail"}},
               "block triangular: " + std::string(r.block_triangular ? "yes" : "no") +
                   ", diagonal blocks match: " + (r.blocks_match ? "yes" : "no"));
  }
}

void suite_factorization(const Options& o, Reporter& rep) {
  std::size_t ok = 0, total = 0;
  std::string detail;
  for (const Diagram& d : enumerate_diagrams(o.m())) {
    ++total;
    try {
      if (evaluate_word(factorize(d), o.m()) == Element::basis(d)) ++ok;
      else if (detail.empty()) detail = "word does not evaluate to diagram " + std::to_string(total - 1);
    } catch (const std::exception& e) {
      if (detail.empty()) detail = e.what();
    }
  }
  rep.check("every basis diagram is a word in the generators, " + std::to_string(total) + " diagrams", ok == total, detail);
}

struct Suite {
  const char* name;
  const char* certifies;
  int default_cap;
  int min_n;
  std::function<void(const Options&, Reporter&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"presentation", "U_i satisfy the defining relations of TL(H_n), plus the alpha/beta/zeta/epsilon identities", 6, 2,
       suite_presentation},
      {"associativity", "the diagram product is associative and reduction is confluent", 4, 2, suite_associativity},
      {"positivity", "structure constants are positive multiples of powers of [2]", 4, 2, suite_positivity},
      {"cellular", "the cell datum satisfies the three cellular algebra axioms", 5, 2, suite_cellular},
      {"semisimplicity", "every cell module has a nondegenerate Gram form", 5, 2, suite_semisimplicity},
      {"branching", "restricted cell modules are filtered by cell modules of the smaller algebra", 6, 3, suite_branching},
      {"factorization", "the generators span the diagram basis", 5, 2, suite_factorization},
  };
  return all;
}

// ---------------------------------------------------------------------------
// Commands

void require_n(const Options& o, int cap_default, const char* what) {
  if (o.n < 2) throw UsageError(std::string(what) + ": --n must be at least 2");
  const int cap = o.cap > 0 ? o.cap : cap_default;
  if (o.n > cap)
    throw UsageError(std::string(what) + ": n = " + std::to_string(o.n) + " exceeds cap " + std::to_string(cap) + " (raise with --cap)");
}

int cmd_dims(const Options& o, std::ostream& os) {
  require_n(o, 8, "dims");
  const int m = o.m();
  std::uint64_t from_labels = 0;
  for (const CellLabel& l : lambda_poset(m)) {
    const std::size_t size = cell_tableaux(l, m).size();
    from_labels += size * size;
    if (o.structured()) os << Json{{"record", "cell"}, {"label", l.to_string()}, {"tableaux", size}}.dump() << "\n";
    else os << "|M(" << l.to_string() << ")| = " << size << "\n";
  }
  const std::uint64_t formula = basis_size_formula(m);
  const std::uint64_t enumerated = enumerate_diagrams(m, m).size();
  const bool ok = formula == enumerated && from_labels == enumerated && basis_size_from_cells(m) == formula;
  if (o.structured())
    os << Json{{"record", "total"}, {"n", o.n}, {"closed_form", formula}, {"from_cells", from_labels}, {"enumerated", enumerated}, {"verdict", ok ? "pass" : "fail"}}.dump()
       << "\n";
  else
    os << "closed form " << formula << ", from cells " << from_labels << ", enumerated " << enumerated << ": " << (ok ? "agree" : "DISAGREE") << "\n";
  return ok ? kPass : kViolation;
}

int cmd_enumerate(const Options& o, std::ostream& os) {
  require_n(o, 8, "enumerate");
  const auto basis = enumerate_diagrams(o.m(), o.m());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const DyadicForm& f = basis[i].dyadic();
    if (o.structured()) os << to_json(basis[i]).dump() << "\n";
    else os << i << "  " << f.top.to_string() << " " << f.bottom.to_string() << (f.bullet ? " *" : "") << "\n";
  }
  return kPass;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An operand is a JSON file (element or diagram) or "word:<letters>".
Element load_operand(const std::string& operand, const Options& o) {
  if (operand.rfind("word:", 0) == 0) {
    if (o.n < 2) throw UsageError("word operands need --n");
    return evaluate_word(parse_word(operand.substr(5)), o.m());
  }
  Element x = element_from_json(parse_json(read_file(operand)));
  if (o.n >= 0 && x.strands() != o.m())
    throw StrandMismatch("operand '" + operand + "' has " + std::to_string(x.strands()) + " strands, --n gives " + std::to_string(o.m()));
  return x;
}

int cmd_multiply(const Options& o, std::ostream& os) {
  if (o.operands.size() != 2) throw UsageError("multiply: needs two operands");
  const Element x = load_operand(o.operands[0], o);
  const Element y = load_operand(o.operands[1], o);
  const Element p = multiply(x, y);
  if (o.structured()) os << to_json(p).dump() << "\n";
  else os << p.to_string() << "\n";
  return kPass;
}

int cmd_factorize(const Options& o, std::ostream& os) {
  std::vector<Diagram> targets;
  if (!o.diagram_file.empty()) {
    targets.push_back(diagram_from_json(parse_json(read_file(o.diagram_file))));
  } else {
    require_n(o, 5, "factorize");
    targets = enumerate_diagrams(o.m(), o.m());
  }
  bool ok = true;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const GeneratorWord w = factorize(targets[i]);
    const bool verified = evaluate_word(w, targets[i].strands()) == Element::basis(targets[i]);
    ok = ok && verified;
    if (o.structured()) {
      os << Json{{"index", i}, {"diagram", to_json(targets[i])}, {"word", to_json(w)}, {"verified", verified}}.dump() << "\n";
    } else {
      const DyadicForm& f = targets[i].dyadic();
      os << i << "  " << f.top.to_string() << " " << f.bottom.to_string() << (f.bullet ? " *" : "") << "  =  " << to_string(w)
         << (verified ? "" : "   (NOT VERIFIED)") << "\n";
    }
  }
  return ok ? kPass : kViolation;
}

int cmd_gram(const Options& o, std::ostream& os) {
  require_n(o, 5, "gram");
  if (o.lambda.empty()) throw UsageError("gram: --lambda is required");
  const CellLabel l = CellLabel::parse(o.lambda, o.m());
  const GramRecord r = gram_record(l, o.m());
  const RingMatrix g = gram_matrix(l, o.m());
  if (o.structured()) {
    Json tab = Json::array();
    for (const auto& h : cell_tableaux(l, o.m())) tab.push_back(to_json(h));
    os << Json{{"record", "gram"},
               {"n", o.n},
               {"label", l.to_string()},
               {"dim", r.dim},
               {"tableaux", tab},
               {"matrix", to_json(g)},
               {"gram_det", to_json(r.determinant)},
               {"verdict", r.ok() ? "pass" : "fail"}}
              .dump()
       << "\n";
  } else {
    const auto tab = cell_tableaux(l, o.m());
    os << "W(" << l.to_string() << "), n = " << o.n << ", dim " << r.dim << "\n";
    for (std::size_t i = 0; i < tab.size(); ++i) os << "  d" << i << " = " << tab[i].to_string() << "\n";
    os << g.to_string();
    os << "det = " << r.determinant << "\n";
    for (const auto& issue : r.issues) os << "issue: " << issue << "\n";
    os << (r.ok() ? "pass" : "FAIL") << "\n";
  }
  return r.ok() ? kPass : kViolation;
}

int cmd_verify(const Options& o, std::ostream& os) {
  if (o.n < 2) throw UsageError("verify: --n must be at least 2");
  Reporter rep(os, o.structured());
  bool any = false;
  for (const Suite& s : suites()) {
    if (o.suite != "all" && o.suite != s.name) continue;
    any = true;
    const int cap = o.cap > 0 ? o.cap : s.default_cap;
    const bool single = o.suite != "all";
    if (o.n > cap || o.n < s.min_n) {
      const std::string reason =
          o.n > cap ? "n = " + std::to_string(o.n) + " exceeds cap " + std::to_string(cap) : "needs n >= " + std::to_string(s.min_n);
      if (single) throw UsageError("verify " + std::string(s.name) + ": " + reason);
      rep.skip(s.name, reason);
      continue;
    }
    rep.begin(s.name, s.certifies, o.n);
    try {
      s.run(o, rep);
    } catch (const std::logic_error& e) {
      rep.check("suite completed", false, e.what());
    }
    rep.end();
  }
  if (!any) throw UsageError("unknown suite '" + o.suite + "'");
  return rep.total_failures() == 0 ? kPass : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the generalized Temperley-Lieb algebra TL(H_n) via decorated diagrams", "tlh"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_n = true) {
    if (with_n) sub->add_option("--n", o.n, "Coxeter index n (the diagrams have n + 1 strands)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", o.out, "Write output to this file");
    sub->add_option("--cap", o.cap, "Largest n allowed (overrides the default)")->check(CLI::PositiveNumber);
  };

  auto* dims = app.add_subcommand("dims", "Cell-set sizes and basis size");
  common(dims);
  auto* enumerate = app.add_subcommand("enumerate", "List the basis diagrams in canonical order");
  common(enumerate);
  auto* mult = app.add_subcommand("multiply", "Multiply two elements (JSON files or word:<letters>)");
  common(mult);
  mult->add_option("operands", o.operands, "Left and right operand")->expected(2)->required();
  auto* fact = app.add_subcommand("factorize", "Write basis diagrams as words in U_i, alpha, beta, zeta, epsilon");
  common(fact);
  fact->add_option("--diagram", o.diagram_file, "Factorize only the diagram in this JSON file");
  auto* gram = app.add_subcommand("gram", "Gram matrix and determinant of a cell module");
  common(gram);
  gram->add_option("--lambda", o.lambda, "Cell label: 0, k, kb or mid")->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  common(verify);
  std::vector<std::string> suite_names{"all"};
  for (const Suite& s : suites()) suite_names.push_back(s.name);
  verify->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember(suite_names));
  verify->add_option("--seed", o.seed, "Seed for randomized checks");
  verify->add_option("--samples", o.samples, "Random samples per randomized check")->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", o.inject_fault, "Negate U_1 before checking relations (negative control)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write '" << o.out << "'\n";
      return kUsage;
    }
    os = &file;
  }

  try {
    if (dims->parsed()) return cmd_dims(o, *os);
    if (enumerate->parsed()) return cmd_enumerate(o, *os);
    if (mult->parsed()) return cmd_multiply(o, *os);
    if (fact->parsed()) return cmd_factorize(o, *os);
    if (gram->parsed()) return cmd_gram(o, *os);
    if (verify->parsed()) return cmd_verify(o, *os);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const StrandMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace tlh::cli
