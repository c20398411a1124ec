#include "ncinv/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ncinv/serialize.hpp"

namespace ncinv {

namespace {

struct Config {
  std::string algebra;
  std::string alpha;
  std::string beta;
  int n = 1;
  int degree = -1;
  int max_multiple = 5;
  std::string target;
  std::string format = "json";
  bool full_scan = false;
  unsigned threads = 0;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraSpec make_spec(const Config& c) {
  if (c.algebra.empty()) throw InvalidInput("--algebra is required");
  if (c.n < 1) throw InvalidInput("--n must be a positive integer");
  if (c.algebra == "skew") {
    if (!c.alpha.empty() || !c.beta.empty()) throw InvalidInput("--alpha/--beta only apply to --algebra downup");
    return AlgebraSpec::skew(c.n);
  }
  if (c.algebra == "downup") {
    const Rational a = parse_rational(c.alpha.empty() ? "0" : c.alpha);
    const Rational b = parse_rational(c.beta.empty() ? "1" : c.beta);
    return AlgebraSpec::downup(a, b, c.n);
  }
  throw InvalidInput("--algebra must be skew or downup");
}

unsigned default_threads() {
  if (const char* env = std::getenv("NCINV_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_csv_rows(std::ostream& out, const std::vector<DegreeRecord>& rows, const std::string& prefix) {
  for (const auto& r : rows)
    out << prefix << r.degree << "," << r.inv_dim << "," << r.product_dim << "," << r.new_gens << "\n";
}

void emit_table_rows(std::ostream& out, const std::vector<DegreeRecord>& rows) {
  out << std::setw(8) << "degree" << std::setw(10) << "inv_dim" << std::setw(13) << "product_dim"
      << std::setw(10) << "new_gens" << "\n";
  for (const auto& r : rows)
    out << std::setw(8) << r.degree << std::setw(10) << r.inv_dim << std::setw(13) << r.product_dim
        << std::setw(10) << r.new_gens << "\n";
}

void emit_report(std::ostream& out, const GenerationReport& r, const std::string& format) {
  if (format == "json") {
    emit_json(out, to_json(r));
  } else if (format == "csv") {
    out << "degree,inv_dim,product_dim,new_gens\n";
    emit_csv_rows(out, r.degrees, "");
  } else {
    out << r.spec.name() << "  n=" << r.n << "\n";
    emit_table_rows(out, r.degrees);
    out << "beta = " << r.beta << (r.exhausted ? "  (exhausted)" : "  (not exhausted)") << "\n";
  }
}

void emit_verification(std::ostream& out, const VerificationReport& r, const std::string& format) {
  if (format == "json") {
    emit_json(out, to_json(r));
    return;
  }
  if (format == "csv") {
    out << "target,n,checked,failures\n" << r.target << "," << r.n << "," << r.checked << "," << r.failures.size()
        << "\n";
    return;
  }
  out << r.target << "  n=" << r.n << "  checked=" << r.checked << "  failures=" << r.failures.size();
  if (r.rank) out << "  rank=" << *r.rank << "/" << *r.dimension;
  out << "\n";
  for (const auto& f : r.failures) {
    out << "  (";
    for (std::size_t i = 0; i < f.tuple.size(); ++i) out << (i ? "," : "") << f.tuple[i];
    out << ")  closed form: " << f.closed_form << "  engine: " << f.engine << "\n";
  }
}

// Known closed-form value of beta(g), where there is one.
std::optional<int> expected_beta(const AlgebraSpec& s) {
  const int n = s.n;
  if (s.kind == AlgebraKind::skew) {
    if (n % 4 == 2) return n;
    if (n % 4 == 0) return 2 * n;
    return 3 * n;
  }
  if (s.alpha == 0 && s.beta == 1) return n % 2 == 0 ? 2 * n : 3 * n;
  if (n == 1 && s.alpha == 0 && s.beta == -1) return 4;
  if (n == 1 && s.alpha == 2 && s.beta == -1) return 2;
  return std::nullopt;
}

GroupAction make_action(const AlgebraSpec& spec) {
  GroupAction act = GroupAction::standard(spec);
  if (!act.verify_automorphism())
    throw InvalidInput("g (u -> " + std::string(1, spec.alphabet()[1]) + ", " + spec.alphabet()[1] +
                       " -> lambda u) is not an automorphism of " + spec.name());
  return act;
}

int cmd_invariants(const Config& c, std::ostream& out) {
  const AlgebraSpec spec = make_spec(c);
  if (c.degree < 0) throw InvalidInput("--degree must be a nonnegative integer");
  const GroupAction act = make_action(spec);
  const unsigned threads = resolve_threads(c.threads);
  const int d = c.degree;
  const auto basis = act.invariant_basis(d);
  DegreeRecord rec{d, basis.size(), 0, 0};
  if (!basis.empty() && d > 0) {
    std::vector<std::vector<NcPolynomial>> lower(static_cast<std::size_t>(d));
    for (int e = 1; e < d; ++e)
      for (auto& [m, p] : act.orbit_sum_basis(e)) lower[static_cast<std::size_t>(e)].push_back(std::move(p));
    rec.product_dim = product_span(act, d, lower, basis.size(), threads).dimension();
  }
  rec.new_gens = rec.inv_dim - rec.product_dim;
  if (c.format == "json") {
    Json polys = Json::array();
    for (const auto& p : basis) polys.push_back(to_json(p));
    emit_json(out, Json{{"algebra", to_json(spec)},
                        {"n", spec.n},
                        {"degree", d},
                        {"inv_dim", rec.inv_dim},
                        {"trace_dim", act.invariant_dimension_trace(d)},
                        {"product_dim", rec.product_dim},
                        {"new_gens", rec.new_gens},
                        {"basis", std::move(polys)}});
  } else if (c.format == "csv") {
    out << "degree,inv_dim,product_dim,new_gens\n";
    emit_csv_rows(out, {rec}, "");
  } else {
    out << spec.name() << "  n=" << spec.n << "\n";
    emit_table_rows(out, {rec});
    for (const auto& p : basis) out << "  " << p.to_string() << "\n";
  }
  return exit_ok;
}

int cmd_beta(const Config& c, std::ostream& out) {
  const AlgebraSpec spec = make_spec(c);
  if (c.max_multiple < 3) throw InvalidInput("--max-multiple must be at least 3");
  const GroupAction act = make_action(spec);
  emit_report(out, compute_beta(act, c.max_multiple, c.full_scan, resolve_threads(c.threads)), c.format);
  return exit_ok;
}

int cmd_verify(const Config& c, std::ostream& out) {
  if (c.target.empty()) throw InvalidInput("--target is required");
  const AlgebraSpec spec = make_spec(c);
  const unsigned threads = resolve_threads(c.threads);
  if (c.target == "beta") {
    const auto expected = expected_beta(spec);
    if (!expected) throw InvalidInput("no stated value of beta(g) for " + spec.name() + " with n = " + std::to_string(spec.n));
    if (c.max_multiple < 3) throw InvalidInput("--max-multiple must be at least 3");
    const GroupAction act = make_action(spec);
    const GenerationReport r = compute_beta(act, c.max_multiple, c.full_scan, threads);
    const bool ok = r.beta == *expected;
    if (c.format == "json") {
      emit_json(out, Json{{"target", "beta"},
                          {"algebra", to_json(spec)},
                          {"n", spec.n},
                          {"expected", *expected},
                          {"computed", r.beta},
                          {"ok", ok},
                          {"report", to_json(r)}});
    } else if (c.format == "csv") {
      out << "target,n,expected,computed,ok\nbeta," << spec.n << "," << *expected << "," << r.beta << ","
          << (ok ? "true" : "false") << "\n";
    } else {
      emit_report(out, r, c.format);
      out << "expected " << *expected << ": " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    return ok ? exit_ok : exit_verification_failed;
  }
  VerifyTarget target;
  try {
    target = parse_target(c.target);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  const VerificationReport r = verify_identity(target, spec, threads);
  emit_verification(out, r, c.format);
  return r.ok() ? exit_ok : exit_verification_failed;
}

int cmd_explore(const Config& c, std::ostream& out) {
  if (!c.algebra.empty() || !c.alpha.empty() || !c.beta.empty())
    throw InvalidInput("explore scans A(0,-1) and A(2,-1); --algebra/--alpha/--beta do not apply");
  if (c.n < 1) throw InvalidInput("--n must be a positive integer");
  if (c.max_multiple < 3) throw InvalidInput("--max-multiple must be at least 3");
  const unsigned threads = resolve_threads(c.threads);
  std::vector<GenerationReport> reports;
  for (int alpha : {0, 2}) {
    const GroupAction act = make_action(AlgebraSpec::downup(alpha, -1, c.n));
    reports.push_back(compute_beta(act, c.max_multiple, c.full_scan, threads));
  }
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit_json(out, Json{{"explore", std::move(arr)}});
  } else if (c.format == "csv") {
    out << "algebra,degree,inv_dim,product_dim,new_gens\n";
    for (const auto& r : reports) emit_csv_rows(out, r.degrees, "\"" + r.spec.name() + "\",");
  } else {
    for (const auto& r : reports) emit_report(out, r, c.format);
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  c.threads = default_threads();

  CLI::App app{"Invariants of a cyclic group action on the skew ring and down-up algebras", "ncinv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub, bool algebra) {
    if (algebra) {
      sub->add_option("--algebra", c.algebra, "skew or downup")->check(CLI::IsMember({"skew", "downup"}));
      sub->add_option("--alpha", c.alpha, "down-up alpha, p/q (default 0)");
      sub->add_option("--beta", c.beta, "down-up beta, p/q (default 1)");
    }
    sub->add_option("--n", c.n, "order of lambda (g has order 2n)");
    sub->add_option("--format", c.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--threads", c.threads, "worker threads (0 = all cores; default NCINV_THREADS)");
  };

  CLI::App* inv = app.add_subcommand("invariants", "invariant basis and dimensions in one degree");
  add_common(inv, true);
  inv->add_option("--degree", c.degree, "degree")->required();

  CLI::App* beta = app.add_subcommand("beta", "generation report and beta(g)");
  add_common(beta, true);
  beta->add_option("--max-multiple", c.max_multiple, "scan degrees up to this multiple of n (>= 3)");
  beta->add_flag("--full-scan", c.full_scan, "also compute degrees that are not multiples of n");

  CLI::App* ver = app.add_subcommand("verify", "check a closed-form identity, kernel certificate or beta value");
  add_common(ver, true);
  ver->add_option("--target", c.target,
                  "prop-invar, eq-4n, lemma-multi, prop-even-products, prop-odd-products, normalize-2n, "
                  "normalize-3n, kernel-2n, kernel-3n or beta")
      ->required();
  ver->add_option("--max-multiple", c.max_multiple, "scan bound for --target beta");
  ver->add_flag("--full-scan", c.full_scan, "full scan for --target beta");

  CLI::App* exp = app.add_subcommand("explore", "beta scans for A(0,-1) and A(2,-1)");
  add_common(exp, false);
  exp->add_option("--max-multiple", c.max_multiple, "scan bound");
  exp->add_flag("--full-scan", c.full_scan, "also compute degrees that are not multiples of n");
  // explore rejects these explicitly rather than as unknown options
  exp->add_option("--algebra", c.algebra)->group("");
  exp->add_option("--alpha", c.alpha)->group("");
  exp->add_option("--beta", c.beta)->group("");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("ncinv");
  for (const auto& a : args) storage.push_back(a);
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return exit_invalid_input;
  }

  // Render into a buffer so a failing command leaves no partial output.
  std::ostringstream buf;
  try {
    int code = exit_ok;
    if (inv->parsed()) code = cmd_invariants(c, buf);
    else if (beta->parsed()) code = cmd_beta(c, buf);
    else if (ver->parsed()) code = cmd_verify(c, buf);
    else code = cmd_explore(c, buf);
    out << buf.str();
    return code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ActionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const FormulaError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CycloError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return exit_invalid_input;
}

}  // namespace ncinv
