#include "ptk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ptk/constructions.hpp"
#include "ptk/eval.hpp"
#include "ptk/godel.hpp"
#include "ptk/itb.hpp"
#include "ptk/prop.hpp"
#include "ptk/verifier.hpp"

namespace ptk::cli {

namespace {

// Inline text, a file path, or "-" for stdin.
std::string slurp_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

std::vector<Formula> parse_sentence_lines(const std::string& text) {
  std::vector<Formula> out;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      out.push_back(parse_formula(line));
    } catch (const ParseError& e) {
      throw ParseError(e.offset, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Domain parse_domain(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("domain must look like \"0..7\"");
  Nat lo(text.substr(0, dots));
  Nat hi(text.substr(dots + 2));
  return Domain::range(lo, hi);
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("PTK_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      return fallback;
    }
  }
  return fallback;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

int cmd_eval(const std::string& input, const Nat& bound, std::ostream& out, std::ostream& err) {
  std::variant<Formula, Term> parsed;
  try {
    parsed = parse(slurp_input(input));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (std::holds_alternative<Term>(parsed)) {
    const Term& t = std::get<Term>(parsed);
    if (!is_closed(t)) {
      err << "error: term has free variables\n";
      return kExitPrecondition;
    }
    out << "val: " << val(t) << '\n';
    return kExitPass;
  }
  const Formula& f = std::get<Formula>(parsed);
  if (!is_sentence(f)) {
    err << "error: formula has free variables\n";
    return kExitPrecondition;
  }
  if (is_quantifier_free(f)) {
    bool v = tr0(f);
    out << "tr0: " << (v ? "true" : "false") << '\n';
    return v ? kExitPass : kExitFail;
  }
  Truth3 v = std_truth(f, bound);
  out << "std_truth: " << to_string(v) << '\n';
  return v == Truth3::True ? kExitPass : kExitFail;
}

int cmd_construct(const std::string& kind, std::size_t c, const std::string& t_text,
                  std::size_t a, std::size_t n, bool godel, const std::string& file,
                  const std::string& out_path, std::ostream& out, std::ostream& err) {
  SentenceSeq from_file;
  if (!file.empty()) from_file = parse_sentence_lines(slurp_input(file));

  auto alphas = [&](std::size_t count) {
    SentenceSeq fs;
    for (std::size_t i = 0; i < count; ++i) fs.push_back(Formula::eq(numeral(i), numeral(i)));
    return fs;
  };
  auto betas = [&](std::size_t count) {
    SentenceSeq fs;
    for (std::size_t i = 0; i < count; ++i)
      fs.push_back(Formula::eq(numeral(i), Term::succ(numeral(i))));
    return fs;
  };

  Formula result;
  if (kind == "bigor") {
    result = big_or_left(from_file.empty() ? alphas(c + 1) : from_file);
  } else if (kind == "stopping") {
    if (!from_file.empty()) {
      if (from_file.size() % 2 != 0)
        throw std::invalid_argument("stopping needs an even number of sentences");
      SentenceSeq as(from_file.begin(), from_file.begin() + from_file.size() / 2);
      SentenceSeq bs(from_file.begin() + from_file.size() / 2, from_file.end());
      result = stopping_disjunction(as, bs, 0);
    } else {
      result = stopping_disjunction(alphas(c + 1), betas(c + 1), 0);
    }
  } else if (kind == "unique") {
    result = unique(from_file.empty() ? alphas(c + 1) : from_file);
  } else if (kind == "acdc") {
    Term t = parse_term(t_text);
    result = acdc_lhs(t, from_file.empty() ? betas(c + 1) : from_file);
  } else if (kind == "theta") {
    result = theta_c(c).formula;
  } else if (kind == "iota") {
    auto gamma = default_iota_gamma(n);
    IndexVarId alpha{9};
    ItbFormula target = gamma.empty()
                            ? ItbFormula::lift(true_sentence())
                            : itb_biconditional(gamma.front(), alpha);
    result = iota_translate(target, a, default_iota_phi(), gamma);
  } else {
    err << "unknown construct kind: " << kind << '\n';
    return kExitUsage;
  }

  if (godel)
    write_output(godel_encode(result).value.str(), out_path, out);
  else
    write_output(print(result), out_path, out);
  return kExitPass;
}

int cmd_check(const std::string& input, const std::string& mode, const std::string& premises,
              bool negate, const std::string& out_path, std::ostream& out, std::ostream& err) {
  Formula f;
  try {
    f = parse_formula(slurp_input(input));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!is_sentence(f)) {
    err << "error: formula has free variables\n";
    return kExitPrecondition;
  }

  if (mode == "export-dimacs") {
    Skeleton sk = skeleton(f);
    PropFormula goal = negate ? PropFormula::neg(sk.formula) : sk.formula;
    write_output(export_dimacs(to_cnf_tseitin(goal)), out_path, out);
    return kExitPass;
  }

  auto print_countermodel = [&](const Valuation& v, const AtomTable& table) {
    out << "countermodel:\n";
    for (const auto& [atom, value] : v)
      out << "  " << print(table.sentence(atom)) << " := " << (value ? "true" : "false")
          << '\n';
  };

  if (mode == "tautology") {
    Skeleton sk = skeleton(f);
    if (is_tautology(sk.formula)) {
      out << "tautology: true\n";
      return kExitPass;
    }
    out << "tautology: false\n";
    if (auto v = find_countermodel({}, sk.formula)) print_countermodel(*v, *sk.table);
    return kExitFail;
  }

  if (mode == "entails") {
    auto premise_sentences = parse_sentence_lines(slurp_input(premises));
    auto table = std::make_shared<AtomTable>();
    std::vector<PropFormula> ps;
    for (const auto& s : premise_sentences) ps.push_back(skeleton(s, *table));
    PropFormula goal = skeleton(f, *table);
    if (entails(ps, goal)) {
      out << "entails: true\n";
      return kExitPass;
    }
    out << "entails: false\n";
    if (auto v = find_countermodel(ps, goal)) print_countermodel(*v, *table);
    return kExitFail;
  }

  err << "unknown check mode: " << mode << '\n';
  return kExitUsage;
}

int cmd_verify(const std::string& suite, const CorpusSpec& spec, std::size_t jobs,
               const std::string& format, bool timing, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  std::vector<Report> reports;
  if (suite == "all") {
    reports = run_all(spec, jobs);
  } else {
    if (!is_suite_name(suite)) {
      err << "unknown suite: " << suite << "\nknown suites:";
      for (const auto& n : suite_names()) err << ' ' << n;
      err << " all\n";
      return kExitUsage;
    }
    reports.push_back(run_suite(suite, spec));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();

  if (format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) os << r.to_text();
    os << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    write_output(os.str(), out_path, out);
  } else {
    std::string json = reports.size() == 1 && suite != "all"
                           ? reports.front().to_json(timing)
                           : reports_to_json(reports, timing);
    write_output(json, out_path, out);
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for arithmetised syntax, truth predicates and "
               "propositional verification"};
  app.require_subcommand(1);

  // eval
  std::string eval_input;
  std::string eval_bound = "64";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a closed term or sentence");
  eval_cmd->add_option("input", eval_input, "term or formula (inline, file, or -)")->required();
  eval_cmd->add_option("--bound", eval_bound, "witness bound for quantified sentences");

  // construct
  std::string con_kind, con_t = "0", con_file, con_out;
  std::size_t con_c = 1, con_a = 1, con_n = 1;
  bool con_godel = false;
  auto* con_cmd = app.add_subcommand("construct", "emit a formula scheme instance");
  con_cmd->add_option("kind", con_kind, "bigor|stopping|unique|acdc|theta|iota")->required();
  con_cmd->add_option("--c", con_c, "sequence size parameter c");
  con_cmd->add_option("--t", con_t, "case term for acdc");
  con_cmd->add_option("--a", con_a, "translation level for iota");
  con_cmd->add_option("--n", con_n, "biconditional count for iota");
  con_cmd->add_option("--file", con_file, "sentences, one per line");
  con_cmd->add_option("--out", con_out, "write to file instead of stdout");
  con_cmd->add_flag("--godel", con_godel, "print the Godel code instead of text");

  // check
  std::string chk_input, chk_mode = "tautology", chk_premises, chk_out;
  bool chk_negate = false;
  auto* chk_cmd = app.add_subcommand("check", "propositional checks over sentence skeletons");
  chk_cmd->add_option("input", chk_input, "formula (inline, file, or -)")->required();
  chk_cmd->add_option("--mode", chk_mode, "tautology|entails|export-dimacs");
  chk_cmd->add_option("--premises", chk_premises, "premise sentences, one per line");
  chk_cmd->add_flag("--negate", chk_negate, "export the negation (UNSAT iff tautology)");
  chk_cmd->add_option("--out", chk_out, "write DIMACS to file");

  // verify
  std::string ver_suite, ver_domain, ver_family, ver_format = "json", ver_out;
  std::uint64_t ver_seed = seed_from_env_or(42);
  std::size_t ver_c = 0, ver_n = 0, ver_jobs = 1;
  std::string ver_bound = "0";
  bool ver_timing = false;
  auto* ver_cmd = app.add_subcommand("verify", "run verification suites");
  ver_cmd->add_option("suite", ver_suite, "suite name or 'all'")->required();
  ver_cmd->add_option("--seed", ver_seed, "corpus seed (PTK_SEED as fallback)");
  ver_cmd->add_option("--c", ver_c, "size parameter (suite-specific)");
  ver_cmd->add_option("--n", ver_n, "instance count (suite-specific)");
  ver_cmd->add_option("--bound", ver_bound, "witness bound");
  ver_cmd->add_option("--domain", ver_domain, "saturation domain, e.g. 0..7");
  ver_cmd->add_option("--family", ver_family, "saturation family file");
  ver_cmd->add_option("--jobs", ver_jobs, "run suites concurrently");
  ver_cmd->add_option("--format", ver_format, "json|text");
  ver_cmd->add_option("--out", ver_out, "write the report to file");
  ver_cmd->add_flag("--timing", ver_timing, "include wall time in JSON output");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_input, Nat(eval_bound), out, err);
    if (con_cmd->parsed())
      return cmd_construct(con_kind, con_c, con_t, con_a, con_n, con_godel, con_file, con_out,
                           out, err);
    if (chk_cmd->parsed())
      return cmd_check(chk_input, chk_mode, chk_premises, chk_negate, chk_out, out, err);
    if (ver_cmd->parsed()) {
      CorpusSpec spec;
      spec.seed = ver_seed;
      spec.c_max = ver_c;
      spec.instances = ver_n;
      spec.bound = Nat(ver_bound);
      if (!ver_domain.empty()) spec.domain = parse_domain(ver_domain);
      if (!ver_family.empty()) spec.family = parse_sentence_lines(slurp_input(ver_family));
      return cmd_verify(ver_suite, spec, ver_jobs, ver_format, ver_timing, ver_out, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace ptk::cli
