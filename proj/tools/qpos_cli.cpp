#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpos/enumerator.hpp"
#include "qpos/errors.hpp"
#include "qpos/expansion.hpp"
#include "qpos/io.hpp"
#include "qpos/poset.hpp"
#include "qpos/qsym.hpp"
#include "qpos/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty()) {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw qpos::ParseError("cannot open input file '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

qpos::Basis basis_of(const std::string& b) {
  return b == "L" ? qpos::Basis::fundamental : qpos::Basis::monomial;
}

struct PosetArgs {
  std::string input;
  std::string format = "text";
  std::string basis = "M";
};

void add_poset_options(CLI::App* sub, PosetArgs& args, bool with_basis) {
  sub->add_option("--input", args.input, "poset file (JSON or \"n: i<j ...\"); stdin if absent");
  sub->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_basis)
    sub->add_option("--basis", args.basis, "quasisymmetric basis")
        ->check(CLI::IsMember({"M", "L"}));
}

qpos::Poset load_poset(const PosetArgs& args) {
  return qpos::build_poset(qpos::parse_poset_document(read_input(args.input)));
}

void print_qsym(const qpos::QSym& f, const PosetArgs& args) {
  if (args.format == "json")
    std::cout << qpos::render_json(f, basis_of(args.basis)) << '\n';
  else
    std::cout << qpos::render_text(f, basis_of(args.basis)) << '\n';
}

void print_qpoly(const qpos::QPoly& p, const PosetArgs& args) {
  if (args.format == "json")
    std::cout << qpos::render_json(p) << '\n';
  else
    std::cout << qpos::render_text(p) << '\n';
}

void print_expansion(const qpos::TruncatedExpansion& e, const PosetArgs& args) {
  if (args.format == "json")
    std::cout << qpos::render_json(e) << '\n';
  else
    std::cout << qpos::render_text(e) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"q-weighted quasisymmetric invariants of finite posets"};
  app.require_subcommand(1);
  int exit_code = 0;

  PosetArgs enum_args;
  std::vector<int> alpha_parts;
  bool enum_q0 = false;
  bool enum_alpha_given = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "flag enumerator of the poset cone");
  add_poset_options(cmd_enum, enum_args, true);
  cmd_enum->add_flag("--q0", enum_q0, "specialize q = 0");
  cmd_enum->add_option("--alpha", alpha_parts, "coefficient of one composition, e.g. 1,2,1")
      ->delimiter(',');
  cmd_enum->callback([&] {
    enum_alpha_given = !alpha_parts.empty();
    qpos::Poset p = load_poset(enum_args);
    if (enum_alpha_given) {
      qpos::QPoly z = qpos::zeta_coefficient(p, qpos::Composition(alpha_parts));
      if (enum_q0) z = z.substituted(qpos::QPoly(0));
      print_qpoly(z, enum_args);
      return;
    }
    qpos::QSym fq = qpos::fq_poset_cone(p);
    if (enum_q0) fq = qpos::substitute_q(fq, qpos::QPoly(0));
    print_qsym(fq, enum_args);
  });

  PosetArgs fpoly_args;
  auto* cmd_fpoly = app.add_subcommand("fpoly", "face-count polynomial of the poset cone");
  add_poset_options(cmd_fpoly, fpoly_args, false);
  cmd_fpoly->callback([&] {
    print_qpoly(qpos::f_polynomial(load_poset(fpoly_args)), fpoly_args);
  });

  PosetArgs ppart_args;
  int ppart_m = 4;
  bool ppart_ext = false;
  auto* cmd_ppart = app.add_subcommand("ppart", "order-preserving map generating function");
  add_poset_options(cmd_ppart, ppart_args, true);
  cmd_ppart->add_option("--m", ppart_m, "number of variables for the brute-force expansion")
      ->check(CLI::NonNegativeNumber);
  cmd_ppart->add_flag("--extensions", ppart_ext, "sum over linear extensions instead");
  cmd_ppart->callback([&] {
    qpos::Poset p = load_poset(ppart_args);
    if (ppart_ext)
      print_qsym(qpos::ppartitions_via_extensions(p), ppart_args);
    else
      print_expansion(qpos::ppartitions_bruteforce(p, ppart_m), ppart_args);
  });

  PosetArgs anti_args;
  auto* cmd_anti = app.add_subcommand("antipode-check",
                                      "compare both antipode evaluations on the poset");
  add_poset_options(cmd_anti, anti_args, true);
  cmd_anti->callback([&] {
    qpos::Poset p = load_poset(anti_args);
    qpos::QSym lhs = qpos::antipode(qpos::fq_poset_cone(p));
    qpos::QSym rhs = qpos::antipode_rhs(p);
    bool match = lhs == rhs;
    if (anti_args.format == "json") {
      std::cout << "{\"lhs\":" << qpos::render_json(lhs, basis_of(anti_args.basis))
                << ",\"rhs\":" << qpos::render_json(rhs, basis_of(anti_args.basis))
                << ",\"match\":" << (match ? "true" : "false") << "}\n";
    } else {
      std::cout << "lhs: " << qpos::render_text(lhs, basis_of(anti_args.basis)) << '\n'
                << "rhs: " << qpos::render_text(rhs, basis_of(anti_args.basis)) << '\n'
                << "match: " << (match ? "yes" : "no") << '\n';
    }
    if (!match) exit_code = 1;
  });

  qpos::VerifyOptions vopt;
  bool verify_long = false;
  auto* cmd_verify = app.add_subcommand("verify", "run the cross-validation suites");
  cmd_verify->add_option("--max-n", vopt.max_n, "largest poset size (6 needs --long)")
      ->check(CLI::Range(1, 6));
  cmd_verify->add_option("--trunc-m", vopt.trunc_m, "expansion cutoff")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--suite", vopt.suites, "suites to run (default all)")
      ->check(CLI::IsMember(qpos::verify_suite_names()));
  cmd_verify->add_option("--threads", vopt.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--long", verify_long, "allow the slow settings");
  cmd_verify->callback([&] {
    if (vopt.max_n >= 6 && !verify_long)
      throw qpos::ParseError("--max-n 6 requires --long");
    auto out = qpos::run_verify(vopt);
    std::cout << out.report;
    if (!out.ok) exit_code = 1;
  });

  int survey_max_n = 5;
  int survey_threads = 1;
  bool survey_long = false;
  auto* cmd_survey = app.add_subcommand("survey", "class counts and q=0 collisions per size");
  cmd_survey->add_option("--max-n", survey_max_n, "largest poset size (6 needs --long)")
      ->check(CLI::Range(1, 6));
  cmd_survey->add_option("--threads", survey_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd_survey->add_flag("--long", survey_long, "allow the slow settings");
  cmd_survey->callback([&] {
    if (survey_max_n >= 6 && !survey_long)
      throw qpos::ParseError("--max-n 6 requires --long");
    std::cout << qpos::run_survey(survey_max_n, survey_threads).report;
  });

  int search_n = 5;
  int search_threads = 1;
  bool search_long = false;
  auto* cmd_search = app.add_subcommand(
      "search-collision", "find classes the q=0 expansion cannot separate");
  cmd_search->add_option("--n", search_n, "poset size to scan (7 needs --long)")
      ->check(CLI::Range(1, 7));
  cmd_search->add_option("--threads", search_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd_search->add_flag("--long", search_long, "allow the slow settings");
  cmd_search->callback([&] {
    if (search_n >= 7 && !search_long)
      throw qpos::ParseError("--n 7 requires --long");
    std::cout << qpos::run_collision_search(search_n, search_threads).report;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
