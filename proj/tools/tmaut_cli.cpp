// Command-line front end: builds the pipeline automata, checks the state
// complexity formula against Hopcroft over a grid, verifies languages by
// exhaustive sweep and decides whether a given DFA is some mT+r.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmaut/classes.hpp"
#include "tmaut/construction.hpp"
#include "tmaut/decision.hpp"
#include "tmaut/io.hpp"
#include "tmaut/oracle.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_bad_params = 2;
constexpr int exit_io_failure = 3;

struct BuildOptions {
  std::int64_t m = 1;
  std::int64_t r = 0;
  int p = 1;
  std::string stage = "minimal";
  bool complement = false;
  std::string format = "json";
  std::string out_path;
};

int write_artifact(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return exit_ok;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return exit_io_failure;
  }
  return exit_ok;
}

int run_build(const BuildOptions& opt) {
  tmaut::Dfa a;
  std::int64_t pair_base = 0;
  const std::int64_t b = std::int64_t{1} << opt.p;
  if (opt.stage == "a_t") {
    a = tmaut::build_a_t(opt.p);
    pair_base = b;
  } else if (opt.stage == "a_mrb") {
    a = tmaut::build_a_mrb(opt.m, opt.r, b);
    pair_base = b;
  } else if (opt.stage == "pi_a_mrb") {
    a = tmaut::build_pi_a_mrb(opt.m, opt.r, b);
  } else if (opt.stage == "product") {
    a = tmaut::build_product(opt.m, opt.r, opt.p);
    pair_base = b;
  } else if (opt.stage == "projected") {
    a = tmaut::build_projected(opt.m, opt.r, opt.p);
  } else if (opt.stage == "minimal") {
    a = opt.complement ? tmaut::complement_minimal(opt.m, opt.r, opt.p)
                       : tmaut::build_minimal(opt.m, opt.r, opt.p);
  } else {
    std::cerr << "error: unknown stage " << opt.stage << "\n";
    return exit_bad_params;
  }

  std::string text;
  if (opt.format == "json") {
    text = tmaut::dfa_to_json(a).dump(2) + "\n";
  } else if (opt.format == "dot") {
    text = tmaut::dfa_to_dot(a, pair_base);
  } else {
    std::cerr << "error: unknown format " << opt.format << "\n";
    return exit_bad_params;
  }
  return write_artifact(text, opt.out_path);
}

int run_complexity(std::int64_t m_max, int p_max) {
  struct Row {
    std::int64_t m;
    int p;
    std::int64_t formula;
    std::int64_t hopcroft;
  };
  std::vector<Row> rows(static_cast<std::size_t>(m_max) * p_max);
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (int p = 1; p <= p_max; ++p) {
      // The state complexity does not depend on r; the Hopcroft column uses
      // r = 0.
      const std::int64_t formula = tmaut::state_complexity(m, p);
      const std::int64_t hopcroft =
          tmaut::minimize(tmaut::build_projected(m, 0, p)).state_count;
      rows[static_cast<std::size_t>(m - 1) * p_max + (p - 1)] = {m, p, formula, hopcroft};
    }

  bool all_agree = true;
  std::cout << "m\tp\tformula\thopcroft\tagree\n";
  for (const Row& row : rows) {
    const bool agree = row.formula == row.hopcroft;
    all_agree = all_agree && agree;
    std::cout << row.m << "\t" << row.p << "\t" << row.formula << "\t" << row.hopcroft
              << "\t" << (agree ? "yes" : "NO") << "\n";
  }
  return all_agree ? exit_ok : exit_check_failed;
}

int run_decide(const std::string& in_path, int p, bool allow_complement) {
  nlohmann::json j;
  try {
    if (in_path.empty() || in_path == "-") {
      j = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream in(in_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return exit_bad_params;
      }
      j = nlohmann::json::parse(in);
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return exit_bad_params;
  }
  const tmaut::Dfa a = tmaut::dfa_from_json(j);
  const tmaut::Verdict v = tmaut::decide(a, p, allow_complement);
  std::cout << tmaut::verdict_to_json(v).dump(2) << "\n";
  return v.match ? exit_ok : exit_check_failed;
}

int run_verify(std::int64_t m, std::int64_t r, int p, int max_len, bool complement) {
  const tmaut::SweepReport report = tmaut::sweep(m, r, p, max_len, complement);
  std::cout << tmaut::sweep_report_to_json(report).dump(2) << "\n";
  return report.passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal automata of base-2^p expansions of the sets mT+r"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  CLI::App* build = app.add_subcommand("build", "construct a pipeline automaton");
  build->add_option("--m", build_opt.m, "multiplier");
  build->add_option("--r", build_opt.r, "remainder");
  build->add_option("--p", build_opt.p, "base exponent, base = 2^p")->required();
  build->add_option("--stage", build_opt.stage,
                    "a_t | a_mrb | pi_a_mrb | product | projected | minimal");
  build->add_flag("--complement", build_opt.complement,
                  "use the complement orientation (stage minimal only)");
  build->add_option("--format", build_opt.format, "json | dot");
  build->add_option("--out", build_opt.out_path, "output path (default stdout)");

  std::int64_t m_max = 64;
  int p_max = 3;
  CLI::App* complexity =
      app.add_subcommand("complexity", "formula vs Hopcroft over a grid (TSV)");
  complexity->add_option("--m-max", m_max, "largest multiplier");
  complexity->add_option("--p-max", p_max, "largest base exponent");

  std::string in_path = "-";
  int decide_p = 1;
  bool allow_complement = false;
  CLI::App* decide = app.add_subcommand("decide", "is the given DFA some mT+r?");
  decide->add_option("--in", in_path, "input automaton JSON path, - for stdin");
  decide->add_option("--p", decide_p, "base exponent of the input alphabet")->required();
  decide->add_flag("--allow-complement", allow_complement,
                   "also search the complement orientation");

  std::int64_t verify_m = 1, verify_r = 0;
  int verify_p = 1, max_len = 6;
  bool verify_complement = false;
  CLI::App* verify = app.add_subcommand("verify", "exhaustive sweep against the oracle");
  verify->add_option("--m", verify_m, "multiplier")->required();
  verify->add_option("--r", verify_r, "remainder");
  verify->add_option("--p", verify_p, "base exponent")->required();
  verify->add_option("--max-len", max_len, "sweep all words up to this length");
  verify->add_flag("--complement", verify_complement, "complement orientation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_params;
  }

  try {
    if (build->parsed()) return run_build(build_opt);
    if (complexity->parsed()) return run_complexity(m_max, p_max);
    if (decide->parsed()) return run_decide(in_path, decide_p, allow_complement);
    if (verify->parsed()) return run_verify(verify_m, verify_r, verify_p, max_len,
                                            verify_complement);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_params;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_params;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io_failure;
  }
  return exit_bad_params;
}
