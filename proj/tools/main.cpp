#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "lexbetti/errors.hpp"
#include "lexbetti/fuzz.hpp"
#include "lexbetti/ideal.hpp"
#include "lexbetti/json_io.hpp"
#include "lexbetti/oracle.hpp"
#include "lexbetti/rng.hpp"

namespace {

using namespace lexbetti;

struct Options {
  std::string format = "text";
  int max_degree = -1;  // -1: extend automatically until the tail stabilizes
  int size_guard = kDefaultSizeGuard;
};

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string monomial_list(const std::vector<Monomial>& mons) {
  std::string s;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (i) s += ", ";
    s += mons[i].str();
  }
  return s;
}

void print_counts(std::ostream& os, const std::vector<Count>& v) {
  for (Count c : v) os << " " << c;
}

void print_table_text(std::ostream& os, const BettiTable& t, const std::string& title) {
  os << title << " betas:";
  print_counts(os, t.betas);
  os << "\n";
  for (const auto& [d, row] : t.by_degree) {
    os << "  from degree " << d << ":";
    print_counts(os, row);
    os << "\n";
  }
}

void print_table_csv(std::ostream& os, const BettiTable& t) {
  os << "q,beta\n";
  for (std::size_t q = 0; q < t.betas.size(); ++q)
    os << q << "," << t.betas[q] << "\n";
  if (t.by_degree.empty()) return;
  os << "\nd,q,contribution\n";
  for (const auto& [d, row] : t.by_degree)
    for (std::size_t q = 0; q < row.size(); ++q)
      os << d << "," << q << "," << row[q] << "\n";
}

LoadedIdeal load_ideal(const std::string& path) {
  LoadedIdeal loaded = ideal_from_json(load_json_file(path));
  if (!loaded.was_minimal)
    std::cerr << "warning: generators in " << path
              << " were not minimal; proper multiples dropped\n";
  return loaded;
}

HilbertFunction hilbert_for(const MonomialIdeal& ideal, const Options& opt) {
  if (opt.max_degree < 0) return hilbert_stabilized(ideal);
  if (opt.max_degree < ideal.max_generator_degree())
    std::cerr << "warning: --max-degree " << opt.max_degree
              << " truncates below the top generator degree "
              << ideal.max_generator_degree() << "\n";
  return hilbert(ideal, opt.max_degree);
}

int cmd_check(const std::string& path, const Options& opt) {
  LoadedIdeal loaded = load_ideal(path);
  const MonomialIdeal& ideal = loaded.ideal;
  HilbertFunction h = hilbert_for(ideal, opt);
  Classification cls = classify(ideal);

  if (opt.format == "json") {
    nlohmann::json j;
    j["classification"] = {{"borel", cls.is_borel},
                           {"lex", cls.is_lex},
                           {"stable", cls.is_stable}};
    j["generators"] = to_json(ideal)["generators"];
    j["hilbert"] = to_json(h);
    j["minimal"] = loaded.was_minimal;
    j["vars"] = ideal.vars();
    emit_json(j);
  } else if (opt.format == "csv") {
    std::cout << "d,h\n";
    for (int d = 0; d <= h.max_degree(); ++d)
      std::cout << d << "," << h.at(d) << "\n";
  } else {
    std::cout << "vars: " << ideal.vars() << "\n";
    std::cout << "generators (" << ideal.generator_count()
              << "): " << monomial_list(ideal.generators()) << "\n";
    std::cout << "classification: lex=" << (cls.is_lex ? "yes" : "no")
              << " borel=" << (cls.is_borel ? "yes" : "no")
              << " stable=" << (cls.is_stable ? "yes" : "no") << "\n";
    std::cout << "minimal input: " << (loaded.was_minimal ? "yes" : "no") << "\n";
    std::cout << "hilbert (degrees 0.." << h.max_degree() << "):";
    print_counts(std::cout, h.values);
    std::cout << "\n";
  }
  return 0;
}

int cmd_betti(const std::string& path, bool with_oracle, const Options& opt) {
  LoadedIdeal loaded = load_ideal(path);
  const MonomialIdeal& ideal = loaded.ideal;
  Classification cls = classify(ideal);

  BettiTable formula;
  if (cls.is_stable) formula = ek_betti(ideal);
  TaylorReport oracle;
  if (with_oracle)
    oracle = taylor_report(ideal.generators(), ideal.vars(), opt.size_guard);
  if (!cls.is_stable && !with_oracle)
    throw PreconditionError(
        "the generatorwise formula needs a stable ideal; rerun with --oracle");

  bool both = cls.is_stable && with_oracle;
  bool agree = true;
  if (both) {
    BettiTable shaped = taylor_betti(ideal, opt.size_guard);
    agree = shaped.betas == formula.betas;
  }

  if (opt.format == "json") {
    nlohmann::json j;
    if (both) j["agreement"] = agree ? "AGREE" : "MISMATCH";
    if (cls.is_stable) j["eliahou_kervaire"] = to_json(formula);
    if (with_oracle)
      j["taylor"] = {{"betas", oracle.betas},
                     {"chain_dims", oracle.chain_dims},
                     {"generator_count", oracle.generator_count},
                     {"ranks", oracle.ranks}};
    j["vars"] = ideal.vars();
    emit_json(j);
  } else if (opt.format == "csv") {
    if (cls.is_stable) {
      print_table_csv(std::cout, formula);
    } else {
      std::cout << "q,beta\n";
      for (std::size_t q = 0; q < oracle.betas.size(); ++q)
        std::cout << q << "," << oracle.betas[q] << "\n";
    }
  } else {
    if (cls.is_stable) print_table_text(std::cout, formula, "eliahou-kervaire");
    if (with_oracle) {
      std::cout << "taylor betas:";
      print_counts(std::cout, oracle.betas);
      std::cout << "\n  chain dims:";
      print_counts(std::cout, oracle.chain_dims);
      std::cout << "\n  ranks:";
      print_counts(std::cout, oracle.ranks);
      std::cout << "\n";
    }
    if (both) std::cout << "agreement: " << (agree ? "AGREE" : "MISMATCH") << "\n";
  }

  if (both && !agree) {
    std::cerr << "error: formula and oracle disagree (this is a bug)\n";
    return 2;
  }
  return 0;
}

int cmd_lexify(const std::string& path, const Options& opt) {
  HilbertFunction h = hilbert_from_json(load_json_file(path));
  MonomialIdeal lexi = lex_ideal(h);
  GeneratorProfile profile = generator_degrees(h);

  if (opt.format == "json") {
    nlohmann::json j;
    j["generators"] = to_json(lexi)["generators"];
    j["max_generator_degree"] = profile.max_degree;
    nlohmann::json fresh = nlohmann::json::object();
    for (const auto& [d, cnt] : profile.new_generators)
      fresh[std::to_string(d)] = cnt;
    j["new_generators"] = std::move(fresh);
    j["stabilized"] = profile.stabilized;
    j["vars"] = h.vars;
    emit_json(j);
  } else if (opt.format == "csv") {
    std::cout << "d,new_generators\n";
    for (const auto& [d, cnt] : profile.new_generators)
      std::cout << d << "," << cnt << "\n";
  } else {
    std::cout << "vars: " << h.vars << "\n";
    std::cout << "lex generators (" << lexi.generator_count()
              << "): " << monomial_list(lexi.generators()) << "\n";
    for (const auto& [d, cnt] : profile.new_generators)
      std::cout << "  degree " << d << ": " << cnt << " new\n";
    std::cout << "stabilized: " << (profile.stabilized ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_bounds(const std::string& path, bool verify, const Options& opt) {
  HilbertFunction h = hilbert_from_json(load_json_file(path));
  BettiTable bound = closed_form_betti(h);
  Count b1 = beta1_closed_form(h);
  GeneratorProfile profile = generator_degrees(h);

  if (verify) {
    BettiTable rebuilt = ek_betti(lex_ideal(h));
    if (rebuilt != bound || (h.vars >= 2 && b1 != bound.betas[1])) {
      std::cerr << "error: closed forms disagree with the constructed lex ideal "
                   "(this is a bug)\n";
      return 2;
    }
  }

  if (opt.format == "json") {
    nlohmann::json j;
    j["beta1_closed_form"] = b1;
    j["betti"] = to_json(bound);
    j["max_generator_degree"] = profile.max_degree;
    j["vars"] = h.vars;
    if (verify) j["verified"] = true;
    emit_json(j);
  } else if (opt.format == "csv") {
    print_table_csv(std::cout, bound);
  } else {
    print_table_text(std::cout, bound, "sharp upper bound");
    std::cout << "beta_1 closed form: " << b1 << "\n";
    if (verify) std::cout << "verified against the constructed lex ideal\n";
  }
  return 0;
}

int cmd_compare(const std::string& path, const Options& opt) {
  LoadedIdeal loaded = load_ideal(path);
  const MonomialIdeal& ideal = loaded.ideal;
  Classification cls = classify(ideal);
  HilbertFunction h = hilbert_for(ideal, opt);

  BettiTable mine;
  std::string method;
  if (cls.is_stable) {
    mine = ek_betti(ideal);
    method = "eliahou-kervaire";
  } else {
    mine = taylor_betti(ideal, opt.size_guard);
    method = "taylor";
  }
  MonomialIdeal lexi = lex_ideal(h);
  BettiTable lex_table = ek_betti(lexi);
  bool dominated = dominates(lex_table, mine);

  if (opt.format == "json") {
    nlohmann::json j;
    j["domination"] = dominated ? "DOMINATED" : "VIOLATED";
    j["hilbert"] = to_json(h);
    j["input"] = {{"betti", to_json(mine)},
                  {"classification",
                   {{"borel", cls.is_borel},
                    {"lex", cls.is_lex},
                    {"stable", cls.is_stable}}},
                  {"generators", to_json(ideal)["generators"]},
                  {"method", method}};
    j["lex"] = {{"betti", to_json(lex_table)},
                {"generators", to_json(lexi)["generators"]}};
    j["vars"] = ideal.vars();
    emit_json(j);
  } else if (opt.format == "csv") {
    std::cout << "# input\n";
    print_table_csv(std::cout, mine);
    std::cout << "\n# lex\n";
    print_table_csv(std::cout, lex_table);
    std::cout << "\n# domination: " << (dominated ? "DOMINATED" : "VIOLATED") << "\n";
  } else {
    std::cout << "input generators (" << ideal.generator_count()
              << "): " << monomial_list(ideal.generators()) << "\n";
    print_table_text(std::cout, mine, "input (" + method + ")");
    std::cout << "lex generators (" << lexi.generator_count()
              << "): " << monomial_list(lexi.generators()) << "\n";
    print_table_text(std::cout, lex_table, "lex ideal");
    std::cout << "domination: " << (dominated ? "DOMINATED" : "VIOLATED") << "\n";
  }

  if (!dominated) {
    std::cerr << "error: the lex table fails to dominate (this is a bug)\n";
    return 2;
  }
  return 0;
}

int cmd_fuzz(int vars, long long cases, std::uint64_t seed, const Options& opt) {
  int max_degree = opt.max_degree < 0 ? 4 : opt.max_degree;
  FuzzStats stats;
  for (long long k = 0; k < cases; ++k) {
    std::uint64_t case_seed = Rng::derive(seed, static_cast<std::uint64_t>(k));
    if (auto failure =
            run_fuzz_case(case_seed, vars, max_degree, opt.size_guard, stats)) {
      std::cerr << "property violation in case " << k << " (seed " << seed
                << "): " << failure->check << ": " << failure->detail << "\n";
      nlohmann::json j;
      j["case"] = k;
      j["check"] = failure->check;
      j["detail"] = failure->detail;
      j["reproducer"] = failure->reproducer;
      j["seed"] = seed;
      emit_json(j);
      return 2;
    }
  }
  if (opt.format == "json") {
    nlohmann::json j;
    j["cases"] = stats.cases;
    j["checks"] = stats.checks;
    j["max_degree"] = max_degree;
    j["result"] = "ok";
    j["seed"] = seed;
    j["vars"] = vars;
    emit_json(j);
  } else if (opt.format == "csv") {
    std::cout << "cases,checks,result\n"
              << stats.cases << "," << stats.checks << ",ok\n";
  } else {
    std::cout << "ran " << stats.cases << " cases, " << stats.checks
              << " property checks, all passed (vars<=" << vars << ", degree<="
              << max_degree << ", seed=" << seed << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp Betti number bounds for monomial ideals with a given "
               "Hilbert function, via lex-segment ideals"};
  app.require_subcommand(1);
  app.fallthrough(true);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--max-degree", opt.max_degree,
                 "top degree for Hilbert data; -1 extends until the tail stabilizes")
      ->capture_default_str();
  app.add_option("--size-guard", opt.size_guard,
                 "largest generator count the Taylor oracle accepts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string check_path, betti_path, lexify_path, bounds_path, compare_path;
  bool with_oracle = false, verify = false;
  int fuzz_vars = 4;
  long long fuzz_cases = 100;
  std::uint64_t fuzz_seed = 0;

  CLI::App* c_check = app.add_subcommand(
      "check", "classify a monomial ideal and print its Hilbert data");
  c_check->add_option("ideal", check_path, "ideal JSON file")->required();

  CLI::App* c_betti = app.add_subcommand(
      "betti", "graded Betti numbers of a stable monomial ideal");
  c_betti->add_option("ideal", betti_path, "ideal JSON file")->required();
  c_betti->add_flag("--oracle", with_oracle,
                    "also run the Taylor complex oracle and cross-check");

  CLI::App* c_lexify = app.add_subcommand(
      "lexify", "construct the lex ideal of admissible Hilbert data");
  c_lexify->add_option("hilbert", lexify_path, "Hilbert JSON file")->required();

  CLI::App* c_bounds = app.add_subcommand(
      "bounds", "sharp Betti bounds from Hilbert data alone (closed forms)");
  c_bounds->add_option("hilbert", bounds_path, "Hilbert JSON file")->required();
  c_bounds->add_flag("--verify", verify,
                     "cross-check the closed forms against the built lex ideal");

  CLI::App* c_compare = app.add_subcommand(
      "compare", "Betti table of an ideal against its lex-ideal upper bound");
  c_compare->add_option("ideal", compare_path, "ideal JSON file")->required();

  CLI::App* c_fuzz = app.add_subcommand(
      "fuzz", "seeded property fuzzing over random Borel sets and ideals");
  c_fuzz->add_option("--vars", fuzz_vars, "max variable count")
      ->check(CLI::Range(2, 16))
      ->capture_default_str();
  c_fuzz->add_option("--cases", fuzz_cases, "number of cases")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_fuzz->add_option("--seed", fuzz_seed, "root seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_check->parsed()) return cmd_check(check_path, opt);
    if (c_betti->parsed()) return cmd_betti(betti_path, with_oracle, opt);
    if (c_lexify->parsed()) return cmd_lexify(lexify_path, opt);
    if (c_bounds->parsed()) return cmd_bounds(bounds_path, verify, opt);
    if (c_compare->parsed()) return cmd_compare(compare_path, opt);
    if (c_fuzz->parsed()) return cmd_fuzz(fuzz_vars, fuzz_cases, fuzz_seed, opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
