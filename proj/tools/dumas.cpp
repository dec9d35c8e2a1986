#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dumas/dumas.hpp"
#include "dumas/io.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

// "a" or "a:b"
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    const std::int64_t v = std::stoll(text);
    return {v, v};
  }
  const std::int64_t lo = std::stoll(text.substr(0, colon));
  const std::int64_t hi = std::stoll(text.substr(colon + 1));
  if (hi < lo) throw std::invalid_argument("range upper bound below lower bound");
  return {lo, hi};
}

void print_envelope(const std::string& command, nlohmann::json parameters,
                    nlohmann::json result, Clock::time_point start) {
  const nlohmann::json envelope{{"command", command},
                                {"parameters", std::move(parameters)},
                                {"result", std::move(result)},
                                {"elapsed_ms", elapsed_ms(start)}};
  std::cout << envelope.dump(2) << "\n";
}

struct NewtonArgs {
  std::string poly;
  std::int64_t prime = 0;
  std::string format = "text";
};

int run_newton(const NewtonArgs& args) {
  const auto start = Clock::now();
  if (!is_prime(args.prime))
    throw std::invalid_argument("--prime must be a prime number");
  const dumas::Polynomial f = dumas::parse_polynomial(args.poly);
  const dumas::NewtonDiagram diagram = dumas::newton_diagram(f, args.prime);
  if (args.format == "json") {
    print_envelope("newton",
                   {{"poly", args.poly}, {"prime", args.prime}},
                   dumas::to_json(diagram), start);
  } else {
    std::cout << "polynomial: " << dumas::format_polynomial(f) << "\n"
              << dumas::render_diagram_text(diagram);
  }
  return 0;
}

struct CheckArgs {
  std::string poly;
  std::string criterion;
  std::string format = "json";
};

int run_check(const CheckArgs& args) {
  const auto start = Clock::now();
  const dumas::Polynomial f = dumas::parse_polynomial(args.poly);
  dumas::CriterionVerdict verdict;
  std::vector<std::int64_t> candidates;
  if (args.criterion == "dumas") {
    verdict = dumas::is_dumas(f);
    if (f.degree() >= 2 && f.constant_term() != 0)
      candidates = dumas::candidate_primes(f);
  } else {
    verdict = dumas::is_eisenstein(f);
    if (f.constant_term() != 0)
      candidates = dumas::prime_divisors(f.constant_term());
  }
  if (args.format == "json") {
    print_envelope("check",
                   {{"poly", args.poly}, {"criterion", args.criterion}},
                   dumas::verdict_to_json(f, verdict, candidates), start);
  } else {
    std::cout << dumas::format_polynomial(f) << ": ";
    if (verdict.satisfied)
      std::cout << "satisfied, witness prime " << *verdict.witness_prime << "\n";
    else
      std::cout << "unsatisfied, reason " << dumas::to_string(verdict.reason)
                << "\n";
  }
  return verdict.satisfied ? 0 : 1;
}

struct CensusArgs {
  std::string kind;
  int degree = 0;
  std::string height;
  int k = 0;
  int threads = 0;
  int partitions = 0;
  std::string engine = "symmetric";
  std::string format = "csv";
};

int run_census(const CensusArgs& args) {
  const auto start = Clock::now();
  const auto [h_lo, h_hi] = parse_range(args.height);
  dumas::CensusOptions options;
  options.engine = args.engine == "naive" ? dumas::CountingEngine::naive
                                          : dumas::CountingEngine::symmetric;
  options.threads = args.threads;
  options.partitions = args.partitions;

  std::vector<dumas::CensusResult> rows;
  const bool csv = args.format == "csv";
  if (csv) std::cout << dumas::census_csv_header() << "\n";
  for (std::int64_t H = h_lo; H <= h_hi; ++H) {
    dumas::CensusResult row;
    if (args.kind == "dumas") {
      if (args.degree == 0) throw std::invalid_argument("--degree is required");
      row = dumas::count_dumas(args.degree, H, options);
    } else if (args.kind == "eisenstein") {
      if (args.degree == 0) throw std::invalid_argument("--degree is required");
      row = dumas::count_eisenstein(args.degree, H, options);
    } else if (args.kind == "irreducible") {
      if (args.degree == 0) throw std::invalid_argument("--degree is required");
      row = dumas::count_irreducible(args.degree, H);
    } else if (args.kind == "coprime") {
      if (args.k == 0) throw std::invalid_argument("--k is required");
      row = dumas::count_noncoprime_tuples(args.k, H);
    } else {
      row = dumas::count_pairwise_coprime_triples(H);
    }
    if (csv)
      std::cout << dumas::census_csv_row(row) << "\n";
    else
      rows.push_back(std::move(row));
  }
  if (!csv) {
    nlohmann::json result = nlohmann::json::array();
    for (const auto& row : rows) result.push_back(dumas::to_json(row));
    print_envelope("census",
                   {{"kind", args.kind},
                    {"degree", args.degree},
                    {"height", args.height},
                    {"k", args.k}},
                   std::move(result), start);
  }
  return 0;
}

struct ConstantsArgs {
  std::string degrees = "2:10";
  std::int64_t prime_limit = dumas::kDefaultPrimeLimit;
  std::string format = "csv";
};

int run_constants(const ConstantsArgs& args) {
  const auto start = Clock::now();
  const auto [lo, hi] = parse_range(args.degrees);
  const std::vector<dumas::ConstantsRow> rows =
      dumas::constants_table(static_cast<int>(lo), static_cast<int>(hi),
                             args.prime_limit);
  if (args.format == "csv") {
    std::cout << dumas::constants_csv_header() << "\n";
    for (const auto& row : rows)
      std::cout << dumas::constants_csv_row(row) << "\n";
  } else {
    nlohmann::json result = nlohmann::json::array();
    for (const auto& row : rows) result.push_back(dumas::to_json(row));
    print_envelope("constants",
                   {{"degrees", args.degrees}, {"prime_limit", args.prime_limit}},
                   std::move(result), start);
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int degree = 0;
  std::int64_t height = 0;
  std::int64_t prime_limit = dumas::kDefaultPrimeLimit;
  int threads = 0;
};

int run_verify(const VerifyArgs& args) {
  std::vector<dumas::CheckResult> checks;
  dumas::CensusOptions options;
  options.threads = args.threads;
  if (args.suite == "table1") {
    checks = dumas::verify_reference_table(args.prime_limit);
  } else if (args.suite == "lemmas") {
    const int degree = args.degree > 0 ? args.degree : 3;
    const std::int64_t height = args.height > 0 ? args.height : 5;
    checks = dumas::verify_gcd_lemmas(degree, height, options);
  } else {
    const std::int64_t height = args.height > 0 ? args.height : 8;
    const std::vector<int> degrees =
        args.degree > 0 ? std::vector<int>{args.degree} : std::vector<int>{2, 3};
    checks = dumas::verify_implications(height, degrees);
  }
  bool all_pass = true;
  for (const auto& check : checks) {
    all_pass = all_pass && check.pass;
    std::cout << (check.pass ? "[ ok ] " : "[FAIL] ") << check.name << ": "
              << check.detail << "\n";
  }
  std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton diagrams, irreducibility criteria and exact density "
               "censuses for integer polynomials"};
  app.require_subcommand(1);

  NewtonArgs newton_args;
  CLI::App* newton = app.add_subcommand(
      "newton", "Construct the Newton diagram of a polynomial at a prime");
  newton->add_option("--poly", newton_args.poly, "coefficient list A0,A1,... or expression in x")
      ->required();
  newton->add_option("--prime", newton_args.prime, "prime p")->required();
  newton->add_option("--format", newton_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Decide an irreducibility criterion for a polynomial");
  check->add_option("--poly", check_args.poly, "polynomial")->required();
  check->add_option("--criterion", check_args.criterion, "dumas|eisenstein")
      ->required()
      ->check(CLI::IsMember({"dumas", "eisenstein"}));
  check->add_option("--format", check_args.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CensusArgs census_args;
  CLI::App* census = app.add_subcommand(
      "census", "Exact counts over bounded-height coefficient boxes");
  census->add_option("--kind", census_args.kind,
                     "dumas|eisenstein|irreducible|coprime|pairwise-coprime")
      ->required()
      ->check(CLI::IsMember(
          {"dumas", "eisenstein", "irreducible", "coprime", "pairwise-coprime"}));
  census->add_option("--degree", census_args.degree, "polynomial degree n");
  census->add_option("--height", census_args.height, "height H or range lo:hi")
      ->required();
  census->add_option("--k", census_args.k, "tuple length for --kind coprime");
  census->add_option("--threads", census_args.threads, "worker threads")
      ->envname("DUMAS_THREADS");
  census->add_option("--partitions", census_args.partitions,
                     "work partitions (results are partition-independent)");
  census->add_option("--engine", census_args.engine, "symmetric|naive")
      ->check(CLI::IsMember({"symmetric", "naive"}));
  census->add_option("--format", census_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  ConstantsArgs constants_args;
  CLI::App* constants = app.add_subcommand(
      "constants", "Analytic density constants and reference comparisons");
  constants->add_option("--degrees", constants_args.degrees, "degree range lo:hi");
  constants->add_option("--prime-limit", constants_args.prime_limit,
                        "Euler product truncation");
  constants->add_option("--format", constants_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification suite, exit 0 iff all pass");
  verify->add_option("suite", verify_args.suite, "table1|lemmas|implications")
      ->required()
      ->check(CLI::IsMember({"table1", "lemmas", "implications"}));
  verify->add_option("--degree", verify_args.degree, "degree");
  verify->add_option("--height", verify_args.height, "height bound");
  verify->add_option("--prime-limit", verify_args.prime_limit,
                     "Euler product truncation");
  verify->add_option("--threads", verify_args.threads, "worker threads")
      ->envname("DUMAS_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (newton->parsed()) return run_newton(newton_args);
    if (check->parsed()) return run_check(check_args);
    if (census->parsed()) return run_census(census_args);
    if (constants->parsed()) return run_constants(constants_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const dumas::CriterionInapplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
