// schurcut: p-Kostka tables, decomposition numbers, Hom dimensions and
// cut verification from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 over budget.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include <schurcut/report.hpp>

using namespace schurcut;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kBudget = 3 };

struct JobSpec {
  std::string command;
  int n = -1, d = -1;
  std::string p_list = "2";
  std::string lambda, mu;
  int row = -1, col = -1;
  std::string format = "json";
  std::string cache_dir;
  int jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t block_budget = 1000;
  int n_max = 6, d_max = 3;
  bool same_lambda = false, psi = false;
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw InvalidInput(what + ": cannot parse '" + s + "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& s, const std::string& what) {
  try {
    return Partition(parse_ints(s, what));
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

std::vector<Int> parse_primes(const std::string& s) {
  std::vector<Int> out;
  for (int p : parse_ints(s, "--p")) {
    if (!is_prime(p)) throw InvalidInput("--p: " + std::to_string(p) + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw InvalidInput("--p: empty list");
  return out;
}

void require_nd(const JobSpec& job) {
  if (job.n < 0 || job.d < 1) throw InvalidInput(job.command + ": --n >= 0 and --d >= 1 are required");
  if (job.d > kMaxRank) throw InvalidInput(job.command + ": --d at most " + std::to_string(kMaxRank));
}

std::optional<ResultCache> open_cache(const JobSpec& job) {
  std::string dir = job.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("SCHURCUT_CACHE")) dir = env;
  if (dir.empty()) return std::nullopt;
  return ResultCache(dir);
}

int cmd_table(const JobSpec& job) {
  require_nd(job);
  const auto primes = parse_primes(job.p_list);
  std::optional<Partition> only;
  if (!job.lambda.empty()) {
    if (job.command != "simple") throw InvalidInput(job.command + ": --lambda only applies to simple");
    only = parse_partition(job.lambda, "--lambda");
    if (only->size() != job.n || only->length() > job.d)
      throw InvalidInput("--lambda must be a partition of n with at most d parts");
  }
  if (job.same_lambda && job.command != "hom") throw InvalidInput("--same-lambda only applies to hom");
  const std::string kind = job.command == "kostka" ? "kostka_p" : job.command == "simple" ? "simple_char" : job.command;
  check_table_budget(kind, job.n, job.d, job.budget);

  const auto cache = open_cache(job);
  if (job.format == "csv") std::cout << kTableCsvHeader << '\n';
  for (Int p : primes) {
    std::vector<std::pair<std::string, std::string>> extra;
    if (only) extra.emplace_back("l", to_string(*only));
    if (job.same_lambda) extra.emplace_back("same", "");
    auto compute = [&]() -> json {
      if (job.command == "kostka") return to_json(kostka_table(job.n, job.d, p));
      if (job.command == "decomp") return to_json(decomp_table(job.n, job.d, p));
      if (job.command == "simple") return to_json(simple_table(job.n, job.d, p, only));
      return to_json(hom_table(job.n, job.d, p, job.same_lambda));
    };
    const std::string key = cache_key(job.command, job.n, job.d, p, extra);
    const json payload = cache ? cache->get_or_compute(key, compute) : compute();
    if (job.format == "csv")
      std::cout << to_csv_rows(table_from_json(payload));
    else
      std::cout << payload.dump() << '\n';
  }
  return kOk;
}

void emit(const CutReport& r, const std::string& format) {
  if (format == "csv")
    std::cout << to_csv_row(r);
  else
    std::cout << to_json(r).dump() << '\n';
}

int cmd_verify(const JobSpec& job) {
  const auto primes = parse_primes(job.p_list);
  if (job.format == "csv") std::cout << kCutCsvHeader << '\n';
  std::size_t failed = 0;

  if (!job.lambda.empty() || !job.mu.empty()) {
    if (job.lambda.empty() || job.mu.empty()) throw InvalidInput("verify: give both --lambda and --mu");
    const auto lam = parse_partition(job.lambda, "--lambda");
    const auto mu = parse_partition(job.mu, "--mu");
    if (lam.size() != mu.size()) throw InvalidInput("verify: --lambda and --mu have different sizes");
    const int d = job.d > 0 ? job.d : std::max({lam.length(), mu.length(), 1});
    if (lam.length() > d || mu.length() > d) throw InvalidInput("verify: partitions longer than --d");
    if (job.row > d) throw InvalidInput("verify: --row beyond d");
    if (job.row == 0 || job.col == 0) throw InvalidInput("verify: cuts start at 1");
    std::vector<CutReport> out;
    for (Int p : primes) {
      const bool explicit_cut = job.row > 0 || job.col > 0;
      if (job.row > 0) out.push_back(verify_row_kostka(lam, mu, job.row, p, d));
      if (job.col > 0) out.push_back(verify_col_kostka(lam, mu, job.col, p, d));
      if (!explicit_cut) {
        for (int r = 1; r < d; ++r) out.push_back(verify_row_kostka(lam, mu, r, p, d));
        for (int c = 1; c < std::max(lam[0], mu[0]); ++c) out.push_back(verify_col_kostka(lam, mu, c, p, d));
      }
    }
    for (auto& r : out) {
      emit(r, job.format);
      failed += r.status == CutStatus::Fail;
    }
  } else {
    if (job.n_max < 0 || job.d_max < 1) throw InvalidInput("verify: --n-max >= 0 and --d-max >= 1");
    if (job.d_max > kMaxRank) throw InvalidInput("verify: --d-max at most " + std::to_string(kMaxRank));
    if (auto w = tensor_words(job.n_max, job.d_max); w > job.budget) throw BudgetExceeded("verify", w, job.budget);
    SweepOptions opt;
    opt.n_max = job.n_max;
    opt.d_max = job.d_max;
    opt.primes = primes;
    opt.psi = job.psi;
    opt.jobs = job.jobs;
    const auto rep = sweep(opt);
    for (auto& r : rep.reports) emit(r, job.format);
    failed = rep.failed;
    std::cerr << "verify: " << rep.passed << " pass, " << rep.failed << " fail, " << rep.skipped << " skipped\n";
  }
  return failed ? kFailed : kOk;
}

int cmd_enumerate(const JobSpec& job) {
  if (!job.lambda.empty() || !job.mu.empty()) {
    if (job.lambda.empty() || job.mu.empty()) throw InvalidInput("enumerate: give both --lambda and --mu");
    const auto lam = parse_partition(job.lambda, "--lambda");
    const auto mu = parse_partition(job.mu, "--mu");
    if (lam.size() != mu.size()) throw InvalidInput("enumerate: --lambda and --mu have different sizes");
    const auto tabs = enumerate_sstd(lam, Composition(mu.parts));
    if (job.format == "csv") {
      std::cout << "tableau\n";
      for (auto& t : tabs) std::cout << '"' << to_string(t) << "\"\n";
    } else {
      json arr = json::array();
      for (auto& t : tabs) arr.push_back(t.rows);
      std::cout << json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"tableaux", arr}}.dump() << '\n';
    }
    return kOk;
  }
  require_nd(job);
  const auto parts = enumerate_partitions(job.n, job.d);
  if (job.format == "csv") {
    std::cout << "partition\n";
    for (auto& x : parts) std::cout << csv_partition(x) << '\n';
  } else {
    json arr = json::array();
    for (auto& x : parts) arr.push_back(to_json(x));
    std::cout << json{{"n", job.n}, {"d", job.d}, {"partitions", arr}}.dump() << '\n';
  }
  return kOk;
}

int cmd_selfcheck(const JobSpec& job) {
  SelfcheckOptions opt;
  opt.budget = job.budget;
  opt.block_budget = job.block_budget;
  opt.jobs = job.jobs;
  const auto rep = selfcheck(opt);
  for (auto& line : rep.lines) std::cout << line.dump() << '\n';
  std::cerr << "selfcheck: " << rep.passed << " pass, " << rep.failed << " fail, " << rep.skipped << " skipped\n";
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular invariants of Schur algebras and their cut factorisations"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", job.n, "degree n");
    sub->add_option("--d", job.d, "rank d");
    sub->add_option("--p", job.p_list, "prime or comma list of primes")->capture_default_str();
    sub->add_option("--format", job.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--cache-dir", job.cache_dir, "result cache directory (default $SCHURCUT_CACHE)");
    sub->add_option("--jobs", job.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", job.budget, "cap on d^n (or on the largest weight block)")->capture_default_str();
  };

  for (auto [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"kostka", "p-Kostka table K = dim L(lambda)_mu"},
           {"decomp", "decomposition matrix [Delta(lambda):L(mu)]"},
           {"simple", "dominant characters of simple modules"},
           {"hom", "dim Hom(Delta(lambda), Delta(mu))"},
           {"verify", "row/column cut factorisation"},
           {"enumerate", "partitions, or semistandard tableaux of shape lambda and weight mu"},
           {"selfcheck", "relations, divided powers, Murphy unimodularity, census"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&job, name = name] { job.command = name; });
    if (name == "simple" || name == "verify" || name == "enumerate")
      sub->add_option("--lambda", job.lambda, "partition, comma separated");
    if (name == "verify" || name == "enumerate") sub->add_option("--mu", job.mu, "partition, comma separated");
    if (name == "verify") {
      sub->add_option("--row", job.row, "row cut r");
      sub->add_option("--col", job.col, "column cut c");
      sub->add_option("--n-max", job.n_max, "sweep bound on n")->capture_default_str();
      sub->add_option("--d-max", job.d_max, "sweep bound on d")->capture_default_str();
      sub->add_flag("--psi", job.psi, "include psi-equivariance windows (n <= 5)");
    }
    if (name == "hom") sub->add_flag("--same-lambda", job.same_lambda, "only the diagonal End(Delta(lambda))");
    if (name == "selfcheck")
      sub->add_option("--block-budget", job.block_budget, "largest Murphy block checked for unimodularity")
          ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (job.command == "verify") return cmd_verify(job);
    if (job.command == "enumerate") return cmd_enumerate(job);
    if (job.command == "selfcheck") return cmd_selfcheck(job);
    return cmd_table(job);
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kBudget;
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
