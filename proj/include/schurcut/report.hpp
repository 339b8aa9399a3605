#pragma once

// Result tables with their JSON/CSV forms. Also the file cache and the
// self-check driver used by the command line tool.
//
// Index dictionary: an entry {lambda, mu, value} of a "kostka_p" table is
// K = [Sym^mu : I(lambda)] = dim L(lambda)_mu, i.e. kostka_p(mu, lambda, p).
// "simple_char" uses the same orientation, "decomp" stores
// [Delta(lambda) : L(mu)] and "hom" stores dim Hom(Delta(lambda), Delta(mu)).

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cuts.hpp"
#include "repthy.hpp"
#include "schur_action.hpp"

namespace schurcut {

using json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "schurcut-1";
inline constexpr std::uint64_t kDefaultBudget = 100000;

struct TableEntry {
  Partition lambda, mu;
  Int value = 0;
};

struct ResultTable {
  int n = 0, d = 0;
  Int p = 0;
  std::string kind;  ///< kostka_p, decomp, simple_char, hom
  std::vector<TableEntry> entries;
};

/// Thrown when a job is larger than the configured budget.
struct BudgetExceeded : std::runtime_error {
  std::uint64_t estimate, budget;
  BudgetExceeded(const std::string& what, std::uint64_t est, std::uint64_t cap)
      : std::runtime_error(what + ": estimated cost " + std::to_string(est) + " exceeds budget " +
                           std::to_string(cap)),
        estimate(est),
        budget(cap) {}
};

inline std::uint64_t tensor_words(int n, int d) {
  std::uint64_t w = 1;
  for (int k = 0; k < n; ++k) {
    w *= static_cast<std::uint64_t>(d);
    if (w > (std::uint64_t{1} << 40)) break;
  }
  return w;
}

/// Largest weight space of (k^d)^{(x)n}, i.e. the biggest block a rank
/// computation may touch.
inline std::uint64_t largest_block(int n, int d) {
  std::uint64_t best = 1;
  for (auto& mu : enumerate_partitions(n, d)) best = std::max<std::uint64_t>(best, multinomial(Composition(mu.parts)));
  return best;
}

inline void check_table_budget(const std::string& kind, int n, int d, std::uint64_t budget) {
  if (kind == "hom") {
    if (auto w = tensor_words(n, d); w > budget) throw BudgetExceeded(kind, w, budget);
  } else if (auto b = largest_block(n, d); b > budget) {
    throw BudgetExceeded(kind, b, budget);
  }
}

// ---------------------------------------------------------------------------
// Tables

inline ResultTable kostka_table(int n, int d, Int p) {
  ResultTable t{n, d, p, "kostka_p", {}};
  const auto parts = enumerate_partitions(n, d);
  for (auto& lam : parts)
    for (auto& mu : parts) t.entries.push_back({lam, mu, kostka_p(mu, lam, p, d)});
  return t;
}

inline ResultTable decomp_table(int n, int d, Int p) {
  ResultTable t{n, d, p, "decomp", {}};
  const auto parts = enumerate_partitions(n, d);
  for (auto& lam : parts)
    for (auto& mu : parts) t.entries.push_back({lam, mu, decomposition_number(lam, mu, p, d)});
  return t;
}

/// Dominant-weight character of L(lambda); all lambda when none is given.
inline ResultTable simple_table(int n, int d, Int p, const std::optional<Partition>& only = std::nullopt) {
  ResultTable t{n, d, p, "simple_char", {}};
  const auto parts = enumerate_partitions(n, d);
  for (auto& lam : parts) {
    if (only && lam != *only) continue;
    for (auto& mu : parts)
      if (Int v = simple_weight_dim(lam, mu.padded(d), p)) t.entries.push_back({lam, mu, v});
  }
  return t;
}

inline ResultTable hom_table(int n, int d, Int p, bool same_lambda = false) {
  ResultTable t{n, d, p, "hom", {}};
  auto& engine = EngineRegistry::global().get(n, d);
  const auto parts = enumerate_partitions(n, d);
  for (auto& lam : parts)
    for (auto& mu : parts) {
      if (same_lambda && lam != mu) continue;
      t.entries.push_back({lam, mu, engine.hom_dim(lam, mu, p)});
    }
  return t;
}

// ---------------------------------------------------------------------------
// Serialization

inline json to_json(const Partition& x) { return json(x.parts); }

inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(const ResultTable& t) {
  json entries = json::array();
  for (auto& e : t.entries) entries.push_back({{"lambda", to_json(e.lambda)}, {"mu", to_json(e.mu)}, {"value", e.value}});
  return {{"n", t.n}, {"d", t.d}, {"p", t.p}, {"kind", t.kind}, {"entries", std::move(entries)}};
}

inline ResultTable table_from_json(const json& j) {
  ResultTable t{j.at("n").get<int>(), j.at("d").get<int>(), j.at("p").get<Int>(), j.at("kind").get<std::string>(), {}};
  for (auto& e : j.at("entries"))
    t.entries.push_back({partition_from_json(e.at("lambda")), partition_from_json(e.at("mu")), e.at("value").get<Int>()});
  return t;
}

/// Parts joined by spaces; the empty partition is an empty field.
inline std::string csv_partition(const Partition& x) {
  std::string s;
  for (std::size_t i = 0; i < x.parts.size(); ++i) s += (i ? " " : "") + std::to_string(x.parts[i]);
  return s;
}

inline const char* kTableCsvHeader = "kind,n,d,p,lambda,mu,value";

inline std::string to_csv_rows(const ResultTable& t) {
  std::ostringstream os;
  for (auto& e : t.entries)
    os << t.kind << ',' << t.n << ',' << t.d << ',' << t.p << ',' << csv_partition(e.lambda) << ','
       << csv_partition(e.mu) << ',' << e.value << '\n';
  return os.str();
}

inline json to_json(const CutReport& r) {
  json j = {{"kind", r.kind},       {"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)}, {"cut", r.cut},
            {"p", r.p},             {"lhs", r.lhs},                {"rhs", r.rhs},         {"status", to_string(r.status)}};
  if (r.kind == "psi") j["window"] = {r.window.r, r.window.c, r.window.m};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline const char* kCutCsvHeader = "kind,lambda,mu,cut,p,lhs,rhs,status";

inline std::string to_csv_row(const CutReport& r) {
  std::string rhs;
  for (std::size_t i = 0; i < r.rhs.size(); ++i) rhs += (i ? " " : "") + std::to_string(r.rhs[i]);
  std::ostringstream os;
  os << r.kind << ',' << csv_partition(r.lambda) << ',' << csv_partition(r.mu) << ',' << r.cut << ',' << r.p << ','
     << r.lhs << ',' << rhs << ',' << to_string(r.status) << '\n';
  return os.str();
}

inline json to_json(const RelationResult& r) {
  json j = {{"relation", r.relation}, {"parameters", r.parameters}, {"status", r.pass ? "pass" : "fail"}};
  if (!r.pass) j["witness"] = r.witness;
  return j;
}

// ---------------------------------------------------------------------------
// Self-check

struct SelfcheckOptions {
  std::uint64_t budget = kDefaultBudget;  ///< cap on d^n
  std::uint64_t block_budget = 1000;      ///< cap on a Murphy block for unimodularity
  int divided_bound = 4;
  int jobs = 1;
};

struct SelfcheckReport {
  std::vector<json> lines;  ///< {relation, parameters, status, witness?}
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }
};

/// Every Murphy weight block of (k^d)^{(x)n} has determinant +-1.
inline RelationResult murphy_unimodularity(int n, int d) {
  RelationResult r{"murphy_unimodular", "n=" + std::to_string(n) + ",d=" + std::to_string(d), true, "", 0};
  MurphyBasis basis(n, d);
  for (auto& mu : enumerate_compositions(n, d)) {
    ++r.checks;
    try {
      basis.block(mu);  // throws unless the block is unimodular
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = "weight " + to_string(mu) + ": " + e.what();
      break;
    }
  }
  return r;
}

inline RelationResult census_check(int n, int d) {
  const auto got = codeterminant_census(n, d);
  const auto want = binomial(d * d + n - 1, n);
  RelationResult r{"codeterminant_census", "n=" + std::to_string(n) + ",d=" + std::to_string(d), got == want, "", 1};
  if (!r.pass) r.witness = std::to_string(got) + " != " + std::to_string(want);
  return r;
}

/// Relations, divided powers, Murphy unimodularity and the census over every
/// (n, d) within budget. Grid points past the block budget are listed as
/// skipped for unimodularity, never dropped silently.
inline SelfcheckReport selfcheck(const SelfcheckOptions& opt) {
  SelfcheckReport rep;
  auto add = [&](const RelationResult& r) {
    rep.lines.push_back(to_json(r));
    r.pass ? ++rep.passed : ++rep.failed;
  };
  for (auto [n, d] : tensor_grid(opt.budget)) {
    for (auto& r : check_relations(n, d, opt.jobs)) add(r);
    for (auto& r : divided_power_consistency(n, d, opt.divided_bound, opt.jobs)) add(r);
    add(census_check(n, d));
    if (const auto block = largest_block(n, d); block <= opt.block_budget) {
      add(murphy_unimodularity(n, d));
    } else {
      rep.lines.push_back({{"relation", "murphy_unimodular"},
                           {"parameters", "n=" + std::to_string(n) + ",d=" + std::to_string(d)},
                           {"status", "skipped"},
                           {"reason", "weight block " + std::to_string(block) + " over block budget"}});
      ++rep.skipped;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cache

/// One JSON file per key. Writes go to a unique temporary file in the same
/// directory and are renamed into place; unreadable or stale entries count
/// as misses.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const std::string& key) const {
    std::string name;
    for (char ch : key) name += std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_' ? ch : '_';
    return dir_ / (name + ".json");
  }

  std::optional<json> load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
      json entry = json::parse(in);
      if (entry.at("key") != key || entry.at("engine_version") != kEngineVersion) return std::nullopt;
      return entry.at("payload");
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const json& payload) const {
    std::filesystem::create_directories(dir_);
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    json entry = {{"key", key},
                  {"engine_version", kEngineVersion},
                  {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                  {"payload", payload}};
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(std::random_device{}());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
      out << entry.dump() << '\n';
      if (!out.flush()) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }

  /// Cached payload for `key`, computing and storing it on a miss.
  template <class F>
  json get_or_compute(const std::string& key, F&& compute) const {
    if (auto hit = load(key)) return *hit;
    json payload = compute();
    store(key, payload);
    return payload;
  }

 private:
  std::filesystem::path dir_;
};

/// Canonical key: command, n, d, p, then extra parameters in the given order.
inline std::string cache_key(const std::string& command, int n, int d, Int p,
                             const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  std::string k = command + "_n" + std::to_string(n) + "_d" + std::to_string(d) + "_p" + std::to_string(p);
  for (auto& [name, value] : extra) k += "_" + name + value;
  return k;
}

}  // namespace schurcut
