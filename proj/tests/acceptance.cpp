// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact integer comparisons.

#include <chrono>
#include <cstdio>
#include <functional>

#include <schurcut/report.hpp>

using namespace schurcut;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %2d %s (%s; %.1f s)\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !out.ok;
}

TensorVector words(int n, int d, const std::vector<std::pair<std::string, Int>>& terms) {
  TensorVector v(n, d);
  for (auto& [s, c] : terms) {
    std::vector<int> letters;
    for (char ch : s) letters.push_back(ch - '0');
    v.add(encode_word(letters), c);
  }
  return v;
}

// Collects mismatches, keeping the first few as the reported detail.
struct Tally {
  std::size_t checks = 0, bad = 0;
  std::string first;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (bad++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  Outcome outcome() const {
    return {bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " mismatches" +
                          (first.empty() ? "" : ": " + first)};
  }
};

Outcome relation_outcome(const std::vector<RelationResult>& results) {
  Tally t;
  for (auto& r : results) t.expect(r.pass, r.relation + " " + r.parameters + " " + r.witness);
  auto o = t.outcome();
  std::size_t words_checked = 0;
  for (auto& r : results) words_checked += r.checks;
  o.detail += ", " + std::to_string(words_checked) + " word evaluations";
  return o;
}

Outcome sweep_outcome(const SweepReport& rep) {
  std::string detail = std::to_string(rep.passed) + " pass, " + std::to_string(rep.failed) + " fail, " +
                       std::to_string(rep.skipped) + " skipped";
  for (auto& r : rep.reports)
    if (r.status == CutStatus::Fail) {
      detail += "; first failure " + r.kind + " " + to_string(r.lambda) + " " + to_string(r.mu) + " cut " +
                std::to_string(r.cut) + " p=" + std::to_string(r.p);
      break;
    }
  return {rep.failed == 0 && rep.passed > 0, detail};
}

}  // namespace

int main() {
  const auto grid = tensor_grid(kDefaultBudget);

  criterion(1, "relations R1-R6 and commutators on tensor space, d^n <= 100000", [&] {
    std::vector<RelationResult> all;
    for (auto [n, d] : grid)
      for (auto& r : check_relations(n, d)) all.push_back(r);
    auto o = relation_outcome(all);
    o.detail += ", " + std::to_string(grid.size()) + " (n,d) pairs";
    return o;
  });

  criterion(2, "divided powers: subset formula equals e^m/m! over Q, m <= 4", [&] {
    std::vector<RelationResult> all;
    for (auto [n, d] : grid)
      for (auto& r : divided_power_consistency(n, d, 4)) all.push_back(r);
    return relation_outcome(all);
  });

  criterion(3, "Murphy blocks unimodular over Z, n <= 7, d <= 3", [] {
    Tally t;
    for (int n = 1; n <= 7; ++n)
      for (int d = 1; d <= 3; ++d) {
        MurphyBasis basis(n, d);
        for (auto& mu : enumerate_compositions(n, d)) {
          const auto& b = basis.block(mu);
          t.expect(std::llabs(b.determinant) == 1, "det " + to_string(mu));
          // the stored inverse really inverts the block
          bool inverse_ok = true;
          for (std::size_t i = 0; i < b.labels.size() && inverse_ok; ++i)
            for (std::size_t j = 0; j < b.labels.size(); ++j) {
              Int s = 0;
              for (std::size_t k = 0; k < b.words.size(); ++k) s += b.inverse(i, k) * b.basis(k, j);
              if (s != (i == j)) inverse_ok = false;
            }
          t.expect(inverse_ok, "inverse " + to_string(mu));
        }
      }
    return t.outcome();
  });

  criterion(4, "codeterminant census equals binomial(d^2+n-1, n), n <= 8, d <= 4", [] {
    Tally t;
    for (int n = 1; n <= 8; ++n)
      for (int d = 1; d <= 4; ++d) {
        // independent count: sum over shapes of (number of semistandard tableaux)^2
        std::uint64_t census = 0;
        for (auto& lam : enumerate_partitions(n, d)) {
          std::uint64_t c = 0;
          for (auto& w : enumerate_compositions(n, d)) c += enumerate_sstd(lam, w).size();
          census += c * c;
        }
        t.expect(census == binomial(d * d + n - 1, n), "n=" + std::to_string(n) + ",d=" + std::to_string(d));
        t.expect(codeterminant_census(n, d) == census, "library census n=" + std::to_string(n));
      }
    return t.outcome();
  });

  criterion(5, "displayed values: Murphy vectors, rho examples, xi word, windows, tableau split", [] {
    Tally t;
    Tableau S{{1, 1}, {2, 2}}, T{{1, 1, 2}, {2}}, U{{1, 1, 2, 2}};
    Tableau s1{{1, 2}, {3, 4}}, s2{{1, 3}, {2, 4}};
    Tableau t1{{1, 2, 3}, {4}}, t2{{1, 2, 4}, {3}}, t3{{1, 3, 4}, {2}}, u{{1, 2, 3, 4}};
    std::size_t space = 0;
    for (auto& w : enumerate_compositions(4, 2)) space += words_of_weight(w).size();
    t.expect(space == 16 && words_of_weight(Composition({2, 2})).size() == 6, "16-dimensional space");
    t.expect(rho(S, s1, 2) == words(4, 2, {{"1122", 1}}), "rho S s1");
    t.expect(rho(S, s2, 2) == words(4, 2, {{"1212", 1}}), "rho S s2");
    t.expect(rho(T, t1, 2) == words(4, 2, {{"1122", 1}, {"1212", 1}, {"2112", 1}}), "rho T t1");
    t.expect(rho(T, t2, 2) == words(4, 2, {{"1122", 1}, {"1221", 1}, {"2121", 1}}), "rho T t2");
    t.expect(rho(T, t3, 2) == words(4, 2, {{"1212", 1}, {"1221", 1}, {"2211", 1}}), "rho T t3");
    t.expect(rho(U, u, 2) ==
                 words(4, 2, {{"1122", 1}, {"1212", 1}, {"1221", 1}, {"2112", 1}, {"2121", 1}, {"2211", 1}}),
             "rho U u");
    t.expect(murphy_block(Composition({2, 2}), 2).size() == 6, "six vectors of weight (2,2)");

    t.expect(rho(Tableau{{1, 1, 3}, {2, 2}}, initial_standard({3, 2}), 3) ==
                 words(5, 3, {{"11322", 1}, {"13122", 1}, {"31122", 1}}),
             "three-term rho");
    t.expect(rho_sum(T, T, Composition({2, 2}), 2) ==
                 words(4, 2, {{"1212", 1}, {"2112", 1}, {"1221", 1}, {"2121", 1}, {"1122", 2}}),
             "rho_TT with coefficient 2");

    const auto xi = xi_word(Tableau{{1, 1, 3}, {2, 2, 4}}, Tableau{{1, 1, 2}, {3, 3, 4}}, 4);
    t.expect(xi.to_string() == "f^[1]_{1,3} f^[1]_{2,4} 1_(3,3,0,0) e^[1]_{2,4} e^[2]_{2,3} e^[1]_{1,2}",
             "xi word " + xi.to_string());

    t.expect(lambda_set(10, 4, {2, 2, 7}) == std::vector<Partition>{{5, 2, 2, 1}, {4, 3, 2, 1}}, "Lambda(2,2,7)");
    const auto [s10, g10] = sigma_gamma(10, 4, {2, 2, 7});
    t.expect(s10 == Partition{5, 2, 2, 1} && g10 == Partition{4, 3, 2, 1}, "sigma/gamma (2,2,7)");
    const auto six = lambda_set(11, 5, {3, 2, 9});
    const std::set<Partition> want{{5, 2, 2, 2}, {4, 3, 2, 2}, {3, 3, 3, 2},
                                   {5, 2, 2, 1, 1}, {4, 3, 2, 1, 1}, {3, 3, 3, 1, 1}};
    t.expect(six.size() == 6 && std::set<Partition>(six.begin(), six.end()) == want, "Lambda(3,2,9)");
    const auto [s11, g11] = sigma_gamma(11, 5, {3, 2, 9});
    t.expect(s11 == Partition{5, 2, 2, 2} && g11 == Partition{3, 3, 3, 1, 1}, "sigma/gamma (3,2,9)");

    Tableau fig{{1, 1, 1, 1, 1, 2, 3}, {2, 2, 2, 2, 3}, {3, 3, 3}, {4, 4, 5}, {5, 6}, {6}};
    const auto [top, bottom] = split_tableau(fig, 3, 3);
    t.expect(top == Tableau{{1, 1, 1, 1, 1, 2, 3}, {2, 2, 2, 2, 3}, {3, 3, 3}}, "split top");
    t.expect(bottom == Tableau{{1, 1, 2}, {2, 3}, {3}}, "split bottom");
    return t.outcome();
  });

  criterion(6, "p=7 > n: p-Kostka is classical and decomposition matrix is the identity, n <= 6, d <= 3", [] {
    Tally t;
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= 3; ++d) {
        const auto parts = enumerate_partitions(n, d);
        for (auto& lam : parts)
          for (auto& mu : parts) {
            const auto sstd = static_cast<Int>(enumerate_sstd(lam, Composition(mu.parts)).size());
            t.expect(kostka_p(mu, lam, 7, d) == sstd, "K " + to_string(mu) + " " + to_string(lam));
          }
        const auto dm = EngineRegistry::global().get(n, d).decomposition_matrix(7);
        t.expect(dm.entries == IntMatrix::identity(parts.size()), "decomposition n=" + std::to_string(n));
      }
    return t.outcome();
  });

  SweepOptions base;
  base.n_max = 6;
  base.d_max = 3;
  base.primes = {2, 3};
  base.rows = base.cols = base.decomp = base.hom = base.psi = false;

  criterion(7, "row cuts: K = K(top) K(bottom), n <= 6, d <= 3, p in {2,3}", [&] {
    auto opt = base;
    opt.rows = true;
    return sweep_outcome(sweep(opt));
  });

  criterion(8, "column cuts: K = K(left) K(right), n <= 6, d <= 3, p in {2,3}", [&] {
    auto opt = base;
    opt.cols = true;
    return sweep_outcome(sweep(opt));
  });

  criterion(9, "decomposition numbers and Hom dimensions factor across row cuts, same grid", [&] {
    auto opt = base;
    opt.decomp = opt.hom = true;
    const auto rep = sweep(opt);
    auto o = sweep_outcome(rep);
    std::size_t dec = 0, hom = 0;
    for (auto& r : rep.reports)
      if (r.status == CutStatus::Pass) (r.kind == "hom" ? hom : dec) += 1;
    o.ok = o.ok && dec > 0 && hom > 0;
    o.detail += ", decomp " + std::to_string(dec) + " / hom " + std::to_string(hom) + " passing";
    return o;
  });

  criterion(10, "psi(g x) = phi(g) psi(x) on truncated Sym^mu, n <= 5, d <= 3, p in {2,3}", [&] {
    auto opt = base;
    opt.psi = true;
    opt.psi_n_max = 5;
    opt.n_max = 5;
    const auto rep = sweep(opt);
    auto o = sweep_outcome(rep);
    std::size_t checks = 0;
    for (auto& r : rep.reports) {
      unsigned long c = 0, f = 0;
      if (std::sscanf(r.detail.c_str(), "checks=%lu failures=%lu", &c, &f) == 2) checks += c;
    }
    o.ok = o.ok && checks > 0;
    o.detail += ", " + std::to_string(checks) + " generator/basis checks";
    return o;
  });

  criterion(11, "symmetric groups: dim D(2,1) = 1 at p=3, dim D(lambda) = |Std(lambda)| for p > n, n <= 5", [] {
    Tally t;
    t.expect(dim_simple_symmetric(Partition{2, 1}, 3) == 1, "D(2,1) at p=3");
    for (int n = 1; n <= 5; ++n)
      for (Int p : {7, 11})
        for (auto& lam : enumerate_partitions(n, n))
          t.expect(dim_simple_symmetric(lam, p) == static_cast<Int>(enumerate_std(lam).size()),
                   "D" + to_string(lam) + " p=" + std::to_string(p));
    return t.outcome();
  });

  return failures ? 1 : 0;
}
