#include <gtest/gtest.h>

#include <random>

#include <schurcut/report.hpp>

using namespace schurcut;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("schurcut_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

}  // namespace

TEST(Table, JsonShapeAndRoundTrip) {
  const auto t = kostka_table(2, 2, 2);
  const json j = to_json(t);
  EXPECT_EQ(j.dump(),
            R"({"n":2,"d":2,"p":2,"kind":"kostka_p","entries":[)"
            R"({"lambda":[2],"mu":[2],"value":1},{"lambda":[2],"mu":[1,1],"value":0},)"
            R"({"lambda":[1,1],"mu":[2],"value":0},{"lambda":[1,1],"mu":[1,1],"value":1}]})");
  const auto back = table_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Table, CsvMirrorsJson) {
  const auto t = decomp_table(3, 3, 3);
  const auto csv = to_csv_rows(t);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), t.entries.size());
  EXPECT_NE(csv.find("decomp,3,3,3,2 1,1 1 1,1\n"), std::string::npos);
  EXPECT_EQ(std::string(kTableCsvHeader), "kind,n,d,p,lambda,mu,value");
}

TEST(Table, KostkaDiagonalAndSemisimple) {
  for (Int p : {2, 3, 7}) {
    const auto t = kostka_table(5, 3, p);
    for (auto& e : t.entries) {
      if (e.lambda == e.mu) {
        EXPECT_EQ(e.value, 1);
      }
      if (!dominates(e.lambda, e.mu)) {
        EXPECT_EQ(e.value, 0);
      }
      if (p > 5) {
        EXPECT_EQ(e.value, static_cast<Int>(classical_kostka(e.lambda, Composition(e.mu.parts))));
      }
    }
  }
}

TEST(Table, SimpleCharacterSumsMatchDecomposition) {
  // sum_mu [Delta(lambda):L(mu)] dim L(mu)_nu = |SStd(lambda, nu)|
  const int n = 4, d = 3;
  for (Int p : {2, 3}) {
    const auto dec = decomp_table(n, d, p);
    const auto sim = simple_table(n, d, p);
    std::map<std::pair<Partition, Partition>, Int> L, D;
    for (auto& e : sim.entries) L[{e.lambda, e.mu}] = e.value;
    for (auto& e : dec.entries) D[{e.lambda, e.mu}] = e.value;
    for (auto& lam : enumerate_partitions(n, d))
      for (auto& nu : enumerate_partitions(n, d)) {
        Int sum = 0;
        for (auto& mu : enumerate_partitions(n, d)) sum += D[{lam, mu}] * L[{mu, nu}];
        EXPECT_EQ(sum, static_cast<Int>(classical_kostka(lam, Composition(nu.parts))));
      }
  }
}

TEST(Table, HomSameLambdaIsOne) {
  const auto t = hom_table(4, 3, 2, true);
  EXPECT_EQ(t.entries.size(), enumerate_partitions(4, 3).size());
  for (auto& e : t.entries) EXPECT_EQ(e.value, 1);
}

TEST(Budget, Estimates) {
  EXPECT_EQ(tensor_words(5, 3), 243u);
  EXPECT_EQ(largest_block(4, 2), 6u);
  EXPECT_EQ(largest_block(6, 3), 90u);
  EXPECT_THROW(check_table_budget("hom", 10, 4, kDefaultBudget), BudgetExceeded);
  EXPECT_NO_THROW(check_table_budget("kostka_p", 10, 4, kDefaultBudget));
  EXPECT_THROW(check_table_budget("kostka_p", 12, 12, kDefaultBudget), BudgetExceeded);
}

TEST(CutReportJson, Fields) {
  auto r = verify_row_kostka(Partition{5, 2, 2, 1}, Partition{4, 3, 2, 1}, 2, 2);
  EXPECT_EQ(to_json(r).dump(),
            R"({"kind":"row","lambda":[5,2,2,1],"mu":[4,3,2,1],"cut":2,"p":2,"lhs":1,"rhs":[1,1],"status":"pass"})");
  EXPECT_EQ(to_csv_row(r), "row,5 2 2 1,4 3 2 1,2,2,1,1 1,pass\n");
}

TEST(RelationJson, WitnessOnlyOnFailure) {
  EXPECT_EQ(to_json(RelationResult{"R1", "n=2,d=2", true, "", 4}).dump(),
            R"({"relation":"R1","parameters":"n=2,d=2","status":"pass"})");
  EXPECT_EQ(to_json(RelationResult{"R1", "n=2,d=2", false, "w=12", 4}).dump(),
            R"({"relation":"R1","parameters":"n=2,d=2","status":"fail","witness":"w=12"})");
}

TEST(Cache, RoundTripAndKeys) {
  ResultCache cache(scratch("roundtrip"));
  const auto key = cache_key("simple", 3, 3, 3, {{"l", "[2,1]"}});
  EXPECT_EQ(key, "simple_n3_d3_p3_l[2,1]");
  EXPECT_FALSE(cache.load(key));
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return to_json(simple_table(3, 3, 3, Partition{2, 1}));
  };
  const auto cold = cache.get_or_compute(key, compute);
  const auto warm = cache.get_or_compute(key, compute);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(cold.dump(), warm.dump());
  EXPECT_TRUE(std::filesystem::exists(cache.path_for(key)));
  for (auto& f : std::filesystem::directory_iterator(cache.dir()))
    EXPECT_EQ(f.path().extension(), ".json") << f.path();
}

TEST(Cache, CorruptOrForeignEntriesAreMisses) {
  ResultCache cache(scratch("corrupt"));
  std::filesystem::create_directories(cache.dir());
  std::ofstream(cache.path_for("a")) << "{not json";
  EXPECT_FALSE(cache.load("a"));
  std::ofstream(cache.path_for("b")) << R"({"key":"b","engine_version":"old","payload":1})";
  EXPECT_FALSE(cache.load("b"));
  cache.store("c", json{{"x", 1}});
  EXPECT_EQ(cache.load("c")->dump(), R"({"x":1})");
}

TEST(Grid, TensorGridRespectsBudget) {
  const auto grid = tensor_grid(100000);
  for (auto [n, d] : grid) EXPECT_LE(tensor_words(n, d), 100000u);
  auto has = [&](int n, int d) { return std::find(grid.begin(), grid.end(), std::pair{n, d}) != grid.end(); };
  EXPECT_TRUE(has(8, 2));
  EXPECT_TRUE(has(7, 3));
  EXPECT_TRUE(has(10, 3));
  EXPECT_FALSE(has(11, 3));
  EXPECT_TRUE(has(16, 2));  // word packing stops here
}

TEST(Selfcheck, SmallBudgetAllPass) {
  SelfcheckOptions opt;
  opt.budget = 81;
  const auto rep = selfcheck(opt);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.passed, 0u);
  for (auto& line : rep.lines) EXPECT_NE(line.at("status"), "fail") << line.dump();
}

TEST(Selfcheck, CensusValues) {
  EXPECT_TRUE(census_check(4, 2).pass);
  EXPECT_EQ(codeterminant_census(4, 2), 35u);
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(codeterminant_census(1, d), static_cast<std::uint64_t>(d * d));
}

TEST(Unimodular, RandomProductsOfElementaryMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    IntMatrix a = IntMatrix::identity(n);
    for (int step = 0; step < 12 && n > 1; ++step) {
      const std::size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      const Int q = static_cast<Int>(rng() % 5) - 2;
      for (std::size_t c = 0; c < n; ++c) a(i, c) += q * a(j, c);
    }
    if (rng() % 2 && n > 1)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(0, c), a(n - 1, c));
    const auto inv = unimodular_inverse(a);
    ASSERT_EQ(std::llabs(inv.determinant), 1);
    EXPECT_EQ(product(a, inv.inverse), IntMatrix::identity(n));
    EXPECT_EQ(product(inv.inverse, a), IntMatrix::identity(n));
  }
}

TEST(Unimodular, DeterminantOfNonUnimodular) {
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 2;
  EXPECT_EQ(unimodular_inverse(a).determinant, 3);
  IntMatrix z(2, 2);
  z(0, 0) = 1;
  z(1, 0) = 1;
  EXPECT_EQ(unimodular_inverse(z).determinant, 0);
}
