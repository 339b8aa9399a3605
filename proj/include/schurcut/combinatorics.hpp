#pragma once

// Partitions, compositions, dominance, tableaux and the row-cut windows
// Lambda+_{n,d}(r,c,m) with their extremal elements.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurcut {

/// A weight: fixed-length sequence of non-negative integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("composition: negative part");
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

  auto operator<=>(const Composition&) const = default;
};

/// Weakly decreasing sequence; canonical form has no trailing zeros.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) throw std::invalid_argument("partition: negative part");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("partition: parts not weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  bool empty() const { return parts.empty(); }

  /// Zero-padded to length d (d must be at least length()).
  Composition padded(int d) const {
    if (d < length()) throw std::invalid_argument("partition: longer than d");
    std::vector<int> v(parts);
    v.resize(static_cast<std::size_t>(d), 0);
    return Composition(std::move(v));
  }

  auto operator<=>(const Partition&) const = default;
};

inline Partition sorted_partition(const Composition& c) {
  std::vector<int> v(c.parts);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

inline bool is_partition(const Composition& c) {
  return std::is_sorted(c.parts.begin(), c.parts.end(), std::greater<>());
}

inline std::string to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}
inline std::string to_string(const Partition& p) { return to_string(p.parts); }
inline std::string to_string(const Composition& c) { return to_string(c.parts); }
inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts)
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

namespace detail {
inline bool partial_sums_dominate(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}
}  // namespace detail

/// lambda dominates mu (pulled back to compositions by sorting).
inline bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominates: size mismatch");
  return detail::partial_sums_dominate(lambda.parts, mu.parts);
}
inline bool dominates(const Composition& lambda, const Composition& mu) {
  return dominates(sorted_partition(lambda), sorted_partition(mu));
}

/// Partitions of n with at most d parts, lexicographically descending.
inline std::vector<Partition> enumerate_partitions(int n, int d) {
  std::vector<Partition> out;
  if (n < 0 || d < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == d) return;
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Compositions of n of length exactly d, lexicographically descending.
inline std::vector<Composition> enumerate_compositions(int n, int d) {
  std::vector<Composition> out;
  if (n < 0 || d < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (static_cast<int>(cur.size()) == d - 1) {
      cur.push_back(rest);
      out.emplace_back(cur);
      cur.pop_back();
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur.push_back(k);
      rec(rest - k);
      cur.pop_back();
    }
  };
  if (d == 0) {
    if (n == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(n);
  return out;
}

// ---------------------------------------------------------------------------
// Cuts

inline std::pair<Partition, Partition> row_cut(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("row_cut: negative r");
  std::vector<int> top, bottom;
  for (int i = 0; i < lambda.length(); ++i)
    (i < r ? top : bottom).push_back(lambda.parts[static_cast<std::size_t>(i)]);
  return {Partition(top), Partition(bottom)};
}

inline std::pair<Partition, Partition> col_cut(const Partition& lambda, int c) {
  if (c < 0) throw std::invalid_argument("col_cut: negative c");
  std::vector<int> left, right;
  for (int x : lambda.parts) {
    left.push_back(std::min(x, c));
    right.push_back(std::max(x - c, 0));
  }
  return {Partition(left), Partition(right)};
}

inline int top_size(const Partition& lambda, int r) {
  int s = 0;
  for (int i = 0; i < std::min(r, lambda.length()); ++i) s += lambda.parts[static_cast<std::size_t>(i)];
  return s;
}

inline bool admits_row_cut(const Partition& lambda, const Partition& mu, int r) {
  return top_size(lambda, r) == top_size(mu, r);
}

inline bool admits_col_cut(const Partition& lambda, const Partition& mu, int c) {
  return col_cut(lambda, c).first.size() == col_cut(mu, c).first.size();
}

/// The window (r, c, m) of Lambda+_{n,d}(r,c,m).
struct CutWindow {
  int r = 0;
  int c = 0;
  int m = 0;
  auto operator<=>(const CutWindow&) const = default;
};

inline bool in_window(const Partition& lambda, int d, const CutWindow& w) {
  if (lambda.length() > d || w.r > d) return false;
  if (w.r == 0) return w.m == 0 && lambda[0] <= w.c;
  return lambda[static_cast<std::size_t>(w.r - 1)] >= w.c &&
         w.c >= lambda[static_cast<std::size_t>(w.r)] && top_size(lambda, w.r) == w.m;
}

/// Composition membership in Lambda_{n,d}(r,c,m): top rows >= c >= bottom rows.
/// With c = 0 zero parts are allowed among the first r rows.
inline bool in_window(const Composition& lambda, const CutWindow& w) {
  if (w.r > lambda.length()) return false;
  int top = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    const int x = lambda.parts[static_cast<std::size_t>(i)];
    if (i < w.r) {
      if (x < w.c) return false;
      top += x;
    } else if (x > w.c) {
      return false;
    }
  }
  return top == w.m;
}

inline std::vector<Partition> lambda_set(int n, int d, const CutWindow& w) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n, d))
    if (in_window(p, d, w)) out.push_back(p);
  return out;
}

namespace detail {
/// Maximal element of Lambda+_{z,r}(0,c,0): rows of length c.
inline std::vector<int> alpha(int /*rows*/, int c, int z) {
  std::vector<int> v;
  if (z == 0) return v;
  if (c == 0) throw std::domain_error("alpha: empty window");
  for (int k = 0; k < z / c; ++k) v.push_back(c);
  if (z % c) v.push_back(z % c);
  return v;
}
/// Minimal element of Lambda+_{z,r}(0,c,0): columns of height r.
inline std::vector<int> zeta(int rows, int /*c*/, int z) {
  if (z == 0) return {};
  if (rows == 0) throw std::domain_error("zeta: empty window");
  std::vector<int> cols;
  for (int k = 0; k < z / rows; ++k) cols.push_back(rows);
  if (z % rows) cols.push_back(z % rows);
  return conjugate(Partition(cols)).parts;
}
inline std::vector<int> add_padded(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}
}  // namespace detail

/// Closed-form extremal elements (sigma, gamma) of Lambda+_{n,d}(r,c,m),
/// cross-checked against enumeration; throws if the set is empty or the
/// closed form disagrees with the enumerated maximum/minimum.
inline std::pair<Partition, Partition> sigma_gamma(int n, int d, const CutWindow& w) {
  const auto members = lambda_set(n, d, w);
  if (members.empty()) throw std::domain_error("sigma_gamma: empty window");

  std::vector<int> head(static_cast<std::size_t>(w.r), w.c);
  std::vector<int> s = head, g = head;
  const auto a = detail::alpha(d - w.r, w.c, n - w.m);
  const auto z = detail::zeta(d - w.r, w.c, n - w.m);
  s.insert(s.end(), a.begin(), a.end());
  g.insert(g.end(), z.begin(), z.end());
  const int excess = w.m - w.c * w.r;
  if (!s.empty()) s[0] += excess;
  g = detail::add_padded(g, detail::zeta(w.r, excess, excess));
  Partition sigma(s), gamma(g);

  for (const auto& mu : members) {
    if (!dominates(sigma, mu) || !dominates(mu, gamma))
      throw std::logic_error("sigma_gamma: closed form is not extremal for " + to_string(mu));
  }
  if (std::find(members.begin(), members.end(), sigma) == members.end() ||
      std::find(members.begin(), members.end(), gamma) == members.end())
    throw std::logic_error("sigma_gamma: closed form outside the window");
  return {sigma, gamma};
}

/// Saturated set Sigma+ = {mu : mu <= sigma}.
inline std::vector<Partition> sigma_set(int n, int d, const CutWindow& w) {
  const auto sigma = sigma_gamma(n, d, w).first;
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n, d))
    if (dominates(sigma, p)) out.push_back(p);
  return out;
}

/// Co-saturated set Gamma+ = {mu : mu >= gamma}.
inline std::vector<Partition> gamma_set(int n, int d, const CutWindow& w) {
  const auto gamma = sigma_gamma(n, d, w).second;
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n, d))
    if (dominates(p, gamma)) out.push_back(p);
  return out;
}

namespace detail {
inline Composition block_sorted(const Composition& c, int r) {
  std::vector<int> v(c.parts);
  const auto mid = v.begin() + std::min<std::ptrdiff_t>(r, static_cast<std::ptrdiff_t>(v.size()));
  std::sort(v.begin(), mid, std::greater<>());
  std::sort(mid, v.end(), std::greater<>());
  return Composition(std::move(v));
}
inline std::vector<Composition> block_permutations(const std::vector<Partition>& base, int n, int d, int r) {
  std::set<Partition> members(base.begin(), base.end());
  std::vector<Composition> out;
  for (auto& c : enumerate_compositions(n, d)) {
    const auto b = block_sorted(c, r);
    if (is_partition(b) && members.count(Partition(b.parts))) out.push_back(c);
  }
  return out;
}
}  // namespace detail

/// Compositions obtained from Sigma+ by permuting rows 1..r and rows r+1..d.
inline std::vector<Composition> sigma_compositions(int n, int d, const CutWindow& w) {
  return detail::block_permutations(sigma_set(n, d, w), n, d, w.r);
}
/// Compositions obtained from Gamma+ by permuting rows 1..r and rows r+1..d.
inline std::vector<Composition> gamma_compositions(int n, int d, const CutWindow& w) {
  return detail::block_permutations(gamma_set(n, d, w), n, d, w.r);
}

/// Top and bottom halves of a pair in a window, with the dominance
/// equivalence lambda >= mu <=> (top >= top and bottom >= bottom) asserted.
struct SplitPair {
  Partition lambda_top, mu_top, lambda_bottom, mu_bottom;
};

inline SplitPair split_partition_pair(const Partition& lambda, const Partition& mu, int d,
                                      const CutWindow& w) {
  if (!in_window(lambda.padded(std::max(d, lambda.length())), w) ||
      !in_window(mu.padded(std::max(d, mu.length())), w))
    throw std::invalid_argument("split_partition_pair: pair not in window");
  auto [lt, lb] = row_cut(lambda, w.r);
  auto [mt, mb] = row_cut(mu, w.r);
  const bool whole = dominates(lambda, mu);
  const bool halves = dominates(lt, mt) && dominates(lb, mb);
  if (whole != halves) throw std::logic_error("split_partition_pair: dominance not preserved");
  return {lt, mt, lb, mb};
}

// ---------------------------------------------------------------------------
// Tableaux

struct Tableau {
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }
  Tableau(std::initializer_list<std::vector<int>> r) : Tableau(std::vector<std::vector<int>>(r)) {}

  Partition shape() const {
    std::vector<int> s;
    for (auto& row : rows) s.push_back(static_cast<int>(row.size()));
    return Partition(s);
  }
  int size() const {
    int s = 0;
    for (auto& row : rows) s += static_cast<int>(row.size());
    return s;
  }
  int max_entry() const {
    int m = 0;
    for (auto& row : rows)
      for (int x : row) m = std::max(m, x);
    return m;
  }
  /// Content vector of length d.
  Composition weight(int d) const {
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    for (auto& row : rows)
      for (int x : row) {
        if (x < 1 || x > d) throw std::invalid_argument("tableau: entry out of range");
        ++w[static_cast<std::size_t>(x - 1)];
      }
    return Composition(std::move(w));
  }
  /// Entries read left to right along successive rows.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
  }

  auto operator<=>(const Tableau&) const = default;
};

inline std::string to_string(const Tableau& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) s += (i ? "," : "") + to_string(t.rows[i]);
  return s + "]";
}

inline bool is_semistandard(const Tableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0 && t.rows[i].size() > t.rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j > 0 && t.rows[i][j] < t.rows[i][j - 1]) return false;
      if (i > 0 && t.rows[i][j] <= t.rows[i - 1][j]) return false;
    }
  }
  return true;
}

/// The superstandard tableau T^lambda: row i filled with i.
inline Tableau superstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < lambda.length(); ++i)
    rows.emplace_back(static_cast<std::size_t>(lambda.parts[static_cast<std::size_t>(i)]), i + 1);
  return Tableau(rows);
}

/// The row-reading standard tableau t^lambda.
inline Tableau initial_standard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int len : lambda.parts) {
    std::vector<int> row;
    for (int j = 0; j < len; ++j) row.push_back(k++);
    rows.push_back(row);
  }
  return Tableau(rows);
}

inline Composition omega(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

/// All semistandard lambda-tableaux of weight mu, built by adding one
/// horizontal strip per entry value. Deterministic order.
inline std::vector<Tableau> enumerate_sstd(const Partition& lambda, const Composition& mu) {
  std::vector<Tableau> out;
  if (lambda.size() != mu.size()) return out;
  const int len = lambda.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(len));
  // rows[i].size() is the current filled length of row i
  std::function<void(int)> place_value;
  std::function<void(int, int, int)> strip = [&](int value, int row, int remaining) {
    if (row == len) {
      if (remaining == 0) place_value(value + 2);
      return;
    }
    if (row > value) {  // entries in row i (0-based) are >= i+1
      if (remaining == 0) place_value(value + 2);
      return;
    }
    const int cur = static_cast<int>(rows[static_cast<std::size_t>(row)].size());
    // horizontal strip: may extend row up to previous row's length before this value
    const int cap_shape = lambda.parts[static_cast<std::size_t>(row)] - cur;
    int cap_strip = cap_shape;
    if (row > 0) {
      // cannot place under a cell holding the same value or empty
      int above = 0;
      for (int x : rows[static_cast<std::size_t>(row - 1)])
        if (x < value + 1) ++above;
      cap_strip = std::min(cap_strip, above - cur);
    }
    for (int k = std::min(cap_strip, remaining); k >= 0; --k) {
      auto& r = rows[static_cast<std::size_t>(row)];
      for (int j = 0; j < k; ++j) r.push_back(value + 1);
      strip(value, row + 1, remaining - k);
      r.resize(static_cast<std::size_t>(cur));
    }
  };
  place_value = [&](int value) {
    if (value > mu.length()) {
      for (int i = 0; i < len; ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != lambda.parts[static_cast<std::size_t>(i)])
          return;
      out.emplace_back(rows);
      return;
    }
    strip(value - 1, 0, mu.parts[static_cast<std::size_t>(value - 1)]);
  };
  place_value(1);
  return out;
}

inline std::size_t classical_kostka(const Partition& lambda, const Composition& mu) {
  return enumerate_sstd(lambda, mu).size();
}

inline std::vector<Tableau> enumerate_std(const Partition& lambda) {
  return enumerate_sstd(lambda, omega(lambda.size()));
}

/// T(i,j): number of entries j in row i (1-based, returned as d x d matrix
/// indexed [i-1][j-1]).
inline std::vector<std::vector<int>> entry_counts(const Tableau& t, int d) {
  if (!is_semistandard(t)) throw std::invalid_argument("entry_counts: tableau not semistandard");
  std::vector<std::vector<int>> out(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), 0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (int x : t.rows[i]) {
      if (x < 1 || x > d || static_cast<int>(i) >= d) throw std::invalid_argument("entry_counts: entry out of range");
      ++out[i][static_cast<std::size_t>(x - 1)];
    }
  return out;
}

/// mu(t): replace entry i of t by the row of i in t^mu. nullopt when the
/// result is not semistandard.
inline std::optional<Tableau> mu_of_t(const Tableau& t, const Composition& mu) {
  std::vector<int> row_of(static_cast<std::size_t>(mu.size()) + 1, 0);
  int k = 1;
  for (int r = 0; r < mu.length(); ++r)
    for (int j = 0; j < mu.parts[static_cast<std::size_t>(r)]; ++j) row_of[static_cast<std::size_t>(k++)] = r + 1;
  Tableau out = t;
  for (auto& row : out.rows)
    for (int& x : row) {
      if (x < 1 || x > mu.size()) throw std::invalid_argument("mu_of_t: entry out of range");
      x = row_of[static_cast<std::size_t>(x)];
    }
  if (!is_semistandard(out)) return std::nullopt;
  return out;
}

/// [t]_mu as the set of standard s with mu(s) = T.
inline std::vector<Tableau> orbit(const Tableau& T, const Composition& mu) {
  std::vector<Tableau> out;
  for (auto& s : enumerate_std(T.shape())) {
    auto img = mu_of_t(s, mu);
    if (img && *img == T) out.push_back(s);
  }
  return out;
}

/// Split a tableau at row r: top rows kept, bottom rows have entries shifted
/// down by `shift` (r for semistandard, m for standard tableaux).
inline std::pair<Tableau, Tableau> split_tableau(const Tableau& s, int r, int shift) {
  std::vector<std::vector<int>> top, bottom;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if (static_cast<int>(i) < r) {
      for (int x : s.rows[i])
        if (x > shift) throw std::invalid_argument("split_tableau: top entry below the cut");
      top.push_back(s.rows[i]);
    } else {
      std::vector<int> row;
      for (int x : s.rows[i]) {
        if (x <= shift) throw std::invalid_argument("split_tableau: bottom entry above the cut");
        row.push_back(x - shift);
      }
      bottom.push_back(row);
    }
  }
  return {Tableau(top), Tableau(bottom)};
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t multinomial(const Composition& mu) {
  std::uint64_t r = 1;
  int acc = 0;
  for (int x : mu.parts) {
    acc += x;
    r *= binomial(acc, x);
  }
  return r;
}

}  // namespace schurcut
