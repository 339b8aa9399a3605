#pragma once

// Generators of the Schur algebra S(n,d) acting on tensor space: divided
// powers of raising/lowering operators and weight idempotents, the
// codeterminant words xi_{S lambda}, xi_{lambda T}, and exhaustive checks of
// the defining relations.

#include <atomic>
#include <functional>
#include <thread>
#include <variant>

#include "combinatorics.hpp"
#include "tensor_space.hpp"

namespace schurcut {

struct GeneratorSymbol {
  enum class Kind { Raise, Lower, Idem };
  Kind kind = Kind::Idem;
  int i = 0, j = 0, m = 0;  // Raise/Lower: 1 <= i < j <= d, m >= 1
  Composition weight;       // Idem only

  static GeneratorSymbol raise(int i, int j, int m) { return validated({Kind::Raise, i, j, m, {}}); }
  static GeneratorSymbol lower(int i, int j, int m) { return validated({Kind::Lower, i, j, m, {}}); }
  static GeneratorSymbol idem(Composition w) { return {Kind::Idem, 0, 0, 0, std::move(w)}; }

  /// The anti-automorphism *: swaps Raise and Lower, fixes idempotents.
  GeneratorSymbol star() const {
    GeneratorSymbol g = *this;
    if (kind == Kind::Raise) g.kind = Kind::Lower;
    else if (kind == Kind::Lower) g.kind = Kind::Raise;
    return g;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Raise: return "e^[" + std::to_string(m) + "]_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      case Kind::Lower: return "f^[" + std::to_string(m) + "]_{" + std::to_string(i) + "," + std::to_string(j) + "}";
      default: return "1_" + schurcut::to_string(weight);
    }
  }

  auto operator<=>(const GeneratorSymbol&) const = default;

 private:
  static GeneratorSymbol validated(GeneratorSymbol g) {
    if (g.i < 1 || g.j <= g.i || g.m < 1) throw std::invalid_argument("generator: need 1 <= i < j and m >= 1");
    return g;
  }
};

/// Symbols listed left to right as written; the rightmost acts first.
struct OperatorWord {
  std::vector<GeneratorSymbol> symbols;

  OperatorWord star() const {
    OperatorWord w;
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) w.symbols.push_back(it->star());
    return w;
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < symbols.size(); ++k) s += (k ? " " : "") + symbols[k].to_string();
    return s;
  }
  friend OperatorWord operator+(OperatorWord a, const OperatorWord& b) {
    a.symbols.insert(a.symbols.end(), b.symbols.begin(), b.symbols.end());
    return a;
  }
  bool operator==(const OperatorWord&) const = default;
};

namespace detail {
/// Replace every m-subset of positions holding `from` by `to`.
inline void replace_subsets(WordKey w, int n, int from, int to, int m, Int coeff, TensorVector& out) {
  int pos[kMaxTensorDegree];
  int count = 0;
  for (int k = 0; k < n; ++k)
    if (letter(w, n, k) == from) pos[count++] = k;
  if (m > count) return;
  int pick[kMaxTensorDegree];
  for (int k = 0; k < m; ++k) pick[k] = k;
  while (true) {
    WordKey x = w;
    for (int k = 0; k < m; ++k) x = with_letter(x, n, pos[pick[k]], to);
    out.add(x, coeff);
    int k = m - 1;
    while (k >= 0 && pick[k] == count - m + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int l = k + 1; l < m; ++l) pick[l] = pick[l - 1] + 1;
  }
}
inline void check_indices(int i, int j, int m, int d) {
  if (i < 1 || j <= i || j > d || m < 1) throw std::invalid_argument("generator indices out of range");
}
}  // namespace detail

/// e^{[m]}_{i,j}: sum over m-subsets of positions with letter j, replaced by i.
inline TensorVector apply_raise(int i, int j, int m, const TensorVector& v) {
  detail::check_indices(i, j, m, v.d());
  TensorVector out(v.n(), v.d(), v.modulus());
  for (auto& [w, c] : v.terms()) detail::replace_subsets(w, v.n(), j, i, m, c, out);
  return out;
}

/// f^{[m]}_{i,j}: sum over m-subsets of positions with letter i, replaced by j.
inline TensorVector apply_lower(int i, int j, int m, const TensorVector& v) {
  detail::check_indices(i, j, m, v.d());
  TensorVector out(v.n(), v.d(), v.modulus());
  for (auto& [w, c] : v.terms()) detail::replace_subsets(w, v.n(), i, j, m, c, out);
  return out;
}

/// 1_lambda: projection onto the weight-lambda space.
inline TensorVector apply_idem(const Composition& lambda, const TensorVector& v) {
  TensorVector out(v.n(), v.d(), v.modulus());
  if (lambda.length() != v.d()) return out;
  for (auto& [w, c] : v.terms()) {
    bool match = true;
    int counts[kMaxRank + 1] = {};
    for (int k = 0; k < v.n(); ++k) ++counts[letter(w, v.n(), k)];
    for (int a = 0; a < v.d() && match; ++a) match = counts[a + 1] == lambda.parts[static_cast<std::size_t>(a)];
    if (match) out.add(w, c);
  }
  return out;
}

inline TensorVector apply_symbol(const GeneratorSymbol& g, const TensorVector& v) {
  switch (g.kind) {
    case GeneratorSymbol::Kind::Raise: return apply_raise(g.i, g.j, g.m, v);
    case GeneratorSymbol::Kind::Lower: return apply_lower(g.i, g.j, g.m, v);
    default: return apply_idem(g.weight, v);
  }
}

inline TensorVector apply_word(const OperatorWord& word, TensorVector v) {
  for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it) {
    if (v.is_zero()) break;
    v = apply_symbol(*it, v);
  }
  return v;
}

/// xi_{lambda T}: raising word; rows i = d..1 left to right, within a row
/// columns j = d..1, skipping zero exponents and the diagonal.
inline OperatorWord xi_right_word(const Tableau& t, int d) {
  const auto counts = entry_counts(t, d);
  OperatorWord w;
  for (int i = d; i >= 1; --i)
    for (int j = d; j >= 1; --j) {
      const int e = counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (e == 0 || i == j) continue;
      w.symbols.push_back(GeneratorSymbol::raise(i, j, e));
    }
  return w;
}

/// xi_{S lambda} = (xi_{lambda S})^*: lowering word.
inline OperatorWord xi_left_word(const Tableau& s, int d) { return xi_right_word(s, d).star(); }

/// xi_{ST} = xi_{S lambda} 1_lambda xi_{lambda T}.
inline OperatorWord xi_word(const Tableau& s, const Tableau& t, int d) {
  if (s.shape() != t.shape()) throw std::invalid_argument("xi_word: shapes differ");
  OperatorWord mid;
  mid.symbols.push_back(GeneratorSymbol::idem(s.shape().padded(d)));
  return xi_left_word(s, d) + mid + xi_right_word(t, d);
}

// ---------------------------------------------------------------------------
// Verification

struct RelationResult {
  std::string relation;
  std::string parameters;
  bool pass = true;
  std::string witness;
  std::size_t checks = 0;
};

namespace detail {
/// Run body(word) over all d^n words on `jobs` threads; body returns an empty
/// string on success or a witness description. Reports the smallest failing
/// word so output is independent of thread count.
inline std::pair<std::size_t, std::string> for_all_words(int n, int d, int jobs,
                                                         const std::function<std::string(WordKey)>& body) {
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(d);
  jobs = std::max(1, jobs);
  std::vector<std::pair<std::size_t, std::string>> first_fail(static_cast<std::size_t>(jobs), {total, ""});
  auto worker = [&](int id) {
    for (std::size_t idx = static_cast<std::size_t>(id); idx < total; idx += static_cast<std::size_t>(jobs)) {
      std::vector<int> letters(static_cast<std::size_t>(n));
      std::size_t rest = idx;
      for (int k = n - 1; k >= 0; --k) {
        letters[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(d)) + 1;
        rest /= static_cast<std::size_t>(d);
      }
      auto msg = body(encode_word(letters));
      if (!msg.empty()) {
        first_fail[static_cast<std::size_t>(id)] = {idx, msg};
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < jobs; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& t : pool) t.join();
  auto best = *std::min_element(first_fail.begin(), first_fail.end(),
                                [](auto& a, auto& b) { return a.first < b.first; });
  return {total, best.second};
}

inline std::string word_string(WordKey w, int n) {
  std::string s;
  for (int k = 0; k < n; ++k) s += std::to_string(letter(w, n, k));
  return s;
}

inline Composition shifted(Composition c, int i, int delta) {  // c + delta * alpha_i (1-based i)
  c.parts[static_cast<std::size_t>(i - 1)] += delta;
  c.parts[static_cast<std::size_t>(i)] -= delta;
  return c;
}
inline bool in_range(const Composition& c) {
  return std::all_of(c.parts.begin(), c.parts.end(), [](int x) { return x >= 0; });
}
}  // namespace detail

/// Check R1-R6 and the commutator definitions of e_{i,j}, f_{i,j} as
/// operator identities on every elementary tensor of (k^d)^{(x)n}.
///
/// An idempotent acts on an elementary tensor by its weight, so for a word w
/// of weight lambda the identities indexed by weights other than lambda
/// reduce to: 1_mu w = 0 for mu != lambda (checked for every mu in R1), and
/// homogeneity of e w, f w (checked in R3-R6).
inline std::vector<RelationResult> check_relations(int n, int d, int jobs = 1) {
  const std::string params = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
  const auto weights = enumerate_compositions(n, d);
  std::vector<RelationResult> out;

  auto run = [&](const std::string& name, const std::function<std::string(WordKey)>& body) {
    auto [count, witness] = detail::for_all_words(n, d, jobs, body);
    out.push_back({name, params, witness.empty(), witness, count});
  };

  run("R1", [&](WordKey w) -> std::string {
    const auto v = TensorVector(n, d);
    TensorVector x(n, d);
    x.add(w, 1);
    const auto lambda = word_weight(w, n, d);
    TensorVector total(n, d);
    for (const auto& mu : weights) {
      const auto y = apply_idem(mu, x);
      total += y;
      if (!(mu == lambda ? y == x : y.is_zero()))
        return "1_" + to_string(mu) + " on " + detail::word_string(w, n);
      if (mu == lambda && !(apply_idem(mu, y) == y)) return "1_lambda not idempotent on " + detail::word_string(w, n);
    }
    if (!(total == x)) return "sum of idempotents differs from 1 on " + detail::word_string(w, n);
    (void)v;
    return {};
  });

  run("R2", [&](WordKey w) -> std::string {
    TensorVector x(n, d);
    x.add(w, 1);
    const auto lambda = word_weight(w, n, d);
    for (int i = 1; i < d; ++i)
      for (int j = 1; j < d; ++j) {
        auto lhs = apply_raise(i, i + 1, 1, apply_lower(j, j + 1, 1, x)) -
                   apply_lower(j, j + 1, 1, apply_raise(i, i + 1, 1, x));
        TensorVector rhs(n, d);
        if (i == j) rhs = (lambda[static_cast<std::size_t>(i - 1)] - lambda[static_cast<std::size_t>(i)]) * x;
        if (!(lhs == rhs))
          return "[e_" + std::to_string(i) + ",f_" + std::to_string(j) + "] on " + detail::word_string(w, n);
      }
    return {};
  });

  // R3/R5 (raising) and R4/R6 (lowering) share one body per direction.
  auto idempotent_shift = [&](bool raising, bool idem_on_right) {
    return [&, raising, idem_on_right](WordKey w) -> std::string {
      TensorVector x(n, d);
      x.add(w, 1);
      const auto lambda = word_weight(w, n, d);
      for (int i = 1; i < d; ++i) {
        auto gen = [&](const TensorVector& v) {
          return raising ? apply_raise(i, i + 1, 1, v) : apply_lower(i, i + 1, 1, v);
        };
        const auto gx = gen(x);
        const auto target = detail::shifted(lambda, i, raising ? 1 : -1);
        if (!gx.is_zero()) {
          auto wt = gx.homogeneous_weight();
          if (!wt || *wt != target) return "generator output not of shifted weight on " + detail::word_string(w, n);
        }
        // idem on the right:  g 1_lambda  vs  1_{lambda +- alpha} g
        // idem on the left:   1_nu g  vs  g 1_{nu -+ alpha}, with nu the target weight
        TensorVector lhs(n, d), rhs(n, d);
        if (idem_on_right) {
          lhs = gen(apply_idem(lambda, x));
          if (detail::in_range(target)) rhs = apply_idem(target, gx);
        } else {
          const auto& nu = target;
          if (detail::in_range(nu)) {
            lhs = apply_idem(nu, gx);
            const auto back = detail::shifted(nu, i, raising ? -1 : 1);
            if (detail::in_range(back)) rhs = gen(apply_idem(back, x));
          } else {
            lhs = gx;  // must vanish: no weight nu exists
          }
        }
        if (!(lhs == rhs))
          return std::string(raising ? "e_" : "f_") + std::to_string(i) + " idempotent relation on " +
                 detail::word_string(w, n);
      }
      return {};
    };
  };
  run("R3", idempotent_shift(true, true));
  run("R4", idempotent_shift(false, true));
  run("R5", idempotent_shift(true, false));
  run("R6", idempotent_shift(false, false));

  run("commutator", [&](WordKey w) -> std::string {
    TensorVector x(n, d);
    x.add(w, 1);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 2; j <= d; ++j) {
        auto e = apply_raise(i, j - 1, 1, apply_raise(j - 1, j, 1, x)) -
                 apply_raise(j - 1, j, 1, apply_raise(i, j - 1, 1, x));
        if (!(e == apply_raise(i, j, 1, x)))
          return "e_{" + std::to_string(i) + "," + std::to_string(j) + "} on " + detail::word_string(w, n);
        // *-image of the identity for e: f_{i,j} = f_{j-1,j} f_{i,j-1} - f_{i,j-1} f_{j-1,j}
        auto f = apply_lower(j - 1, j, 1, apply_lower(i, j - 1, 1, x)) -
                 apply_lower(i, j - 1, 1, apply_lower(j - 1, j, 1, x));
        if (!(f == apply_lower(i, j, 1, x)))
          return "f_{" + std::to_string(i) + "," + std::to_string(j) + "} on " + detail::word_string(w, n);
      }
    return {};
  });
  return out;
}

namespace detail {
inline std::size_t word_index(WordKey w, int n, int d) {
  std::size_t idx = 0;
  for (int k = 0; k < n; ++k) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(letter(w, n, k) - 1);
  return idx;
}

/// Action of one operator on every word, as sparse images indexed by word_index.
using WordTable = std::vector<std::vector<std::pair<WordKey, Int>>>;

inline TensorVector apply_table(const WordTable& table, const TensorVector& v) {
  TensorVector out(v.n(), v.d(), v.modulus());
  for (auto& [w, c] : v.terms())
    for (auto& [u, a] : table[word_index(w, v.n(), v.d())]) out.add(u, detail::checked_mul(c, a));
  return out;
}

inline std::vector<std::pair<WordKey, Int>> as_pairs(const TensorVector& v) {
  return {v.terms().begin(), v.terms().end()};
}
}  // namespace detail

/// For every word, i < j and m <= bound: the m-fold composition of e_{i,j}
/// (resp. f_{i,j}) is divisible by m! and the quotient equals the
/// subset-replacement divided power. Here e_{i,j} is built only from the
/// simple generators by the inductive commutator definition, one level of
/// j - i at a time, and tabulated on all words.
inline std::vector<RelationResult> divided_power_consistency(int n, int d, int bound, int jobs = 1) {
  const std::string params = "n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",m<=" + std::to_string(bound);
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(d);
  std::vector<WordKey> words(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::size_t rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      letters[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(d)) + 1;
      rest /= static_cast<std::size_t>(d);
    }
    words[idx] = encode_word(letters);
  }

  std::vector<RelationResult> out;
  for (bool raising : {true, false}) {
    auto simple = [&](int i, const TensorVector& v) {
      return raising ? apply_raise(i, i + 1, 1, v) : apply_lower(i, i + 1, 1, v);
    };
    std::string witness;
    std::vector<detail::WordTable> level;  // level[i-1] is the table of (i, i+k)
    for (int k = 1; k < d && witness.empty(); ++k) {
      std::vector<detail::WordTable> next(static_cast<std::size_t>(d - k));
      for (int i = 1; i + k <= d; ++i) {
        auto& table = next[static_cast<std::size_t>(i - 1)];
        table.resize(total);
        for (std::size_t idx = 0; idx < total; ++idx) {
          TensorVector x(n, d);
          x.add(words[idx], 1);
          if (k == 1) {
            table[idx] = detail::as_pairs(simple(i, x));
            continue;
          }
          // e_{i,j} = e_{i,j-1} e_{j-1,j} - e_{j-1,j} e_{i,j-1}; the lowering
          // version is its image under *, with the factors reversed
          const auto& prev = level[static_cast<std::size_t>(i - 1)];
          auto a = detail::apply_table(prev, simple(i + k - 1, x));
          auto b = simple(i + k - 1, detail::apply_table(prev, x));
          table[idx] = detail::as_pairs(raising ? a - b : b - a);
        }
      }
      level = std::move(next);

      witness = detail::for_all_words(n, d, jobs, [&](WordKey w) -> std::string {
                  TensorVector x(n, d);
                  x.add(w, 1);
                  for (int i = 1; i + k <= d; ++i) {
                    const int j = i + k;
                    TensorVector power = x;
                    for (int m = 1; m <= bound; ++m) {
                      power = detail::apply_table(level[static_cast<std::size_t>(i - 1)], power);
                      const Int fact = static_cast<Int>(factorial(m));
                      TensorVector quotient(n, d);
                      for (auto& [word, c] : power.terms()) {
                        if (c % fact != 0) return "coefficient not divisible by m! on " + detail::word_string(w, n);
                        quotient.add(word, c / fact);
                      }
                      const auto closed = raising ? apply_raise(i, j, m, x) : apply_lower(i, j, m, x);
                      if (!(quotient == closed))
                        return std::string(raising ? "e" : "f") + "^[" + std::to_string(m) + "]_{" +
                               std::to_string(i) + "," + std::to_string(j) + "} on " + detail::word_string(w, n);
                      if (power.is_zero()) break;
                    }
                  }
                  return {};
                }).second;
    }
    out.push_back({raising ? "divided_power_e" : "divided_power_f", params, witness.empty(), witness, total});
  }
  return out;
}

/// Every (n, d) with n >= 1, d >= 1 and d^n <= budget that fits the word
/// packing (n <= 16, d <= 15), ordered by d then n.
inline std::vector<std::pair<int, int>> tensor_grid(std::uint64_t budget) {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d <= kMaxRank; ++d) {
    std::uint64_t words = 1;
    for (int n = 1; n <= kMaxTensorDegree; ++n) {
      words *= static_cast<std::uint64_t>(d);
      if (words > budget) break;
      out.emplace_back(n, d);
    }
  }
  return out;
}

/// Sum over lambda of (number of semistandard lambda-tableaux with entries
/// <= d)^2; equals dim S(n,d) = binomial(d^2+n-1, n).
inline std::uint64_t codeterminant_census(int n, int d) {
  std::uint64_t total = 0;
  const auto weights = enumerate_compositions(n, d);
  for (const auto& lambda : enumerate_partitions(n, d)) {
    std::uint64_t count = 0;
    for (const auto& mu : weights) count += classical_kostka(lambda, mu);
    total += count * count;
  }
  return total;
}

}  // namespace schurcut
