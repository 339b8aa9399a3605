#pragma once

// Cell modules of tensor space, simple-module weight dimensions, p-Kostka
// numbers, decomposition matrices, Hom between Weyl modules, and the
// symmetric group layer.
//
// Conventions. The Murphy filtration of tensor space has sections spanned by
// rho_{S t^lambda} modulo shapes strictly dominating lambda; this quotient is
// generated by its highest weight vector e_{T^lambda} and is the Weyl module
// Delta(lambda). Its contravariant dual is nabla(lambda). dim L(lambda)_mu is
// the GF(p)-rank of the contravariant (Gram) form of Delta(lambda) on weight
// mu, which is the matrix of the canonical map Delta(lambda) -> nabla(lambda).

#include <memory>
#include <mutex>

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "module_model.hpp"
#include "schur_action.hpp"
#include "tensor_space.hpp"

namespace schurcut {

/// Dominant weight -> dimension.
using CharacterVector = std::map<Partition, Int>;

struct DecompositionMatrix {
  int n = 0, d = 0;
  Int p = 0;
  std::vector<Partition> labels;  ///< lexicographically descending
  IntMatrix entries;              ///< entries(i, j) = [Delta(labels[i]) : L(labels[j])]

  Int at(const Partition& lambda, const Partition& mu) const {
    return entries(index(lambda), index(mu));
  }
  std::size_t index(const Partition& x) const {
    auto it = std::find(labels.begin(), labels.end(), x);
    if (it == labels.end()) throw std::invalid_argument("decomposition matrix: unknown label " + to_string(x));
    return static_cast<std::size_t>(it - labels.begin());
  }
};

/// The Murphy-quotient cell module of shape lambda over Z.
struct CellModule {
  Partition shape;
  ModuleModel model;
  std::map<Composition, std::vector<Tableau>> basis;  ///< SStd(lambda, w), column order
};

/// Per-(n,d) cache of Murphy blocks, cell modules and Gram matrices. All
/// public members are serialized by an internal mutex.
class Engine {
 public:
  Engine(int n, int d) : n_(n), d_(d), murphy_(n, d) {
    if (n < 0 || d < 1) throw std::invalid_argument("Engine: need n >= 0, d >= 1");
  }

  int n() const { return n_; }
  int d() const { return d_; }

  std::vector<Partition> partitions() const { return enumerate_partitions(n_, d_); }

  TensorVector highest_vector(const Partition& lambda) const {
    check_shape(lambda);
    return elementary(superstandard(lambda), d_);
  }

  /// Coordinates of v in the section of shape lambda, indexed by
  /// SStd(lambda, weight). Throws std::logic_error if v has a component at
  /// (lambda, S, t) with t != t^lambda, or at a shape not dominating lambda.
  std::vector<Int> nabla_project(const Partition& lambda, const TensorVector& v, const Composition& weight) {
    std::lock_guard lock(mu_);
    return nabla_project_unlocked(lambda, v, weight);
  }

  const CellModule& cell_module(const Partition& lambda) {
    std::lock_guard lock(mu_);
    return cell_module_unlocked(lambda);
  }

  /// Integer Gram matrix of Delta(lambda) on weight mu: entry (S, U) is the
  /// coefficient of e_{T^lambda} in xi_{lambda S} xi_{U lambda} e_{T^lambda}
  /// modulo shapes strictly dominating lambda.
  const IntMatrix& gram(const Partition& lambda, const Composition& mu) {
    std::lock_guard lock(mu_);
    return gram_unlocked(lambda, mu);
  }

  /// Matrix of the canonical map Delta(lambda)_mu -> nabla(lambda)_mu over GF(p).
  IntMatrix canonical_map_matrix(const Partition& lambda, const Composition& mu, Int p) {
    check_prime(p);
    IntMatrix g = gram(lambda, mu);
    for (auto& x : g.data) x = mod_reduce(x, p);
    return g;
  }

  /// Rows: Delta-coordinates of xi_{S lambda} applied to the highest vector.
  /// Full rank over every field, since Delta(lambda) is cyclic.
  IntMatrix lowering_matrix(const Partition& lambda, const Composition& mu) {
    std::lock_guard lock(mu_);
    const auto& ss = sstd(lambda, mu);
    IntMatrix m(ss.size(), ss.size());
    const auto top = highest_vector(lambda);
    for (std::size_t i = 0; i < ss.size(); ++i) {
      auto row = nabla_project_unlocked(lambda, apply_word(xi_left_word(ss[i], d_), top), mu);
      for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
    }
    return m;
  }

  Int simple_weight_dim(const Partition& lambda, const Composition& mu, Int p) {
    check_prime(p);
    const auto& g = gram(lambda, mu);
    if (g.rows == 0) return 0;
    return static_cast<Int>(rank_mod_p(g, p));
  }

  CharacterVector simple_character(const Partition& lambda, Int p) {
    CharacterVector out;
    for (auto& mu : partitions())
      if (dominates(lambda, mu)) out[mu] = simple_weight_dim(lambda, mu.padded(d_), p);
    return out;
  }

  /// K_{mu lambda} = [Sym^mu : I(lambda)] = dim L(lambda)_mu; the first
  /// argument indexes the permutation module, the second the simple label.
  Int kostka_p(const Partition& mu, const Partition& lambda, Int p) {
    check_shape(mu);
    return simple_weight_dim(lambda, mu.padded(d_), p);
  }

  /// Solve K(lambda, nu) = sum_mu d_{lambda mu} dim L(mu)_nu in dominance order.
  DecompositionMatrix decomposition_matrix(Int p) {
    check_prime(p);
    std::lock_guard lock(mu_);
    if (auto it = decomp_.find(p); it != decomp_.end()) return it->second;
    DecompositionMatrix out{n_, d_, p, partitions(), {}};
    const std::size_t k = out.labels.size();
    IntMatrix L(k, k);  // L(i, j) = dim L(labels[i])_{labels[j]}
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j)
        if (dominates(out.labels[i], out.labels[j]))
          L(i, j) = simple_weight_dim(out.labels[i], out.labels[j].padded(d_), p);
    out.entries = IntMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        Int rest = static_cast<Int>(classical_kostka(out.labels[i], out.labels[j].padded(d_)));
        for (std::size_t m = i; m < j; ++m) rest -= out.entries(i, m) * L(m, j);
        if (L(j, j) != 1) throw std::logic_error("decomposition: simple character not unitriangular");
        if (rest < 0) throw std::logic_error("decomposition: negative multiplicity");
        out.entries(i, j) = rest;
      }
    return decomp_.emplace(p, std::move(out)).first->second;
  }

  /// dim Hom(Delta(lambda), Delta(mu)) over GF(p), by solving the intertwiner
  /// equations on the two cell modules.
  Int hom_dim(const Partition& lambda, const Partition& mu, Int p) {
    check_prime(p);
    const auto& a = cell_module(lambda).model;
    const auto& b = cell_module(mu).model;
    return static_cast<Int>(hom_dimension(a, b, p, simple_generators(n_, d_)));
  }

  /// Same dimension through the universal property of Delta(lambda): vectors
  /// of weight lambda in Delta(mu) killed by all raising operators.
  Int hom_dim_primitive(const Partition& lambda, const Partition& mu, Int p) {
    check_prime(p);
    check_shape(lambda);
    return static_cast<Int>(
        primitive_dimension(cell_module(mu).model, lambda.padded(d_), p, simple_generators(n_, d_)));
  }

  /// Hom(nabla(mu), nabla(lambda)) computed on the contravariant duals.
  Int hom_dim_dual(const Partition& lambda, const Partition& mu, Int p) {
    check_prime(p);
    auto a = cell_module(mu).model.dual();
    auto b = cell_module(lambda).model.dual();
    return static_cast<Int>(hom_dimension(a, b, p, simple_generators(n_, d_)));
  }

  /// lambda -> K_{mu lambda}: multiplicity of the Young module Y(lambda) in
  /// M(mu), equivalently of I(lambda) in Sym^mu.
  CharacterVector young_multiplicities(const Partition& mu, Int p) {
    CharacterVector out;
    for (auto& lambda : partitions()) out[lambda] = kostka_p(mu, lambda, p);
    return out;
  }

  /// dim D(lambda) = dim L(lambda)_omega; needs d >= n.
  Int dim_simple_symmetric(const Partition& lambda, Int p) {
    if (d_ < n_) throw std::invalid_argument("dim_simple_symmetric: needs d >= n");
    if (!is_p_restricted(lambda, p)) throw std::invalid_argument("dim_simple_symmetric: lambda is p-singular");
    std::vector<int> w(static_cast<std::size_t>(d_), 0);
    for (int k = 0; k < n_; ++k) w[static_cast<std::size_t>(k)] = 1;
    return simple_weight_dim(lambda, Composition(w), p);
  }

  static bool is_p_restricted(const Partition& lambda, Int p) {
    for (int i = 0; i < lambda.length(); ++i)
      if (lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i + 1)] >= p) return false;
    return true;
  }

  const std::vector<Tableau>& sstd(const Partition& lambda, const Composition& mu) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(lambda, mu);
    auto it = sstd_.find(key);
    if (it == sstd_.end()) it = sstd_.emplace(key, enumerate_sstd(lambda, mu)).first;
    return it->second;
  }

 private:
  void check_shape(const Partition& lambda) const {
    if (lambda.size() != n_ || lambda.length() > d_)
      throw std::invalid_argument("partition " + to_string(lambda) + " not in Lambda+_{" + std::to_string(n_) + "," +
                                  std::to_string(d_) + "}");
  }
  static void check_prime(Int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  }

  std::vector<Int> nabla_project_unlocked(const Partition& lambda, const TensorVector& v, const Composition& weight) {
    check_shape(lambda);
    const auto& ss = sstd(lambda, weight);
    std::vector<Int> out(ss.size(), 0);
    if (v.is_zero()) return out;
    const auto& block = murphy_.block(weight);
    const auto x = murphy_.coordinates(v, weight);
    const auto t_lambda = initial_standard(lambda);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!x[k]) continue;
      const auto& label = block.labels[k];
      if (label.shape == lambda) {
        if (label.t != t_lambda)
          throw std::logic_error("cellularity: component at t != t^lambda for shape " + to_string(lambda));
        auto pos = std::find(ss.begin(), ss.end(), label.S);
        out[static_cast<std::size_t>(pos - ss.begin())] = x[k];
      } else if (!dominates(label.shape, lambda)) {
        throw std::logic_error("cellularity: component at shape " + to_string(label.shape) +
                               " not dominating " + to_string(lambda));
      }
    }
    return out;
  }

  const CellModule& cell_module_unlocked(const Partition& lambda) {
    check_shape(lambda);
    auto it = cells_.find(lambda);
    if (it != cells_.end()) return *it->second;
    auto cm = std::make_unique<CellModule>();
    cm->shape = lambda;
    cm->model = ModuleModel{n_, d_, 0, {}, {}};
    const auto t_lambda = initial_standard(lambda);
    for (auto& w : enumerate_compositions(n_, d_)) {
      const auto& ss = sstd(lambda, w);
      if (ss.empty()) continue;
      cm->basis[w] = ss;
      cm->model.dims[w] = ss.size();
    }
    for (auto& g : simple_generators(n_, d_))
      for (auto& [w, ss] : cm->basis) {
        auto tgt = target_weight(g, w);
        if (!tgt || !cm->model.dims.count(*tgt)) continue;
        IntMatrix m(cm->model.dims[*tgt], ss.size());
        bool nonzero = false;
        for (std::size_t c = 0; c < ss.size(); ++c) {
          auto img = apply_symbol(g, rho(ss[c], t_lambda, d_));
          auto col = nabla_project_unlocked(lambda, img, *tgt);
          for (std::size_t r = 0; r < col.size(); ++r) nonzero |= (m(r, c) = col[r]) != 0;
        }
        if (nonzero) cm->model.action.emplace(std::make_pair(g, w), std::move(m));
      }
    return *cells_.emplace(lambda, std::move(cm)).first->second;
  }

  const IntMatrix& gram_unlocked(const Partition& lambda, const Composition& mu) {
    check_shape(lambda);
    if (mu.length() != d_ || mu.size() != n_) throw std::invalid_argument("gram: weight not in Lambda_{n,d}");
    auto key = std::make_pair(lambda, mu);
    auto it = gram_.find(key);
    if (it != gram_.end()) return it->second;
    const auto& ss = sstd(lambda, mu);
    const auto top = highest_vector(lambda);
    const auto top_weight = lambda.padded(d_);
    std::vector<TensorVector> lowered;
    for (auto& u : ss) lowered.push_back(apply_word(xi_left_word(u, d_), top));
    IntMatrix g(ss.size(), ss.size());
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const auto up = xi_right_word(ss[i], d_);
      for (std::size_t j = 0; j < ss.size(); ++j) {
        auto coord = nabla_project_unlocked(lambda, apply_word(up, lowered[j]), top_weight);
        g(i, j) = coord.at(0);
      }
    }
    return gram_.emplace(key, std::move(g)).first->second;
  }

  int n_, d_;
  MurphyBasis murphy_;
  std::recursive_mutex mu_;
  std::map<Partition, std::unique_ptr<CellModule>> cells_;
  std::map<std::pair<Partition, Composition>, IntMatrix> gram_;
  std::map<std::pair<Partition, Composition>, std::vector<Tableau>> sstd_;
  std::map<Int, DecompositionMatrix> decomp_;
};

/// Engines shared across computations, one per (n, d).
class EngineRegistry {
 public:
  Engine& get(int n, int d) {
    std::lock_guard lock(mu_);
    auto& slot = engines_[{n, d}];
    if (!slot) slot = std::make_unique<Engine>(n, d);
    return *slot;
  }
  static EngineRegistry& global() {
    static EngineRegistry r;
    return r;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<Engine>> engines_;
};

inline bool is_p_restricted(const Partition& lambda, Int p) { return Engine::is_p_restricted(lambda, p); }

/// dim D(lambda) over GF(p), computed with d = n.
inline Int dim_simple_symmetric(const Partition& lambda, Int p) {
  const int n = lambda.size();
  return EngineRegistry::global().get(n, std::max(n, 1)).dim_simple_symmetric(lambda, p);
}

// ---------------------------------------------------------------------------
// Row/column route. The composite D^lambda -> Lambda^{lambda'} -> S^lambda
// (row divided powers, column exterior powers, row symmetric powers) factors
// through Delta(lambda) -> nabla(lambda), so its rank on weight mu over GF(p)
// is dim L(lambda)_mu. Both ends have the tables A with row sums lambda and
// column sums mu as basis; this needs no tensor space and scales to larger n.

/// Non-negative integer tables with the given row and column sums.
inline std::vector<std::vector<int>> contingency_tables(const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t R = rows.size(), C = cols.size();
  std::vector<std::vector<int>> out;
  std::vector<int> t(R * C, 0), colleft(cols);
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t k, int rowleft) {
    if (i == R) {
      if (std::all_of(colleft.begin(), colleft.end(), [](int x) { return x == 0; })) out.push_back(t);
      return;
    }
    if (k + 1 == C) {
      if (C == 0 || rowleft > colleft[k]) return;
      t[i * C + k] = rowleft;
      colleft[k] -= rowleft;
      rec(i + 1, 0, i + 1 < R ? rows[i + 1] : 0);
      colleft[k] += rowleft;
      t[i * C + k] = 0;
      return;
    }
    for (int a = std::min(rowleft, colleft[k]); a >= 0; --a) {
      t[i * C + k] = a;
      colleft[k] -= a;
      rec(i, k + 1, rowleft - a);
      colleft[k] += a;
    }
    t[i * C + k] = 0;
  };
  if (R == 0) {
    if (std::all_of(cols.begin(), cols.end(), [](int x) { return x == 0; })) out.push_back({});
    return out;
  }
  rec(0, 0, rows[0]);
  return out;
}

/// Matrix of D^lambda_mu -> S^lambda_mu in the table bases (rows: source).
inline IntMatrix row_column_matrix(const Partition& lambda, const Composition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("row_column_matrix: sizes differ");
  const auto tables = contingency_tables(lambda.parts, mu.parts);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < tables.size(); ++k) index[tables[k]] = k;
  const std::size_t R = lambda.parts.size(), C = mu.parts.size();
  const auto heights = conjugate(lambda).parts;
  IntMatrix out(tables.size(), tables.size());

  // column by column: choose distinct letters for the column from what is
  // left of each row, then distribute them over the rows with a sign
  using State = std::pair<std::vector<int>, std::vector<int>>;  // (remaining A, partial B)
  for (std::size_t a = 0; a < tables.size(); ++a) {
    std::map<State, Int> states{{{tables[a], std::vector<int>(R * C, 0)}, 1}};
    for (int h : heights) {
      std::map<State, Int> next;
      std::vector<int> perm(static_cast<std::size_t>(h));
      for (auto& [st, coef] : states) {
        std::vector<int> letters(static_cast<std::size_t>(h));
        std::function<void(int)> choose = [&](int i) {
          if (i == h) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
              int inversions = 0;
              for (int x = 0; x < h; ++x)
                for (int y = x + 1; y < h; ++y) inversions += perm[x] > perm[y];
              auto b = st.second;
              for (int r = 0; r < h; ++r) ++b[static_cast<std::size_t>(r) * C + letters[perm[r]]];
              auto rem = st.first;
              for (int r = 0; r < h; ++r) --rem[static_cast<std::size_t>(r) * C + letters[r]];
              next[{std::move(rem), std::move(b)}] += inversions % 2 ? -coef : coef;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
          }
          for (std::size_t k = 0; k < C; ++k) {
            if (st.first[static_cast<std::size_t>(i) * C + k] == 0) continue;
            if (std::find(letters.begin(), letters.begin() + i, static_cast<int>(k)) != letters.begin() + i) continue;
            letters[i] = static_cast<int>(k);
            choose(i + 1);
          }
        };
        choose(0);
      }
      for (auto it = next.begin(); it != next.end();) it = it->second ? std::next(it) : next.erase(it);
      states = std::move(next);
    }
    for (auto& [st, coef] : states) out(a, index.at(st.second)) += coef;
  }
  return out;
}

/// Tensor-space engines are used while the weight blocks stay small.
inline constexpr std::uint64_t kEngineBlockCap = 2520;

inline bool engine_feasible(const Partition& lambda, const Composition& mu) {
  return multinomial(mu) <= kEngineBlockCap && multinomial(lambda.padded(mu.length())) <= kEngineBlockCap;
}

/// dim L(lambda)_mu over GF(p), d = length of mu. Gram rank in tensor space
/// when feasible, the row/column rank otherwise.
inline Int simple_weight_dim(const Partition& lambda, const Composition& mu, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const int n = mu.size(), d = mu.length();
  if (lambda.size() != n || lambda.length() > d) throw std::invalid_argument("simple_weight_dim: shape/weight mismatch");
  if (n == 0) return 1;
  if (!dominates(lambda, sorted_partition(mu))) return 0;
  if (engine_feasible(lambda, mu)) {
    try {
      return EngineRegistry::global().get(n, d).simple_weight_dim(lambda, mu, p);
    } catch (const std::overflow_error&) {
      // integral Murphy inverse left int64; the row/column rank is exact too
    }
  }
  return static_cast<Int>(rank_mod_p(row_column_matrix(lambda, mu), p));
}

/// K_{mu lambda} = dim L(lambda)_mu with d = max(lengths, d).
inline Int kostka_p(const Partition& mu, const Partition& lambda, Int p, int d = 0) {
  d = std::max({d, lambda.length(), mu.length(), 1});
  return simple_weight_dim(lambda, mu.padded(d), p);
}

/// [Delta(lambda) : L(mu)] solved on the dominance interval [mu, lambda].
inline Int decomposition_number(const Partition& lambda, const Partition& mu, Int p, int d = 0) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("decomposition_number: sizes differ");
  if (!dominates(lambda, mu)) return 0;
  d = std::max({d, lambda.length(), mu.length(), 1});
  std::vector<Partition> interval;  // lexicographically descending
  for (auto& k : enumerate_partitions(lambda.size(), d))
    if (dominates(lambda, k) && dominates(k, mu)) interval.push_back(k);
  std::map<Partition, Int> dec;
  for (auto& k : interval) {
    Int rest = static_cast<Int>(classical_kostka(lambda, k.padded(d)));
    for (auto& [k2, x] : dec)
      if (x && dominates(k2, k)) rest -= x * kostka_p(k, k2, p, d);
    if (rest < 0) throw std::logic_error("decomposition: negative multiplicity");
    dec[k] = rest;
  }
  return dec.at(mu);
}

/// Element of Z S_n as permutation -> coefficient.
using GroupElement = std::map<Permutation, Int>;

/// Row stabiliser of t^lambda.
inline std::vector<Permutation> young_subgroup(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::function<void(int, int)> rec = [&](int row, int start) {
    if (row == lambda.length()) {
      out.push_back(Permutation{img});
      return;
    }
    const int len = lambda[static_cast<std::size_t>(row)];
    auto first = img.begin() + start, last = first + len;
    std::sort(first, last);
    do {
      rec(row + 1, start + len);
    } while (std::next_permutation(first, last));
    std::sort(first, last);
  };
  rec(0, 0);
  return out;
}

/// x_{st} = d_s x_lambda d_t^{-1}, x_lambda the sum over the row stabiliser
/// of t^lambda. The product is composition of maps (rightmost first), which
/// in Permutation's left-to-right product reads d_t^{-1} * x * d_s.
inline GroupElement murphy_symmetric_element(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw std::invalid_argument("murphy_symmetric_element: shapes differ");
  const auto ds = d_of(s), dt_inv = d_of(t).inverse();
  GroupElement out;
  for (auto& x : young_subgroup(s.shape())) out[dt_inv * x * ds] += 1;
  return out;
}

/// Right place-permutation action of a group-algebra element.
inline TensorVector act(const TensorVector& v, const GroupElement& g) {
  TensorVector out(v.n(), v.d(), v.modulus());
  for (auto& [perm, c] : g) out += c * permute(v, perm);
  return out;
}

/// How x acts on the omega weight space once E_omega is identified with the
/// regular module through e_{12...n} . g <-> g: the word e.g goes to the sum
/// of c_h e.(h^{-1} g). This commutes with place permutations, and
/// xi_{ST} acts on E_omega as murphy_symmetric_element(s, t) does here.
inline TensorVector omega_block_action(const GroupElement& x, const TensorVector& v) {
  const int n = v.n();
  std::vector<int> base_letters(static_cast<std::size_t>(n));
  std::iota(base_letters.begin(), base_letters.end(), 1);
  TensorVector out(n, v.d(), v.modulus());
  for (auto& [w, c] : v.terms()) {
    // w = base . g with g(k) = position of letter k+1 in w
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
      const int a = letter(w, n, k);
      if (a > n || img[static_cast<std::size_t>(a - 1)] != -1)
        throw std::invalid_argument("omega_block_action: word not of weight omega");
      img[static_cast<std::size_t>(a - 1)] = k;
    }
    const Permutation g{img};
    for (auto& [h, a] : x) {
      auto y = permute_word(encode_word(base_letters), n, h.inverse() * g);
      out.add(y, detail::checked_mul(a, c));
    }
  }
  return out;
}

}  // namespace schurcut
