#pragma once

// Truncation of weight-graded modules to a cut window, the split maps phi
// (on generators) and psi (on Sym^mu bases), and the factorisation checks
// for p-Kostka numbers, decomposition numbers and Hom across row and column
// cuts.
//
// Truncation: Sigma is the set of compositions whose sorted form lies in
// Sigma+ = {mu <= sigma}; the submodule generated by all weight spaces
// outside Sigma is factored out, and only dominant weights in Gamma+ =
// {mu >= gamma} are kept.

#include <atomic>
#include <deque>
#include <set>
#include <thread>

#include "repthy.hpp"

namespace schurcut {

// ---------------------------------------------------------------------------
// Sym^mu

struct SymLabel {
  Partition shape;
  Tableau S, T;
  auto operator<=>(const SymLabel&) const = default;
};

inline std::string to_string(const SymLabel& x) {
  return to_string(x.shape) + " " + to_string(x.S) + " " + to_string(x.T);
}

/// Sym^mu realised as the S_mu-fixed tensors, with Z-basis the orbit sums
/// rho_{ST}, T semistandard of weight mu. Matrices over Z.
struct SymModule {
  Partition mu;
  ModuleModel model;
  std::map<Composition, std::vector<SymLabel>> labels;  ///< per weight, model coordinate order

  std::size_t index(const Composition& w, const SymLabel& x) const {
    const auto& ls = labels.at(w);
    auto it = std::find(ls.begin(), ls.end(), x);
    if (it == ls.end()) throw std::invalid_argument("SymModule: unknown label " + to_string(x));
    return static_cast<std::size_t>(it - ls.begin());
  }
};

inline SymModule sym_module(int n, int d, const Partition& mu) {
  if (mu.size() != n || mu.length() > d) throw std::invalid_argument("sym_module: mu not in Lambda+_{n,d}");
  SymModule out{mu, ModuleModel{n, d, 0, {}, {}}, {}};
  const auto mw = mu.padded(d);
  std::map<Partition, std::vector<Tableau>> tops;
  for (auto& lam : enumerate_partitions(n, d)) tops[lam] = enumerate_sstd(lam, mw);
  for (auto& w : enumerate_compositions(n, d)) {
    std::vector<SymLabel> ls;
    for (auto& lam : enumerate_partitions(n, d)) {
      if (tops[lam].empty()) continue;
      for (auto& S : enumerate_sstd(lam, w))
        for (auto& T : tops[lam]) ls.push_back({lam, S, T});
    }
    if (ls.empty()) continue;
    out.model.dims[w] = ls.size();
    out.labels[w] = std::move(ls);
  }

  MurphyBasis mb(n, d);
  std::map<Tableau, std::vector<Tableau>> orbits;
  for (auto& [lam, ts] : tops)
    for (auto& T : ts) orbits[T] = orbit(T, mw);

  // Murphy coordinates -> orbit-sum coordinates; the former must be
  // constant along every orbit.
  auto convert = [&](const TensorVector& v, const Composition& w) {
    const auto& tl = out.labels.at(w);
    std::vector<Int> c(tl.size(), 0);
    if (v.is_zero()) return c;
    const auto& block = mb.block(w);
    const auto x = mb.coordinates(v, w);
    std::vector<Int> check(x.size(), 0);
    for (std::size_t k = 0; k < tl.size(); ++k) {
      const auto& orb = orbits.at(tl[k].T);
      c[k] = x[block.label_index.at({tl[k].shape, tl[k].S, orb.front()})];
      for (auto& t : orb) check[block.label_index.at({tl[k].shape, tl[k].S, t})] += c[k];
    }
    if (check != x) throw std::logic_error("sym_module: image is not S_mu-invariant in Murphy coordinates");
    return c;
  };

  for (auto& g : simple_generators(n, d))
    for (auto& [w, ls] : out.labels) {
      auto tgt = target_weight(g, w);
      if (!tgt || !out.labels.count(*tgt)) continue;
      IntMatrix m(out.labels.at(*tgt).size(), ls.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < ls.size(); ++j) {
        auto col = convert(apply_symbol(g, rho_sum(ls[j].S, ls[j].T, mw, d)), *tgt);
        for (std::size_t i = 0; i < col.size(); ++i) nonzero |= (m(i, j) = col[i]) != 0;
      }
      if (nonzero) out.model.action.emplace(std::make_pair(g, w), std::move(m));
    }
  return out;
}

/// Shared cache of Sym^mu models.
inline const SymModule& sym_module_cached(int n, int d, const Partition& mu) {
  static std::mutex m;
  static std::map<std::tuple<int, int, Partition>, std::unique_ptr<SymModule>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[{n, d, mu}];
  if (!slot) slot = std::make_unique<SymModule>(sym_module(n, d, mu));
  return *slot;
}

// ---------------------------------------------------------------------------
// Truncation

namespace detail {

/// Subspace of GF(p)^cols kept in reduced row echelon form.
struct EchelonSpace {
  std::size_t cols = 0;
  Int p = 2;
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivots;

  std::vector<Int> reduce(std::vector<Int> v) const {
    for (auto& x : v) x = mod_reduce(x, p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Int f = v[pivots[k]];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (rows[k][j]) v[j] = mod_reduce(v[j] - f * rows[k][j], p);
    }
    return v;
  }

  /// Adds v; returns false if it was already in the span.
  bool insert(const std::vector<Int>& v) {
    auto r = reduce(v);
    std::size_t piv = 0;
    while (piv < cols && r[piv] == 0) ++piv;
    if (piv == cols) return false;
    const Int inv = mod_inverse(r[piv], p);
    for (auto& x : r) x = x * inv % p;
    for (auto& row : rows) {
      const Int f = row[piv];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (r[j]) row[j] = mod_reduce(row[j] - f * r[j], p);
    }
    rows.push_back(std::move(r));
    pivots.push_back(piv);
    return true;
  }
};

inline std::vector<Int> column(const IntMatrix& m, std::size_t j, Int p) {
  std::vector<Int> c(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) c[i] = mod_reduce(m(i, j), p);
  return c;
}

inline std::vector<Int> mat_vec_mod(const IntMatrix& m, const std::vector<Int>& v, Int p) {
  std::vector<Int> out(m.rows, 0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (!v[j]) continue;
    for (std::size_t i = 0; i < m.rows; ++i)
      if (m(i, j)) out[i] = mod_reduce(out[i] + mod_reduce(m(i, j), p) * v[j], p);
  }
  return out;
}

}  // namespace detail

struct TruncatedBlock {
  detail::EchelonSpace killed;       ///< the submodule generated off Sigma, this weight
  std::vector<std::size_t> basis;    ///< ambient coordinates not among the pivots

  std::size_t dim() const { return basis.size(); }
  std::vector<Int> quotient_coordinates(const std::vector<Int>& v) const {
    auto r = killed.reduce(v);
    std::vector<Int> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = r[basis[k]];
    return out;
  }
};

struct TruncatedModule {
  int n = 0, d = 0;
  Int p = 0;
  CutWindow window;
  std::map<Composition, TruncatedBlock> blocks;  ///< surviving weights only
  ModuleModel model;                             ///< over GF(p), quotient coordinates

  std::size_t total_dim() const { return model.total_dim(); }
};

inline bool in_sigma(const Composition& w, const std::set<Partition>& sigma_plus) {
  return sigma_plus.count(sorted_partition(w)) > 0;
}
inline bool in_gamma(const Composition& w, const std::set<Partition>& gamma_plus) {
  return is_partition(w) && gamma_plus.count(Partition(w.parts)) > 0;
}

/// h_{r,c,m}(M) over GF(p). Throws std::domain_error for an empty window.
inline TruncatedModule truncate(const ModuleModel& M, const CutWindow& w, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("truncate: p must be prime");
  const auto sv = sigma_set(M.n, M.d, w), gv = gamma_set(M.n, M.d, w);
  const std::set<Partition> sigma_plus(sv.begin(), sv.end()), gamma_plus(gv.begin(), gv.end());

  std::map<Composition, std::vector<std::pair<GeneratorSymbol, const IntMatrix*>>> out_edges;
  for (auto& [key, m] : M.action) out_edges[key.second].emplace_back(key.first, &m);

  std::map<Composition, detail::EchelonSpace> spaces;
  for (auto& [wt, k] : M.dims) spaces[wt] = detail::EchelonSpace{k, p, {}, {}};

  // closure of the off-Sigma weight spaces under all generators; each
  // insertion raises a dimension, so this stops after <= total_dim rounds
  std::deque<std::pair<Composition, std::vector<Int>>> work;
  for (auto& [wt, k] : M.dims) {
    if (in_sigma(wt, sigma_plus)) continue;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Int> e(k, 0);
      e[j] = 1;
      spaces[wt].insert(e);
      work.emplace_back(wt, std::move(e));
    }
  }
  while (!work.empty()) {
    auto [wt, v] = std::move(work.front());
    work.pop_front();
    auto it = out_edges.find(wt);
    if (it == out_edges.end()) continue;
    for (auto& [g, m] : it->second) {
      auto tgt = *target_weight(g, wt);
      auto y = detail::mat_vec_mod(*m, v, p);
      if (spaces.at(tgt).insert(y)) work.emplace_back(tgt, std::move(y));
    }
  }

  TruncatedModule out{M.n, M.d, p, w, {}, ModuleModel{M.n, M.d, p, {}, {}}};
  for (auto& [wt, space] : spaces) {
    if (!in_gamma(wt, gamma_plus) || space.rows.size() == space.cols) continue;
    TruncatedBlock b{space, {}};
    std::vector<bool> is_pivot(space.cols, false);
    for (auto piv : space.pivots) is_pivot[piv] = true;
    for (std::size_t j = 0; j < space.cols; ++j)
      if (!is_pivot[j]) b.basis.push_back(j);
    out.model.dims[wt] = b.basis.size();
    out.blocks.emplace(wt, std::move(b));
  }
  for (auto& [key, m] : M.action) {
    auto src = out.blocks.find(key.second);
    auto tgt = out.blocks.find(*target_weight(key.first, key.second));
    if (src == out.blocks.end() || tgt == out.blocks.end()) continue;
    IntMatrix q(tgt->second.dim(), src->second.dim());
    bool nonzero = false;
    for (std::size_t j = 0; j < src->second.dim(); ++j) {
      auto col = tgt->second.quotient_coordinates(detail::column(m, src->second.basis[j], p));
      for (std::size_t i = 0; i < col.size(); ++i) nonzero |= (q(i, j) = col[i]) != 0;
    }
    if (nonzero) out.model.action.emplace(key, std::move(q));
  }
  return out;
}

/// Dimension of h_{r,c,m}(Sym^mu) predicted by its basis: pairs (S, T) of
/// shape lambda in the window, S of a window weight, T of weight mu.
inline std::size_t truncated_sym_dimension(int n, int d, const Partition& mu, const CutWindow& w) {
  std::size_t total = 0;
  const auto window = lambda_set(n, d, w);
  for (auto& lam : window)
    for (auto& nu : window) total += classical_kostka(lam, nu.padded(d)) * classical_kostka(lam, mu.padded(d));
  return total;
}

// ---------------------------------------------------------------------------
// phi and psi

/// Images of a subquotient generator in the two factors; nullopt stands for
/// the identity. The cut line i = r is not a generator and is rejected.
inline std::pair<std::optional<GeneratorSymbol>, std::optional<GeneratorSymbol>> phi_generator_image(
    const GeneratorSymbol& g, const CutWindow& w) {
  if (g.kind == GeneratorSymbol::Kind::Idem) {
    if (!in_window(g.weight, w)) throw std::invalid_argument("phi: idempotent weight outside the window");
    const auto mid = g.weight.parts.begin() + w.r;
    return {GeneratorSymbol::idem(Composition({g.weight.parts.begin(), mid})),
            GeneratorSymbol::idem(Composition({mid, g.weight.parts.end()}))};
  }
  if (g.j != g.i + 1) throw std::invalid_argument("phi: only simple root generators");
  if (g.i == w.r) throw std::invalid_argument("phi: generator on the cut line");
  if (g.i < w.r) return {g, std::nullopt};
  auto h = g;
  h.i -= w.r;
  h.j -= w.r;
  return {std::nullopt, h};
}

/// Truncated Sym^mu with the window labels as a basis of every surviving
/// weight space. n = 0 gives the trivial one-dimensional module.
class CutFactor {
 public:
  CutFactor(int n, int d, const Partition& mu, const CutWindow& w, Int p) : n_(n), d_(d), p_(p) {
    if (n == 0) {
      trivial_weight_ = Composition(std::vector<int>(static_cast<std::size_t>(d), 0));
      labels_[trivial_weight_] = {SymLabel{}};
      return;
    }
    sym_ = &sym_module_cached(n, d, mu);
    trunc_ = truncate(sym_->model, w, p);
    for (auto& [wt, block] : trunc_.blocks) {
      const auto& all = sym_->labels.at(wt);
      std::vector<SymLabel> keep;
      IntMatrix a(block.killed.rows.size(), all.size());
      for (std::size_t i = 0; i < block.killed.rows.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) a(i, j) = block.killed.rows[i][j];
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (!in_window(all[j].shape, d, w)) continue;
        keep.push_back(all[j]);
        IntMatrix b(a.rows + 1, a.cols);
        std::copy(a.data.begin(), a.data.end(), b.data.begin());
        b(a.rows, j) = 1;
        a = std::move(b);
      }
      auto inv = inverse_mod_p(a, p);
      if (!inv)
        throw std::logic_error("CutFactor: window labels are not a basis of the quotient at " + to_string(wt));
      inverse_[wt] = std::move(*inv);
      labels_[wt] = std::move(keep);
    }
  }

  std::size_t dim() const {
    std::size_t s = 0;
    for (auto& [wt, ls] : labels_) s += ls.size();
    return s;
  }
  const std::map<Composition, std::vector<SymLabel>>& labels() const { return labels_; }
  const TruncatedModule& truncated() const { return trunc_; }

  /// g . x in the window basis; empty if it vanishes in the truncation.
  std::map<SymLabel, Int> act(const GeneratorSymbol& g, const SymLabel& x) const {
    const auto wt = n_ == 0 ? trivial_weight_ : x.S.weight(d_);
    if (!labels_.count(wt)) throw std::invalid_argument("CutFactor: label not in the truncation");
    if (g.kind == GeneratorSymbol::Kind::Idem) {
      if (g.weight == wt) return {{x, 1}};
      return {};
    }
    if (n_ == 0) return {};  // weight zero: every root vector leaves the weight lattice
    auto tgt = target_weight(g, wt);
    if (!tgt || !labels_.count(*tgt)) return {};
    const IntMatrix* m = sym_->model.matrix(g, wt);
    if (!m) return {};
    return coordinates(*tgt, detail::column(*m, sym_->index(wt, x), p_));
  }

 private:
  std::map<SymLabel, Int> coordinates(const Composition& wt, const std::vector<Int>& v) const {
    const auto& inv = inverse_.at(wt);
    const auto& keep = labels_.at(wt);
    const std::size_t offset = inv.rows - keep.size();
    std::map<SymLabel, Int> out;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      Int c = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) c = mod_reduce(c + v[i] * inv(i, offset + k), p_);
      if (c) out[keep[k]] = c;
    }
    return out;
  }

  int n_, d_;
  Int p_;
  const SymModule* sym_ = nullptr;
  TruncatedModule trunc_;
  Composition trivial_weight_;
  std::map<Composition, std::vector<SymLabel>> labels_;
  std::map<Composition, IntMatrix> inverse_;
};

/// psi(rho_{ST}) = rho_{S^T T^T} (x) rho_{S^B T^B}.
inline std::pair<SymLabel, SymLabel> psi_split(const SymLabel& x, const CutWindow& w, int d) {
  if (!in_window(x.shape, d, w)) throw std::invalid_argument("psi_split: shape outside the window");
  auto [lt, lb] = row_cut(x.shape, w.r);
  auto [st, sb] = split_tableau(x.S, w.r, w.r);
  auto [tt, tb] = split_tableau(x.T, w.r, w.r);
  return {{lt, st, tt}, {lb, sb, tb}};
}

// ---------------------------------------------------------------------------
// Reports

enum class CutStatus { Pass, Fail, Skipped };

inline std::string to_string(CutStatus s) {
  switch (s) {
    case CutStatus::Pass: return "pass";
    case CutStatus::Fail: return "fail";
    default: return "skipped";
  }
}

struct CutReport {
  std::string kind;  ///< row, col, decomp, hom, psi
  int n = 0, d = 0;
  Int p = 0;
  Partition lambda, mu;
  int cut = 0;       ///< r for row-type checks, c for col
  CutWindow window;  ///< psi only
  Int lhs = 0;
  std::vector<Int> rhs;
  CutStatus status = CutStatus::Skipped;
  std::string detail;
};

namespace detail {

inline Int product(const std::vector<Int>& v) {
  Int x = 1;
  for (auto a : v) x *= a;
  return x;
}

inline CutReport finish(CutReport r) {
  r.status = r.lhs == product(r.rhs) ? CutStatus::Pass : CutStatus::Fail;
  return r;
}

inline int default_d(const Partition& lambda, const Partition& mu, int d) {
  return d > 0 ? d : std::max({lambda.length(), mu.length(), 1});
}

/// Hom needs whole cell modules, so it stays inside the tensor budget.
inline Engine& hom_engine(int n, int d) {
  d = std::max(d, 1);
  double words = 1;
  for (int k = 0; k < n; ++k) words *= d;
  if (words > 100000) throw std::length_error("hom: d^n beyond the tensor budget");
  return EngineRegistry::global().get(n, d);
}

/// If one of the pair dominates the other, both lie in the window cut at r
/// through the dominating partition's r-th row.
inline void assert_row_window(const Partition& lambda, const Partition& mu, int r, int d) {
  const Partition* big = dominates(lambda, mu) ? &lambda : dominates(mu, lambda) ? &mu : nullptr;
  if (!big || r == 0) return;
  const CutWindow w{r, (*big)[static_cast<std::size_t>(r - 1)], top_size(*big, r)};
  if (!in_window(lambda, d, w) || !in_window(mu, d, w))
    throw std::logic_error("cut pair " + to_string(lambda) + ", " + to_string(mu) + " outside its window");
}

inline CutReport row_base(const std::string& kind, const Partition& lambda, const Partition& mu, int r, Int p,
                          int d) {
  if (lambda.size() != mu.size()) throw std::invalid_argument(kind + ": partitions of different sizes");
  if (!is_prime(p)) throw std::invalid_argument(kind + ": p must be prime");
  CutReport rep;
  rep.kind = kind;
  rep.n = lambda.size();
  rep.d = default_d(lambda, mu, d);
  rep.p = p;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.cut = r;
  if (lambda.length() > rep.d || mu.length() > rep.d || r < 0 || r > rep.d)
    throw std::invalid_argument(kind + ": partitions or cut do not fit d");
  return rep;
}

}  // namespace detail

/// K_{lambda mu} against K_{top} * K_{bottom} across a row cut at r.
inline CutReport verify_row_kostka(const Partition& lambda, const Partition& mu, int r, Int p, int d = 0) {
  auto rep = detail::row_base("row", lambda, mu, r, p, d);
  if (!admits_row_cut(lambda, mu, r)) return rep;
  detail::assert_row_window(lambda, mu, r, rep.d);
  auto [lt, lb] = row_cut(lambda, r);
  auto [mt, mb] = row_cut(mu, r);
  rep.lhs = kostka_p(mu, lambda, p, rep.d);
  rep.rhs = {kostka_p(mt, lt, p, r), kostka_p(mb, lb, p, rep.d - r)};
  return detail::finish(rep);
}

/// Same across a column cut after column c.
inline CutReport verify_col_kostka(const Partition& lambda, const Partition& mu, int c, Int p, int d = 0) {
  auto rep = detail::row_base("col", lambda, mu, 0, p, d);
  rep.cut = c;
  if (c < 0) throw std::invalid_argument("col: negative cut");
  if (!admits_col_cut(lambda, mu, c)) return rep;
  auto [ll, lr] = col_cut(lambda, c);
  auto [ml, mr] = col_cut(mu, c);
  rep.lhs = kostka_p(mu, lambda, p, rep.d);
  rep.rhs = {kostka_p(ml, ll, p, rep.d), kostka_p(mr, lr, p, rep.d)};
  return detail::finish(rep);
}

/// [Delta(lambda) : L(mu)] across a row cut.
inline CutReport verify_row_decomp(const Partition& lambda, const Partition& mu, int r, Int p, int d = 0) {
  auto rep = detail::row_base("decomp", lambda, mu, r, p, d);
  if (!admits_row_cut(lambda, mu, r)) return rep;
  detail::assert_row_window(lambda, mu, r, rep.d);
  auto [lt, lb] = row_cut(lambda, r);
  auto [mt, mb] = row_cut(mu, r);
  rep.lhs = decomposition_number(lambda, mu, p, rep.d);
  rep.rhs = {decomposition_number(lt, mt, p, r), decomposition_number(lb, mb, p, rep.d - r)};
  return detail::finish(rep);
}

/// dim Hom(Delta(lambda), Delta(mu)) across a row cut.
inline CutReport verify_row_hom(const Partition& lambda, const Partition& mu, int r, Int p, int d = 0) {
  auto rep = detail::row_base("hom", lambda, mu, r, p, d);
  if (!admits_row_cut(lambda, mu, r)) return rep;
  detail::assert_row_window(lambda, mu, r, rep.d);
  auto [lt, lb] = row_cut(lambda, r);
  auto [mt, mb] = row_cut(mu, r);
  const int m = lt.size();
  auto hom = [&](int n, int dd, const Partition& a, const Partition& b) -> Int {
    if (n == 0) return 1;
    return detail::hom_engine(n, dd).hom_dim(a, b, p);
  };
  rep.lhs = hom(rep.n, rep.d, lambda, mu);
  rep.rhs = {hom(m, r, lt, mt), hom(rep.n - m, rep.d - r, lb, mb)};
  return detail::finish(rep);
}

/// psi(g x) = phi(g) psi(x) for every subquotient generator g and window
/// basis vector x of h_{r,c,m}(Sym^mu); also dim = dim(top) * dim(bottom)
/// with psi a bijection of bases.
inline CutReport verify_psi_equivariance(int n, int d, const CutWindow& w, const Partition& mu, Int p) {
  if (!in_window(mu, d, w)) throw std::invalid_argument("psi: mu not in the window");
  CutReport rep;
  rep.kind = "psi";
  rep.n = n;
  rep.d = d;
  rep.p = p;
  rep.mu = mu;
  rep.cut = w.r;
  rep.window = w;
  auto [mt, mb] = row_cut(mu, w.r);
  CutFactor whole(n, d, mu, w, p);
  CutFactor top(w.m, w.r, mt, CutWindow{w.r, w.c, w.m}, p);
  CutFactor bottom(n - w.m, d - w.r, mb, CutWindow{0, w.c, 0}, p);
  rep.lhs = static_cast<Int>(whole.dim());
  rep.rhs = {static_cast<Int>(top.dim()), static_cast<Int>(bottom.dim())};

  std::size_t checks = 0, failures = 0;
  std::string first_failure;
  auto fail = [&](const std::string& what) {
    if (!failures++) first_failure = what;
  };

  // psi on bases
  std::set<std::pair<SymLabel, SymLabel>> images;
  std::vector<SymLabel> xs;
  for (auto& [wt, ls] : whole.labels())
    for (auto& x : ls) {
      xs.push_back(x);
      auto [a, b] = psi_split(x, w, d);
      const auto ta = top.labels().find(w.m ? a.S.weight(w.r) : Composition(std::vector<int>(w.r, 0)));
      const auto tb = bottom.labels().find(n - w.m ? b.S.weight(d - w.r)
                                                   : Composition(std::vector<int>(d - w.r, 0)));
      if (ta == top.labels().end() || std::find(ta->second.begin(), ta->second.end(), a) == ta->second.end() ||
          tb == bottom.labels().end() || std::find(tb->second.begin(), tb->second.end(), b) == tb->second.end())
        fail("psi image outside the factor bases for " + to_string(x));
      images.emplace(a, b);
    }
  if (images.size() != xs.size()) fail("psi not injective on labels");

  auto psi_map = [&](const std::map<SymLabel, Int>& v) {
    std::map<std::pair<SymLabel, SymLabel>, Int> out;
    for (auto& [x, c] : v) out[psi_split(x, w, d)] = c;
    return out;
  };

  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i < d; ++i) {
    if (i == w.r) continue;
    for (int k = 1; k <= n; ++k) {
      gens.push_back(GeneratorSymbol::raise(i, i + 1, k));
      gens.push_back(GeneratorSymbol::lower(i, i + 1, k));
    }
  }
  for (auto& [wt, ls] : whole.labels()) gens.push_back(GeneratorSymbol::idem(wt));

  for (auto& g : gens) {
    const auto [gt, gb] = phi_generator_image(g, w);
    for (auto& x : xs) {
      ++checks;
      const auto lhs = psi_map(whole.act(g, x));
      const auto [a, b] = psi_split(x, w, d);
      std::map<std::pair<SymLabel, SymLabel>, Int> rhs;
      const auto ya = gt ? top.act(*gt, a) : std::map<SymLabel, Int>{{a, 1}};
      const auto yb = gb ? bottom.act(*gb, b) : std::map<SymLabel, Int>{{b, 1}};
      for (auto& [u, cu] : ya)
        for (auto& [v, cv] : yb)
          if (Int c = mod_reduce(cu * cv, p)) rhs[{u, v}] = c;
      if (lhs != rhs) fail(g.to_string() + " on " + to_string(x));
    }
  }
  rep.detail = "checks=" + std::to_string(checks) + " failures=" + std::to_string(failures);
  if (failures) rep.detail += " first: " + first_failure;
  rep.status = failures == 0 && rep.lhs == detail::product(rep.rhs) ? CutStatus::Pass : CutStatus::Fail;
  return rep;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepOptions {
  int n_max = 6, d_max = 3;
  std::vector<Int> primes{2, 3};
  bool rows = true, cols = true, decomp = true, hom = true, psi = false;
  int psi_n_max = 5;
  int jobs = 1;
};

struct SweepReport {
  std::vector<CutReport> reports;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }
};

/// Every window (r, c, m) with a nonempty Lambda+_{n,d}(r,c,m).
inline std::vector<CutWindow> nonempty_windows(int n, int d) {
  std::vector<CutWindow> out;
  for (int r = 0; r <= d; ++r)
    for (int c = 0; c <= n; ++c)
      for (int m = 0; m <= n; ++m) {
        CutWindow w{r, c, m};
        if (!lambda_set(n, d, w).empty()) out.push_back(w);
      }
  return out;
}

namespace detail {
inline std::vector<CutReport> run_tasks(const std::vector<std::function<CutReport()>>& tasks, int jobs) {
  std::vector<CutReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        out[k] = tasks[k]();
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}
}  // namespace detail

/// All factorisation checks over n <= n_max, d <= d_max and the given
/// primes. Non-admitting cuts are recorded as skipped.
inline SweepReport sweep(const SweepOptions& opt) {
  std::vector<std::function<CutReport()>> tasks;
  for (int n = 1; n <= opt.n_max; ++n)
    for (int d = 1; d <= opt.d_max; ++d)
      for (Int p : opt.primes) {
        const auto parts = enumerate_partitions(n, d);
        for (auto& lam : parts)
          for (auto& mu : parts) {
            if (!dominates(lam, mu) && !dominates(mu, lam)) continue;
            for (int r = 1; r < d; ++r) {
              if (opt.rows) tasks.push_back([=] { return verify_row_kostka(lam, mu, r, p, d); });
              if (opt.decomp) tasks.push_back([=] { return verify_row_decomp(lam, mu, r, p, d); });
              if (opt.hom) tasks.push_back([=] { return verify_row_hom(lam, mu, r, p, d); });
            }
            if (opt.cols)
              for (int c = 1; c < std::max(lam[0], mu[0]); ++c)
                tasks.push_back([=] { return verify_col_kostka(lam, mu, c, p, d); });
          }
        if (opt.psi && n <= opt.psi_n_max)
          for (auto& w : nonempty_windows(n, d))
            for (auto& mu : lambda_set(n, d, w))
              tasks.push_back([=] { return verify_psi_equivariance(n, d, w, mu, p); });
      }
  SweepReport rep;
  rep.reports = detail::run_tasks(tasks, opt.jobs);
  for (auto& r : rep.reports) {
    if (r.status == CutStatus::Pass) ++rep.passed;
    else if (r.status == CutStatus::Fail) ++rep.failed;
    else ++rep.skipped;
  }
  return rep;
}

}  // namespace schurcut
