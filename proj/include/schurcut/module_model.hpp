#pragma once

// Finite-dimensional weight-graded modules for S(n,d), stored as one matrix
// per (generator, source weight). Generators are the divided powers
// e^{[m]}_{i,i+1}, f^{[m]}_{i,i+1}; idempotents act through the grading.

#include <optional>

#include "linalg.hpp"
#include "schur_action.hpp"

namespace schurcut {

/// Weight reached from `w` by a raising/lowering symbol; nullopt if a part
/// would become negative.
inline std::optional<Composition> target_weight(const GeneratorSymbol& g, const Composition& w) {
  if (g.kind == GeneratorSymbol::Kind::Idem) return w;
  auto t = w.parts;
  const auto i = static_cast<std::size_t>(g.i - 1), j = static_cast<std::size_t>(g.j - 1);
  if (j >= t.size()) return std::nullopt;
  if (g.kind == GeneratorSymbol::Kind::Raise) {
    t[i] += g.m;
    t[j] -= g.m;
  } else {
    t[i] -= g.m;
    t[j] += g.m;
  }
  if (t[i] < 0 || t[j] < 0) return std::nullopt;
  return Composition(std::move(t));
}

/// e^{[m]}_{i,i+1} and f^{[m]}_{i,i+1} for 1 <= i < d, 1 <= m <= n; together
/// with the idempotents they generate S(n,d) over any field.
inline std::vector<GeneratorSymbol> simple_generators(int n, int d) {
  std::vector<GeneratorSymbol> out;
  for (int i = 1; i < d; ++i)
    for (int m = 1; m <= n; ++m) {
      out.push_back(GeneratorSymbol::raise(i, i + 1, m));
      out.push_back(GeneratorSymbol::lower(i, i + 1, m));
    }
  return out;
}

struct ModuleModel {
  int n = 0, d = 0;
  Int modulus = 0;  ///< 0: matrices over Z
  std::map<Composition, std::size_t> dims;  ///< nonzero weight spaces only
  std::map<std::pair<GeneratorSymbol, Composition>, IntMatrix> action;  ///< target x source

  std::size_t dim(const Composition& w) const {
    auto it = dims.find(w);
    return it == dims.end() ? 0 : it->second;
  }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto& [w, k] : dims) s += k;
    return s;
  }
  /// nullptr means the zero map.
  const IntMatrix* matrix(const GeneratorSymbol& g, const Composition& source) const {
    auto it = action.find({g, source});
    return it == action.end() ? nullptr : &it->second;
  }

  /// Contravariant dual: g acts by the transpose of g* in the dual basis.
  ModuleModel dual() const {
    ModuleModel out{n, d, modulus, dims, {}};
    for (auto& [key, m] : action) {
      auto tgt = target_weight(key.first, key.second);
      out.action[{key.first.star(), *tgt}] = m.transpose();
    }
    return out;
  }

  ModuleModel reduced(Int p) const {
    ModuleModel out{n, d, p, dims, {}};
    for (auto& [key, m] : action) {
      IntMatrix r = m;
      bool nonzero = false;
      for (auto& x : r.data) nonzero |= (x = mod_reduce(x, p)) != 0;
      if (nonzero) out.action.emplace(key, std::move(r));
    }
    return out;
  }
};

namespace detail {
inline IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, Int p) {
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = (c(i, j) + x * b(k, j)) % p;
    }
  return c;
}
}  // namespace detail

/// dim Hom(A, B) over GF(p): nullity of the intertwiner equations
/// B_g X_w = X_{w'} A_g for every generator g : w -> w'.
inline std::size_t hom_dimension(const ModuleModel& A, const ModuleModel& B, Int p,
                                 const std::vector<GeneratorSymbol>& gens) {
  // unknowns: X_w for weights present in both
  std::map<Composition, std::size_t> offset;
  std::size_t unknowns = 0;
  for (auto& [w, da] : A.dims) {
    const std::size_t db = B.dim(w);
    if (!db) continue;
    offset[w] = unknowns;
    unknowns += da * db;
  }
  if (unknowns == 0) return 0;
  std::vector<std::vector<Int>> rows;
  auto var = [&](const Composition& w, std::size_t i, std::size_t j) {  // X_w(i, j), i in B, j in A
    return offset.at(w) + i * A.dim(w) + j;
  };
  for (auto& g : gens)
    for (auto& [w, da] : A.dims) {
      auto tgt = target_weight(g, w);
      if (!tgt) continue;
      const std::size_t db_src = B.dim(w), db_tgt = B.dim(*tgt), da_tgt = A.dim(*tgt);
      if (db_tgt == 0) continue;
      const IntMatrix* ag = A.matrix(g, w);
      const IntMatrix* bg = B.matrix(g, w);
      // equation entries (r, c): r in B_tgt, c in A_w
      for (std::size_t r = 0; r < db_tgt; ++r)
        for (std::size_t c = 0; c < da; ++c) {
          std::vector<Int> row(unknowns, 0);
          bool any = false;
          if (bg && db_src)
            for (std::size_t k = 0; k < db_src; ++k)
              if (Int x = mod_reduce((*bg)(r, k), p)) {
                auto& e = row[var(w, k, c)];
                e = (e + x) % p;
                any = true;
              }
          if (ag && da_tgt)
            for (std::size_t k = 0; k < da_tgt; ++k)
              if (Int x = mod_reduce((*ag)(k, c), p)) {
                auto& e = row[var(*tgt, r, k)];
                e = mod_reduce(e - x, p);
                any = true;
              }
          if (any) rows.push_back(std::move(row));
        }
    }
  IntMatrix m(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) m(i, j) = rows[i][j];
  return unknowns - (rows.empty() ? 0 : rank_mod_p(m, p));
}

/// Vectors of weight w killed by every raising generator, over GF(p).
inline std::size_t primitive_dimension(const ModuleModel& M, const Composition& w, Int p,
                                       const std::vector<GeneratorSymbol>& gens) {
  const std::size_t dw = M.dim(w);
  if (!dw) return 0;
  std::vector<std::vector<Int>> rows;
  for (auto& g : gens) {
    if (g.kind != GeneratorSymbol::Kind::Raise) continue;
    if (const IntMatrix* a = M.matrix(g, w))
      for (std::size_t r = 0; r < a->rows; ++r) {
        std::vector<Int> row(dw);
        for (std::size_t c = 0; c < dw; ++c) row[c] = mod_reduce((*a)(r, c), p);
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return dw;
  IntMatrix m(rows.size(), dw);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dw; ++j) m(i, j) = rows[i][j];
  return dw - rank_mod_p(m, p);
}

}  // namespace schurcut
