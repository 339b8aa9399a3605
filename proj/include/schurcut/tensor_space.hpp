#pragma once

// Tensor space (k^d)^{(x)n}: sparse vectors over elementary tensors, the
// place-permutation action of S_n, and Murphy's integral basis.

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"

namespace schurcut {

/// Elementary tensor v_{i1} (x) ... (x) v_{in}, packed four bits per letter
/// with position 1 most significant, so numeric order is lexicographic.
using WordKey = std::uint64_t;

inline constexpr int kMaxTensorDegree = 16;
inline constexpr int kMaxRank = 15;

inline int letter(WordKey w, int n, int pos) {  // pos is 0-based
  return static_cast<int>((w >> (4 * (n - 1 - pos))) & 0xF);
}
inline WordKey with_letter(WordKey w, int n, int pos, int value) {
  const int shift = 4 * (n - 1 - pos);
  return (w & ~(WordKey{0xF} << shift)) | (static_cast<WordKey>(value) << shift);
}
inline WordKey encode_word(const std::vector<int>& letters) {
  WordKey w = 0;
  for (int x : letters) w = (w << 4) | static_cast<WordKey>(x);
  return w;
}
inline std::vector<int> decode_word(WordKey w, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = letter(w, n, k);
  return out;
}
inline Composition word_weight(WordKey w, int n, int d) {
  std::vector<int> c(static_cast<std::size_t>(d), 0);
  for (int k = 0; k < n; ++k) ++c[static_cast<std::size_t>(letter(w, n, k) - 1)];
  return Composition(std::move(c));
}

/// All words of the given weight, in lexicographic order.
inline std::vector<WordKey> words_of_weight(const Composition& mu) {
  std::vector<int> letters;
  for (int i = 0; i < mu.length(); ++i) letters.insert(letters.end(), static_cast<std::size_t>(mu.parts[static_cast<std::size_t>(i)]), i + 1);
  std::vector<WordKey> out;
  do out.push_back(encode_word(letters));
  while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

/// Finitely supported vector in tensor space. modulus 0 means exact integers,
/// otherwise coefficients are canonical residues mod a prime.
class TensorVector {
 public:
  TensorVector(int n, int d, Int modulus = 0) : n_(n), d_(d), modulus_(modulus) {
    if (n < 0 || n > kMaxTensorDegree || d < 0 || d > kMaxRank)
      throw std::invalid_argument("tensor space: n or d out of supported range");
  }

  static TensorVector word(int n, int d, const std::vector<int>& letters, Int modulus = 0) {
    if (static_cast<int>(letters.size()) != n) throw std::invalid_argument("word: wrong length");
    for (int x : letters)
      if (x < 1 || x > d) throw std::invalid_argument("word: letter out of range");
    TensorVector v(n, d, modulus);
    v.add(encode_word(letters), 1);
    return v;
  }

  int n() const { return n_; }
  int d() const { return d_; }
  Int modulus() const { return modulus_; }
  const std::map<WordKey, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Int coefficient(WordKey w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(WordKey w, Int c) {
    if (modulus_) c = mod_reduce(c, modulus_);
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (modulus_) it->second %= modulus_;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorVector& operator+=(const TensorVector& o) {
    check_compatible(o);
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  TensorVector& operator-=(const TensorVector& o) {
    check_compatible(o);
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  TensorVector& operator*=(Int s) {
    if (modulus_) s = mod_reduce(s, modulus_);
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (modulus_) it->second %= modulus_;
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(Int s, TensorVector a) { return a *= s; }

  bool operator==(const TensorVector& o) const {
    return n_ == o.n_ && d_ == o.d_ && terms_ == o.terms_;
  }

  /// Same vector with coefficients reduced mod p.
  TensorVector reduced(Int p) const {
    TensorVector r(n_, d_, p);
    for (auto& [w, c] : terms_) r.add(w, c);
    return r;
  }

  /// The common weight of all terms; nullopt if zero or inhomogeneous.
  std::optional<Composition> homogeneous_weight() const {
    std::optional<Composition> wt;
    for (auto& [w, c] : terms_) {
      auto x = word_weight(w, n_, d_);
      if (wt && *wt != x) return std::nullopt;
      wt = std::move(x);
    }
    return wt;
  }

  /// One line per word, "i1i2...in: coefficient", lexicographic order.
  std::string dump() const {
    std::ostringstream os;
    for (auto& [w, c] : terms_) {
      for (int k = 0; k < n_; ++k) os << letter(w, n_, k);
      os << ": " << c << '\n';
    }
    return os.str();
  }

 private:
  void check_compatible(const TensorVector& o) const {
    if (n_ != o.n_ || d_ != o.d_ || modulus_ != o.modulus_)
      throw std::invalid_argument("tensor vectors from different spaces");
  }

  int n_, d_;
  Int modulus_;
  std::map<WordKey, Int> terms_;
};

// ---------------------------------------------------------------------------
// Symmetric group

/// Permutation of {0..n-1}; image[k] is k under the permutation. Products are
/// read left to right: (s*u)(k) = u(s(k)), matching the right action.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n) {
    Permutation p;
    for (int k = 0; k < n; ++k) p.image.push_back(k);
    return p;
  }
  int size() const { return static_cast<int>(image.size()); }
  int operator()(int k) const { return image[static_cast<std::size_t>(k)]; }

  Permutation inverse() const {
    Permutation q;
    q.image.resize(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) q.image[static_cast<std::size_t>(image[k])] = static_cast<int>(k);
    return q;
  }
  friend Permutation operator*(const Permutation& s, const Permutation& u) {
    Permutation r;
    r.image.resize(s.image.size());
    for (std::size_t k = 0; k < s.image.size(); ++k) r.image[k] = u(s.image[k]);
    return r;
  }
  auto operator<=>(const Permutation&) const = default;
};

/// Right place-permutation action: the letter in position k moves to
/// position s(k).
inline WordKey permute_word(WordKey w, int n, const Permutation& s) {
  WordKey out = 0;
  for (int k = 0; k < n; ++k) out = with_letter(out, n, s(k), letter(w, n, k));
  return out;
}

inline TensorVector permute(const TensorVector& v, const Permutation& s) {
  if (s.size() != v.n()) throw std::invalid_argument("permute: wrong degree");
  TensorVector out(v.n(), v.d(), v.modulus());
  for (auto& [w, c] : v.terms()) out.add(permute_word(w, v.n(), s), c);
  return out;
}

/// d_t: the permutation with (t^lambda) d_t = t, as a map on entries (0-based).
inline Permutation d_of(const Tableau& t) {
  const auto init = initial_standard(t.shape());
  Permutation p;
  p.image.resize(static_cast<std::size_t>(t.size()));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.rows[i].size(); ++j)
      p.image[static_cast<std::size_t>(init.rows[i][j] - 1)] = t.rows[i][j] - 1;
  return p;
}

// ---------------------------------------------------------------------------
// Murphy basis

/// Row-reading elementary tensor e_S.
inline TensorVector elementary(const Tableau& s, int d, Int modulus = 0) {
  return TensorVector::word(s.size(), d, s.reading_word(), modulus);
}

namespace detail {
/// Distinct fillings obtained by permuting entries within each row.
inline std::vector<std::vector<std::vector<int>>> row_rearrangements(const Tableau& s) {
  std::vector<std::vector<std::vector<int>>> acc{{}};
  for (const auto& row : s.rows) {
    std::vector<int> r(row);
    std::sort(r.begin(), r.end());
    std::vector<std::vector<int>> perms;
    do perms.push_back(r);
    while (std::next_permutation(r.begin(), r.end()));
    std::vector<std::vector<std::vector<int>>> next;
    for (auto& prefix : acc)
      for (auto& pr : perms) {
        auto ext = prefix;
        ext.push_back(pr);
        next.push_back(std::move(ext));
      }
    acc = std::move(next);
  }
  return acc;
}
}  // namespace detail

/// rho_{St} = O_lambda(e_S) d_t. The orbit sum runs over distinct row
/// rearrangements of S; applying d_t sends the letter in cell c to position
/// t(c).
inline TensorVector rho(const Tableau& s, const Tableau& t, int d, Int modulus = 0) {
  if (s.shape() != t.shape()) throw std::invalid_argument("rho: shapes differ");
  const int n = s.size();
  TensorVector out(n, d, modulus);
  for (const auto& filling : detail::row_rearrangements(s)) {
    WordKey w = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.rows[i].size(); ++j)
        w = with_letter(w, n, t.rows[i][j] - 1, filling[i][j]);
    out.add(w, 1);
  }
  return out;
}

/// rho_{ST} = sum over t in [T]_mu of rho_{St}.
inline TensorVector rho_sum(const Tableau& s, const Tableau& t, const Composition& mu, int d, Int modulus = 0) {
  TensorVector out(s.size(), d, modulus);
  for (const auto& std_t : orbit(t, mu)) out += rho(s, std_t, d, modulus);
  return out;
}

struct MurphyIndex {
  Partition shape;
  Tableau S;
  Tableau t;
  auto operator<=>(const MurphyIndex&) const = default;
};

/// All (S, t) labels of weight mu: shapes lexicographically descending,
/// then S, then t in enumeration order.
inline std::vector<MurphyIndex> murphy_labels(const Composition& mu, int d) {
  std::vector<MurphyIndex> out;
  for (const auto& lambda : enumerate_partitions(mu.size(), d)) {
    const auto ss = enumerate_sstd(lambda, mu);
    if (ss.empty()) continue;
    const auto ts = enumerate_std(lambda);
    for (const auto& s : ss)
      for (const auto& t : ts) out.push_back({lambda, s, t});
  }
  return out;
}

inline std::vector<std::pair<MurphyIndex, TensorVector>> murphy_block(const Composition& mu, int d) {
  std::vector<std::pair<MurphyIndex, TensorVector>> out;
  for (auto& idx : murphy_labels(mu, d)) {
    auto v = rho(idx.S, idx.t, d);
    out.emplace_back(std::move(idx), std::move(v));
  }
  return out;
}

/// Change of coordinates to the Murphy basis of one weight space.
struct MurphyWeightBlock {
  Composition weight;
  std::vector<MurphyIndex> labels;
  std::vector<WordKey> words;          ///< lexicographic
  std::map<WordKey, std::size_t> row;  ///< word -> index in `words`
  IntMatrix basis;                     ///< words x labels, column j = rho of labels[j]
  Int determinant = 0;
  IntMatrix inverse;                   ///< labels x words, integral
  std::map<MurphyIndex, std::size_t> label_index;
};

/// Lazily built Murphy coordinate blocks for (k^d)^{(x)n}. Not thread safe;
/// use one instance per thread.
class MurphyBasis {
 public:
  MurphyBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || n > kMaxTensorDegree || d < 0 || d > kMaxRank)
      throw std::invalid_argument("MurphyBasis: n or d out of range");
  }

  int n() const { return n_; }
  int d() const { return d_; }

  const MurphyWeightBlock& block(const Composition& mu) {
    if (mu.length() != d_ || mu.size() != n_) throw std::invalid_argument("MurphyBasis: weight mismatch");
    auto it = blocks_.find(mu);
    if (it != blocks_.end()) return *it->second;
    auto b = std::make_unique<MurphyWeightBlock>();
    b->weight = mu;
    b->labels = murphy_labels(mu, d_);
    b->words = words_of_weight(mu);
    for (std::size_t i = 0; i < b->words.size(); ++i) b->row[b->words[i]] = i;
    for (std::size_t j = 0; j < b->labels.size(); ++j) b->label_index[b->labels[j]] = j;
    if (b->labels.size() != b->words.size()) throw std::logic_error("Murphy block is not square");
    b->basis = IntMatrix(b->words.size(), b->labels.size());
    for (std::size_t j = 0; j < b->labels.size(); ++j) {
      const auto v = rho(b->labels[j].S, b->labels[j].t, d_);
      for (auto& [w, c] : v.terms()) b->basis(b->row.at(w), j) = c;
    }
    auto inv = unimodular_inverse(b->basis);
    b->determinant = inv.determinant;
    if (std::llabs(inv.determinant) != 1) throw std::logic_error("Murphy block is not unimodular");
    b->inverse = std::move(inv.inverse);
    return *blocks_.emplace(mu, std::move(b)).first->second;
  }

  /// Murphy coordinates of a homogeneous vector (reduced mod v.modulus()).
  std::vector<Int> coordinates(const TensorVector& v, const Composition& mu) {
    const auto& b = block(mu);
    std::vector<Int> x(b.labels.size(), 0);
    const Int p = v.modulus();
    for (auto& [w, c] : v.terms()) {
      auto it = b.row.find(w);
      if (it == b.row.end()) throw std::invalid_argument("coordinates: vector not of the given weight");
      const std::size_t col = it->second;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Int a = b.inverse(i, col);
        if (a == 0) continue;
        x[i] = p ? mod_reduce(x[i] + mod_reduce(a, p) * c, p) : detail::checked_sub(x[i], detail::checked_mul(-a, c));
      }
    }
    return x;
  }

  /// Sparse coordinates keyed by label.
  std::map<MurphyIndex, Int> to_murphy(const TensorVector& v) {
    std::map<MurphyIndex, Int> out;
    if (v.is_zero()) return out;
    auto wt = v.homogeneous_weight();
    if (!wt) throw std::invalid_argument("to_murphy: inhomogeneous vector");
    const auto x = coordinates(v, *wt);
    const auto& b = block(*wt);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) out.emplace(b.labels[i], x[i]);
    return out;
  }

  TensorVector reconstruct(const std::map<MurphyIndex, Int>& coords, Int modulus = 0) const {
    TensorVector out(n_, d_, modulus);
    for (auto& [idx, c] : coords) out += c * rho(idx.S, idx.t, d_, modulus);
    return out;
  }

 private:
  int n_, d_;
  std::map<Composition, std::unique_ptr<MurphyWeightBlock>> blocks_;
};

}  // namespace schurcut
