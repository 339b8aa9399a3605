#pragma once

// Exact dense linear algebra over Z and GF(p).

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace schurcut {

using Int = std::int64_t;

/// Dense row-major matrix.
template <class T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), data(r * c, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }
  Matrix transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool operator==(const Matrix&) const = default;
};

using IntMatrix = Matrix<Int>;

inline Int mod_reduce(Int x, Int p) {
  x %= p;
  return x < 0 ? x + p : x;
}

inline Int mod_inverse(Int a, Int p) {
  Int t = 0, nt = 1, r = p, nr = mod_reduce(a, p);
  while (nr != 0) {
    const Int q = r / nr;
    std::tie(t, nt) = std::pair{nt, t - q * nt};
    std::tie(r, nr) = std::pair{nr, r - q * nr};
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  return t < 0 ? t + p : t;
}

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

namespace detail {
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer elimination overflow");
  return r;
}
inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer elimination overflow");
  return r;
}
}  // namespace detail

/// Row-reduce a copy of `m` over GF(p); returns the rank.
inline std::size_t rank_mod_p(IntMatrix m, Int p) {
  for (auto& x : m.data) x = mod_reduce(x, p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    const Int inv = mod_inverse(m(rank, col), p);
    for (std::size_t j = col; j < m.cols; ++j) m(rank, j) = m(rank, j) * inv % p;
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const Int f = m(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = mod_reduce(m(i, j) - f * m(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

/// Reduced row echelon form over GF(p) in place; returns pivot columns.
inline std::vector<std::size_t> rref_mod_p(IntMatrix& m, Int p) {
  for (auto& x : m.data) x = mod_reduce(x, p);
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    const Int inv = mod_inverse(m(rank, col), p);
    for (std::size_t j = 0; j < m.cols; ++j) m(rank, j) = m(rank, j) * inv % p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      const Int f = m(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = mod_reduce(m(i, j) - f * m(rank, j), p);
    }
    pivots.push_back(col);
    ++rank;
  }
  m.data.resize(rank * m.cols);
  m.rows = rank;
  return pivots;
}

/// Result of unimodular elimination of a square integer matrix.
struct UnimodularInverse {
  Int determinant = 0;
  IntMatrix inverse;  ///< valid only when |determinant| == 1
};

/// Euclidean row reduction over Z (only unimodular row operations and
/// column swaps), so the determinant is exact; when it is +-1 the integral
/// inverse is returned. Pivots are chosen by smallest magnitude over the
/// whole remaining block, then by sparsest row, which keeps entries small on
/// the 0/1-heavy matrices met here.
/// Throws std::overflow_error if an intermediate leaves int64.
inline UnimodularInverse unimodular_inverse(IntMatrix a) {
  if (a.rows != a.cols) throw std::invalid_argument("unimodular_inverse: matrix not square");
  const std::size_t n = a.rows;
  IntMatrix u = IntMatrix::identity(n);
  std::vector<std::size_t> colperm(n);
  for (std::size_t j = 0; j < n; ++j) colperm[j] = j;
  Int sign = 1;
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(i, j), a(k, j));
      std::swap(u(i, j), u(k, j));
    }
    sign = -sign;
  };
  auto swap_cols = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, k));
    std::swap(colperm[i], colperm[k]);
    sign = -sign;
  };
  auto axpy = [&](std::size_t target, std::size_t src, Int q) {  // row_t -= q * row_s
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(src, j)) a(target, j) = detail::checked_sub(a(target, j), detail::checked_mul(q, a(src, j)));
      if (u(src, j)) u(target, j) = detail::checked_sub(u(target, j), detail::checked_mul(q, u(src, j)));
    }
  };

  UnimodularInverse result;
  std::vector<std::size_t> weight(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = col; i < n; ++i) {
      weight[i] = 0;
      for (std::size_t j = col; j < n; ++j) weight[i] += a(i, j) != 0;
    }
    std::size_t bi = n, bj = n;
    for (std::size_t i = col; i < n; ++i)
      for (std::size_t j = col; j < n; ++j) {
        const Int x = a(i, j);
        if (!x) continue;
        if (bi == n || std::llabs(x) < std::llabs(a(bi, bj)) ||
            (std::llabs(x) == std::llabs(a(bi, bj)) && weight[i] < weight[bi])) {
          bi = i;
          bj = j;
        }
      }
    if (bi == n) return result;  // singular: determinant 0
    swap_rows(col, bi);
    swap_cols(col, bj);
    while (true) {
      std::size_t best = n;
      for (std::size_t i = col; i < n; ++i)
        if (a(i, col) != 0 && (best == n || std::llabs(a(i, col)) < std::llabs(a(best, col)))) best = i;
      swap_rows(col, best);
      bool clean = true;
      for (std::size_t i = col + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        axpy(i, col, a(i, col) / a(col, col));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  Int det = sign;
  for (std::size_t i = 0; i < n; ++i) det = detail::checked_mul(det, a(i, i));
  result.determinant = det;
  if (std::llabs(det) != 1) return result;

  // back substitution: make a the identity
  for (std::size_t col = n; col-- > 0;) {
    if (a(col, col) == -1) {
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) = -a(col, j);
        u(col, j) = -u(col, j);
      }
    }
    for (std::size_t i = 0; i < col; ++i) axpy(i, col, a(i, col));
  }
  // u = (A P)^{-1}, so A^{-1} = P u: row colperm[j] of the inverse is row j of u
  result.inverse = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) result.inverse(colperm[j], k) = u(j, k);
  return result;
}

/// Inverse of a square matrix over GF(p); nullopt if singular.
inline std::optional<IntMatrix> inverse_mod_p(const IntMatrix& a, Int p) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse_mod_p: matrix not square");
  const std::size_t n = a.rows;
  IntMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref_mod_p(aug, p);
  if (piv.size() < n || (n && piv[n - 1] != n - 1)) return std::nullopt;
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Dimension of the null space of a matrix over GF(p).
inline std::size_t nullity_mod_p(const IntMatrix& m, Int p) { return m.cols - rank_mod_p(m, p); }

}  // namespace schurcut
