#pragma once

// Smith normal form over Z and finitely generated abelian groups.

#include "nilcone/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilcone {

/// Dense integer matrix, row-major. Either dimension may be 0.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: entry count != rows*cols");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given integer vectors, all of length `rows`.
  template <typename Column>
  static IntMatrix from_columns(std::size_t rows, const std::vector<Column>& columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (static_cast<std::size_t>(std::size(columns[c])) != rows)
        throw std::invalid_argument("IntMatrix::from_columns: column length mismatch");
      std::size_t r = 0;
      for (const auto& x : columns[c]) m(r++, c) = BigInt(x);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<BigInt>& entries() const { return entries_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: incompatible shapes for product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

struct SmithDecomposition {
  IntMatrix U;  ///< rows x rows, unimodular
  IntMatrix D;  ///< rows x cols, diagonal, d_1 | d_2 | ... >= 0
  IntMatrix V;  ///< cols x cols, unimodular

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k) d.push_back(D(k, k));
    return d;
  }
};

/// U * M * V = D. Pivots are chosen by minimal absolute value.
inline SmithDecomposition smith_normal_form(const IntMatrix& M) {
  const std::size_t rows = M.rows();
  const std::size_t cols = M.cols();
  SmithDecomposition out{IntMatrix::identity(rows), M, IntMatrix::identity(cols)};
  IntMatrix& D = out.D;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  auto abs_of = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block
    bool found = false;
    std::size_t pr = t, pc = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (D(i, j) != 0 && (!found || abs_of(D(i, j)) < best)) {
          found = true;
          best = abs_of(D(i, j));
          pr = i;
          pc = j;
        }
    if (!found) break;

    for (;;) {
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q = D(i, t) / D(t, t);
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q = D(t, j) / D(t, t);
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }

      if (clean) {
        // pivot must divide the whole trailing block
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (D(i, j) % D(t, t) != 0) {
              D.add_row(t, i, 1);
              U.add_row(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }

      // remainders are strictly smaller than the pivot; move the smallest to (t,t)
      pr = t;
      pc = t;
      best = abs_of(D(t, t));
      for (std::size_t i = t + 1; i < rows; ++i)
        if (D(i, t) != 0 && abs_of(D(i, t)) < best) {
          best = abs_of(D(i, t));
          pr = i;
          pc = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (D(t, j) != 0 && abs_of(D(t, j)) < best) {
          best = abs_of(D(t, j));
          pr = t;
          pc = j;
        }
    }

    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return out;
}

/// Z^free_rank + Z/d_1 + ... + Z/d_t with d_k >= 2 and d_1 | d_2 | ... .
struct FGAbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> invariant_factors;

  static FGAbelianGroup free(int rank) { return {rank, {}}; }
  static FGAbelianGroup cyclic(const BigInt& order) {
    if (order == 0) return free(1);
    BigInt d = order < 0 ? BigInt(-order) : order;
    if (d == 1) return {};
    return {0, {d}};
  }

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }

  /// Product of invariant factors (1 for a torsion-free group).
  BigInt torsion_order() const {
    BigInt p = 1;
    for (const auto& d : invariant_factors) p *= d;
    return p;
  }

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

  /// `Z^2 x Z/2`, `Z`, `Z/2`, and `1` for the trivial group.
  std::string to_string() const {
    if (is_trivial()) return "1";
    std::vector<std::string> pieces;
    if (free_rank == 1) pieces.push_back("Z");
    if (free_rank > 1) pieces.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : invariant_factors) pieces.push_back("Z/" + d.str());
    std::string s;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (k) s += " x ";
      s += pieces[k];
    }
    return s;
  }
};

/// Cokernel of M : Z^cols -> Z^rows.
inline FGAbelianGroup cokernel(const IntMatrix& M) {
  auto snf = smith_normal_form(M);
  FGAbelianGroup g;
  int rank = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) g.invariant_factors.push_back(d);
  }
  g.free_rank = static_cast<int>(M.rows()) - rank;
  return g;
}

}  // namespace nilcone
