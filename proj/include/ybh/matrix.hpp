#pragma once

// Sparse matrices over k and the tensor calculus on V^{(x)n}, dim V = 2.
//
// A matrix of a map V^{(x)m} -> V^{(x)p} has 2^p rows and 2^m columns; columns
// are inputs. Basis vectors e_{i1} (x) ... (x) e_{in} are ordered
// lexicographically, first tensor factor most significant, which is the order
// produced by kron().

#include "ybh/laurent.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybh {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Basis vector of V^{(x)n} written as its digit sequence (i_1, ..., i_n), i_t in {1, 2}.
struct TensorIndex {
  std::vector<int> digits;

  std::size_t degree() const { return digits.size(); }

  std::size_t flat() const {
    std::size_t idx = 0;
    for (int d : digits) {
      if (d != 1 && d != 2) throw std::out_of_range("TensorIndex: digit must be 1 or 2");
      idx = (idx << 1) | static_cast<std::size_t>(d - 1);
    }
    return idx;
  }

  static TensorIndex from_flat(std::size_t n, std::size_t idx) {
    if (n < 64 && idx >= (std::size_t{1} << n)) throw std::out_of_range("TensorIndex: flat index out of range");
    TensorIndex t;
    t.digits.resize(n);
    for (std::size_t k = 0; k < n; ++k) t.digits[n - 1 - k] = static_cast<int>((idx >> k) & 1U) + 1;
    return t;
  }

  bool operator==(const TensorIndex&) const = default;
};

inline std::size_t tensor_dim(std::size_t n) { return std::size_t{1} << n; }

class RingMatrix {
public:
  using Entry = std::pair<std::size_t, LaurentPoly>;
  using Row = std::vector<Entry>; // sorted by column, no zero values

  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  /// Dense row-major literal; zeros are not stored.
  RingMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> dense) {
    rows_.resize(dense.size());
    std::size_t r = 0;
    for (const auto& row : dense) {
      if (r == 0) cols_ = row.size();
      if (row.size() != cols_) throw DimensionError("RingMatrix: ragged literal");
      std::size_t c = 0;
      for (const auto& v : row) {
        if (!v.is_zero()) rows_[r].emplace_back(c, v);
        ++c;
      }
      ++r;
    }
  }

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, LaurentPoly(1));
    return m;
  }
  /// Identity on V^{(x)n}.
  static RingMatrix tensor_identity(std::size_t n) { return identity(tensor_dim(n)); }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const Row& row(std::size_t r) const { return rows_.at(r); }

  LaurentPoly at(std::size_t r, std::size_t c) const {
    check_bounds(r, c);
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) return it->second;
    return {};
  }

  void set(std::size_t r, std::size_t c, LaurentPoly v) {
    check_bounds(r, c);
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
    const bool present = it != row.end() && it->first == c;
    if (v.is_zero()) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(v);
    } else {
      row.emplace(it, c, std::move(v));
    }
  }

  void add_to(std::size_t r, std::size_t c, const LaurentPoly& v) {
    if (v.is_zero()) return;
    set(r, c, at(r, c) + v);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  /// Column c as a dense vector.
  std::vector<LaurentPoly> column(std::size_t c) const {
    std::vector<LaurentPoly> out(rows());
    for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
    return out;
  }

  bool operator==(const RingMatrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) return false;
    return rows_ == o.rows_;
  }

  RingMatrix transpose() const {
    RingMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    return t;
  }

  RingMatrix& operator+=(const RingMatrix& o) { return combine(o, false); }
  RingMatrix& operator-=(const RingMatrix& o) { return combine(o, true); }
  friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
  friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }
  RingMatrix operator-() const { return LaurentPoly(-1) * *this; }

  friend RingMatrix operator*(const LaurentPoly& s, const RingMatrix& m) {
    RingMatrix out(m.rows(), m.cols());
    if (s.is_zero()) return out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.rows_[r].reserve(m.rows_[r].size());
      for (const auto& [c, v] : m.rows_[r]) out.rows_[r].emplace_back(c, s * v);
    }
    return out;
  }

  /// Matrix product a*b (apply b first).
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols() != b.rows())
      throw DimensionError("compose: " + a.shape() + " * " + b.shape());
    RingMatrix out(a.rows(), b.cols());
    std::vector<LaurentPoly> acc(b.cols());
    std::vector<char> touched(b.cols(), 0);
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      used.clear();
      for (const auto& [k, aik] : a.rows_[i]) {
        for (const auto& [j, bkj] : b.rows_[k]) {
          if (!touched[j]) {
            touched[j] = 1;
            used.push_back(j);
          }
          acc[j] += aik * bkj;
        }
      }
      std::sort(used.begin(), used.end());
      auto& row = out.rows_[i];
      for (std::size_t j : used) {
        if (!acc[j].is_zero()) row.emplace_back(j, std::move(acc[j]));
        acc[j] = LaurentPoly{};
        touched[j] = 0;
      }
    }
    return out;
  }

  std::string shape() const { return std::to_string(rows()) + "x" + std::to_string(cols_); }

  friend RingMatrix kron(const RingMatrix& a, const RingMatrix& b);

private:
  void check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols_) throw std::out_of_range("RingMatrix: index out of range");
  }

  RingMatrix& combine(const RingMatrix& o, bool subtract) {
    if (rows() != o.rows() || cols_ != o.cols_) throw DimensionError("add: " + shape() + " vs " + o.shape());
    for (std::size_t r = 0; r < rows(); ++r) {
      const Row& a = rows_[r];
      const Row& b = o.rows_[r];
      if (b.empty()) continue;
      Row merged;
      merged.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          merged.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          merged.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
          ++j;
        } else {
          LaurentPoly v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
          if (!v.is_zero()) merged.emplace_back(a[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      rows_[r] = std::move(merged);
    }
    return *this;
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

inline RingMatrix compose(const RingMatrix& a, const RingMatrix& b) { return a * b; }

/// Kronecker product; the factor `a` indexes the more significant tensor positions.
inline RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k)
      for (const auto& [j, aij] : a.rows_[i])
        for (const auto& [l, bkl] : b.rows_[k]) out.rows_[i * b.rows() + k].emplace_back(j * b.cols() + l, aij * bkl);
  return out;
}

/// Left-to-right Kronecker product of several factors (horizontal concatenation).
inline RingMatrix kron(std::initializer_list<RingMatrix> factors) {
  RingMatrix out = RingMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

/// Entrywise equality for same-shape matrices; throws on a shape mismatch.
inline bool mat_equal_upto_column_order(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("mat_equal: " + a.shape() + " vs " + b.shape());
  return a == b;
}

// Text format: `rows cols` on the first line, then `row col <poly>` for every
// nonzero entry in row-major order, polynomials in the exchange grammar.

inline void write_matrix(std::ostream& os, const RingMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) os << r << ' ' << c << ' ' << to_string(v) << '\n';
}

inline std::string matrix_to_text(const RingMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

inline RingMatrix read_matrix(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("matrix: missing header");
  std::istringstream hdr(line);
  std::size_t rows = 0, cols = 0;
  if (!(hdr >> rows >> cols)) throw ParseError("matrix: bad header '" + line + "'");
  RingMatrix m(rows, cols);
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::size_t r = 0, c = 0;
    if (!(ls >> r >> c)) throw ParseError("matrix: bad entry line '" + line + "'");
    std::string rest;
    std::getline(ls, rest);
    if (r >= rows || c >= cols) throw ParseError("matrix: entry out of range '" + line + "'");
    m.set(r, c, parse_laurent(rest));
  }
  return m;
}

inline RingMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

} // namespace ybh
