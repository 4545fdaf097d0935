#pragma once

// Smith normal form, rank and determinants over the Euclidean domain k.
//
// snf() diagonalises with elementary row and column operations only, so the
// accumulated transforms are unimodular by construction. Pivots are chosen by
// minimal Euclidean norm; the divisibility chain is enforced afterwards on the
// diagonal with 2x2 gcd/lcm moves. rank() is a separate fraction-free
// elimination over the fraction field and never calls snf().

#include "ybh/laurent.hpp"
#include "ybh/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace ybh {

enum class PivotStrategy {
  /// Minimal norm, ties broken by (row, col).
  min_norm_row_major,
  /// Minimal norm, ties broken by the Markowitz count of the pivot, then (row, col).
  min_norm_sparsest,
};

struct SnfOptions {
  PivotStrategy strategy = PivotStrategy::min_norm_row_major;
  bool with_transforms = true;
};

struct SnfResult {
  /// min(rows, cols) entries: units (as 1) first, then the non-unit chain, then zeros.
  std::vector<LaurentPoly> diag;
  /// u * a * v == diagonal(diag). Empty (0x0) when transforms were not requested.
  RingMatrix u_transform;
  RingMatrix v_transform;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diag.begin(), diag.end(), [](const LaurentPoly& p) { return !p.is_zero(); }));
  }
  /// Nonzero, non-unit invariant factors in chain order.
  std::vector<LaurentPoly> torsion() const {
    std::vector<LaurentPoly> out;
    for (const auto& p : diag)
      if (!p.is_zero() && !p.is_unit()) out.push_back(p);
    return out;
  }
};

/// rows x cols matrix with `diag` on the main diagonal.
inline RingMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<LaurentPoly>& diag) {
  RingMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) d.set(i, i, diag[i]);
  return d;
}

namespace detail {

using SparseRow = std::map<std::size_t, LaurentPoly>;

// Row-major storage with a column occupancy index, for elimination.
class EliminationMatrix {
public:
  explicit EliminationMatrix(const RingMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& [c, v] : a.row(r)) {
        rows_[r].emplace_hint(rows_[r].end(), c, v);
        cols_[c].insert(r);
      }
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  const SparseRow& row(std::size_t r) const { return rows_[r]; }
  const std::set<std::size_t>& col(std::size_t c) const { return cols_[c]; }

  const LaurentPoly& at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }

  // row i += f * row t
  void add_row_multiple(std::size_t i, std::size_t t, const LaurentPoly& f) {
    if (f.is_zero()) return;
    auto& dst = rows_[i];
    for (const auto& [j, v] : rows_[t]) {
      auto it = dst.find(j);
      if (it == dst.end()) {
        dst.emplace(j, f * v);
        cols_[j].insert(i);
      } else {
        it->second += f * v;
        if (it->second.is_zero()) {
          dst.erase(it);
          cols_[j].erase(i);
        }
      }
    }
  }

  // col j += f * col t
  void add_col_multiple(std::size_t j, std::size_t t, const LaurentPoly& f) {
    if (f.is_zero()) return;
    const std::vector<std::size_t> src(cols_[t].begin(), cols_[t].end());
    for (std::size_t i : src) {
      const LaurentPoly delta = f * rows_[i].at(t);
      auto it = rows_[i].find(j);
      if (it == rows_[i].end()) {
        rows_[i].emplace(j, delta);
        cols_[j].insert(i);
      } else {
        it->second += delta;
        if (it->second.is_zero()) {
          rows_[i].erase(it);
          cols_[j].erase(i);
        }
      }
    }
  }

  void scale_row(std::size_t i, const LaurentPoly& u) {
    for (auto& [j, v] : rows_[i]) v = u * v;
  }

private:
  std::vector<SparseRow> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

// Rows of a transform matrix; row operations only (column operations on V are
// recorded as row operations on V^T).
class TransformRows {
public:
  TransformRows() = default;
  explicit TransformRows(std::size_t n) : rows_(n) {
    for (std::size_t i = 0; i < n; ++i) rows_[i].emplace(i, LaurentPoly(1));
  }

  void add_row_multiple(std::size_t i, std::size_t t, const LaurentPoly& f) {
    if (f.is_zero() || rows_.empty()) return;
    auto& dst = rows_[i];
    for (const auto& [j, v] : rows_[t]) {
      auto [it, inserted] = dst.try_emplace(j);
      it->second += f * v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }

  void scale_row(std::size_t i, const LaurentPoly& u) {
    if (rows_.empty()) return;
    for (auto& [j, v] : rows_[i]) v = u * v;
  }

  // (row a, row b) <- (s*a + t*b, p*a + q*b)
  void mix_rows(std::size_t a, std::size_t b, const LaurentPoly& s, const LaurentPoly& t, const LaurentPoly& p,
                const LaurentPoly& q) {
    if (rows_.empty()) return;
    SparseRow na, nb;
    auto accumulate = [](SparseRow& dst, const SparseRow& src, const LaurentPoly& f) {
      if (f.is_zero()) return;
      for (const auto& [j, v] : src) {
        auto [it, inserted] = dst.try_emplace(j);
        it->second += f * v;
        if (it->second.is_zero()) dst.erase(it);
      }
    };
    accumulate(na, rows_[a], s);
    accumulate(na, rows_[b], t);
    accumulate(nb, rows_[a], p);
    accumulate(nb, rows_[b], q);
    rows_[a] = std::move(na);
    rows_[b] = std::move(nb);
  }

  bool empty() const { return rows_.empty(); }

  // Matrix whose row k is stored row order[k].
  RingMatrix permuted(const std::vector<std::size_t>& order) const {
    RingMatrix m(order.size(), rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      for (const auto& [j, v] : rows_[order[k]]) m.set(k, j, v);
    return m;
  }

private:
  std::vector<SparseRow> rows_;
};

struct Pivot {
  std::size_t row;
  std::size_t col;
  LaurentPoly value;
};

inline std::optional<std::pair<std::size_t, std::size_t>> choose_pivot(const EliminationMatrix& m,
                                                                       const std::vector<char>& row_done,
                                                                       PivotStrategy strategy) {
  using Key = std::tuple<unsigned, std::size_t, std::size_t, std::size_t>;
  std::optional<Key> best;
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (row_done[r]) continue;
    for (const auto& [c, v] : m.row(r)) {
      const unsigned norm = euclid_norm(v);
      std::size_t cost = 0;
      if (strategy == PivotStrategy::min_norm_sparsest) cost = (m.row(r).size() - 1) * (m.col(c).size() - 1);
      const Key key{norm, cost, r, c};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return std::nullopt;
  return std::pair{std::get<2>(*best), std::get<3>(*best)};
}

} // namespace detail

/// Smith normal form of `a` over k.
inline SnfResult snf(const RingMatrix& a, SnfOptions options = {}) {
  using detail::Pivot;
  const std::size_t nr = a.rows(), nc = a.cols();
  detail::EliminationMatrix m(a);
  detail::TransformRows u, vt;
  if (options.with_transforms) {
    u = detail::TransformRows(nr);
    vt = detail::TransformRows(nc);
  }
  std::vector<char> row_done(nr, 0), col_done(nc, 0);
  std::vector<Pivot> pivots;

  while (auto start = detail::choose_pivot(m, row_done, options.strategy)) {
    auto [pr, pc] = *start;
    for (;;) {
      {
        const LaurentPoly& p = m.at(pr, pc);
        if (!is_canonical(p)) {
          const LaurentPoly unit = canonical_unit(p);
          m.scale_row(pr, unit);
          u.scale_row(pr, unit);
        }
      }
      const LaurentPoly p = m.at(pr, pc);

      // Clear the pivot column with row operations.
      std::optional<std::pair<unsigned, std::size_t>> smaller_row;
      const std::vector<std::size_t> col_rows(m.col(pc).begin(), m.col(pc).end());
      for (std::size_t i : col_rows) {
        if (i == pr) continue;
        auto [q, r] = euclid_div(m.at(i, pc), p);
        m.add_row_multiple(i, pr, -q);
        u.add_row_multiple(i, pr, -q);
        if (!r.is_zero()) {
          const std::pair<unsigned, std::size_t> key{euclid_norm(r), i};
          if (!smaller_row || key < *smaller_row) smaller_row = key;
        }
      }
      if (smaller_row) {
        pr = smaller_row->second;
        continue;
      }

      // Clear the pivot row with column operations; column pc now only meets row pr.
      std::optional<std::pair<unsigned, std::size_t>> smaller_col;
      std::vector<std::size_t> row_cols;
      for (const auto& [j, v] : m.row(pr))
        if (j != pc) row_cols.push_back(j);
      for (std::size_t j : row_cols) {
        auto [q, r] = euclid_div(m.at(pr, j), p);
        m.add_col_multiple(j, pc, -q);
        vt.add_row_multiple(j, pc, -q);
        if (!r.is_zero()) {
          const std::pair<unsigned, std::size_t> key{euclid_norm(r), j};
          if (!smaller_col || key < *smaller_col) smaller_col = key;
        }
      }
      if (smaller_col) {
        pc = smaller_col->second;
        continue;
      }
      break;
    }
    pivots.push_back({pr, pc, m.at(pr, pc)});
    row_done[pr] = 1;
    col_done[pc] = 1;
  }

  // Units first (they are exactly 1 after canonical scaling), then non-units by norm.
  std::stable_partition(pivots.begin(), pivots.end(), [](const Pivot& p) { return p.value.is_unit(); });
  const auto first_nonunit = std::find_if(pivots.begin(), pivots.end(), [](const Pivot& p) { return !p.value.is_unit(); });
  std::stable_sort(first_nonunit, pivots.end(),
                   [](const Pivot& x, const Pivot& y) { return euclid_norm(x.value) < euclid_norm(y.value); });

  // Enforce d_i | d_j for i < j with unimodular 2x2 moves on the diagonal.
  const std::size_t nu = static_cast<std::size_t>(first_nonunit - pivots.begin());
  for (std::size_t i = nu; i < pivots.size(); ++i) {
    for (std::size_t j = i + 1; j < pivots.size(); ++j) {
      Pivot& x = pivots[i];
      Pivot& y = pivots[j];
      if (divides(x.value, y.value)) continue;
      const auto eg = extended_gcd(x.value, y.value);
      const LaurentPoly b_over_g = exact_div(y.value, eg.g);
      const LaurentPoly a_over_g = exact_div(x.value, eg.g);
      // col x += col y; rows (x, y) <- [[s, t], [-b/g, a/g]]; col y -= (t*b/g) col x
      vt.add_row_multiple(x.col, y.col, 1);
      u.mix_rows(x.row, y.row, eg.s, eg.t, -b_over_g, a_over_g);
      vt.add_row_multiple(y.col, x.col, -(eg.t * b_over_g));
      const LaurentPoly lcm = a_over_g * y.value;
      x.value = eg.g;
      y.value = canonicalize(lcm);
      const LaurentPoly fix = canonical_unit(lcm);
      if (!fix.is_one()) u.scale_row(y.row, fix);
    }
  }
  // Moves can create units (gcd == 1); keep units ahead of the chain.
  std::stable_partition(pivots.begin(), pivots.end(), [](const Pivot& p) { return p.value.is_unit(); });

  SnfResult result;
  const std::size_t dlen = std::min(nr, nc);
  result.diag.assign(dlen, LaurentPoly{});
  for (std::size_t k = 0; k < pivots.size(); ++k) result.diag[k] = pivots[k].value;

  if (options.with_transforms) {
    std::vector<std::size_t> row_order, col_order;
    for (const auto& p : pivots) {
      row_order.push_back(p.row);
      col_order.push_back(p.col);
    }
    std::vector<char> used_r(nr, 0), used_c(nc, 0);
    for (auto r : row_order) used_r[r] = 1;
    for (auto c : col_order) used_c[c] = 1;
    for (std::size_t r = 0; r < nr; ++r)
      if (!used_r[r]) row_order.push_back(r);
    for (std::size_t c = 0; c < nc; ++c)
      if (!used_c[c]) col_order.push_back(c);
    result.u_transform = u.permuted(row_order);
    result.v_transform = vt.permuted(col_order).transpose();
  }
  return result;
}

/// Invariant factors only (no transforms), same ordering as SnfResult::diag.
inline std::vector<LaurentPoly> invariant_factors(const RingMatrix& a,
                                                  PivotStrategy strategy = PivotStrategy::min_norm_row_major) {
  return snf(a, {strategy, false}).diag;
}

/// Rank over the fraction field Q(y), by fraction-free row reduction.
inline std::size_t rank(const RingMatrix& a) {
  using detail::SparseRow;
  std::map<std::size_t, SparseRow> echelon; // leading column -> row
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow row;
    for (const auto& [c, v] : a.row(i)) row.emplace_hint(row.end(), c, v);
    while (!row.empty()) {
      const auto lead = row.begin();
      auto it = echelon.find(lead->first);
      if (it == echelon.end()) break;
      const LaurentPoly& pl = it->second.begin()->second;
      const LaurentPoly rl = lead->second;
      LaurentPoly scale_row = 1, scale_piv;
      if (pl.is_unit()) {
        scale_piv = -exact_div(rl, pl);
      } else {
        const LaurentPoly g = gcd(pl, rl);
        scale_row = exact_div(pl, g);
        scale_piv = -exact_div(rl, g);
      }
      SparseRow next;
      for (auto& [c, v] : row) next.emplace_hint(next.end(), c, scale_row.is_one() ? std::move(v) : scale_row * v);
      for (const auto& [c, v] : it->second) {
        auto [pos, inserted] = next.try_emplace(c);
        pos->second += scale_piv * v;
        if (pos->second.is_zero()) next.erase(pos);
      }
      row = std::move(next);
    }
    if (!row.empty()) {
      // Keep pivot rows small: divide out the gcd of the entries.
      LaurentPoly g;
      for (const auto& [c, v] : row) {
        g = g.is_zero() ? canonicalize(v) : gcd(g, v);
        if (g.is_one()) break;
      }
      if (!g.is_one())
        for (auto& [c, v] : row) v = exact_div(v, g);
      echelon.emplace(row.begin()->first, std::move(row));
      ++r;
    }
  }
  return r;
}

/// Dimension of the kernel over Q(y): cols - rank.
inline std::size_t kernel_rank(const RingMatrix& a) { return a.cols() - rank(a); }

/// Determinant via fraction-free (Bareiss) elimination.
inline LaurentPoly determinant(const RingMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant: non-square " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : a.row(r)) m[r][c] = v;
  LaurentPoly prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return {};
      std::swap(m[k], m[s]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace ybh
