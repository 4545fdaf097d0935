#pragma once

// The normalized Jones R-matrix on V = k e1 + k e2 and its skein pieces.
//
// R = I + beta*alpha, where alpha : V(x)V -> k is the cup and beta : k -> V(x)V
// the cap. Walls are M = k with trivial actions, so both actions are the 1x2
// all-ones matrix mu.

#include "ybh/laurent.hpp"
#include "ybh/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybh {

struct SkeinMaps {
  RingMatrix R;        // 4x4
  RingMatrix J;        // 4x4, beta*alpha
  RingMatrix alpha;    // 1x4
  RingMatrix beta;     // 4x1
  RingMatrix xi;       // 2x2, e1 -> y^2 e1, e2 -> e2
  RingMatrix zeta;     // 2x2, e1 -> e1, e2 -> y^2 e2
  RingMatrix lambda_l; // 2x1, y(e2 - e1)
  RingMatrix lambda_r; // 2x1, y(e1 - e2)
  RingMatrix mu;       // 1x2, trivial action
};

inline const SkeinMaps& skein_maps() {
  static const SkeinMaps maps = [] {
    const LaurentPoly y = LaurentPoly::y();
    const LaurentPoly y2 = LaurentPoly::y(2);
    SkeinMaps m;
    m.R = RingMatrix{{1, 0, 0, 0}, {0, 1 - y2, 1, 0}, {0, y2, 0, 0}, {0, 0, 0, 1}};
    m.alpha = RingMatrix{{0, -y, LaurentPoly::y(-1), 0}};
    m.beta = RingMatrix{{0}, {y}, {-y}, {0}};
    m.J = m.beta * m.alpha;
    m.xi = RingMatrix{{y2, 0}, {0, 1}};
    m.zeta = RingMatrix{{1, 0}, {0, y2}};
    m.lambda_l = RingMatrix{{-y}, {y}};
    m.lambda_r = RingMatrix{{y}, {-y}};
    m.mu = RingMatrix{{1, 1}};
    return m;
  }();
  return maps;
}

/// The transposition e_a (x) e_b -> e_b (x) e_a.
inline RingMatrix swap_matrix() { return RingMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}; }

inline bool check_skein(const RingMatrix& r = skein_maps().R) {
  const auto& s = skein_maps();
  return r == RingMatrix::identity(4) + s.beta * s.alpha;
}

inline bool check_ybe(const RingMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("check_ybe: expected 4x4, got " + m.shape());
  const RingMatrix i2 = RingMatrix::identity(2);
  const RingMatrix a = kron(m, i2);
  const RingMatrix b = kron(i2, m);
  return a * b * a == b * a * b;
}

inline bool check_column_unital(const RingMatrix& m) {
  std::vector<LaurentPoly> sums(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) sums[c] += v;
  for (const auto& s : sums)
    if (!s.is_one()) return false;
  return true;
}

/// Wall conditions for the trivial actions on M = k:
/// mu (mu (x) 1)(1_M (x) R) = mu (mu (x) 1) and its mirror. With M = k both
/// absorbing maps V(x)V -> k are mu (x) mu, so the two conditions coincide.
inline bool check_wall_condition(const RingMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("check_wall_condition: expected 4x4, got " + m.shape());
  const auto& s = skein_maps();
  const RingMatrix absorb_two = kron(s.mu, s.mu);
  return absorb_two * m == absorb_two;
}

struct LoopIdentityReport {
  bool alpha_beta = false;   // alpha beta = -(y^2 + 1)
  bool zigzag_xi = false;    // (alpha (x) 1)(1 (x) beta) = xi
  bool zigzag_zeta = false;  // (1 (x) alpha)(beta (x) 1) = zeta
  bool xi_zeta = false;      // xi zeta = zeta xi = y^2
  bool lambda_cup = false;   // alpha (lambda_l (x) 1) = mu zeta
  bool lambda_mirror = false; // lambda_r = -lambda_l

  bool all() const { return alpha_beta && zigzag_xi && zigzag_zeta && xi_zeta && lambda_cup && lambda_mirror; }
};

inline LoopIdentityReport loop_identity_report() {
  const auto& s = skein_maps();
  const RingMatrix i2 = RingMatrix::identity(2);
  const LaurentPoly y2 = LaurentPoly::y(2);
  LoopIdentityReport rep;
  rep.alpha_beta = s.alpha * s.beta == RingMatrix{{-(y2 + 1)}};
  rep.zigzag_xi = kron(s.alpha, i2) * kron(i2, s.beta) == s.xi;
  rep.zigzag_zeta = kron(i2, s.alpha) * kron(s.beta, i2) == s.zeta;
  const RingMatrix y2_id = y2 * i2;
  rep.xi_zeta = s.xi * s.zeta == y2_id && s.zeta * s.xi == y2_id;
  rep.lambda_cup = s.alpha * kron(s.lambda_l, i2) == s.mu * s.zeta;
  rep.lambda_mirror = s.lambda_r + s.lambda_l == RingMatrix(2, 1);
  return rep;
}

inline bool check_loop_identities() { return loop_identity_report().all(); }

/// h_i = 1^{i-1} (x) beta alpha (x) 1^{n-i-1} on V^{(x)n}.
inline RingMatrix stl_generator(std::size_t i, std::size_t n) {
  if (i < 1 || i + 1 > n) throw std::out_of_range("stl_generator: need 1 <= i <= n-1");
  return kron(kron(RingMatrix::tensor_identity(i - 1), skein_maps().J), RingMatrix::tensor_identity(n - i - 1));
}

/// Skew Temperley-Lieb relations for the generators on V^{(x)n}:
///   h_i h_i = -(y^2+1) h_i,  h_i h_{i+-1} h_i = y^2 h_i,  h_i h_j = h_j h_i for |i-j| > 1.
inline bool check_stl_relations(std::size_t n) {
  if (n < 2) throw std::out_of_range("check_stl_relations: need n >= 2");
  std::vector<RingMatrix> h;
  for (std::size_t i = 1; i < n; ++i) h.push_back(stl_generator(i, n));
  const LaurentPoly y2 = LaurentPoly::y(2);
  const LaurentPoly loop = -(y2 + 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] * h[i] != loop * h[i]) return false;
    if (i + 1 < h.size() && h[i] * h[i + 1] * h[i] != y2 * h[i]) return false;
    if (i >= 1 && h[i] * h[i - 1] * h[i] != y2 * h[i]) return false;
    for (std::size_t j = i + 2; j < h.size(); ++j)
      if (h[i] * h[j] != h[j] * h[i]) return false;
  }
  return true;
}

} // namespace ybh
