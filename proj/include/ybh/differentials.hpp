#pragma once

// The Yang-Baxter differential d_n : V^{(x)n} -> V^{(x)(n-1)} of the normalized
// Jones R-matrix, built three independent ways:
//
//   curtain  sum_i (-1)^i [d^l_{i,n} - d^r_{i,n}] straight from compositions of R;
//   skein    signed sums of generator words g'_{i0} g_{i1}^{k1} ... g_1^{2k}
//            (and their right mirrors h_1^{2k} ... h'_{i0});
//   psi      the Psi_n cap-curtain recursion.
//
// d^l_{i,n} carries strand i to the left wall, d^r_{i,n} carries strand i
// (counted from the left) to the right wall. All results are memoized.

#include "ybh/laurent.hpp"
#include "ybh/matrix.hpp"
#include "ybh/skein.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ybh {

enum class Side { left, right };
enum class GeneratorKind { g, g_prime, h, h_prime };
enum class Method { skein, curtain, psi };

inline const char* to_string(Method m) {
  switch (m) {
  case Method::skein: return "skein";
  case Method::curtain: return "curtain";
  case Method::psi: return "psi";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Closed-form generator coefficients.

namespace detail {
inline LaurentPoly cup_value(int a, int b) {
  if (a == b) return {};
  return LaurentPoly::monomial(Rational(a % 2 == 0 ? 1 : -1), b - a);
}
inline void check_digits(std::span<const int> idx, const char* who) {
  if (idx.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least two indices");
  for (int d : idx)
    if (d != 1 && d != 2) throw std::invalid_argument(std::string(who) + ": indices must be 1 or 2");
}
} // namespace detail

/// theta(i_1..i_k) = (-1)^{i_{k-1}} (1 - delta) y^{i_k - i_{k-1}} y^{4(k-2) - 2 sum_{j<=k-2} i_j} y
inline LaurentPoly theta(std::span<const int> idx) {
  detail::check_digits(idx, "theta");
  const std::size_t k = idx.size();
  LaurentPoly c = detail::cup_value(idx[k - 2], idx[k - 1]);
  if (c.is_zero()) return c;
  int shift = 4 * static_cast<int>(k - 2) + 1;
  for (std::size_t j = 0; j + 2 < k; ++j) shift -= 2 * idx[j];
  return c.shifted(shift);
}

/// tau(i_1..i_l) = (-1)^{i_1} (1 - delta) y^{i_2 - i_1} y^{2 sum_{t>=3} i_t} y^{-2(l-2)} y
///
/// Each passing strand e_i picks up zeta(e_i) = y^{2i-2}, hence the -2(l-2).
inline LaurentPoly tau(std::span<const int> idx) {
  detail::check_digits(idx, "tau");
  const std::size_t l = idx.size();
  LaurentPoly c = detail::cup_value(idx[0], idx[1]);
  if (c.is_zero()) return c;
  int shift = 1 - 2 * static_cast<int>(l - 2);
  for (std::size_t t = 2; t < l; ++t) shift += 2 * idx[t];
  return c.shifted(shift);
}

inline LaurentPoly theta(std::initializer_list<int> idx) { return theta(std::span<const int>(idx.begin(), idx.size())); }
inline LaurentPoly tau(std::initializer_list<int> idx) { return tau(std::span<const int>(idx.begin(), idx.size())); }

struct GeneratorMap {
  GeneratorKind kind;
  int arity;
  RingMatrix matrix;
};

namespace detail {
inline RingMatrix build_generator(GeneratorKind kind, int arity) {
  const auto& s = skein_maps();
  if (arity < 1) throw std::invalid_argument("generator: arity must be >= 1");
  if (arity == 1) {
    if (kind == GeneratorKind::g || kind == GeneratorKind::h) return RingMatrix::identity(2);
    return s.mu;
  }
  const auto k = static_cast<std::size_t>(arity);
  const bool primed = kind == GeneratorKind::g_prime || kind == GeneratorKind::h_prime;
  const bool left = kind == GeneratorKind::g || kind == GeneratorKind::g_prime;
  const std::size_t out_deg = primed ? k - 1 : k;
  RingMatrix m(tensor_dim(out_deg), tensor_dim(k));
  for (std::size_t col = 0; col < tensor_dim(k); ++col) {
    const TensorIndex in = TensorIndex::from_flat(k, col);
    const LaurentPoly c = left ? theta(in.digits) : tau(in.digits);
    if (c.is_zero()) continue;
    // Passing strands: the first k-2 inputs (left) or the last k-2 inputs (right).
    const auto first = in.digits.begin() + (left ? 0 : 2);
    const std::vector<int> passing(first, first + static_cast<std::ptrdiff_t>(k - 2));
    // Emitted piece: (e1 e2 - e2 e1) for g/h, (e2 - e1) for g', (e1 - e2) for h'.
    std::vector<std::pair<std::vector<int>, LaurentPoly>> emitted;
    if (!primed) {
      emitted = {{{1, 2}, c}, {{2, 1}, -c}};
    } else if (left) {
      emitted = {{{2}, c}, {{1}, -c}};
    } else {
      emitted = {{{1}, c}, {{2}, -c}};
    }
    for (const auto& [piece, v] : emitted) {
      TensorIndex out;
      if (left) {
        out.digits = piece;
        out.digits.insert(out.digits.end(), passing.begin(), passing.end());
      } else {
        out.digits = passing;
        out.digits.insert(out.digits.end(), piece.begin(), piece.end());
      }
      m.set(out.flat(), col, v);
    }
  }
  return m;
}

inline RingMatrix tensor_power(const RingMatrix& m, std::size_t k) {
  RingMatrix out = RingMatrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, m);
  return out;
}

/// R acting on tensor positions (j, j+1), 1-based, of V^{(x)n}.
inline RingMatrix r_at(std::size_t j, std::size_t n) {
  return kron({RingMatrix::tensor_identity(j - 1), skein_maps().R, RingMatrix::tensor_identity(n - j - 1)});
}
} // namespace detail

// ---------------------------------------------------------------------------
// Generator words.

struct GeneratorWord {
  Side side = Side::left;
  int primed_arity = 1;
  /// Maximal runs (arity, multiplicity) between the primed generator and the trailing identities.
  std::vector<std::pair<int, int>> body;
  /// Number of trailing g_1 = 1 (resp. leading h_1) factors; always even.
  int trailing_identity = 0;

  int arity() const {
    int n = primed_arity + trailing_identity;
    for (const auto& [a, k] : body) n += a * k;
    return n;
  }

  /// Arities in reading order starting from the primed generator.
  std::vector<int> arities() const {
    std::vector<int> out{primed_arity};
    for (const auto& [a, k] : body)
      for (int i = 0; i < k; ++i) out.push_back(a);
    for (int i = 0; i < trailing_identity; ++i) out.push_back(1);
    return out;
  }

  bool valid() const {
    if (primed_arity < 1 || trailing_identity < 0 || trailing_identity % 2 != 0) return false;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i].first < 1 || body[i].second < 1) return false;
      if (i > 0 && body[i].first == body[i - 1].first) return false;
    }
    return body.empty() || body.back().first != 1;
  }

  /// e.g. "g'1 g1^2", "h2 h1'".
  std::string to_string() const {
    const char letter = side == Side::left ? 'g' : 'h';
    std::vector<std::string> parts;
    parts.push_back(std::string(1, letter) + "'" + std::to_string(primed_arity));
    for (const auto& [a, k] : body)
      parts.push_back(std::string(1, letter) + std::to_string(a) + (k > 1 ? "^" + std::to_string(k) : ""));
    if (trailing_identity > 0) parts.push_back(std::string(1, letter) + "1^" + std::to_string(trailing_identity));
    if (side == Side::right) std::reverse(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
    return out;
  }

  bool operator==(const GeneratorWord&) const = default;
};

/// Every word of total arity n whose trailing run of g_1's has even length, once each.
inline std::vector<GeneratorWord> enumerate_sn(int n, Side side) {
  if (n < 1) throw std::invalid_argument("enumerate_sn: n must be >= 1");
  std::vector<GeneratorWord> out;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      std::size_t t = parts.size();
      while (t > 1 && parts[t - 1] == 1) --t; // parts[0] is the primed arity
      const std::size_t trailing = parts.size() - t;
      if (trailing % 2 != 0) return;
      GeneratorWord w;
      w.side = side;
      w.primed_arity = parts[0];
      w.trailing_identity = static_cast<int>(trailing);
      for (std::size_t i = 1; i < t; ++i) {
        if (!w.body.empty() && w.body.back().first == parts[i])
          ++w.body.back().second;
        else
          w.body.emplace_back(parts[i], 1);
      }
      out.push_back(std::move(w));
      return;
    }
    for (int a = 1; a <= remaining; ++a) {
      parts.push_back(a);
      rec(remaining - a);
      parts.pop_back();
    }
  };
  rec(n);
  return out;
}

// ---------------------------------------------------------------------------
// Memoization.

struct GammaLambdaElement {
  std::string label; // horizontal concatenation, e.g. "1.beta", "alpha.beta"
  RingMatrix matrix;
};

struct GammaLambdaSets {
  std::vector<GammaLambdaElement> gamma;  // maps V^n -> V^{n+2}
  std::vector<GammaLambdaElement> lambda; // maps V^n -> V^n
};

/// Thread-safe memo tables. Values are deterministic, so a racing fill just
/// recomputes and the last writer wins.
class DifferentialCache {
public:
  template <class Key, class F>
  RingMatrix get(std::map<Key, RingMatrix>& table, const Key& key, F&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = table.find(key);
      if (it != table.end()) return it->second;
    }
    RingMatrix value = compute();
    std::lock_guard lock(mutex_);
    table.insert_or_assign(key, value);
    return value;
  }

  std::map<std::pair<GeneratorKind, int>, RingMatrix> generators;
  std::map<std::pair<Side, int>, RingMatrix> psi;
  std::map<std::pair<Side, int>, RingMatrix> wall;
  std::map<std::pair<Method, int>, RingMatrix> differentials;

  std::mutex mutex_;
  std::map<int, GammaLambdaSets> gamma_lambda;
};

inline DifferentialCache& differential_cache() {
  static DifferentialCache cache;
  return cache;
}

inline GeneratorMap generator(GeneratorKind kind, int arity) {
  auto& cache = differential_cache();
  RingMatrix m = cache.get(cache.generators, std::pair{kind, arity}, [&] { return detail::build_generator(kind, arity); });
  return {kind, arity, std::move(m)};
}

/// The word as one matrix: left words read g' first, right words are mirrored.
inline RingMatrix realize(const GeneratorWord& w) {
  const bool left = w.side == Side::left;
  std::vector<RingMatrix> factors;
  factors.push_back(generator(left ? GeneratorKind::g_prime : GeneratorKind::h_prime, w.primed_arity).matrix);
  for (const auto& [a, k] : w.body)
    factors.push_back(
        detail::tensor_power(generator(left ? GeneratorKind::g : GeneratorKind::h, a).matrix, static_cast<std::size_t>(k)));
  factors.push_back(RingMatrix::tensor_identity(static_cast<std::size_t>(w.trailing_identity)));
  if (!left) std::reverse(factors.begin(), factors.end());
  RingMatrix out = RingMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

// ---------------------------------------------------------------------------
// Curtain maps.

/// The last of m strands carried to the left wall: (mu (x) 1^{m-1}) R_1 R_2 ... R_{m-1}.
inline RingMatrix strand_to_left_wall(int m) {
  if (m < 1) throw std::invalid_argument("strand_to_left_wall: m must be >= 1");
  auto& cache = differential_cache();
  return cache.get(cache.wall, std::pair{Side::left, m}, [m] {
    const auto n = static_cast<std::size_t>(m);
    RingMatrix p = RingMatrix::tensor_identity(n);
    for (std::size_t j = n - 1; j >= 1; --j) p = detail::r_at(j, n) * p;
    return kron(skein_maps().mu, RingMatrix::tensor_identity(n - 1)) * p;
  });
}

/// The first of m strands carried to the right wall: (1^{m-1} (x) mu) R_{m-1} ... R_1.
inline RingMatrix strand_to_right_wall(int m) {
  if (m < 1) throw std::invalid_argument("strand_to_right_wall: m must be >= 1");
  auto& cache = differential_cache();
  return cache.get(cache.wall, std::pair{Side::right, m}, [m] {
    const auto n = static_cast<std::size_t>(m);
    RingMatrix p = RingMatrix::tensor_identity(n);
    for (std::size_t j = 1; j < n; ++j) p = detail::r_at(j, n) * p;
    return kron(RingMatrix::tensor_identity(n - 1), skein_maps().mu) * p;
  });
}

/// d^l_{i,n}: strand i to the left wall.
inline RingMatrix curtain_left(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("curtain_left: need 1 <= i <= n");
  return kron(strand_to_left_wall(i), RingMatrix::tensor_identity(static_cast<std::size_t>(n - i)));
}

/// d^r_{i,n}: strand i to the right wall.
inline RingMatrix curtain_right(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("curtain_right: need 1 <= i <= n");
  return kron(RingMatrix::tensor_identity(static_cast<std::size_t>(i - 1)), strand_to_right_wall(n - i + 1));
}

inline RingMatrix d_curtain(int n) {
  if (n < 1) throw std::invalid_argument("d_curtain: n must be >= 1");
  auto& cache = differential_cache();
  return cache.get(cache.differentials, std::pair{Method::curtain, n}, [n] {
    RingMatrix d(tensor_dim(static_cast<std::size_t>(n - 1)), tensor_dim(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
      const RingMatrix term = curtain_left(i, n) - curtain_right(i, n);
      if (i % 2 == 0)
        d += term;
      else
        d -= term;
    }
    return d;
  });
}

inline RingMatrix d_skein(int n) {
  if (n < 1) throw std::invalid_argument("d_skein: n must be >= 1");
  auto& cache = differential_cache();
  return cache.get(cache.differentials, std::pair{Method::skein, n}, [n] {
    const auto deg = static_cast<std::size_t>(n);
    RingMatrix left(tensor_dim(deg - 1), tensor_dim(deg));
    RingMatrix right(tensor_dim(deg - 1), tensor_dim(deg));
    for (const auto& w : enumerate_sn(n, Side::left)) left += realize(w);
    for (const auto& w : enumerate_sn(n, Side::right)) right += realize(w);
    return n % 2 == 1 ? right - left : left + right;
  });
}

// ---------------------------------------------------------------------------
// Psi maps and the Gamma / Lambda decomposition.

/// Psi_n : V^n -> V^{n+1}. Left: a cap is opened at the right end and its left
/// strand travels to the left wall. Right: mirror image, towards the right wall.
inline RingMatrix psi(int n, Side side) {
  if (n < 0) throw std::invalid_argument("psi: n must be >= 0");
  auto& cache = differential_cache();
  return cache.get(cache.psi, std::pair{side, n}, [n, side] {
    const auto& s = skein_maps();
    const auto k = static_cast<std::size_t>(n);
    const std::size_t total = k + 2;
    if (side == Side::left) {
      RingMatrix m = kron(RingMatrix::tensor_identity(k), s.beta);
      for (std::size_t j = k; j >= 1; --j) m = detail::r_at(j, total) * m;
      return kron(s.mu, RingMatrix::tensor_identity(k + 1)) * m;
    }
    RingMatrix m = kron(s.beta, RingMatrix::tensor_identity(k));
    for (std::size_t j = 2; j <= k + 1; ++j) m = detail::r_at(j, total) * m;
    return kron(RingMatrix::tensor_identity(k + 1), s.mu) * m;
  });
}

/// d^l_{n,n} rebuilt from Psi: sum_{m=2}^{n} Psi_{n-m} . alpha . 1^{m-2} + mu . 1^{n-1}
/// (mirrored for the right wall).
inline RingMatrix wall_curtain_via_psi(int n, Side side) {
  if (n < 1) throw std::invalid_argument("wall_curtain_via_psi: n must be >= 1");
  const auto& s = skein_maps();
  const auto k = static_cast<std::size_t>(n);
  RingMatrix out = side == Side::left ? kron(s.mu, RingMatrix::tensor_identity(k - 1))
                                      : kron(RingMatrix::tensor_identity(k - 1), s.mu);
  for (int m = 2; m <= n; ++m) {
    const RingMatrix id = RingMatrix::tensor_identity(static_cast<std::size_t>(m - 2));
    out += side == Side::left ? kron({psi(n - m, Side::left), s.alpha, id})
                              : kron({id, s.alpha, psi(n - m, Side::right)});
  }
  return out;
}

/// The signed left (or mirrored right) half of d_n assembled from Psi pieces:
///   n = 2k:    sum_{i=1}^{k} Psi_{2i-2} . alpha . 1^{n-2i}
///   n = 2k+1: -mu . 1^{n-1} - sum_{j=1}^{k} Psi_{2j-1} . alpha . 1^{n-2j-1}
inline RingMatrix half_differential_via_psi(int n, Side side) {
  const auto& s = skein_maps();
  const auto deg = static_cast<std::size_t>(n);
  const bool left = side == Side::left;
  auto piece = [&](int psi_index, std::size_t ids) {
    const RingMatrix id = RingMatrix::tensor_identity(ids);
    return left ? kron({psi(psi_index, side), s.alpha, id}) : kron({id, s.alpha, psi(psi_index, side)});
  };
  RingMatrix out(tensor_dim(deg - 1), tensor_dim(deg));
  if (n % 2 == 0) {
    for (int i = 1; 2 * i <= n; ++i) out += piece(2 * i - 2, deg - 2 * static_cast<std::size_t>(i));
  } else {
    out -= left ? kron(s.mu, RingMatrix::tensor_identity(deg - 1)) : kron(RingMatrix::tensor_identity(deg - 1), s.mu);
    for (int j = 1; 2 * j + 1 <= n; ++j) out -= piece(2 * j - 1, deg - 2 * static_cast<std::size_t>(j) - 1);
  }
  return out;
}

inline RingMatrix d_psi(int n) {
  if (n < 1) throw std::invalid_argument("d_psi: n must be >= 1");
  auto& cache = differential_cache();
  return cache.get(cache.differentials, std::pair{Method::psi, n}, [n] {
    const RingMatrix left = half_differential_via_psi(n, Side::left);
    const RingMatrix right = half_differential_via_psi(n, Side::right);
    return n % 2 == 0 ? left + right : left - right;
  });
}

/// Gamma^{(n,n+2)} and Lambda^{(n,n)} (Lambda is empty for n = 0).
///   Gamma(0) = {beta}
///   Gamma(n) = Gamma(n-1).xi  u  U_{m=2}^{n} Gamma(n-m).alpha.1^{m-2}.beta  u  {1^n.beta}
///   Lambda(1) = {xi}
///   Lambda(n) = Lambda(n-1).xi  u  U_{m=2}^{n-1} Lambda(n-m).alpha.1^{m-2}.beta  u  {alpha.1^{n-2}.beta}
inline GammaLambdaSets gamma_lambda_sets(int n) {
  if (n < 0) throw std::invalid_argument("gamma_lambda_sets: n must be >= 0");
  auto& cache = differential_cache();
  {
    std::lock_guard lock(cache.mutex_);
    auto it = cache.gamma_lambda.find(n);
    if (it != cache.gamma_lambda.end()) return it->second;
  }
  const auto& s = skein_maps();
  auto join = [](const std::string& a, const std::string& b) { return a.empty() ? b : a + "." + b; };
  auto ones = [](int m) {
    std::string out;
    for (int i = 0; i < m; ++i) out += (out.empty() ? "" : ".") + std::string("1");
    return out;
  };
  auto cup_cap = [&](int m) {
    const std::string mid = ones(m - 2);
    GammaLambdaElement e;
    e.label = mid.empty() ? "alpha.beta" : "alpha." + mid + ".beta";
    e.matrix = kron({s.alpha, RingMatrix::tensor_identity(static_cast<std::size_t>(m - 2)), s.beta});
    return e;
  };

  GammaLambdaSets out;
  if (n == 0) {
    out.gamma.push_back({"beta", s.beta});
  } else {
    for (const auto& e : gamma_lambda_sets(n - 1).gamma)
      out.gamma.push_back({join(e.label, "xi"), kron(e.matrix, s.xi)});
    for (int m = 2; m <= n; ++m) {
      const auto cc = cup_cap(m);
      for (const auto& e : gamma_lambda_sets(n - m).gamma)
        out.gamma.push_back({join(e.label, cc.label), kron(e.matrix, cc.matrix)});
    }
    out.gamma.push_back({join(ones(n), "beta"), kron(RingMatrix::tensor_identity(static_cast<std::size_t>(n)), s.beta)});

    if (n == 1) {
      out.lambda.push_back({"xi", s.xi});
    } else {
      for (const auto& e : gamma_lambda_sets(n - 1).lambda)
        out.lambda.push_back({join(e.label, "xi"), kron(e.matrix, s.xi)});
      for (int m = 2; m <= n - 1; ++m) {
        const auto cc = cup_cap(m);
        for (const auto& e : gamma_lambda_sets(n - m).lambda)
          out.lambda.push_back({join(e.label, cc.label), kron(e.matrix, cc.matrix)});
      }
      out.lambda.push_back(cup_cap(n));
    }
  }
  std::lock_guard lock(cache.mutex_);
  cache.gamma_lambda.insert_or_assign(n, out);
  return out;
}

/// Psi_n rebuilt as sum_{Gamma(n-1)} mu.psi + sum_{Lambda(n)} lambda.phi, n >= 1.
inline RingMatrix psi_via_gamma_lambda(int n) {
  if (n < 1) throw std::invalid_argument("psi_via_gamma_lambda: n must be >= 1");
  const auto& s = skein_maps();
  const auto deg = static_cast<std::size_t>(n);
  RingMatrix out(tensor_dim(deg + 1), tensor_dim(deg));
  for (const auto& e : gamma_lambda_sets(n - 1).gamma) out += kron(s.mu, e.matrix);
  for (const auto& e : gamma_lambda_sets(n).lambda) out += kron(s.lambda_l, e.matrix);
  return out;
}

inline RingMatrix differential(int n, Method method = Method::curtain) {
  switch (method) {
  case Method::skein: return d_skein(n);
  case Method::curtain: return d_curtain(n);
  case Method::psi: return d_psi(n);
  }
  throw std::invalid_argument("differential: unknown method");
}

} // namespace ybh
