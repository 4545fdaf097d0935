#pragma once

// Homology H_n = ker d_n / im d_{n+1} and cohomology of the Yang-Baxter complex
// over k, the Fibonacci prediction for H_n, and the constant-vector analysis in
// higher degrees.

#include "ybh/differentials.hpp"
#include "ybh/laurent.hpp"
#include "ybh/matrix.hpp"
#include "ybh/snf.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybh {

struct HomologyGroup {
  int degree = 0;
  std::size_t free_rank = 0;
  /// Canonical non-unit invariant factors in divisibility order.
  std::vector<LaurentPoly> torsion;

  bool operator==(const HomologyGroup&) const = default;
};

/// "k^2 + k/(y^2 - 1) + k/(y^4 - 1)"
inline std::string to_string(const HomologyGroup& h) {
  std::string out = "k^" + std::to_string(h.free_rank);
  std::size_t i = 0;
  while (i < h.torsion.size()) {
    std::size_t j = i;
    while (j < h.torsion.size() && h.torsion[j] == h.torsion[i]) ++j;
    out += " + k/(" + to_display_string(h.torsion[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Multiset comparison on canonical forms.
inline bool same_torsion(std::vector<LaurentPoly> a, std::vector<LaurentPoly> b) {
  auto key = [](const LaurentPoly& p) { return to_string(canonicalize(p)); };
  auto by_key = [&](const LaurentPoly& x, const LaurentPoly& z) { return key(x) < key(z); };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(canonicalize(a[i]) == canonicalize(b[i]))) return false;
  return true;
}

inline bool equivalent(const HomologyGroup& a, const HomologyGroup& b) {
  return a.free_rank == b.free_rank && same_torsion(a.torsion, b.torsion);
}

namespace detail {
inline std::vector<LaurentPoly> canonical_torsion(const std::vector<LaurentPoly>& diag) {
  std::vector<LaurentPoly> out;
  for (const auto& p : diag)
    if (!p.is_zero() && !p.is_unit()) out.push_back(canonicalize(p));
  return out;
}

inline std::size_t count_nonzero(const std::vector<LaurentPoly>& diag) {
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const LaurentPoly& p) { return !p.is_zero(); }));
}

/// Invariant factors of d_n, memoized per (n, strategy). d_n is 0 for n <= 0 here
/// (the complex starts at C_0 = k with d_1 = 0).
inline std::vector<LaurentPoly> differential_factors(int n, PivotStrategy strategy = PivotStrategy::min_norm_row_major) {
  static std::mutex mutex;
  static std::map<std::pair<int, PivotStrategy>, std::vector<LaurentPoly>> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({n, strategy});
    if (it != memo.end()) return it->second;
  }
  std::vector<LaurentPoly> f = n >= 1 ? invariant_factors(differential(n), strategy) : std::vector<LaurentPoly>{};
  std::lock_guard lock(mutex);
  memo.insert_or_assign({n, strategy}, f);
  return f;
}
} // namespace detail

inline bool check_chain_condition(int n) { return (differential(n) * differential(n + 1)).is_zero(); }

/// H_n = ker d_n / im d_{n+1}.
inline HomologyGroup homology(int n, PivotStrategy strategy = PivotStrategy::min_norm_row_major) {
  if (n < 1) throw std::invalid_argument("homology: n must be >= 1");
  if (!check_chain_condition(n)) throw std::logic_error("homology: d_n d_{n+1} != 0 at n = " + std::to_string(n));
  const auto fn = detail::differential_factors(n, strategy);
  const auto fn1 = detail::differential_factors(n + 1, strategy);
  HomologyGroup h;
  h.degree = n;
  h.free_rank = tensor_dim(static_cast<std::size_t>(n)) - detail::count_nonzero(fn) - detail::count_nonzero(fn1);
  h.torsion = detail::canonical_torsion(fn1);
  return h;
}

/// H^n computed from the transposed complex: ker d_{n+1}^T / im d_n^T.
inline HomologyGroup cohomology_direct(int n) {
  if (n < 1) throw std::invalid_argument("cohomology: n must be >= 1");
  const RingMatrix dn_t = differential(n).transpose();
  const RingMatrix dn1_t = differential(n + 1).transpose();
  HomologyGroup h;
  h.degree = n;
  h.free_rank = kernel_rank(dn1_t) - rank(dn_t);
  h.torsion = detail::canonical_torsion(invariant_factors(dn_t));
  return h;
}

/// H^n = Ext(H_{n-1}, k) + Hom(H_n, k): torsion of H_{n-1} plus the free part of H_n.
inline HomologyGroup cohomology_uct(int n) {
  if (n < 1) throw std::invalid_argument("cohomology: n must be >= 1");
  HomologyGroup h;
  h.degree = n;
  h.free_rank = homology(n).free_rank;
  // Torsion of H_{n-1} is the non-unit part of coker d_n, also for n - 1 = 0.
  h.torsion = detail::canonical_torsion(detail::differential_factors(n));
  return h;
}

class CohomologyMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline HomologyGroup cohomology(int n) {
  HomologyGroup direct = cohomology_direct(n);
  const HomologyGroup uct = cohomology_uct(n);
  if (!equivalent(direct, uct))
    throw CohomologyMismatch("cohomology: direct " + to_string(direct) + " != UCT " + to_string(uct) + " at n = " +
                             std::to_string(n));
  return direct;
}

/// alpha, read as a 1-cochain on C_2, is a cocycle (alpha d_3 = 0) and is nonzero on e1 (x) e2.
inline bool check_alpha_cocycle() {
  const RingMatrix& alpha = skein_maps().alpha;
  return (alpha * differential(3)).is_zero() && !alpha.at(0, 1).is_zero();
}

// ---------------------------------------------------------------------------
// Fibonacci prediction.

/// s_m = f_1 + ... + f_{m+1} with f_1 = f_2 = 1; s_{-1} = 0.
inline std::size_t fibonacci_partial_sum(int m) {
  if (m < -1) throw std::invalid_argument("fibonacci_partial_sum: m must be >= -1");
  std::size_t a = 1, b = 1, sum = 0;
  for (int i = 1; i <= m + 1; ++i) {
    sum += a;
    a = std::exchange(b, a + b);
  }
  return sum;
}

/// a_1 = 0, a_n = 2^n - 2 - a_{n-1} - s_{n-3} - s_{n-2}.
inline std::size_t predicted_a(int n) {
  if (n < 1) throw std::invalid_argument("predicted_a: n must be >= 1");
  std::size_t a = 0;
  for (int m = 2; m <= n; ++m) a = tensor_dim(static_cast<std::size_t>(m)) - 2 - a - fibonacci_partial_sum(m - 3) - fibonacci_partial_sum(m - 2);
  return a;
}

struct ConjecturePrediction {
  int n = 0;
  std::size_t a_n = 0;
  std::size_t s_n_minus_2 = 0;
  HomologyGroup predicted;
};

inline ConjecturePrediction conjecture_prediction(int n) {
  if (n < 1) throw std::invalid_argument("conjecture_prediction: n must be >= 1");
  ConjecturePrediction p;
  p.n = n;
  p.a_n = predicted_a(n);
  p.s_n_minus_2 = n >= 2 ? fibonacci_partial_sum(n - 2) : 0;
  p.predicted.degree = n;
  p.predicted.free_rank = 2;
  const LaurentPoly y2m1 = LaurentPoly::y(2) - 1;
  const LaurentPoly y4m1 = LaurentPoly::y(4) - 1;
  p.predicted.torsion.assign(p.a_n, y2m1);
  p.predicted.torsion.insert(p.predicted.torsion.end(), p.s_n_minus_2, y4m1);
  return p;
}

/// 2 + a_{n-1} + s_{n-3} + a_n + s_{n-2} = 2^n
inline bool conjecture_dimension_identity(int n) {
  if (n < 2) return true;
  const std::size_t lhs = 2 + predicted_a(n - 1) + fibonacci_partial_sum(n - 3) + predicted_a(n) + fibonacci_partial_sum(n - 2);
  return lhs == tensor_dim(static_cast<std::size_t>(n));
}

struct ConjectureRow {
  ConjecturePrediction prediction;
  HomologyGroup computed;
  bool agree = false;
  bool dimension_identity = false;
};

/// Computes each degree independently; `jobs > 1` runs degrees concurrently.
/// Rows are always ordered by degree.
template <class F>
auto map_degrees(int lo, int hi, unsigned jobs, F f) -> std::vector<decltype(f(lo))> {
  std::vector<decltype(f(lo))> out;
  if (jobs <= 1) {
    for (int n = lo; n <= hi; ++n) out.push_back(f(n));
    return out;
  }
  std::vector<std::future<decltype(f(lo))>> pending;
  for (int n = lo; n <= hi; ++n) pending.push_back(std::async(std::launch::async, f, n));
  for (auto& p : pending) out.push_back(p.get());
  return out;
}

inline std::vector<ConjectureRow> conjecture_report(int max_n, unsigned jobs = 1) {
  if (max_n < 2) throw std::invalid_argument("conjecture_report: max_n must be >= 2");
  return map_degrees(2, max_n, jobs, [](int n) {
    ConjectureRow row;
    row.prediction = conjecture_prediction(n);
    row.computed = homology(n);
    row.agree = equivalent(row.prediction.predicted, row.computed);
    row.dimension_identity = conjecture_dimension_identity(n);
    return row;
  });
}

// ---------------------------------------------------------------------------
// Constant vectors e_{j,0} and their neighbours e_{j,i}.

/// e^n_{j,i}: all factors e_j except e_{3-j} at position i (1-based); i = 0 is the constant vector.
struct SpecialVector {
  int n = 0;
  int j = 1;
  int i = 0;

  TensorIndex index() const {
    if (n < 0 || (j != 1 && j != 2) || i < 0 || i > n) throw std::out_of_range("SpecialVector: index out of range");
    TensorIndex t;
    t.digits.assign(static_cast<std::size_t>(n), j);
    if (i > 0) t.digits[static_cast<std::size_t>(i - 1)] = 3 - j;
    return t;
  }
  std::size_t flat() const { return index().flat(); }
};

/// d_n(e^n_{j,i}) as a column vector over k.
inline std::vector<LaurentPoly> special_image(int n, int j, int i) {
  if (n < 1) throw std::out_of_range("special_image: n must be >= 1");
  if (i < 0 || i > n) throw std::out_of_range("special_image: need 0 <= i <= n");
  return differential(n).column(SpecialVector{n, j, i}.flat());
}

/// Coefficient of e^{n-1}_{j,0} in d_n(e^n_{j,i}), read off the matrix.
inline LaurentPoly special_coefficient(int n, int j, int i) {
  if (n < 2) throw std::out_of_range("special_coefficient: n must be >= 2");
  return differential(n).at(SpecialVector{n - 1, j, 0}.flat(), SpecialVector{n, j, i}.flat());
}

/// Closed form of special_coefficient for n >= 4, p = n - i:
///   j = 1: i = 2m-1 -> 1 - y^{4(m-1)},  i = 2m -> y^{4m-2} - y^2
///   j = 2: p even -> (y^{2p} - 1),  p odd -> (y^2 - y^{2p}),  both times (-1)^{n+1}
/// i = 0 gives 0 in both families.
inline LaurentPoly special_coefficient_closed_form(int n, int j, int i) {
  if (n < 4) throw std::out_of_range("special_coefficient_closed_form: n must be >= 4");
  if (i < 0 || i > n) throw std::out_of_range("special_coefficient_closed_form: need 0 <= i <= n");
  if (j != 1 && j != 2) throw std::out_of_range("special_coefficient_closed_form: j must be 1 or 2");
  if (i == 0) return {};
  const LaurentPoly y2 = LaurentPoly::y(2);
  if (j == 1) {
    const int m = (i + 1) / 2;
    return i % 2 == 1 ? 1 - LaurentPoly::y(4 * (m - 1)) : LaurentPoly::y(4 * m - 2) - y2;
  }
  const int p = n - i;
  const LaurentPoly v = p % 2 == 0 ? LaurentPoly::y(2 * p) - 1 : y2 - LaurentPoly::y(2 * p);
  return n % 2 == 1 ? v : -v;
}

/// Every value the reference table assigns to this coefficient. Several
/// formulas can cover the same index; an index covered by none is claimed 0.
inline std::vector<LaurentPoly> reference_special_claims(int n, int j, int i) {
  std::vector<LaurentPoly> claims;
  const LaurentPoly y2 = LaurentPoly::y(2);
  auto yp = [](int e) { return LaurentPoly::y(e); };
  // `k` is the table's running index, 1 <= k <= n.
  auto each_k = [&](auto position, auto value) {
    for (int k = 1; k <= n; ++k)
      if (position(k) == i) claims.push_back(value(k));
  };
  if (n % 2 == 1) {
    if (j == 1) {
      if (i == 1) claims.push_back(y2);
      each_k([](int k) { return 2 * k - 1; }, [&](int k) { return 1 - yp(4 * k - 4); });
      each_k([](int k) { return 2 * k; }, [&](int k) { return yp(4 * k - 2) - y2; });
      if (i == n) claims.push_back(1 - yp(2 * (n - 1)));
    } else {
      if (i == 1) claims.push_back(yp(2 * n - 2) - 1);
      each_k([](int k) { return 2 * k + 1; }, [&](int k) { return y2 - yp(2 * n - 4 * k - 2); });
      each_k([](int k) { return 2 * k; }, [&](int k) { return yp(2 * n - 4 * k) - 1; });
    }
  } else {
    if (j == 1) {
      each_k([](int k) { return 2 * k - 1; }, [&](int k) { return yp(4 * k - 2) - y2; });
      each_k([](int k) { return 2 * k; }, [&](int k) { return 1 - yp(4 * (k - 1)); });
    } else {
      each_k([](int k) { return 2 * k - 1; }, [&](int k) { return y2 - yp(2 * (n - 2 * k + 3)); });
      each_k([](int k) { return 2 * k; }, [&](int k) { return yp(2 * (n - 2 * k + 2)) - 1; });
    }
  }
  if (claims.empty()) claims.push_back(LaurentPoly{});
  return claims;
}

struct SpecialCoefficientRow {
  int n = 0;
  int j = 0;
  int i = 0;
  LaurentPoly computed;                 // from the matrix
  LaurentPoly closed_form;              // special_coefficient_closed_form
  std::vector<LaurentPoly> reference;     // reference_special_claims
  bool closed_form_matches = false;
  bool reference_matches = false;         // every reference claim equals the computed value
};

inline std::vector<SpecialCoefficientRow> special_coefficient_report(int n) {
  std::vector<SpecialCoefficientRow> rows;
  for (int j = 1; j <= 2; ++j) {
    for (int i = 0; i <= n; ++i) {
      SpecialCoefficientRow r;
      r.n = n;
      r.j = j;
      r.i = i;
      r.computed = special_coefficient(n, j, i);
      r.closed_form = special_coefficient_closed_form(n, j, i);
      r.closed_form_matches = r.closed_form == r.computed;
      if (i == 0) {
        r.reference = {LaurentPoly{}};
      } else {
        r.reference = reference_special_claims(n, j, i);
      }
      r.reference_matches =
          std::all_of(r.reference.begin(), r.reference.end(), [&](const LaurentPoly& p) { return p == r.computed; });
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

/// Order ideal of the class of a cycle x in H_n, i.e. the generator of
/// {c : c x in im d_{n+1}}. Returns nullopt when the class has infinite order.
inline std::optional<LaurentPoly> class_order(int n, std::size_t basis_index) {
  const RingMatrix d = differential(n + 1);
  const SnfResult s = snf(d);
  LaurentPoly order = 1;
  for (std::size_t r = 0; r < s.u_transform.rows(); ++r) {
    const LaurentPoly c = s.u_transform.at(r, basis_index);
    if (c.is_zero()) continue;
    if (r >= s.diag.size() || s.diag[r].is_zero()) return std::nullopt;
    const LaurentPoly q = exact_div(s.diag[r], gcd(s.diag[r], c));
    order = exact_div(order * q, gcd(order, q));
  }
  return canonicalize(order);
}

struct AnnihilatorReport {
  int n = 0;
  bool odd = false;
  /// gcd of the e_{j,0} coefficients of d_{n+1}(e_{j,i}), i = 0..n+1, j = 1, 2.
  LaurentPoly family_gcd_e1;
  LaurentPoly family_gcd_e2;
  /// Even n: some d_{n+1}(e_{1,i}) has a unit e_{1,0} coefficient.
  bool boundary_unit = false;
  /// Even n: the e_{2,0} family gcd. Odd n: gcd of both families.
  LaurentPoly annihilator;
  /// Exact order of the classes of e_{1,0}, e_{2,0} in H_n (nullopt: infinite order).
  std::optional<LaurentPoly> order_e1;
  std::optional<LaurentPoly> order_e2;
};

inline AnnihilatorReport annihilator_report(int n) {
  if (n < 4) throw std::out_of_range("annihilator_report: n must be >= 4");
  AnnihilatorReport rep;
  rep.n = n;
  rep.odd = n % 2 == 1;
  auto family_gcd = [&](int j, bool& unit_seen) {
    LaurentPoly g;
    for (int i = 0; i <= n + 1; ++i) {
      const LaurentPoly c = special_coefficient(n + 1, j, i);
      if (c.is_zero()) continue;
      unit_seen = unit_seen || c.is_unit();
      g = g.is_zero() ? canonicalize(c) : gcd(g, c);
    }
    return g;
  };
  bool unit1 = false, unit2 = false;
  rep.family_gcd_e1 = family_gcd(1, unit1);
  rep.family_gcd_e2 = family_gcd(2, unit2);
  if (rep.odd) {
    rep.annihilator = rep.family_gcd_e1.is_zero() ? rep.family_gcd_e2
                      : rep.family_gcd_e2.is_zero() ? rep.family_gcd_e1
                                                    : gcd(rep.family_gcd_e1, rep.family_gcd_e2);
  } else {
    rep.boundary_unit = unit1;
    rep.annihilator = rep.family_gcd_e2;
  }
  rep.order_e1 = class_order(n, SpecialVector{n, 1, 0}.flat());
  rep.order_e2 = class_order(n, SpecialVector{n, 2, 0}.flat());
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization. Records use the display form of polynomials ("y^4 - 1").

struct HomologyRecord {
  HomologyGroup group;
  std::optional<bool> conjecture_agrees;
};

inline nlohmann::json to_json(const HomologyRecord& r) {
  nlohmann::json j;
  j["n"] = r.group.degree;
  j["free_rank"] = r.group.free_rank;
  j["torsion"] = nlohmann::json::array();
  for (const auto& t : r.group.torsion) j["torsion"].push_back(to_display_string(t));
  if (r.conjecture_agrees) j["conjecture_agrees"] = *r.conjecture_agrees;
  return j;
}

inline HomologyRecord homology_record_from_json(const nlohmann::json& j) {
  HomologyRecord r;
  r.group.degree = j.at("n").get<int>();
  r.group.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto& t : j.at("torsion")) r.group.torsion.push_back(parse_laurent(t.get<std::string>()));
  if (j.contains("conjecture_agrees")) r.conjecture_agrees = j.at("conjecture_agrees").get<bool>();
  return r;
}

inline std::vector<HomologyRecord> homology_records_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<HomologyRecord> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(homology_record_from_json(e));
  } else {
    out.push_back(homology_record_from_json(j));
  }
  return out;
}

inline const char* homology_csv_header() { return "n,free_rank,torsion"; }

/// `2,2,"y^2 - 1;y^4 - 1"`
inline std::string to_csv_row(const HomologyGroup& h) {
  std::string t;
  for (const auto& p : h.torsion) t += (t.empty() ? "" : ";") + to_display_string(p);
  return std::to_string(h.degree) + "," + std::to_string(h.free_rank) + ",\"" + t + "\"";
}

namespace detail {
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("csv: unterminated quote in '" + line + "'");
  return fields;
}
} // namespace detail

/// Parses the output of a header line plus to_csv_row lines.
inline std::vector<HomologyGroup> homology_groups_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || detail::split_csv_line(line).size() < 3) throw ParseError("csv: missing header");
  std::vector<HomologyGroup> out;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() < 3) throw ParseError("csv: expected 3 fields in '" + line + "'");
    HomologyGroup h;
    try {
      h.degree = std::stoi(f[0]);
      h.free_rank = std::stoul(f[1]);
    } catch (const std::logic_error&) {
      throw ParseError("csv: bad number in '" + line + "'");
    }
    std::size_t start = 0;
    while (start < f[2].size()) {
      const std::size_t end = f[2].find(';', start);
      const std::string piece = f[2].substr(start, end == std::string::npos ? std::string::npos : end - start);
      h.torsion.push_back(parse_laurent(piece));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    out.push_back(std::move(h));
  }
  return out;
}

} // namespace ybh
