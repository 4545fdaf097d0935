#pragma once

// Exact arithmetic in k = Q[y, y^-1].
//
// A LaurentPoly is stored densely as a lowest exponent plus a coefficient
// vector with nonzero first and last entries, so the zero polynomial is the
// empty vector. The Euclidean norm is the exponent span; units are exactly the
// single-term polynomials c*y^e.

#include <gmpxx.h>

#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybh {

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
using Rational = mpq_class;

class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c) { // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.emplace_back(c);
  }
  explicit LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) coeffs_.push_back(c);
  }

  static LaurentPoly monomial(const Rational& c, int exponent) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
  }
  static LaurentPoly y(int exponent = 1) { return monomial(Rational(1), exponent); }

  /// Builds from an exponent -> coefficient map; zero coefficients are dropped.
  static LaurentPoly from_terms(const std::map<int, Rational>& terms) {
    LaurentPoly p;
    if (terms.empty()) return p;
    p.low_ = terms.begin()->first;
    p.coeffs_.resize(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1));
    for (const auto& [e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - p.low_)] = c;
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// Lowest exponent; only meaningful for nonzero polynomials.
  int min_exp() const { return low_; }
  int max_exp() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(int exponent) const {
    if (exponent < low_ || exponent > max_exp()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }

  std::map<int, Rational> terms() const {
    std::map<int, Rational> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += sgn(c) != 0 ? 1 : 0;
    return n;
  }

  /// Multiplies by y^shift.
  LaurentPoly shifted(int shift) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += shift;
    return p;
  }

  bool operator==(const LaurentPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    if (coeffs_.empty()) return true;
    return low_ == o.low_ && coeffs_ == o.coeffs_;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    if (b.is_unit()) {
      p = a;
      p.low_ += b.low_;
      if (b.coeffs_[0] != 1)
        for (auto& c : p.coeffs_) c *= b.coeffs_[0];
      return p;
    }
    if (a.is_unit()) return b * a;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    Rational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (sgn(b.coeffs_[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
        p.coeffs_[i + j] += tmp;
      }
    }
    p.trim();
    return p;
  }

  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
    if (sgn(c) == 0) return {};
    LaurentPoly p = a;
    for (auto& x : p.coeffs_) x *= c;
    return p;
  }

  /// Coefficients from min_exp() to max_exp(), interior zeros included.
  const std::vector<Rational>& dense_coeffs() const { return coeffs_; }

private:
  friend std::pair<LaurentPoly, LaurentPoly> euclid_div(const LaurentPoly&, const LaurentPoly&);

  LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(max_exp(), o.max_exp());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    const std::size_t off = static_cast<std::size_t>(o.low_ - lo);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      if (subtract)
        coeffs_[off + i] -= o.coeffs_[i];
      else
        coeffs_[off + i] += o.coeffs_[i];
    }
    trim();
    return *this;
  }

  void trim() {
    std::size_t hi = coeffs_.size();
    while (hi > 0 && sgn(coeffs_[hi - 1]) == 0) --hi;
    coeffs_.resize(hi);
    std::size_t lo = 0;
    while (lo < coeffs_.size() && sgn(coeffs_[lo]) == 0) ++lo;
    if (lo > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
      low_ += static_cast<int>(lo);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Exponent span max - min; zero exactly for units.
inline unsigned euclid_norm(const LaurentPoly& a) {
  if (a.is_zero()) throw std::domain_error("euclid_norm: zero polynomial");
  return static_cast<unsigned>(a.max_exp() - a.min_exp());
}

/// Division with remainder: a = q*b + r and (r == 0 or norm(r) < norm(b)).
inline std::pair<LaurentPoly, LaurentPoly> euclid_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("euclid_div: division by zero");
  if (a.is_zero()) return {LaurentPoly{}, LaurentPoly{}};
  if (b.is_unit()) {
    LaurentPoly q = (1 / b.coeffs_[0]) * a;
    return {q.shifted(-b.low_), LaurentPoly{}};
  }
  // Work with A = a*y^-la and B = b*y^-lb as ordinary polynomials, B(0) != 0.
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Rational> rem = a.coeffs_;
  if (rem.size() <= db) return {LaurentPoly{}, a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational inv_lead = 1 / b.coeffs_.back();
  Rational tmp;
  for (std::size_t k = rem.size() - 1; k + 1 > db; --k) {
    if (sgn(rem[k]) == 0) {
      if (k == db) break;
      continue;
    }
    const Rational f = rem[k] * inv_lead;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), b.coeffs_[j].get_mpq_t());
      rem[k - db + j] -= tmp;
    }
    if (k == db) break;
  }
  LaurentPoly q;
  q.coeffs_ = std::move(quot);
  q.low_ = a.low_ - b.low_;
  q.trim();
  rem.resize(db);
  LaurentPoly r;
  r.coeffs_ = std::move(rem);
  r.low_ = a.low_;
  r.trim();
  return {q, r};
}

inline bool divides(const LaurentPoly& d, const LaurentPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return euclid_div(a, d).second.is_zero();
}

/// Exact quotient a / d; throws if d does not divide a.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& d) {
  auto [q, r] = euclid_div(a, d);
  if (!r.is_zero()) throw std::domain_error("exact_div: not divisible");
  return q;
}

/// The unit u with u * a == canonicalize(a).
inline LaurentPoly canonical_unit(const LaurentPoly& a) {
  if (a.is_zero()) throw std::domain_error("canonicalize: zero polynomial");
  return LaurentPoly::monomial(1 / a.leading(), -a.min_exp());
}

/// Unique associate: ordinary monic polynomial in y with nonzero constant term.
inline LaurentPoly canonicalize(const LaurentPoly& a) { return canonical_unit(a) * a; }

inline bool is_canonical(const LaurentPoly& a) {
  return !a.is_zero() && a.min_exp() == 0 && a.leading() == 1;
}

inline LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both arguments zero");
  while (!b.is_zero()) {
    auto r = euclid_div(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return canonicalize(a);
}

struct ExtendedGcd {
  LaurentPoly g; // canonical
  LaurentPoly s;
  LaurentPoly t;
};

/// s*a + t*b == g with g = gcd(a, b) canonical.
inline ExtendedGcd extended_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("extended_gcd: both arguments zero");
  LaurentPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = euclid_div(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const LaurentPoly u = canonical_unit(r0);
  return {u * r0, u * s0, u * t0};
}

// ---------------------------------------------------------------------------
// Text forms.
//
// to_string is the exchange grammar: ascending exponents, every term written
// as `c*y^e` (bare `c` for e == 0), joined by " + " or " - ", e.g. `1 - 1*y^4`.
// to_display_string is the human form used in reports: descending exponents
// with implicit unit coefficients, e.g. `y^4 - 1`. parse_laurent reads both.

namespace detail {
inline std::string rational_abs_string(const Rational& c) {
  Rational a = abs(c);
  return a.get_str();
}
} // namespace detail

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    out += detail::rational_abs_string(c);
    if (e != 0) out += "*y^" + std::to_string(e);
  }
  return out;
}

inline std::string to_display_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const auto terms = p.terms();
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Rational a = abs(c);
    std::string mono;
    if (e == 1)
      mono = "y";
    else if (e != 0)
      mono = "y^" + std::to_string(e);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {
class LaurentParser {
public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    std::map<int, Rational> acc;
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    for (;;) {
      auto [c, e] = term();
      acc[e] += negative ? Rational(-c) : c;
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_ws();
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        if (get() == '-') negative = !negative;
        skip_ws();
      }
    }
    return LaurentPoly::from_terms(acc);
  }

private:
  std::pair<Rational, int> term() {
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      skip_ws();
      if (at_end() || peek() != '*') return {c, 0};
      get();
      skip_ws();
    }
    if (at_end() || peek() != 'y') fail("expected 'y'");
    get();
    skip_ws();
    int e = 1;
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) neg = get() == '-';
      e = integer<int>();
      if (neg) e = -e;
    }
    return {c, e};
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == ds) fail("missing denominator");
      text += "/" + std::string(s_.substr(ds, pos_ - ds));
    }
    Rational r;
    if (r.set_str(text, 10) != 0) fail("bad coefficient");
    if (r.get_den() == 0) fail("zero denominator");
    r.canonicalize();
    return r;
  }

  template <class T>
  T integer() {
    T v{};
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("bad exponent");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw ParseError("laurent parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};
} // namespace detail

inline LaurentPoly parse_laurent(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "0") return {};
  return detail::LaurentParser(text).parse();
}

} // namespace ybh
