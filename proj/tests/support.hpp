#pragma once

#include "ybh/laurent.hpp"
#include "ybh/matrix.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace ybh::testing {

/// Seed for randomized tests; override with YBH_SEED.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("YBH_SEED"); s && *s) return std::stoull(s);
  return 20240611;
}

/// Random Laurent polynomial with exponents in [lo, lo + span] and small integer coefficients.
inline LaurentPoly random_poly(std::mt19937_64& rng, int span = 4, int coeff = 3, double zero_prob = 0.2) {
  std::bernoulli_distribution zero(zero_prob);
  if (zero(rng)) return {};
  std::uniform_int_distribution<int> lo_d(-2, 2), span_d(0, span), c_d(-coeff, coeff);
  const int lo = lo_d(rng);
  const int sp = span_d(rng);
  LaurentPoly p;
  for (int e = lo; e <= lo + sp; ++e) p += LaurentPoly::monomial(Rational(c_d(rng)), e);
  return p;
}

inline RingMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span = 4,
                                double zero_prob = 0.3) {
  RingMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_poly(rng, span, 3, zero_prob));
  return m;
}

inline LaurentPoly P(const std::string& s) { return parse_laurent(s); }

} // namespace ybh::testing
