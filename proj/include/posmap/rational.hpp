#pragma once
// Exact rational scalars (GMP-backed) shared by the exact geometry and
// zero-mode layers, plus float<->rational conversion helpers.

#include <gmpxx.h>

#include <string>

namespace posmap {

using Rational = mpq_class;

// Canonicalized num/den constructor; den must be nonzero.
[[nodiscard]] Rational rat(long num, long den = 1);

// Best rational approximation with denominator <= max_den, via continued
// fractions with the semiconvergent refinement.  Exact on every double whose
// shortest representation has a small denominator: rationalize(1.5) == 3/2,
// rationalize(0.02) == 1/50.  Throws std::invalid_argument on non-finite x
// or max_den < 1.
[[nodiscard]] Rational rationalize(double x, long max_den = 1'000'000);

[[nodiscard]] double to_double(const Rational& q);

// "num/den", or just "num" when den == 1.
[[nodiscard]] std::string to_string(const Rational& q);

// Accepts "num", "num/den", signs, surrounding whitespace.  Throws
// std::invalid_argument on anything else (including den == 0).
[[nodiscard]] Rational parse_rational(const std::string& s);

}  // namespace posmap
