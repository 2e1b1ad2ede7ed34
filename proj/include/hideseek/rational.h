#ifndef HIDESEEK_RATIONAL_H_
#define HIDESEEK_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hideseek {

// Exact probabilities and expectations. Floating point only appears when a
// value is reported.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Always "p/q", integers included ("3/1").
std::string to_fraction_string(const Rational& r);

// Parses "p/q", an integer, or a decimal literal such as "0.9" or "1e-2"
// into the exact rational it denotes.
Rational parse_rational(std::string_view text);

// Shortest round-trip decimal of `x`, read back exactly: 0.9 becomes 9/10.
Rational rational_from_double(double x);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace hideseek

#endif  // HIDESEEK_RATIONAL_H_
