#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gitstab {

using Rational = mpq_class;
using Integer = mpz_class;
using i64 = std::int64_t;

// All domain errors carry one of the fixed messages documented per operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational q(i64 num, i64 den = 1);

Integer ceil_q(const Rational& x);
Integer floor_q(const Rational& x);
// x - floor(x), always in [0, 1).
Rational frac_q(const Rational& x);

i64 to_i64(const Integer& x);
i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

// "p/q" in lowest terms, denominator always present.
std::string to_string(const Rational& x);
// Accepts "p", "p/q" with optional sign; result is canonicalized.
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

}  // namespace gitstab
