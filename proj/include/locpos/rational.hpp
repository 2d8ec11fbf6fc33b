#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace locpos {

// Exact rational scalar. GMP keeps gcd(|num|, den) = 1 and den >= 1
// after canonicalize(); every constructor below returns canonical values.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Throws on malformed input.
Rat parse_rat(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

Rat rat_pow(const Rat& base, unsigned long exponent);

// Bits needed for the larger of |numerator|, denominator.
std::size_t rat_bit_size(const Rat& value);

inline int rat_sign(const Rat& value) { return sgn(value); }

}  // namespace locpos
