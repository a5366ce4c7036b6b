#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flownet {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

enum class Ring { Q, Z };

std::string_view ring_name(Ring ring);

// Canonical num/den (den may be negative, must be nonzero).
Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q"; the result is in lowest terms.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace flownet
