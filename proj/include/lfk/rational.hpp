#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lfk {

using Rational = mpq_class;

// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace; the
// result is canonicalized. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

// True iff q is an integer.
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace lfk
