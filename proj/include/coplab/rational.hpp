#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coplab {

using Rational = mpq_class;

// Canonical "p/q" or "p" text form.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace coplab
