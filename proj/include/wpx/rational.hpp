#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wpx
{

// Exact rational carrier for every coefficient, bound and valuation.
// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as they are built through the helpers below or GMP arithmetic.
using Rational = mpq_class;

// Accepts "12", "-3", "2.75", "-0.125", "7/3", "+4/6". Throws
// std::invalid_argument on anything else (including a zero denominator).
Rational parse_rational( std::string_view text );

// "p" for integers, "p/q" otherwise.
std::string to_string( const Rational& value );

// Exact decimal ("2.5", "-0.125") when the value has a terminating decimal
// expansion, "p/q" otherwise. Integers print without a fractional part.
std::string to_decimal_string( const Rational& value );

bool is_integer( const Rational& value );

} // namespace wpx
