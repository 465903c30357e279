#include "wpx/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wpx
{

namespace
{

bool all_digits( std::string_view s )
{
    if ( s.empty() )
        return false;
    for ( char c : s )
        if ( !std::isdigit( static_cast< unsigned char >( c ) ) )
            return false;
    return true;
}

mpz_class to_mpz( std::string_view digits )
{
    return mpz_class( std::string( digits ), 10 );
}

} // namespace

Rational parse_rational( std::string_view text )
{
    const std::string original( text );
    bool negative = false;
    if ( !text.empty() && ( text.front() == '-' || text.front() == '+' ) )
    {
        negative = text.front() == '-';
        text.remove_prefix( 1 );
    }

    Rational result;
    if ( auto slash = text.find( '/' ); slash != std::string_view::npos )
    {
        auto num = text.substr( 0, slash );
        auto den = text.substr( slash + 1 );
        if ( !all_digits( num ) || !all_digits( den ) )
            throw std::invalid_argument( "malformed rational '" + original + "'" );
        mpz_class d = to_mpz( den );
        if ( d == 0 )
            throw std::invalid_argument( "zero denominator in '" + original + "'" );
        result = Rational( to_mpz( num ), d );
    }
    else if ( auto dot = text.find( '.' ); dot != std::string_view::npos )
    {
        auto whole = text.substr( 0, dot );
        auto frac = text.substr( dot + 1 );
        if ( ( whole.empty() && frac.empty() ) || ( !whole.empty() && !all_digits( whole ) )
             || ( !frac.empty() && !all_digits( frac ) ) )
            throw std::invalid_argument( "malformed decimal '" + original + "'" );
        mpz_class scale;
        mpz_ui_pow_ui( scale.get_mpz_t(), 10, frac.size() );
        mpz_class digits = to_mpz( std::string( whole.empty() ? "0" : whole ) + std::string( frac ) );
        result = Rational( digits, scale );
    }
    else
    {
        if ( !all_digits( text ) )
            throw std::invalid_argument( "malformed number '" + original + "'" );
        result = Rational( to_mpz( text ) );
    }
    result.canonicalize();
    if ( negative )
        result = -result;
    return result;
}

std::string to_string( const Rational& value )
{
    return value.get_str();
}

bool is_integer( const Rational& value )
{
    return value.get_den() == 1;
}

std::string to_decimal_string( const Rational& value )
{
    if ( is_integer( value ) )
        return value.get_num().get_str();

    // Terminating iff the denominator has no prime factors besides 2 and 5.
    mpz_class den = value.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while ( mpz_divisible_ui_p( den.get_mpz_t(), 2 ) )
    {
        den /= 2;
        ++twos;
    }
    while ( mpz_divisible_ui_p( den.get_mpz_t(), 5 ) )
    {
        den /= 5;
        ++fives;
    }
    if ( den != 1 )
        return to_string( value );

    const unsigned places = std::max( twos, fives );
    mpz_class scale;
    mpz_ui_pow_ui( scale.get_mpz_t(), 10, places );
    mpz_class scaled = value.get_num() * scale / value.get_den();
    const bool negative = scaled < 0;
    if ( negative )
        scaled = -scaled;

    std::string digits = scaled.get_str();
    if ( digits.size() <= places )
        digits.insert( 0, places - digits.size() + 1, '0' );
    digits.insert( digits.size() - places, "." );
    return negative ? "-" + digits : digits;
}

} // namespace wpx
