#include "wpx/errors.hpp"

namespace wpx
{

namespace
{

std::string join_expected( const std::vector< std::string >& expected )
{
    if ( expected.empty() )
        return {};
    std::string out = " (expected ";
    for ( std::size_t i = 0; i < expected.size(); ++i )
    {
        if ( i > 0 )
            out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[ i ];
    }
    return out + ")";
}

std::string first_or_default( const std::vector< std::string >& violations )
{
    if ( violations.empty() )
        return "invalid model";
    if ( violations.size() == 1 )
        return violations.front();
    return violations.front() + " (and " + std::to_string( violations.size() - 1 ) + " more)";
}

} // namespace

ParseError::ParseError( std::string message, std::size_t line, std::size_t column,
                        std::vector< std::string > expected )
    : Error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message
             + join_expected( expected ) ),
      _line( line ), _column( column ), _expected( std::move( expected ) )
{
}

SemanticError::SemanticError( std::vector< std::string > violations )
    : Error( first_or_default( violations ) ), _violations( std::move( violations ) )
{
}

SemanticError::SemanticError( const std::string& message, std::size_t line, std::size_t column )
    : SemanticError( std::vector< std::string >{
        std::to_string( line ) + ":" + std::to_string( column ) + ": " + message } )
{
}

const char* stage_name( Stage stage )
{
    switch ( stage )
    {
    case Stage::path_enumeration:
        return "path_enumeration";
    case Stage::lcs:
        return "lcs";
    case Stage::reachability:
        return "reachability";
    }
    return "unknown";
}

ResourceError::ResourceError( Stage stage, const std::string& message )
    : Error( std::string( stage_name( stage ) ) + ": " + message ), _stage( stage )
{
}

} // namespace wpx
