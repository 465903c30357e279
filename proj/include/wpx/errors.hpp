#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpx
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Position-carrying syntax error from the model/problem readers.
class ParseError : public Error
{
    std::size_t _line;
    std::size_t _column;
    std::vector< std::string > _expected;

public:
    ParseError( std::string message, std::size_t line, std::size_t column,
                std::vector< std::string > expected = {} );

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }
    [[nodiscard]] const std::vector< std::string >& expected() const { return _expected; }
};

// Well-formed text that denotes an invalid model or problem.
class SemanticError : public Error
{
    std::vector< std::string > _violations;

public:
    explicit SemanticError( std::vector< std::string > violations );
    SemanticError( const std::string& message, std::size_t line, std::size_t column );

    [[nodiscard]] const std::vector< std::string >& violations() const { return _violations; }
};

// Caller broke an operation's precondition (unknown location id, empty path set, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

enum class Stage
{
    path_enumeration,
    lcs,
    reachability,
};

const char* stage_name( Stage stage );

// A configured cap (paths, candidates) was exceeded.
class ResourceError : public Error
{
    Stage _stage;

public:
    ResourceError( Stage stage, const std::string& message );

    [[nodiscard]] Stage stage() const { return _stage; }
};

// An internal consistency check failed, e.g. a solver witness that does not
// satisfy its own system. Always a bug.
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace wpx
