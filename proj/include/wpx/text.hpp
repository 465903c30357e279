#pragma once

#include "wpx/model.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpx
{

struct SourcePosition
{
    std::size_t line = 0;
    std::size_t column = 0;
};

struct ModelDocument
{
    std::shared_ptr< const HybridAutomaton > automaton;
    std::string source_name;
    std::map< LocationId, SourcePosition > location_positions;
    std::map< TransitionId, SourcePosition > transition_positions;
};

// Constraint as written, before variable names are resolved against a model.
struct RawTerm
{
    std::string variable;
    Rational coefficient;
    SourcePosition position;
};

struct RawConstraint
{
    std::vector< RawTerm > terms;
    Rational constant;
    Relation relation = Relation::le;
    SourcePosition position;
};

struct RawRegion
{
    std::string location;
    SourcePosition position;
    std::vector< RawConstraint > constraints;
};

struct ProblemDocument
{
    std::string name;
    std::optional< std::string > model_path;
    std::optional< RawRegion > init;
    RawRegion goal;
    std::size_t depth = 0;
    DepthUnit depth_unit = DepthUnit::transitions;
};

// Throws ParseError on malformed text and SemanticError when the text is
// well-formed but the automaton it denotes is not (undeclared variables,
// duplicate names, dangling references, malformed intervals, ...).
ModelDocument parse_model( std::string_view text, std::string source_name = "<input>" );

// Syntax only; names stay unresolved.
ProblemDocument parse_problem_document( std::string_view text );

// Resolves names against `model`; the initial condition defaults to the
// model's own when the problem omits it.
PlanningProblem resolve_problem( const ProblemDocument& doc, const ModelDocument& model );

PlanningProblem parse_problem( std::string_view text, const ModelDocument& model );

// Canonical text; parse_model(serialize_model(a)) reproduces `a` exactly.
std::string serialize_model( const HybridAutomaton& automaton );

std::string serialize_problem( const PlanningProblem& problem, const std::string& model_path = {} );

std::string format_constraint( const LinearConstraint& constraint, const std::vector< std::string >& names );
std::string format_polyhedron( const Polyhedron& poly, const std::vector< std::string >& names );

} // namespace wpx
