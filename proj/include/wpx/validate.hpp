#pragma once

#include "wpx/model.hpp"

#include <string>
#include <vector>

namespace wpx
{

enum class ViolationKind
{
    duplicate_name,
    undeclared_variable,
    dangling_location,
    malformed_interval,
    bad_identifier,
    unknown_label,
    rate_arity,
    missing_domain,
};

struct Violation
{
    ViolationKind kind;
    std::string message;

    friend bool operator==( const Violation&, const Violation& ) = default;
};

using ValidationReport = std::vector< Violation >;

// Every structural invariant of the automaton that does not hold. Pure; an
// empty report means the model is valid.
ValidationReport validate_model( const HybridAutomaton& automaton );

// validate_model on the domain plus the problem's own references.
ValidationReport validate_problem( const PlanningProblem& problem );

std::vector< std::string > messages( const ValidationReport& report );

} // namespace wpx
