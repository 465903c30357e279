#include "wpx/subproblem.hpp"

#include "wpx/errors.hpp"

#include <algorithm>

namespace wpx
{

PlanningProblem alpha( const PlanningProblem& problem, LocationId loc )
{
    if ( !problem.domain || loc >= problem.domain->locations.size() )
        throw PreconditionError( "alpha: unknown location id " + std::to_string( loc ) );
    PlanningProblem sub = problem;
    sub.goal = GoalSpec{ loc, problem.domain->location( loc ).invariant };
    sub.name = problem.name + "@" + problem.domain->location( loc ).name;
    return sub;
}

std::vector< PlanningProblem > abstract_subproblems( const PlanningProblem& problem )
{
    std::vector< PlanningProblem > out;
    out.reserve( problem.automaton().locations.size() );
    for ( const auto& loc : problem.automaton().locations )
        out.push_back( alpha( problem, loc.id ) );
    return out;
}

bool syntactically_contained( const Polyhedron& outer, const Polyhedron& inner )
{
    return std::ranges::all_of( inner.constraints, [ & ]( const LinearConstraint& c ) {
        return std::ranges::find( outer.constraints, c ) != outer.constraints.end();
    } );
}

} // namespace wpx
