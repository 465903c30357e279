#pragma once

#include "wpx/model.hpp"

#include <vector>

namespace wpx
{

// The location abstraction Pi_loc of a problem: same domain, initial
// condition and depth, goal widened to <loc, Inv(loc)>. Throws
// PreconditionError for an unknown location.
PlanningProblem alpha( const PlanningProblem& problem, LocationId loc );

// One abstract sub-problem per location, in location-id order.
std::vector< PlanningProblem > abstract_subproblems( const PlanningProblem& problem );

// True when every constraint of `inner` occurs verbatim in `outer`, a cheap
// sufficient test for outer ⊆ inner (a superset of constraints cuts a subset).
bool syntactically_contained( const Polyhedron& outer, const Polyhedron& inner );

} // namespace wpx
