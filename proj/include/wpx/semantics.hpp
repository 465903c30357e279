#pragma once

#include "wpx/model.hpp"

#include <string>
#include <vector>

namespace wpx
{

// Replays a run against the executable-plan conditions: initial state,
// edge/guard/reset consistency, dwell feasibility under the location rates
// with invariants holding along the whole segment, plan timestamps built
// from cumulative dwell and the makespan equal to total dwell. It also checks
// that the run ends at the goal within the depth bound. Returns every failed
// condition; empty means the run witnesses a valid plan of `problem`.
//
// Invariants are convex and rates are boxes, so a straight-line trajectory
// between entry and exit stays inside the invariant when both endpoints do.
std::vector< std::string > check_run( const PlanningProblem& problem, const WitnessRun& run, const Plan& plan );

} // namespace wpx
