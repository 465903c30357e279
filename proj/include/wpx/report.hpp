#pragma once

#include "wpx/explain.hpp"
#include "wpx/graph.hpp"
#include "wpx/reach.hpp"

#include <string>

namespace wpx
{

// Fixed key order; integral numbers as JSON numbers, other rationals as
// exact decimal (or p/q) strings.
std::string serialize_report( const ExplanationReport& report, int indent = 2 );

std::string serialize_check( const PlanningProblem& problem, const ReachResult& result, int indent = 2 );

std::string serialize_paths( const PlanningProblem& problem, const PathSet& paths, bool include_paths,
                             int indent = 2 );

std::string serialize_waypoints( const PlanningProblem& problem, const PathSet& paths, const WaypointChain* chain,
                                 const std::set< LocationId >& articulation_points, int indent = 2 );

} // namespace wpx
