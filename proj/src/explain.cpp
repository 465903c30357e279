#include "wpx/explain.hpp"

#include "wpx/errors.hpp"
#include "wpx/subproblem.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>

namespace wpx
{

namespace
{

class StageClock
{
    std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();

public:
    [[nodiscard]] std::uint64_t elapsed_us() const
    {
        return static_cast< std::uint64_t >( std::chrono::duration_cast< std::chrono::microseconds >(
                                                 std::chrono::steady_clock::now() - _start )
                                                 .count() );
    }
};

ReachOptions reach_options( const ExplainOptions& options )
{
    return { options.max_paths, options.parallelism, options.mode, options.dump_dir };
}

} // namespace

const char* outcome_name( OutcomeKind kind )
{
    switch ( kind )
    {
    case OutcomeKind::discrete_infeasible:
        return "discrete_infeasible";
    case OutcomeKind::first_unreachable_waypoint:
        return "first_unreachable_waypoint";
    case OutcomeKind::no_waypoint_explanation:
        return "no_waypoint_explanation";
    case OutcomeKind::solvable_contradiction:
        return "solvable_contradiction";
    }
    return "unknown";
}

std::size_t ExplanationReport::feasible_waypoints() const
{
    return static_cast< std::size_t >(
        std::ranges::count_if( verdicts, []( const WaypointVerdict& v ) { return v.status == Status::sat; } ) );
}

std::size_t ExplanationReport::interior_waypoints() const
{
    if ( !chain )
        return 0;
    return static_cast< std::size_t >( std::ranges::count_if( chain->entries, [ & ]( const ChainEntry& e ) {
        return e.location != problem.init.location && e.location != problem.goal.location;
    } ) );
}

std::optional< std::string > classify_trivial_chain( const ExplanationReport& report )
{
    if ( !report.chain || report.chain->size() != 2 )
        return std::nullopt;
    std::string bound = report.problem.max_transitions() ? std::to_string( *report.problem.max_transitions() ) : "0";
    return "trivial chain: the graph has no disconnecting articulation point within " + bound + " transitions";
}

ExplanationReport explain( const PlanningProblem& problem, const ExplainOptions& options )
{
    ExplanationReport report;
    report.problem = problem;
    const HybridAutomaton& ha = problem.automaton();

    StageClock pe_clock;
    const Graph graph = Graph::from_automaton( ha );
    const PathSet paths = enumerate_paths( graph, problem, options.max_paths );
    report.path_count = paths.count();
    if ( const auto bound = problem.max_transitions() )
        report.articulation_points =
            disconnecting_articulation_points( graph, problem.init.location, problem.goal.location, *bound );
    report.timings.path_enumeration_us = pe_clock.elapsed_us();
    spdlog::debug( "{}: {} paths", problem.name, paths.count() );

    if ( paths.empty() )
    {
        report.outcome = OutcomeKind::discrete_infeasible;
        report.annotations.push_back( "no path from " + ha.location( problem.init.location ).name + " to "
                                      + ha.location( problem.goal.location ).name + " within the depth bound" );
        return report;
    }

    StageClock lcs_clock;
    report.lcs = lcs_multi( paths, { options.max_candidates, options.parallelism } );
    report.chain = chain_from_lcs( problem, *report.lcs );
    report.timings.lcs_us = lcs_clock.elapsed_us();
    spdlog::debug( "{}: chain of {} from {} candidates", problem.name, report.chain->size(),
                  report.lcs->seed_candidates );

    StageClock ra_clock;
    const ReachOptions reach = reach_options( options );
    const bool init_inside = syntactically_contained( problem.init.region, ha.location( problem.init.location ).invariant );
    for ( const ChainEntry& entry : report.chain->entries )
    {
        WaypointVerdict v{ entry.location, entry.name, Status::sat, 0, false };
        if ( entry.location == problem.init.location && entry.position == 0 && init_inside )
            v.assumed = true;
        else
        {
            const ReachResult r = bounded_reachable( entry.subproblem, reach );
            v.status = r.verdict.status;
            v.paths_checked = r.verdict.paths_checked;
        }
        spdlog::debug( "{}: waypoint {} {}", problem.name, v.name, status_name( v.status ) );
        report.verdicts.push_back( v );
        if ( v.status == Status::unsat )
        {
            report.outcome = OutcomeKind::first_unreachable_waypoint;
            report.explanation = entry.location;
            break;
        }
    }

    if ( !report.explanation )
    {
        const ReachResult r = bounded_reachable( problem, reach );
        report.goal_check = WaypointVerdict{ problem.goal.location, ha.location( problem.goal.location ).name,
                                             r.verdict.status, r.verdict.paths_checked, false };
        if ( r.verdict.sat() )
        {
            report.outcome = OutcomeKind::solvable_contradiction;
            report.plan = r.plan;
            report.run = r.run;
        }
        else
            report.outcome = OutcomeKind::no_waypoint_explanation;
    }
    report.timings.reachability_us = ra_clock.elapsed_us();

    if ( auto note = classify_trivial_chain( report ) )
        report.annotations.push_back( *note );
    else
    {
        const auto n = report.interior_waypoints();
        report.annotations.push_back( std::to_string( n ) + ( n == 1 ? " waypoint lies" : " waypoints lie" )
                                      + " strictly between the initial and goal locations" );
    }
    if ( report.chain->merged_repeats )
        report.annotations.push_back( "consecutive repeats of a location in the LCS were merged" );
    return report;
}

} // namespace wpx
