#include "wpx/report.hpp"

#include "wpx/text.hpp"

#include <json.hpp>

namespace wpx
{

namespace
{

using Json = nlohmann::ordered_json;

Json number( const Rational& value )
{
    if ( is_integer( value ) && value.get_num().fits_slong_p() )
        return value.get_num().get_si();
    return to_decimal_string( value );
}

Json milliseconds( std::uint64_t us )
{
    Rational ms( mpz_class( std::to_string( us ) ), 1000 );
    ms.canonicalize();
    return number( ms );
}

Json names( const HybridAutomaton& ha, const PathString& locations )
{
    Json out = Json::array();
    for ( LocationId v : locations )
        out.push_back( ha.location( v ).name );
    return out;
}

Json problem_summary( const PlanningProblem& problem )
{
    const HybridAutomaton& ha = problem.automaton();
    Json out;
    out[ "name" ] = problem.name;
    out[ "domain" ] = ha.name;
    out[ "init" ] = ha.location( problem.init.location ).name;
    out[ "goal" ] = ha.location( problem.goal.location ).name;
    out[ "goal_region" ] = format_polyhedron( problem.goal.region, ha.variables );
    out[ "depth" ] = problem.depth;
    out[ "depth_unit" ] = depth_unit_name( problem.depth_unit );
    out[ "locations" ] = ha.locations.size();
    out[ "transitions" ] = ha.transitions.size();
    return out;
}

Json plan_json( const Plan& plan )
{
    Json steps = Json::array();
    for ( const auto& s : plan.steps )
        steps.push_back( { { "time", number( s.time ) }, { "action", s.action } } );
    return { { "steps", steps }, { "makespan", number( plan.makespan ) } };
}

Json run_json( const HybridAutomaton& ha, const WitnessRun& run )
{
    Json segments = Json::array();
    for ( const auto& seg : run.segments )
    {
        Json entry, exit;
        for ( VarId x = 0; x < seg.entry.size(); ++x )
        {
            entry[ ha.variables[ x ] ] = number( seg.entry[ x ] );
            exit[ ha.variables[ x ] ] = number( seg.exit[ x ] );
        }
        segments.push_back( { { "location", ha.location( seg.location ).name },
                              { "entry", entry },
                              { "dwell", number( seg.dwell ) },
                              { "exit", exit } } );
    }
    Json transitions = Json::array();
    for ( TransitionId t : run.transitions )
        transitions.push_back( ha.transition( t ).label );
    return { { "segments", segments }, { "transitions", transitions } };
}

Json verdict_json( const WaypointVerdict& v )
{
    Json out;
    out[ "location" ] = v.name;
    out[ "status" ] = v.status == Status::sat ? "reachable" : "unreachable";
    out[ "paths_checked" ] = v.paths_checked;
    if ( v.assumed )
        out[ "assumed" ] = true;
    return out;
}

} // namespace

std::string serialize_report( const ExplanationReport& report, int indent )
{
    const HybridAutomaton& ha = report.problem.automaton();
    Json out;
    out[ "problem" ] = problem_summary( report.problem );
    out[ "path_count" ] = report.path_count;
    out[ "chain" ] = report.chain ? names( ha, report.chain->locations() ) : Json( nullptr );
    Json verdicts = Json::array();
    for ( const auto& v : report.verdicts )
        verdicts.push_back( verdict_json( v ) );
    out[ "verdicts" ] = verdicts;

    Json explanation;
    explanation[ "kind" ] = outcome_name( report.outcome );
    if ( report.explanation )
        explanation[ "location" ] = ha.location( *report.explanation ).name;
    if ( report.goal_check )
        explanation[ "goal_check" ] = verdict_json( *report.goal_check );
    if ( report.plan )
        explanation[ "plan" ] = plan_json( *report.plan );
    if ( report.run )
        explanation[ "run" ] = run_json( ha, *report.run );
    out[ "explanation" ] = explanation;

    out[ "timings_ms" ] = { { "path_enumeration", milliseconds( report.timings.path_enumeration_us ) },
                            { "lcs", milliseconds( report.timings.lcs_us ) },
                            { "reachability", milliseconds( report.timings.reachability_us ) } };

    out[ "feasible_waypoints" ] = report.feasible_waypoints();
    out[ "interior_waypoints" ] = report.interior_waypoints();
    Json cut_vertices = Json::array();
    for ( LocationId v : report.articulation_points )
        cut_vertices.push_back( ha.location( v ).name );
    out[ "articulation_points" ] = cut_vertices;
    if ( report.lcs )
        out[ "lcs" ] = { { "length", report.lcs->length() },
                         { "seed_candidates", report.lcs->seed_candidates },
                         { "survivors", report.lcs->survivors } };
    out[ "annotations" ] = report.annotations;
    return out.dump( indent );
}

std::string serialize_check( const PlanningProblem& problem, const ReachResult& result, int indent )
{
    const HybridAutomaton& ha = problem.automaton();
    Json out;
    out[ "problem" ] = problem_summary( problem );
    out[ "status" ] = result.verdict.sat() ? "reachable" : "unreachable";
    out[ "paths_checked" ] = result.verdict.paths_checked;
    out[ "lps_solved" ] = result.lps_solved;
    if ( result.path )
    {
        out[ "path" ] = names( ha, result.path->locations );
        out[ "plan" ] = plan_json( *result.plan );
        out[ "run" ] = run_json( ha, *result.run );
    }
    return out.dump( indent );
}

std::string serialize_paths( const PlanningProblem& problem, const PathSet& paths, bool include_paths, int indent )
{
    Json out;
    out[ "problem" ] = problem_summary( problem );
    out[ "path_count" ] = paths.count();
    if ( include_paths )
    {
        Json list = Json::array();
        for ( const auto& p : paths.paths )
            list.push_back( names( problem.automaton(), p ) );
        out[ "paths" ] = list;
    }
    return out.dump( indent );
}

std::string serialize_waypoints( const PlanningProblem& problem, const PathSet& paths, const WaypointChain* chain,
                                 const std::set< LocationId >& articulation_points, int indent )
{
    const HybridAutomaton& ha = problem.automaton();
    Json out;
    out[ "problem" ] = problem_summary( problem );
    out[ "path_count" ] = paths.count();
    out[ "chain" ] = chain ? names( ha, chain->locations() ) : Json( nullptr );
    out[ "trivial" ] = chain && chain->size() == 2;
    Json cut_vertices = Json::array();
    for ( LocationId v : articulation_points )
        cut_vertices.push_back( ha.location( v ).name );
    out[ "articulation_points" ] = cut_vertices;
    return out.dump( indent );
}

} // namespace wpx
