#include "wpx/semantics.hpp"

namespace wpx
{

std::vector< std::string > check_run( const PlanningProblem& problem, const WitnessRun& run, const Plan& plan )
{
    std::vector< std::string > bad;
    const HybridAutomaton& ha = problem.automaton();
    const std::size_t nvars = ha.variables.size();

    if ( run.segments.empty() )
        return { "run has no segments" };
    if ( run.transitions.size() + 1 != run.segments.size() )
        return { "run has " + std::to_string( run.segments.size() ) + " segments but "
                 + std::to_string( run.transitions.size() ) + " transitions" };

    for ( std::size_t i = 0; i < run.segments.size(); ++i )
    {
        const auto& seg = run.segments[ i ];
        if ( seg.location >= ha.locations.size() )
            return { "segment " + std::to_string( i ) + " names unknown location" };
        if ( seg.entry.size() != nvars || seg.exit.size() != nvars )
            return { "segment " + std::to_string( i ) + " valuation has wrong arity" };
    }

    const auto tag = [ & ]( std::size_t i ) {
        return "segment " + std::to_string( i ) + " (" + ha.location( run.segments[ i ].location ).name + ")";
    };

    if ( run.segments.front().location != problem.init.location )
        bad.push_back( "run does not start in the initial location" );
    if ( !problem.init.region.contains( run.segments.front().entry ) )
        bad.push_back( "initial valuation is outside the initial region" );

    Rational elapsed = 0;
    for ( std::size_t i = 0; i < run.segments.size(); ++i )
    {
        const auto& seg = run.segments[ i ];
        const Location& loc = ha.location( seg.location );
        if ( seg.dwell < 0 )
            bad.push_back( tag( i ) + ": negative dwell time" );
        if ( !loc.invariant.contains( seg.entry ) )
            bad.push_back( tag( i ) + ": entry valuation violates the invariant" );
        if ( !loc.invariant.contains( seg.exit ) )
            bad.push_back( tag( i ) + ": exit valuation violates the invariant" );
        for ( VarId x = 0; x < nvars && x < loc.rates.rates.size(); ++x )
        {
            const Rational delta = seg.exit[ x ] - seg.entry[ x ];
            const Interval& rate = loc.rates.rates[ x ];
            if ( delta < rate.lower * seg.dwell || delta > rate.upper * seg.dwell )
                bad.push_back( tag( i ) + ": change of '" + ha.variables[ x ] + "' is not reachable under its rate" );
        }
        elapsed += seg.dwell;

        if ( i + 1 == run.segments.size() )
            break;

        const TransitionId tid = run.transitions[ i ];
        if ( tid >= ha.transitions.size() )
        {
            bad.push_back( "transition " + std::to_string( i ) + " does not exist" );
            continue;
        }
        const Transition& t = ha.transition( tid );
        const auto& next = run.segments[ i + 1 ];
        if ( t.source != seg.location || t.target != next.location )
            bad.push_back( "transition " + std::to_string( i ) + " does not connect its flanking segments" );
        if ( !t.guard.contains( seg.exit ) )
            bad.push_back( "transition " + std::to_string( i ) + ": guard violated" );
        for ( VarId x = 0; x < nvars; ++x )
        {
            auto it = t.reset.assignments.find( x );
            const bool ok = it == t.reset.assignments.end() ? next.entry[ x ] == seg.exit[ x ]
                                                            : it->second.contains( next.entry[ x ] );
            if ( !ok )
                bad.push_back( "transition " + std::to_string( i ) + ": reset of '" + ha.variables[ x ]
                               + "' violated" );
        }

        if ( i < plan.steps.size() )
        {
            if ( plan.steps[ i ].action != t.label )
                bad.push_back( "plan step " + std::to_string( i ) + " action does not match transition label" );
            if ( plan.steps[ i ].time != elapsed )
                bad.push_back( "plan step " + std::to_string( i ) + " time is not the cumulative dwell" );
        }
    }

    if ( plan.steps.size() != run.transitions.size() )
        bad.push_back( "plan has " + std::to_string( plan.steps.size() ) + " steps for "
                       + std::to_string( run.transitions.size() ) + " transitions" );
    for ( std::size_t i = 1; i < plan.steps.size(); ++i )
        if ( plan.steps[ i ].time < plan.steps[ i - 1 ].time )
            bad.push_back( "plan times decrease at step " + std::to_string( i ) );
    if ( plan.makespan != elapsed )
        bad.push_back( "makespan differs from total dwell" );

    const auto& last = run.segments.back();
    if ( last.location != problem.goal.location )
        bad.push_back( "run does not end in the goal location" );
    else if ( !problem.goal.region.contains( last.exit ) )
        bad.push_back( "final valuation is outside the goal region" );

    const auto bound = problem.max_transitions();
    if ( !bound || run.transitions.size() > *bound )
        bad.push_back( "run exceeds the depth bound" );
    return bad;
}

} // namespace wpx
