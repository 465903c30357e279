#include "wpx/chain.hpp"

#include "wpx/errors.hpp"
#include "wpx/subproblem.hpp"

#include <algorithm>

namespace wpx
{

PathString WaypointChain::locations() const
{
    PathString out;
    out.reserve( entries.size() );
    for ( const auto& e : entries )
        out.push_back( e.location );
    return out;
}

WaypointChain chain_from_lcs( const PlanningProblem& problem, const LcsResult& lcs )
{
    if ( lcs.sequence.empty() )
        throw PreconditionError( "chain_from_lcs: empty LCS" );
    WaypointChain chain;
    chain.lcs = lcs.sequence;
    for ( std::size_t i = 0; i < lcs.sequence.size(); ++i )
    {
        const LocationId loc = lcs.sequence[ i ];
        if ( !chain.entries.empty() && chain.entries.back().location == loc )
        {
            chain.merged_repeats = true;
            continue;
        }
        chain.entries.push_back( { alpha( problem, loc ), loc, problem.automaton().location( loc ).name, i } );
    }
    return chain;
}

bool verify_chain_abstract( const PathSet& paths, const WaypointChain& chain )
{
    const PathString locs = chain.locations();
    return std::ranges::all_of( paths.paths, [ & ]( const PathString& p ) { return is_subsequence( locs, p ); } );
}

} // namespace wpx
