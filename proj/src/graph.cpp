#include "wpx/graph.hpp"

#include "wpx/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace wpx
{

namespace
{

std::uint64_t saturating_add( std::uint64_t a, std::uint64_t b )
{
    return a > std::numeric_limits< std::uint64_t >::max() - b ? std::numeric_limits< std::uint64_t >::max() : a + b;
}

// reach[k][v]: some walk v -> target has exactly k edges.
std::vector< std::vector< bool > > exact_reach( const Graph& graph, LocationId target, std::size_t max_len )
{
    std::vector< std::vector< bool > > reach( max_len + 1, std::vector< bool >( graph.vertex_count(), false ) );
    reach[ 0 ][ target ] = true;
    for ( std::size_t k = 1; k <= max_len; ++k )
        for ( const auto& e : graph.edges() )
            if ( reach[ k - 1 ][ e.target ] )
                reach[ k ][ e.source ] = true;
    return reach;
}

void check_vertex( const Graph& graph, LocationId v, const char* what )
{
    if ( v >= graph.vertex_count() )
        throw PreconditionError( std::string( what ) + " vertex " + std::to_string( v ) + " is not in the graph" );
}

} // namespace

Graph::Graph( std::size_t vertices, const std::vector< std::pair< LocationId, LocationId > >& arcs )
    : _vertices( vertices ), _out( vertices )
{
    std::map< std::pair< LocationId, LocationId >, std::size_t > index;
    for ( auto [ s, t ] : arcs )
    {
        if ( s >= vertices || t >= vertices )
            throw PreconditionError( "arc endpoint outside the vertex range" );
        index.emplace( std::pair{ s, t }, 0 );
    }
    for ( auto& [ key, slot ] : index )
    {
        slot = _edges.size();
        _edges.push_back( { key.first, key.second, {} } );
        _out[ key.first ].push_back( slot );
    }
}

Graph Graph::from_automaton( const HybridAutomaton& automaton )
{
    std::vector< std::pair< LocationId, LocationId > > arcs;
    arcs.reserve( automaton.transitions.size() );
    for ( const auto& t : automaton.transitions )
        arcs.emplace_back( t.source, t.target );
    Graph g( automaton.locations.size(), arcs );
    for ( const auto& t : automaton.transitions )
    {
        auto& e = g._edges[ *std::ranges::find_if( g._out[ t.source ], [ & ]( std::size_t i ) {
            return g._edges[ i ].target == t.target;
        } ) ];
        e.transitions.push_back( t.id );
    }
    for ( auto& e : g._edges )
        std::ranges::sort( e.transitions );
    return g;
}

std::vector< LocationId > Graph::successors( LocationId v ) const
{
    std::vector< LocationId > out;
    for ( std::size_t i : _out.at( v ) )
        out.push_back( _edges[ i ].target );
    return out;
}

const GraphEdge* Graph::find_edge( LocationId source, LocationId target ) const
{
    if ( source >= _vertices )
        return nullptr;
    for ( std::size_t i : _out[ source ] )
        if ( _edges[ i ].target == target )
            return &_edges[ i ];
    return nullptr;
}

std::uint64_t count_walks( const Graph& graph, LocationId source, LocationId target, std::size_t max_transitions )
{
    check_vertex( graph, source, "source" );
    check_vertex( graph, target, "target" );
    // ways[v]: walks v -> target with exactly k edges
    std::vector< std::uint64_t > ways( graph.vertex_count(), 0 ), next( graph.vertex_count() );
    ways[ target ] = 1;
    std::uint64_t total = ways[ source ];
    for ( std::size_t k = 1; k <= max_transitions; ++k )
    {
        std::ranges::fill( next, 0 );
        for ( const auto& e : graph.edges() )
            next[ e.source ] = saturating_add( next[ e.source ], ways[ e.target ] );
        ways.swap( next );
        total = saturating_add( total, ways[ source ] );
        if ( std::ranges::all_of( ways, []( std::uint64_t w ) { return w == 0; } ) )
            break;
    }
    return total;
}

PathSet enumerate_paths( const Graph& graph, LocationId source, LocationId target, std::size_t max_transitions,
                         std::size_t cap )
{
    const std::uint64_t total = count_walks( graph, source, target, max_transitions );
    if ( total > cap )
        throw ResourceError( Stage::path_enumeration,
                             "path set has " + ( total == std::numeric_limits< std::uint64_t >::max()
                                                     ? std::string( "more than 2^64" )
                                                     : std::to_string( total ) )
                                 + " walks, above the cap of " + std::to_string( cap )
                                 + "; raise --max-paths or lower the depth" );

    PathSet out;
    out.paths.reserve( total );
    const auto reach = exact_reach( graph, target, max_transitions );
    PathString walk;
    // Depth-first in successor order yields lexicographic order per length.
    auto extend = [ & ]( auto&& self, LocationId v, std::size_t remaining ) -> void {
        walk.push_back( v );
        if ( remaining == 0 )
            out.paths.push_back( walk );
        else
            for ( std::size_t i : graph.out_edges( v ) )
            {
                const LocationId w = graph.edges()[ i ].target;
                if ( reach[ remaining - 1 ][ w ] )
                    self( self, w, remaining - 1 );
            }
        walk.pop_back();
    };
    for ( std::size_t len = 0; len <= max_transitions; ++len )
        if ( reach[ len ][ source ] )
            extend( extend, source, len );
    return out;
}

PathSet enumerate_paths( const Graph& graph, const PlanningProblem& problem, std::size_t cap )
{
    const auto bound = problem.max_transitions();
    if ( !bound )
        return {};
    return enumerate_paths( graph, problem.init.location, problem.goal.location, *bound, cap );
}

std::optional< std::size_t > bounded_distance( const Graph& graph, LocationId source, LocationId target,
                                               std::optional< LocationId > excluded )
{
    check_vertex( graph, source, "source" );
    check_vertex( graph, target, "target" );
    if ( excluded == source || excluded == target )
        return std::nullopt;
    std::vector< std::size_t > dist( graph.vertex_count(), std::numeric_limits< std::size_t >::max() );
    std::deque< LocationId > queue{ source };
    dist[ source ] = 0;
    while ( !queue.empty() )
    {
        const LocationId v = queue.front();
        queue.pop_front();
        if ( v == target )
            return dist[ v ];
        for ( std::size_t i : graph.out_edges( v ) )
        {
            const LocationId w = graph.edges()[ i ].target;
            if ( w == excluded || dist[ w ] != std::numeric_limits< std::size_t >::max() )
                continue;
            dist[ w ] = dist[ v ] + 1;
            queue.push_back( w );
        }
    }
    return std::nullopt;
}

std::set< LocationId > disconnecting_articulation_points( const Graph& graph, LocationId source, LocationId target,
                                                          std::size_t max_transitions )
{
    std::set< LocationId > out;
    const auto base = bounded_distance( graph, source, target );
    if ( !base || *base > max_transitions )
        return out;
    for ( LocationId v = 0; v < graph.vertex_count(); ++v )
    {
        if ( v == source || v == target )
            continue;
        const auto d = bounded_distance( graph, source, target, v );
        if ( !d || *d > max_transitions )
            out.insert( v );
    }
    return out;
}

} // namespace wpx
