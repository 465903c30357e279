#include "wpx/reach.hpp"

#include "wpx/errors.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <mutex>

namespace wpx
{

namespace
{

std::uint64_t saturating_add( std::uint64_t a, std::uint64_t b )
{
    return a > std::numeric_limits< std::uint64_t >::max() - b ? std::numeric_limits< std::uint64_t >::max() : a + b;
}

// Outgoing transitions per location, ascending by id.
std::vector< std::vector< TransitionId > > out_transitions( const HybridAutomaton& ha )
{
    std::vector< std::vector< TransitionId > > out( ha.locations.size() );
    for ( const auto& t : ha.transitions )
        out[ t.source ].push_back( t.id );
    return out;
}

// ways[k][v]: concrete walks v -> goal with exactly k transitions.
std::vector< std::vector< std::uint64_t > > exact_counts( const HybridAutomaton& ha, LocationId goal,
                                                          std::size_t max_len )
{
    std::vector< std::vector< std::uint64_t > > ways( max_len + 1,
                                                      std::vector< std::uint64_t >( ha.locations.size(), 0 ) );
    ways[ 0 ][ goal ] = 1;
    for ( std::size_t k = 1; k <= max_len; ++k )
        for ( const auto& t : ha.transitions )
            ways[ k ][ t.source ] = saturating_add( ways[ k ][ t.source ], ways[ k - 1 ][ t.target ] );
    return ways;
}

void check_location( const HybridAutomaton& ha, LocationId v )
{
    if ( v >= ha.locations.size() )
        throw PreconditionError( "location id " + std::to_string( v ) + " is not in the automaton" );
}

void add_polyhedron( LpProblem& lp, const Polyhedron& poly, const std::vector< VarId >& map )
{
    for ( const auto& c : poly.constraints )
    {
        LinearExpression e = LinearExpression::constant_term( c.expression.constant() );
        for ( const auto& [ v, a ] : c.expression.coefficients() )
            e.add_term( map.at( v ), a );
        lp.constraints.push_back( { std::move( e ), c.relation } );
    }
}

void add_interval( LpProblem& lp, const LinearExpression& e, const Interval& range )
{
    if ( range.lower == range.upper )
    {
        lp.constraints.push_back( make_constraint( e, Relation::eq, LinearExpression::constant_term( range.lower ) ) );
        return;
    }
    lp.constraints.push_back( make_constraint( e, Relation::ge, LinearExpression::constant_term( range.lower ) ) );
    lp.constraints.push_back( make_constraint( e, Relation::le, LinearExpression::constant_term( range.upper ) ) );
}

PathEncoding encode( const PlanningProblem& problem, const ConcretePath& path, bool with_goal )
{
    const HybridAutomaton& ha = problem.automaton();
    if ( path.locations.size() != path.transitions.size() + 1 )
        throw PreconditionError( "encode_path: path needs one more location than transitions" );
    if ( path.locations.front() != problem.init.location )
        throw PreconditionError( "encode_path: path does not start at the initial location" );
    if ( with_goal && path.locations.back() != problem.goal.location )
        throw PreconditionError( "encode_path: path does not end at the goal location" );
    for ( std::size_t i = 0; i < path.transitions.size(); ++i )
    {
        if ( path.transitions[ i ] >= ha.transitions.size() )
            throw PreconditionError( "encode_path: unknown transition id" );
        const Transition& t = ha.transition( path.transitions[ i ] );
        if ( t.source != path.locations[ i ] || t.target != path.locations[ i + 1 ] )
            throw PreconditionError( "encode_path: transition " + t.label + " does not join positions "
                                     + std::to_string( i ) + " and " + std::to_string( i + 1 ) );
    }

    PathEncoding enc;
    LpProblem& lp = enc.lp;
    const std::size_t nvars = ha.variables.size();
    for ( std::size_t i = 0; i < path.locations.size(); ++i )
    {
        std::vector< VarId > in( nvars ), out( nvars );
        for ( VarId x = 0; x < nvars; ++x )
            in[ x ] = lp.add_variable( ha.variables[ x ] + "_" + std::to_string( i ) + "_in" );
        for ( VarId x = 0; x < nvars; ++x )
            out[ x ] = lp.add_variable( ha.variables[ x ] + "_" + std::to_string( i ) + "_out" );
        enc.dwell.push_back( lp.add_variable( "delta_" + std::to_string( i ) ) );
        enc.entry.push_back( std::move( in ) );
        enc.exit.push_back( std::move( out ) );
    }

    add_polyhedron( lp, problem.init.region, enc.entry.front() );
    for ( std::size_t i = 0; i < path.locations.size(); ++i )
    {
        const Location& loc = ha.location( path.locations[ i ] );
        const auto delta = LinearExpression::variable( enc.dwell[ i ] );
        add_polyhedron( lp, loc.invariant, enc.entry[ i ] );
        add_polyhedron( lp, loc.invariant, enc.exit[ i ] );
        lp.constraints.push_back( make_constraint( delta, Relation::ge ) );
        for ( VarId x = 0; x < nvars; ++x )
        {
            const Interval& rate = loc.rates.rates.at( x );
            const LinearExpression change = LinearExpression::variable( enc.exit[ i ][ x ] )
                                            - LinearExpression::variable( enc.entry[ i ][ x ] );
            if ( rate.lower == rate.upper )
            {
                lp.constraints.push_back( make_constraint( change, Relation::eq, rate.lower * delta ) );
                continue;
            }
            lp.constraints.push_back( make_constraint( change, Relation::ge, rate.lower * delta ) );
            lp.constraints.push_back( make_constraint( change, Relation::le, rate.upper * delta ) );
        }
        if ( i == path.transitions.size() )
            break;
        const Transition& t = ha.transition( path.transitions[ i ] );
        add_polyhedron( lp, t.guard, enc.exit[ i ] );
        for ( VarId x = 0; x < nvars; ++x )
        {
            const auto next = LinearExpression::variable( enc.entry[ i + 1 ][ x ] );
            auto it = t.reset.assignments.find( x );
            if ( it == t.reset.assignments.end() )
                lp.constraints.push_back(
                    make_constraint( next, Relation::eq, LinearExpression::variable( enc.exit[ i ][ x ] ) ) );
            else
                add_interval( lp, next, it->second );
        }
    }
    if ( with_goal )
        add_polyhedron( lp, problem.goal.region, enc.exit.back() );
    return enc;
}

std::string path_tag( const char* kind, const std::vector< TransitionId >& transitions )
{
    std::string tag = std::string( kind ) + "_L" + std::to_string( transitions.size() ) + "_";
    if ( transitions.empty() )
        return tag + "empty";
    for ( std::size_t i = 0; i < transitions.size(); ++i )
        tag += ( i ? "-t" : "t" ) + std::to_string( transitions[ i ] );
    return tag;
}

class Search
{
    const PlanningProblem& _problem;
    const HybridAutomaton& _ha;
    const ReachOptions& _options;
    std::vector< std::vector< TransitionId > > _out;
    std::vector< std::vector< std::uint64_t > > _ways;
    std::map< std::vector< TransitionId >, bool > _prefix_cache;
    std::mutex _lock;
    std::uint64_t _lps = 0;

public:
    struct Outcome
    {
        std::uint64_t checked = 0;
        std::optional< ConcretePath > path;
        std::optional< Verdict > verdict;
    };

    Search( const PlanningProblem& problem, const ReachOptions& options, std::size_t max_len )
        : _problem( problem ), _ha( problem.automaton() ), _options( options ), _out( out_transitions( _ha ) ),
          _ways( exact_counts( _ha, problem.goal.location, max_len ) )
    {
    }

    [[nodiscard]] std::uint64_t lps() const { return _lps; }
    [[nodiscard]] std::uint64_t ways( std::size_t k, LocationId v ) const { return _ways[ k ][ v ]; }
    [[nodiscard]] const std::vector< TransitionId >& out( LocationId v ) const { return _out[ v ]; }

    Verdict solve( const LpProblem& lp, const char* kind, const std::vector< TransitionId >& transitions )
    {
        {
            std::lock_guard guard( _lock );
            ++_lps;
            if ( _options.dump_dir )
            {
                std::ofstream file( *_options.dump_dir / ( path_tag( kind, transitions ) + ".lp" ) );
                file << "# " << kind << " " << _problem.name << "\n" << format_lp( lp );
            }
        }
        return lp_feasible( lp );
    }

    ConcretePath materialise( const std::vector< TransitionId >& transitions ) const
    {
        ConcretePath p{ { _problem.init.location }, transitions };
        for ( TransitionId t : transitions )
            p.locations.push_back( _ha.transition( t ).target );
        return p;
    }

    bool prefix_feasible( const std::vector< TransitionId >& prefix )
    {
        {
            std::lock_guard guard( _lock );
            if ( auto it = _prefix_cache.find( prefix ); it != _prefix_cache.end() )
                return it->second;
        }
        const bool ok = solve( encode_prefix( _problem, materialise( prefix ) ).lp, "prefix", prefix ).sat();
        std::lock_guard guard( _lock );
        _prefix_cache.emplace( prefix, ok );
        return ok;
    }

    Outcome leaf( const std::vector< TransitionId >& transitions )
    {
        ConcretePath p = materialise( transitions );
        Verdict v = solve( encode_path( _problem, p ).lp, "path", transitions );
        if ( v.sat() )
            return { 1, std::move( p ), std::move( v ) };
        return { 1, std::nullopt, std::nullopt };
    }

    // Paths of exactly `remaining` more transitions extending `prefix`.
    Outcome subtree( std::vector< TransitionId >& prefix, LocationId at, std::size_t remaining )
    {
        if ( remaining == 0 )
            return leaf( prefix );
        if ( !prefix_feasible( prefix ) )
            return { _ways[ remaining ][ at ], std::nullopt, std::nullopt };
        Outcome total;
        for ( TransitionId t : _out[ at ] )
        {
            const LocationId next = _ha.transition( t ).target;
            if ( _ways[ remaining - 1 ][ next ] == 0 )
                continue;
            prefix.push_back( t );
            Outcome sub = subtree( prefix, next, remaining - 1 );
            prefix.pop_back();
            total.checked = saturating_add( total.checked, sub.checked );
            if ( sub.path )
            {
                total.path = std::move( sub.path );
                total.verdict = std::move( sub.verdict );
                return total;
            }
        }
        return total;
    }
};

struct FrontierItem
{
    std::vector< TransitionId > prefix;
    LocationId at = 0;
    std::size_t remaining = 0;
    // Already decided while building the frontier: an infeasible prefix.
    std::optional< std::uint64_t > pruned;
};

// Lexicographic frontier at `split` transitions for paths of length `len`.
void build_frontier( Search& search, const HybridAutomaton& ha, std::vector< TransitionId >& prefix, LocationId at,
                     std::size_t remaining, std::size_t split, std::vector< FrontierItem >& out )
{
    if ( prefix.size() == split || remaining == 0 )
    {
        out.push_back( { prefix, at, remaining, std::nullopt } );
        return;
    }
    if ( !search.prefix_feasible( prefix ) )
    {
        out.push_back( { prefix, at, remaining, search.ways( remaining, at ) } );
        return;
    }
    for ( TransitionId t : search.out( at ) )
    {
        const LocationId next = ha.transition( t ).target;
        if ( search.ways( remaining - 1, next ) == 0 )
            continue;
        prefix.push_back( t );
        build_frontier( search, ha, prefix, next, remaining - 1, split, out );
        prefix.pop_back();
    }
}

Search::Outcome parallel_length( Search& search, const PlanningProblem& problem, std::size_t len,
                                 std::size_t workers )
{
    const HybridAutomaton& ha = problem.automaton();
    std::vector< FrontierItem > items;
    std::size_t split = 0;
    do
    {
        ++split;
        items.clear();
        std::vector< TransitionId > prefix;
        build_frontier( search, ha, prefix, problem.init.location, len, split, items );
    } while ( split < len && items.size() < 4 * workers );

    Search::Outcome total;
    for ( std::size_t begin = 0; begin < items.size(); begin += workers )
    {
        const std::size_t end = std::min( items.size(), begin + workers );
        std::vector< std::future< Search::Outcome > > jobs;
        for ( std::size_t k = begin; k < end; ++k )
        {
            if ( items[ k ].pruned )
                continue;
            jobs.push_back( std::async( std::launch::async, [ &search, item = items[ k ] ]() mutable {
                return search.subtree( item.prefix, item.at, item.remaining );
            } ) );
        }
        std::size_t job = 0;
        for ( std::size_t k = begin; k < end; ++k )
        {
            Search::Outcome sub =
                items[ k ].pruned ? Search::Outcome{ *items[ k ].pruned, std::nullopt, std::nullopt } : jobs[ job++ ].get();
            total.checked = saturating_add( total.checked, sub.checked );
            if ( sub.path )
            {
                for ( ; job < jobs.size(); ++job )
                    jobs[ job ].wait();
                total.path = std::move( sub.path );
                total.verdict = std::move( sub.verdict );
                return total;
            }
        }
    }
    return total;
}

} // namespace

std::uint64_t count_concrete_paths( const HybridAutomaton& automaton, LocationId source, LocationId goal,
                                    std::size_t max_transitions )
{
    check_location( automaton, source );
    check_location( automaton, goal );
    const auto ways = exact_counts( automaton, goal, max_transitions );
    std::uint64_t total = 0;
    for ( std::size_t k = 0; k <= max_transitions; ++k )
        total = saturating_add( total, ways[ k ][ source ] );
    return total;
}

std::vector< ConcretePath > enumerate_concrete_paths( const HybridAutomaton& automaton, LocationId source,
                                                      LocationId goal, std::size_t max_transitions, std::size_t cap )
{
    const std::uint64_t total = count_concrete_paths( automaton, source, goal, max_transitions );
    if ( total > cap )
        throw ResourceError( Stage::reachability, std::to_string( total ) + " concrete paths exceed the cap of "
                                                      + std::to_string( cap ) );
    const auto out = out_transitions( automaton );
    const auto ways = exact_counts( automaton, goal, max_transitions );
    std::vector< ConcretePath > paths;
    paths.reserve( total );
    ConcretePath current{ { source }, {} };
    auto extend = [ & ]( auto&& self, LocationId at, std::size_t remaining ) -> void {
        if ( remaining == 0 )
        {
            paths.push_back( current );
            return;
        }
        for ( TransitionId t : out[ at ] )
        {
            const LocationId next = automaton.transition( t ).target;
            if ( ways[ remaining - 1 ][ next ] == 0 )
                continue;
            current.transitions.push_back( t );
            current.locations.push_back( next );
            self( self, next, remaining - 1 );
            current.transitions.pop_back();
            current.locations.pop_back();
        }
    };
    for ( std::size_t len = 0; len <= max_transitions; ++len )
        if ( ways[ len ][ source ] > 0 )
            extend( extend, source, len );
    return paths;
}

PathEncoding encode_path( const PlanningProblem& problem, const ConcretePath& path )
{
    return encode( problem, path, true );
}

PathEncoding encode_prefix( const PlanningProblem& problem, const ConcretePath& path )
{
    return encode( problem, path, false );
}

ReachResult bounded_reachable( const PlanningProblem& problem, const ReachOptions& options )
{
    const HybridAutomaton& ha = problem.automaton();
    check_location( ha, problem.init.location );
    check_location( ha, problem.goal.location );
    ReachResult result;
    const auto bound = problem.max_transitions();
    if ( !bound )
        return result;

    const std::uint64_t total = count_concrete_paths( ha, problem.init.location, problem.goal.location, *bound );
    if ( total > options.max_paths )
        throw ResourceError( Stage::reachability,
                             ( total == std::numeric_limits< std::uint64_t >::max() ? std::string( "more than 2^64" )
                                                                                    : std::to_string( total ) )
                                 + " concrete paths to " + ha.location( problem.goal.location ).name
                                 + " exceed the cap of " + std::to_string( options.max_paths )
                                 + "; raise --max-paths or lower the depth" );
    if ( options.dump_dir )
        std::filesystem::create_directories( *options.dump_dir );

    Search search( problem, options, *bound );
    Search::Outcome found;
    if ( options.mode == SearchMode::exhaustive )
    {
        for ( const auto& p : enumerate_concrete_paths( ha, problem.init.location, problem.goal.location, *bound,
                                                        options.max_paths ) )
        {
            Search::Outcome leaf = search.leaf( p.transitions );
            ++found.checked;
            if ( leaf.path )
            {
                found.path = std::move( leaf.path );
                found.verdict = std::move( leaf.verdict );
                break;
            }
        }
    }
    else
    {
        for ( std::size_t len = 0; len <= *bound && !found.path; ++len )
        {
            if ( search.ways( len, problem.init.location ) == 0 )
                continue;
            Search::Outcome sub;
            if ( options.parallelism > 1 && len > 0 )
                sub = parallel_length( search, problem, len, options.parallelism );
            else
            {
                std::vector< TransitionId > prefix;
                sub = search.subtree( prefix, problem.init.location, len );
            }
            found.checked = saturating_add( found.checked, sub.checked );
            found.path = std::move( sub.path );
            found.verdict = std::move( sub.verdict );
            spdlog::debug( "reach {} length {}: {} paths decided", problem.name, len, found.checked );
        }
    }

    result.lps_solved = search.lps();
    if ( found.path )
    {
        result.verdict = std::move( *found.verdict );
        auto [ run, plan ] = extract_witness( problem, result.verdict, *found.path );
        result.run = std::move( run );
        result.plan = std::move( plan );
        result.path = std::move( found.path );
    }
    result.verdict.paths_checked = found.checked;
    return result;
}

std::pair< WitnessRun, Plan > extract_witness( const PlanningProblem& problem, const Verdict& verdict,
                                               const ConcretePath& path )
{
    if ( !verdict.sat() || !verdict.witness )
        throw PreconditionError( "extract_witness: verdict is not SAT" );
    const PathEncoding enc = encode_path( problem, path );
    const auto& w = *verdict.witness;
    if ( w.size() != enc.lp.variable_count() )
        throw PreconditionError( "extract_witness: witness does not match the path encoding" );

    const HybridAutomaton& ha = problem.automaton();
    WitnessRun run;
    Plan plan;
    run.transitions = path.transitions;
    for ( std::size_t i = 0; i < path.locations.size(); ++i )
    {
        WitnessSegment seg;
        seg.location = path.locations[ i ];
        for ( VarId v : enc.entry[ i ] )
            seg.entry.push_back( w[ v ] );
        for ( VarId v : enc.exit[ i ] )
            seg.exit.push_back( w[ v ] );
        seg.dwell = w[ enc.dwell[ i ] ];
        plan.makespan += seg.dwell;
        if ( i < path.transitions.size() )
            plan.steps.push_back( { plan.makespan, ha.transition( path.transitions[ i ] ).label } );
        run.segments.push_back( std::move( seg ) );
    }
    return { std::move( run ), std::move( plan ) };
}

} // namespace wpx
