#include "doctest.h"

#include "benchmarks.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

#include "wpx/chain.hpp"
#include "wpx/errors.hpp"
#include "wpx/graph.hpp"
#include "wpx/lcs.hpp"

#include <random>

using namespace wpx;

namespace
{

PathSet make_set( std::vector< PathString > paths )
{
    std::ranges::sort( paths, []( const auto& a, const auto& b ) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    } );
    paths.erase( std::unique( paths.begin(), paths.end() ), paths.end() );
    return { std::move( paths ) };
}

// A=0 B=1 C=2 D=3 F=5
PathString word( std::string_view s )
{
    PathString out;
    for ( char c : s )
        out.push_back( LocationId( c - 'A' ) );
    return out;
}

std::vector< std::string > names( const PlanningProblem& p, const PathString& s )
{
    std::vector< std::string > out;
    for ( auto l : s )
        out.push_back( p.automaton().location( l ).name );
    return out;
}

} // namespace

TEST_SUITE( "lcs" )
{
    TEST_CASE( "pair candidates" )
    {
        const auto c = common_subsequences_pair( word( "ABDF" ), word( "ACDF" ) );
        CHECK( c.contains( word( "ADF" ) ) );
        std::size_t longest = 0;
        for ( const auto& m : c.members )
        {
            CHECK( oracle::is_subsequence( m, word( "ABDF" ) ) );
            CHECK( oracle::is_subsequence( m, word( "ACDF" ) ) );
            longest = std::max( longest, m.size() );
        }
        CHECK( longest == 3 );
        CHECK( std::ranges::is_sorted( c.members ) );

        const auto same = common_subsequences_pair( word( "ABC" ), word( "ABC" ) );
        CHECK( same.size() == 7 );
        CHECK_THROWS_AS( common_subsequences_pair( word( "ABCDEFGH" ), word( "ABCDEFGH" ), 10 ), ResourceError );
    }

    TEST_CASE( "endpoint-only overlap" )
    {
        const auto r = lcs_multi( make_set( { { 0, 9 }, { 0, 4, 9 } } ) );
        CHECK( r.sequence == PathString{ 0, 9 } );
        CHECK( r.trivial );
    }

    TEST_CASE( "single string and identical strings" )
    {
        const PathString s{ 2, 5, 1, 5, 3 };
        CHECK( lcs_multi( make_set( { s } ) ).sequence == s );
        const auto pruned = prune_alphabet( PathSet{ { s, s } } );
        CHECK( pruned.kept == std::set< LocationId >{ 1, 2, 3, 5 } );
        CHECK( pruned.paths[ 0 ] == s );
        CHECK( lcs_multi( PathSet{ { s, s } } ).sequence == s );
    }

    TEST_CASE( "disjoint interiors prune to the endpoints" )
    {
        const auto pruned = prune_alphabet( make_set( { { 0, 1, 2, 9 }, { 0, 3, 4, 9 }, { 0, 5, 9 } } ) );
        for ( const auto& p : pruned.paths )
            CHECK( p == PathString{ 0, 9 } );
    }

    TEST_CASE( "leftmost embedding" )
    {
        CHECK( leftmost_embedding( { 1, 3 }, { 1, 2, 1, 3 } ) == std::optional< std::vector< std::size_t > >( { 0, 3 } ) );
        CHECK_FALSE( leftmost_embedding( { 3, 1 }, { 1, 3 } ).has_value() );
        CHECK( is_subsequence( {}, { 1 } ) );
    }

    TEST_CASE( "rover waypoints" )
    {
        const auto p = bench::problem( "planetary_rover", 12 );
        const auto ps = enumerate_paths( Graph::from_automaton( p.automaton() ), p );
        REQUIRE( ps.count() == 3 );
        const std::vector< std::string > expected{ "loc11", "loc6", "loc1", "loc2", "loc3",
                                                   "loc8",  "loc13", "loc14", "loc25" };
        const auto pruned = prune_alphabet( ps );
        std::set< LocationId > want;
        for ( const auto& n : expected )
            want.insert( *p.automaton().find_location( n ) );
        CHECK( pruned.kept == want );
        const auto r = lcs_multi( ps );
        CHECK( names( p, r.sequence ) == expected );
        const auto chain = chain_from_lcs( p, r );
        CHECK( chain.size() == 9 );
        CHECK( verify_chain_abstract( ps, chain ) );
        auto broken = chain;
        broken.entries.insert( broken.entries.begin() + 1,
                               ChainEntry{ p, *p.automaton().find_location( "loc16" ), "loc16", 0 } );
        CHECK_FALSE( verify_chain_abstract( ps, broken ) );
    }

    TEST_CASE( "NAV at depth 10 has the trivial chain" )
    {
        const auto p = bench::problem( "nav", 10 );
        const auto ps = enumerate_paths( Graph::from_automaton( p.automaton() ), p );
        CHECK( ps.count() == 2325 );
        const auto r = lcs_multi( ps );
        CHECK( r.trivial );
        CHECK( r.sequence == PathString{ p.init.location, p.goal.location } );
    }

    TEST_CASE( "consecutive repeats merge in the chain" )
    {
        const auto p = bench::problem( "planetary_rover", 12 );
        LcsResult r;
        r.sequence = { 10, 5, 5, 24 };
        const auto chain = chain_from_lcs( p, r );
        CHECK( chain.merged_repeats );
        CHECK( chain.locations() == PathString{ 10, 5, 24 } );
    }

    TEST_CASE( "lcs length matches brute force" )
    {
        std::mt19937_64 rng( 5 );
        for ( int i = 0; i < 1000; ++i )
        {
            const int sigma = gen::uniform( rng, 1, 8 );
            const auto s = LocationId( gen::uniform( rng, 0, sigma - 1 ) );
            const auto t = LocationId( gen::uniform( rng, 0, sigma - 1 ) );
            std::vector< PathString > strings;
            const int m = gen::uniform( rng, 1, 6 );
            for ( int k = 0; k < m; ++k )
            {
                PathString p{ s };
                const int len = gen::uniform( rng, s == t ? 1 : 2, 10 );
                if ( len > 1 )
                {
                    for ( int j = 0; j < len - 2; ++j )
                        p.push_back( LocationId( gen::uniform( rng, 0, sigma - 1 ) ) );
                    p.push_back( t );
                }
                strings.push_back( std::move( p ) );
            }
            const auto ps = make_set( strings );
            CAPTURE( i );
            const auto r = lcs_multi( ps );
            std::vector< std::vector< std::size_t > > plain( ps.paths.begin(), ps.paths.end() );
            REQUIRE( r.length() == oracle::brute_lcs_length( plain ) );
            for ( const auto& p : ps.paths )
                CHECK( oracle::is_subsequence( r.sequence, p ) );
            CHECK( r.sequence.front() == s );
            CHECK( r.sequence.back() == t );
            const auto again = lcs_multi( ps, { .parallelism = 4 } );
            CHECK( again.sequence == r.sequence );
            CHECK( again.survivors == r.survivors );
        }
    }
}
