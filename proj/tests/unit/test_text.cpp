#include "doctest.h"

#include "benchmarks.hpp"
#include "random_models.hpp"

#include "wpx/errors.hpp"
#include "wpx/text.hpp"
#include "wpx/validate.hpp"

#include <random>

using namespace wpx;

namespace
{

const char* const tiny = R"(
automaton tiny;
vars x, y;
location a {
  inv: 0 <= x <= 4 & y >= -1;
  rate x in [1, 2];
  rate y = -1/2;
}
location b {
  rate x in [0, 0];
}
trans a -> b {
  label: go;
  guard: x + 2 y >= 3;
  reset y := 0;
  reset x in [1, 2.5];
}
init a { x = 0 & y = 2; }
)";

std::string error_of( const std::string& text )
{
    try
    {
        (void)parse_model( text );
    }
    catch ( const Error& e )
    {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE( "text" )
{
    TEST_CASE( "parses a small model" )
    {
        const auto doc = parse_model( tiny );
        const auto& ha = *doc.automaton;
        CHECK( ha.name == "tiny" );
        REQUIRE( ha.variables == std::vector< std::string >{ "x", "y" } );
        REQUIRE( ha.locations.size() == 2 );
        CHECK( ha.locations[ 0 ].invariant.constraints.size() == 3 );
        CHECK( ha.locations[ 0 ].rates.rates[ 0 ] == Interval{ 1, 2 } );
        CHECK( ha.locations[ 0 ].rates.rates[ 1 ] == Interval{ Rational( -1, 2 ), Rational( -1, 2 ) } );
        // Omitted rate defaults to zero.
        CHECK( ha.locations[ 1 ].rates.rates[ 1 ] == Interval{ 0, 0 } );
        REQUIRE( ha.transitions.size() == 1 );
        const auto& t = ha.transitions[ 0 ];
        CHECK( t.label == "go" );
        CHECK( t.reset.assignments.at( 1 ) == Interval{ 0, 0 } );
        CHECK( t.reset.assignments.at( 0 ) == Interval{ 1, Rational( 5, 2 ) } );
        CHECK( format_polyhedron( t.guard, ha.variables ) == "x + 2*y >= 3" );
        CHECK( ha.labels == std::set< std::string >{ "go" } );
        CHECK( ha.initial.region.constraints.size() == 2 );
        CHECK( validate_model( ha ).empty() );
    }

    TEST_CASE( "water-level monitor file has 6 locations and 6 transitions" )
    {
        const auto doc = bench::model( "water_level_monitor" );
        CHECK( doc.automaton->locations.size() == 6 );
        CHECK( doc.automaton->transitions.size() == 6 );
    }

    TEST_CASE( "undeclared variable" )
    {
        const std::string text = "automaton m; vars ; location a { inv: x <= 1; } init a { true; }";
        CHECK( error_of( text ).find( "undeclared variable x" ) != std::string::npos );
        CHECK_THROWS_AS( (void)parse_model( text ), SemanticError );
    }

    TEST_CASE( "strict inequality is rejected" )
    {
        const std::string text =
            "automaton m; vars x; location a { } location b { } trans a -> b { label: l; guard: x < 1; } "
            "init a { true; }";
        CHECK_THROWS_AS( (void)parse_model( text ), ParseError );
        CHECK( error_of( text ).find( "strict inequality" ) != std::string::npos );
    }

    TEST_CASE( "parse errors carry a position" )
    {
        try
        {
            (void)parse_model( "automaton m;\nvars x;\nlocation a { inv: x <=  ; }\n" );
            FAIL( "expected a parse error" );
        }
        catch ( const ParseError& e )
        {
            CHECK( e.line() == 3 );
            CHECK( e.column() > 1 );
        }
    }

    TEST_CASE( "semantic errors" )
    {
        CHECK( error_of( "automaton m; vars x, x; location a {} init a { true; }" ).find( "duplicate variable" ) !=
               std::string::npos );
        CHECK( error_of( "automaton m; vars x; location a {} location a {} init a { true; }" ).find( "duplicate location" ) !=
               std::string::npos );
        CHECK( error_of( "automaton m; vars x; location a {} trans a -> b { label: l; } init a { true; }" )
                   .find( "unknown location" ) != std::string::npos );
        CHECK( error_of( "automaton m; vars x; location a { rate x in [2, 1]; } init a { true; }" ) != "" );
        CHECK( error_of( "automaton m; vars x; location a {}" ).find( "init" ) != std::string::npos );
    }

    TEST_CASE( "rover problem file" )
    {
        const auto p = bench::problem( "planetary_rover", 12 );
        CHECK( p.depth == 12 );
        CHECK( p.automaton().locations.size() == 25 );
        CHECK( p.automaton().transitions.size() == 40 );
        CHECK( p.automaton().location( p.init.location ).name == "loc11" );
        CHECK( p.automaton().location( p.goal.location ).name == "loc25" );
    }

    TEST_CASE( "problem without init takes the model's" )
    {
        const auto doc = parse_model( tiny );
        const auto p = parse_problem( "problem p; goal b; depth 3;", doc );
        CHECK( p.init == doc.automaton->initial );
        CHECK( p.depth_unit == DepthUnit::transitions );
        CHECK( p.goal.region.is_universe() );
        const auto q = parse_problem( "problem q; init b { x >= 1; } goal a { y <= 0; } depth 2 locations;", doc );
        CHECK( q.init.location == 1 );
        CHECK( q.goal.region.constraints.size() == 1 );
        CHECK( q.max_transitions() == std::optional< std::size_t >( 1 ) );
    }

    TEST_CASE( "unknown goal location" )
    {
        const auto doc = bench::model( "planetary_rover" );
        CHECK_THROWS_AS( (void)parse_problem( "problem p; goal loc99; depth 3;", doc ), SemanticError );
    }

    TEST_CASE( "benchmarks round-trip" )
    {
        for ( const auto& inst : bench::all() )
        {
            CAPTURE( inst.name );
            const auto doc = bench::model( inst.name );
            const auto again = parse_model( serialize_model( *doc.automaton ) );
            CHECK( *again.automaton == *doc.automaton );
            const auto p = bench::problem( inst.name, inst.depth );
            const auto q = parse_problem( serialize_problem( p ), again );
            CHECK( q.init == p.init );
            CHECK( q.goal == p.goal );
            CHECK( q.depth == p.depth );
            CHECK( q.depth_unit == p.depth_unit );
        }
    }

    TEST_CASE( "random automata round-trip" )
    {
        std::mt19937_64 rng( 7 );
        for ( int i = 0; i < 1000; ++i )
        {
            const auto ha = gen::random_automaton( rng );
            const auto text = serialize_model( *ha );
            CAPTURE( text );
            const auto back = parse_model( text );
            REQUIRE( *back.automaton == *ha );
        }
    }

    TEST_CASE( "mutated input never escapes the error hierarchy" )
    {
        std::mt19937_64 rng( 11 );
        const std::string base = bench::slurp( bench::root() / "water_level_monitor" / "model.lha" );
        const std::string alphabet = "{}[]();:,&+-*<>=/ .#\n\"xw0123456789abclo";
        for ( int i = 0; i < 1000; ++i )
        {
            std::string text = base;
            const int edits = gen::uniform( rng, 1, 6 );
            for ( int e = 0; e < edits; ++e )
            {
                const auto pos = std::size_t( gen::uniform( rng, 0, int( text.size() ) - 1 ) );
                switch ( gen::uniform( rng, 0, 2 ) )
                {
                case 0:
                    text.erase( pos, std::size_t( gen::uniform( rng, 1, 8 ) ) );
                    break;
                case 1:
                    text.insert( pos, 1, alphabet[ std::size_t( gen::uniform( rng, 0, int( alphabet.size() ) - 1 ) ) ] );
                    break;
                default:
                    text[ pos ] = alphabet[ std::size_t( gen::uniform( rng, 0, int( alphabet.size() ) - 1 ) ) ];
                }
            }
            try
            {
                const auto doc = parse_model( text );
                CHECK( validate_model( *doc.automaton ).empty() );
            }
            catch ( const ParseError& )
            {
            }
            catch ( const SemanticError& )
            {
            }
        }
    }
}
