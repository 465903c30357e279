#include "doctest.h"

#include "benchmarks.hpp"

#include "wpx/errors.hpp"
#include "wpx/semantics.hpp"
#include "wpx/subproblem.hpp"
#include "wpx/text.hpp"
#include "wpx/validate.hpp"

using namespace wpx;

namespace
{

std::shared_ptr< HybridAutomaton > hop( const Rational& rate )
{
    auto ha = std::make_shared< HybridAutomaton >();
    ha->name = "hop";
    ha->variables = { "b" };
    ha->locations.push_back( { 0, "a", {}, { { { rate, rate } } } } );
    ha->locations.push_back( { 1, "g", {}, { { { 0, 0 } } } } );
    ha->transitions.push_back( { 0, 0, 1, "move", {}, {} } );
    ha->labels = { "move" };
    ha->initial = { 0, { { make_constraint( LinearExpression::variable( 0 ), Relation::eq,
                                            LinearExpression::constant_term( 10 ) ) } } };
    return ha;
}

} // namespace

TEST_SUITE( "model" )
{
    TEST_CASE( "rational parsing and printing" )
    {
        CHECK( parse_rational( "12" ) == 12 );
        CHECK( parse_rational( "-0.125" ) == Rational( -1, 8 ) );
        CHECK( parse_rational( "+4/6" ) == Rational( 2, 3 ) );
        CHECK_THROWS_AS( parse_rational( "1/0" ), std::invalid_argument );
        CHECK_THROWS_AS( parse_rational( "1.2.3" ), std::invalid_argument );
        CHECK_THROWS_AS( parse_rational( "" ), std::invalid_argument );
        CHECK( to_string( Rational( 7, 3 ) ) == "7/3" );
        CHECK( to_decimal_string( Rational( 5, 2 ) ) == "2.5" );
        CHECK( to_decimal_string( Rational( -1, 8 ) ) == "-0.125" );
        CHECK( to_decimal_string( Rational( 1, 3 ) ) == "1/3" );
        CHECK( to_decimal_string( Rational( 4 ) ) == "4" );
    }

    TEST_CASE( "linear expressions drop zero coefficients" )
    {
        auto e = LinearExpression::variable( 0, 2 ) + LinearExpression::variable( 1 );
        e -= LinearExpression::variable( 0, 2 );
        CHECK( e == LinearExpression::variable( 1 ) );
        e *= 0;
        CHECK( e.is_constant() );
        const std::vector< Rational > val{ 3, 5 };
        const auto c = make_constraint( LinearExpression::variable( 0 ), Relation::le, LinearExpression::variable( 1 ) );
        CHECK( c.satisfied_by( val ) );
        CHECK_FALSE( make_constraint( LinearExpression::variable( 0 ), Relation::eq, LinearExpression::variable( 1 ) )
                         .satisfied_by( val ) );
    }

    TEST_CASE( "benchmark models validate" )
    {
        for ( const auto& inst : bench::all() )
        {
            CAPTURE( inst.name );
            CHECK( validate_problem( bench::problem( inst.name, inst.depth ) ).empty() );
        }
    }

    TEST_CASE( "validation reports dangling targets and malformed rates" )
    {
        auto ha = *hop( -1 );
        ha.transitions[ 0 ].target = 7;
        auto report = validate_model( ha );
        REQUIRE( report.size() == 1 );
        CHECK( report[ 0 ].kind == ViolationKind::dangling_location );

        ha = *hop( -1 );
        ha.locations[ 0 ].rates.rates[ 0 ] = { 2, 1 };
        report = validate_model( ha );
        REQUIRE( report.size() == 1 );
        CHECK( report[ 0 ].kind == ViolationKind::malformed_interval );
        CHECK( report[ 0 ].message.find( "a" ) != std::string::npos );
        CHECK( report[ 0 ].message.find( "b" ) != std::string::npos );

        ha = *hop( -1 );
        ha.labels.clear();
        CHECK( !validate_model( ha ).empty() );
    }

    TEST_CASE( "alpha widens the goal to the invariant" )
    {
        const auto p = bench::problem( "planetary_rover", 12 );
        const auto loc13 = *p.automaton().find_location( "loc13" );
        const auto sub = alpha( p, loc13 );
        CHECK( sub.goal.location == loc13 );
        CHECK( sub.goal.region == p.automaton().location( loc13 ).invariant );
        CHECK( sub.init == p.init );
        CHECK( sub.depth == p.depth );
        CHECK( sub.depth_unit == p.depth_unit );
        CHECK_THROWS_AS( alpha( p, 99 ), PreconditionError );
        CHECK( abstract_subproblems( p ).size() == 25 );
    }

    TEST_CASE( "syntactic containment" )
    {
        const auto x = LinearExpression::variable( 0 );
        const auto k = []( int v ) { return LinearExpression::constant_term( v ); };
        const Polyhedron wide{ { make_constraint( x, Relation::ge, k( 0 ) ) } };
        const Polyhedron narrow{ { make_constraint( x, Relation::ge, k( 0 ) ), make_constraint( x, Relation::le, k( 3 ) ) } };
        CHECK( syntactically_contained( narrow, wide ) );
        CHECK_FALSE( syntactically_contained( wide, narrow ) );
        CHECK( syntactically_contained( wide, Polyhedron{} ) );
    }

    TEST_CASE( "max_transitions by unit" )
    {
        auto p = make_problem( hop( -1 ), { 1, {} }, 3, DepthUnit::locations );
        CHECK( p.max_transitions() == std::optional< std::size_t >( 2 ) );
        p.depth = 0;
        CHECK_FALSE( p.max_transitions().has_value() );
        p.depth_unit = DepthUnit::transitions;
        CHECK( p.max_transitions() == std::optional< std::size_t >( 0 ) );
    }

    TEST_CASE( "run checker" )
    {
        const auto p = make_problem( hop( -1 ), { 1, {} }, 1 );
        WitnessRun run;
        run.segments.push_back( { 0, { 10 }, 1, { 9 } } );
        run.segments.push_back( { 1, { 9 }, 3, { 9 } } );
        run.transitions = { 0 };
        Plan plan{ { { 1, "move" } }, 4 };
        CHECK( check_run( p, run, plan ).empty() );

        auto bad = run;
        bad.segments[ 0 ].exit = { 8 };
        CHECK_FALSE( check_run( p, bad, plan ).empty() );
        bad = run;
        bad.segments[ 1 ].entry = { 7 };
        CHECK_FALSE( check_run( p, bad, plan ).empty() );
        bad = run;
        bad.segments[ 0 ].entry = { 11 };
        CHECK_FALSE( check_run( p, bad, plan ).empty() );
        CHECK_FALSE( check_run( p, run, Plan{ { { 2, "move" } }, 4 } ).empty() );
        CHECK_FALSE( check_run( p, run, Plan{ { { 1, "stay" } }, 4 } ).empty() );
        CHECK_FALSE( check_run( p, run, Plan{ { { 1, "move" } }, 5 } ).empty() );

        auto shallow = p;
        shallow.depth = 0;
        CHECK_FALSE( check_run( shallow, run, plan ).empty() );
    }
}
