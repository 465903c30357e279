#include "doctest.h"

#include "oracles.hpp"
#include "random_models.hpp"

#include "wpx/simplex.hpp"

#include <random>

using namespace wpx;

namespace
{

LinearExpression var( VarId v, const Rational& c = 1 )
{
    return LinearExpression::variable( v, c );
}

LinearExpression k( const Rational& c )
{
    return LinearExpression::constant_term( c );
}

bool satisfies( const LpProblem& lp, const std::vector< Rational >& w )
{
    return std::ranges::all_of( lp.constraints, [ & ]( const auto& c ) { return c.satisfied_by( w ); } );
}

} // namespace

TEST_SUITE( "simplex" )
{
    TEST_CASE( "contradiction" )
    {
        LpProblem lp;
        const auto x = lp.add_variable( "x" );
        lp.constraints = { make_constraint( var( x ), Relation::ge, k( 1 ) ), make_constraint( var( x ), Relation::le, k( 0 ) ) };
        const auto v = lp_feasible( lp );
        CHECK( v.status == Status::unsat );
        CHECK_FALSE( v.witness.has_value() );
    }

    TEST_CASE( "empty system" )
    {
        LpProblem lp;
        lp.add_variable( "x" );
        const auto v = lp_feasible( lp );
        REQUIRE( v.sat() );
        CHECK( *v.witness == std::vector< Rational >{ 0 } );
    }

    TEST_CASE( "equalities and general rows" )
    {
        LpProblem lp;
        const auto x = lp.add_variable( "x" ), y = lp.add_variable( "y" ), z = lp.add_variable( "z" );
        lp.constraints = {
            make_constraint( var( x ) + var( y ), Relation::eq, k( 3 ) ),
            make_constraint( var( x ) - var( z, 2 ), Relation::ge, k( Rational( 1, 3 ) ) ),
            make_constraint( var( y ) + var( z ), Relation::ge, k( 2 ) ),
            make_constraint( var( z ), Relation::ge, k( 0 ) ),
        };
        SimplexStats stats;
        const auto v = lp_feasible( lp, &stats );
        REQUIRE( v.sat() );
        CHECK( satisfies( lp, *v.witness ) );
        CHECK( stats.eliminated == 1 );

        lp.constraints.push_back( make_constraint( var( x ), Relation::ge, k( 3 ) ) );
        CHECK_FALSE( lp_feasible( lp ).sat() );
    }

    TEST_CASE( "listing" )
    {
        LpProblem lp;
        const auto x = lp.add_variable( "b_0_in" );
        lp.constraints = { make_constraint( var( x ), Relation::le, k( 10 ) ) };
        CHECK( format_lp( lp ) == "variables 1\n  0 b_0_in\nconstraints 1\n  b_0_in <= 10\n" );
    }

    TEST_CASE( "agrees with Fourier-Motzkin" )
    {
        std::mt19937_64 rng( 17 );
        std::size_t sat = 0;
        for ( int i = 0; i < 1000; ++i )
        {
            const auto n = std::size_t( gen::uniform( rng, 1, 6 ) );
            const int m = gen::uniform( rng, 0, 12 );
            const bool planted = gen::coin( rng );
            std::vector< Rational > point( n );
            for ( auto& p : point )
                p = gen::small_rational( rng, -3, 3 );
            LpProblem lp;
            for ( std::size_t v = 0; v < n; ++v )
                lp.add_variable( "x" + std::to_string( v ) );
            for ( int j = 0; j < m; ++j )
            {
                auto c = gen::random_constraint( rng, n, 3, 5 );
                if ( planted )
                {
                    // Shift the constant so the planted point satisfies the row.
                    const Rational value = c.expression.evaluate( point );
                    Rational slack = c.relation == Relation::eq ? Rational( 0 ) : gen::small_rational( rng, 0, 2 );
                    c.expression.add_constant( c.relation == Relation::ge ? Rational( slack - value ) : Rational( -slack - value ) );
                }
                lp.constraints.push_back( c );
            }
            CAPTURE( format_lp( lp ) );
            const auto expected = oracle::fm_feasible( n, lp.constraints );
            REQUIRE( expected.has_value() );
            const auto v = lp_feasible( lp );
            REQUIRE( v.sat() == *expected );
            if ( planted )
                CHECK( v.sat() );
            if ( v.sat() )
            {
                ++sat;
                REQUIRE( v.witness.has_value() );
                CHECK( satisfies( lp, *v.witness ) );
            }
        }
        // Both verdicts must be well represented.
        CHECK( sat > 300 );
        CHECK( sat < 900 );
    }
}
