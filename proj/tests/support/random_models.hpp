#pragma once

#include "wpx/model.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace gen
{

using wpx::Rational;

inline int uniform( std::mt19937_64& rng, int lo, int hi )
{
    return std::uniform_int_distribution< int >( lo, hi )( rng );
}

inline bool coin( std::mt19937_64& rng, double p = 0.5 )
{
    return std::bernoulli_distribution( p )( rng );
}

inline Rational small_rational( std::mt19937_64& rng, int lo, int hi, int den = 2 )
{
    Rational r( uniform( rng, lo * den, hi * den ), den );
    r.canonicalize();
    return r;
}

inline wpx::LinearConstraint random_constraint( std::mt19937_64& rng, std::size_t nvars, int max_terms, int cbound )
{
    wpx::LinearExpression e;
    const int terms = uniform( rng, 1, max_terms );
    for ( int t = 0; t < terms; ++t )
    {
        int c = 0;
        while ( c == 0 )
            c = uniform( rng, -3, 3 );
        e.add_term( std::size_t( uniform( rng, 0, int( nvars ) - 1 ) ), c );
    }
    e.add_constant( uniform( rng, -cbound, cbound ) );
    const int r = uniform( rng, 0, 5 );
    const auto rel = r < 2 ? wpx::Relation::le : r < 4 ? wpx::Relation::ge : wpx::Relation::eq;
    return { e, rel };
}

inline wpx::LinearConstraint bound( wpx::VarId v, wpx::Relation rel, const Rational& value )
{
    return wpx::make_constraint( wpx::LinearExpression::variable( v ), rel, wpx::LinearExpression::constant_term( value ) );
}

struct AutomatonShape
{
    int min_locations = 2;
    int max_locations = 4;
    int max_vars = 2;
    int max_transitions = 6;
    bool point_init = false;
    bool point_resets = false;
};

// Small random linear hybrid automaton with locations loc0.. and variables x0..
inline std::shared_ptr< wpx::HybridAutomaton > random_automaton( std::mt19937_64& rng, const AutomatonShape& shape = {} )
{
    auto ha = std::make_shared< wpx::HybridAutomaton >();
    ha->name = "random";
    const int nvars = uniform( rng, 1, shape.max_vars );
    for ( int v = 0; v < nvars; ++v )
        ha->variables.push_back( "x" + std::to_string( v ) );
    const int nlocs = uniform( rng, shape.min_locations, shape.max_locations );
    for ( int l = 0; l < nlocs; ++l )
    {
        wpx::Location loc;
        loc.id = std::size_t( l );
        loc.name = "loc" + std::to_string( l );
        for ( int v = 0; v < nvars; ++v )
        {
            if ( coin( rng, 0.7 ) )
                loc.invariant.constraints.push_back( bound( v, wpx::Relation::ge, uniform( rng, -2, 0 ) ) );
            if ( coin( rng, 0.7 ) )
                loc.invariant.constraints.push_back( bound( v, wpx::Relation::le, uniform( rng, 2, 8 ) ) );
            Rational lo = small_rational( rng, -2, 2 ), hi = small_rational( rng, -2, 2 );
            if ( lo > hi )
                std::swap( lo, hi );
            if ( coin( rng, 0.3 ) )
                hi = lo;
            loc.rates.rates.push_back( { lo, hi } );
        }
        if ( nvars > 1 && coin( rng, 0.25 ) )
        {
            auto c = random_constraint( rng, std::size_t( nvars ), 2, 6 );
            if ( c.relation == wpx::Relation::eq )
                c.relation = wpx::Relation::le;
            loc.invariant.constraints.push_back( c );
        }
        ha->locations.push_back( std::move( loc ) );
    }
    const int ntrans = uniform( rng, 1, shape.max_transitions );
    for ( int t = 0; t < ntrans; ++t )
    {
        wpx::Transition tr;
        tr.id = std::size_t( t );
        tr.source = std::size_t( uniform( rng, 0, nlocs - 1 ) );
        tr.target = std::size_t( uniform( rng, 0, nlocs - 1 ) );
        tr.label = "a" + std::to_string( uniform( rng, 0, 2 ) );
        if ( coin( rng, 0.6 ) )
        {
            const auto v = std::size_t( uniform( rng, 0, nvars - 1 ) );
            tr.guard.constraints.push_back(
                bound( v, coin( rng ) ? wpx::Relation::ge : wpx::Relation::le, uniform( rng, -1, 5 ) ) );
        }
        if ( coin( rng, 0.4 ) )
        {
            const auto v = std::size_t( uniform( rng, 0, nvars - 1 ) );
            Rational lo = uniform( rng, -1, 4 ), hi = lo;
            if ( !shape.point_resets && coin( rng, 0.4 ) )
                hi = lo + uniform( rng, 0, 3 );
            tr.reset.assignments[ v ] = { lo, hi };
        }
        ha->labels.insert( tr.label );
        ha->transitions.push_back( std::move( tr ) );
    }
    ha->initial.location = 0;
    for ( int v = 0; v < nvars; ++v )
    {
        const int value = uniform( rng, 0, 3 );
        if ( shape.point_init || coin( rng, 0.6 ) )
            ha->initial.region.constraints.push_back( bound( v, wpx::Relation::eq, value ) );
        else
        {
            ha->initial.region.constraints.push_back( bound( v, wpx::Relation::ge, value ) );
            ha->initial.region.constraints.push_back( bound( v, wpx::Relation::le, value + uniform( rng, 0, 2 ) ) );
        }
    }
    return ha;
}

inline wpx::PlanningProblem random_problem( std::mt19937_64& rng, const AutomatonShape& shape = {}, int max_depth = 3 )
{
    auto ha = random_automaton( rng, shape );
    wpx::GoalSpec goal;
    goal.location = std::size_t( uniform( rng, 0, int( ha->locations.size() ) - 1 ) );
    if ( coin( rng, 0.5 ) )
    {
        const auto v = std::size_t( uniform( rng, 0, int( ha->variables.size() ) - 1 ) );
        goal.region.constraints.push_back(
            bound( v, coin( rng ) ? wpx::Relation::ge : wpx::Relation::le, uniform( rng, -1, 6 ) ) );
    }
    const auto unit = coin( rng ) ? wpx::DepthUnit::transitions : wpx::DepthUnit::locations;
    return wpx::make_problem( ha, goal, std::size_t( uniform( rng, 0, max_depth ) ), unit );
}

// Random digraph as an arc list, loops and repeats allowed.
inline std::vector< std::pair< std::size_t, std::size_t > > random_arcs( std::mt19937_64& rng, std::size_t n, int max_arcs )
{
    std::vector< std::pair< std::size_t, std::size_t > > arcs;
    const int m = uniform( rng, 0, max_arcs );
    for ( int i = 0; i < m; ++i )
        arcs.emplace_back( std::size_t( uniform( rng, 0, int( n ) - 1 ) ), std::size_t( uniform( rng, 0, int( n ) - 1 ) ) );
    return arcs;
}

} // namespace gen
