#include "wpx/validate.hpp"

#include <set>

namespace wpx
{

namespace
{

class Collector
{
    const HybridAutomaton& _ha;
    ValidationReport& _out;

public:
    Collector( const HybridAutomaton& ha, ValidationReport& out ) : _ha( ha ), _out( out ) {}

    void add( ViolationKind kind, std::string message ) { _out.push_back( { kind, std::move( message ) } ); }

    void polyhedron( const Polyhedron& poly, const std::string& where )
    {
        for ( const auto& c : poly.constraints )
            for ( const auto& [ var, coefficient ] : c.expression.coefficients() )
                if ( var >= _ha.variables.size() )
                    add( ViolationKind::undeclared_variable,
                         where + ": constraint references undeclared variable #" + std::to_string( var ) );
    }

    bool location_exists( LocationId id ) const { return id < _ha.locations.size(); }
};

} // namespace

ValidationReport validate_model( const HybridAutomaton& ha )
{
    ValidationReport report;
    Collector check( ha, report );

    std::set< std::string > seen_vars;
    for ( const auto& v : ha.variables )
        if ( !seen_vars.insert( v ).second )
            check.add( ViolationKind::duplicate_name, "duplicate variable name '" + v + "'" );

    std::set< std::string > seen_locs;
    for ( std::size_t i = 0; i < ha.locations.size(); ++i )
    {
        const Location& loc = ha.locations[ i ];
        const std::string where = "location '" + loc.name + "'";
        if ( loc.id != i )
            check.add( ViolationKind::bad_identifier,
                       where + ": id " + std::to_string( loc.id ) + " does not match position " + std::to_string( i ) );
        if ( !seen_locs.insert( loc.name ).second )
            check.add( ViolationKind::duplicate_name, "duplicate location name '" + loc.name + "'" );
        check.polyhedron( loc.invariant, where + " invariant" );
        if ( loc.rates.rates.size() != ha.variables.size() )
            check.add( ViolationKind::rate_arity, where + ": " + std::to_string( loc.rates.rates.size() )
                                                      + " rate intervals for " + std::to_string( ha.variables.size() )
                                                      + " variables" );
        for ( std::size_t v = 0; v < loc.rates.rates.size(); ++v )
            if ( !loc.rates.rates[ v ].well_formed() )
            {
                const std::string var = v < ha.variables.size() ? ha.variables[ v ] : "#" + std::to_string( v );
                check.add( ViolationKind::malformed_interval,
                           where + ": rate interval for '" + var + "' has lower bound above upper bound" );
            }
    }

    for ( std::size_t i = 0; i < ha.transitions.size(); ++i )
    {
        const Transition& t = ha.transitions[ i ];
        const std::string where = "transition #" + std::to_string( i ) + " (" + t.label + ")";
        if ( t.id != i )
            check.add( ViolationKind::bad_identifier,
                       where + ": id " + std::to_string( t.id ) + " does not match position " + std::to_string( i ) );
        if ( !check.location_exists( t.source ) )
            check.add( ViolationKind::dangling_location,
                       where + ": source location #" + std::to_string( t.source ) + " does not exist" );
        if ( !check.location_exists( t.target ) )
            check.add( ViolationKind::dangling_location,
                       where + ": target location #" + std::to_string( t.target ) + " does not exist" );
        if ( !ha.labels.contains( t.label ) )
            check.add( ViolationKind::unknown_label, where + ": label '" + t.label + "' is not declared" );
        check.polyhedron( t.guard, where + " guard" );
        for ( const auto& [ var, interval ] : t.reset.assignments )
        {
            if ( var >= ha.variables.size() )
                check.add( ViolationKind::undeclared_variable,
                           where + ": reset of undeclared variable #" + std::to_string( var ) );
            if ( !interval.well_formed() )
                check.add( ViolationKind::malformed_interval,
                           where + ": reset interval has lower bound above upper bound" );
        }
    }

    if ( !check.location_exists( ha.initial.location ) )
        check.add( ViolationKind::dangling_location,
                   "initial location #" + std::to_string( ha.initial.location ) + " does not exist" );
    check.polyhedron( ha.initial.region, "initial region" );
    return report;
}

ValidationReport validate_problem( const PlanningProblem& problem )
{
    if ( !problem.domain )
        return { { ViolationKind::missing_domain, "problem has no domain automaton" } };
    const HybridAutomaton& ha = *problem.domain;
    ValidationReport report = validate_model( ha );
    Collector check( ha, report );
    if ( !check.location_exists( problem.init.location ) )
        check.add( ViolationKind::dangling_location,
                   "problem initial location #" + std::to_string( problem.init.location ) + " does not exist" );
    if ( !check.location_exists( problem.goal.location ) )
        check.add( ViolationKind::dangling_location,
                   "goal location #" + std::to_string( problem.goal.location ) + " does not exist" );
    check.polyhedron( problem.init.region, "problem initial region" );
    check.polyhedron( problem.goal.region, "goal region" );
    return report;
}

std::vector< std::string > messages( const ValidationReport& report )
{
    std::vector< std::string > out;
    out.reserve( report.size() );
    for ( const auto& v : report )
        out.push_back( v.message );
    return out;
}

} // namespace wpx
