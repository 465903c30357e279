#include "wpx/simplex.hpp"

#include "wpx/errors.hpp"
#include "wpx/text.hpp"

#include <map>
#include <sstream>

namespace wpx
{

VarId LpProblem::add_variable( std::string name )
{
    variable_names.push_back( std::move( name ) );
    return variable_names.size() - 1;
}

const char* status_name( Status status )
{
    return status == Status::sat ? "sat" : "unsat";
}

namespace
{

constexpr std::size_t none = static_cast< std::size_t >( -1 );

struct Bounds
{
    std::optional< Rational > lower;
    std::optional< Rational > upper;

    void tighten_lower( const Rational& v )
    {
        if ( !lower || v > *lower )
            lower = v;
    }
    void tighten_upper( const Rational& v )
    {
        if ( !upper || v < *upper )
            upper = v;
    }
    [[nodiscard]] bool empty() const { return lower && upper && *lower > *upper; }
};

// Bounded general simplex over x_B = A x_N. Variables are ordered
// structurals first, row slacks after; Bland's rule always picks the
// smallest index, which rules out cycling.
class Tableau
{
    std::size_t _total;
    std::vector< std::vector< Rational > > _rows;
    std::vector< std::size_t > _basic;
    std::vector< std::size_t > _row_of;
    std::vector< Bounds > _bounds;
    std::vector< Rational > _beta;
    std::size_t _pivots = 0;

    [[nodiscard]] bool below( std::size_t v ) const { return _bounds[ v ].lower && _beta[ v ] < *_bounds[ v ].lower; }
    [[nodiscard]] bool above( std::size_t v ) const { return _bounds[ v ].upper && _beta[ v ] > *_bounds[ v ].upper; }
    [[nodiscard]] bool can_increase( std::size_t v ) const { return !_bounds[ v ].upper || _beta[ v ] < *_bounds[ v ].upper; }
    [[nodiscard]] bool can_decrease( std::size_t v ) const { return !_bounds[ v ].lower || _beta[ v ] > *_bounds[ v ].lower; }

    void pivot( std::size_t r, std::size_t j )
    {
        const std::size_t leaving = _basic[ r ];
        auto& row = _rows[ r ];
        const Rational a = row[ j ];
        std::vector< std::size_t > nonzero;
        for ( std::size_t k = 0; k < _total; ++k )
        {
            if ( k == j )
                continue;
            if ( row[ k ] != 0 )
            {
                row[ k ] = -row[ k ] / a;
                nonzero.push_back( k );
            }
        }
        row[ j ] = 0;
        row[ leaving ] = 1 / a;
        nonzero.push_back( leaving );

        for ( std::size_t i = 0; i < _rows.size(); ++i )
        {
            if ( i == r || _rows[ i ][ j ] == 0 )
                continue;
            const Rational c = _rows[ i ][ j ];
            _rows[ i ][ j ] = 0;
            for ( std::size_t k : nonzero )
                _rows[ i ][ k ] += c * row[ k ];
        }
        _basic[ r ] = j;
        _row_of[ j ] = r;
        _row_of[ leaving ] = none;
        ++_pivots;
    }

    void pivot_and_update( std::size_t r, std::size_t j, const Rational& value )
    {
        const std::size_t xi = _basic[ r ];
        const Rational theta = ( value - _beta[ xi ] ) / _rows[ r ][ j ];
        _beta[ xi ] = value;
        _beta[ j ] += theta;
        for ( std::size_t k = 0; k < _rows.size(); ++k )
            if ( k != r && _rows[ k ][ j ] != 0 )
                _beta[ _basic[ k ] ] += _rows[ k ][ j ] * theta;
        pivot( r, j );
    }

public:
    Tableau( std::vector< Bounds > bounds, std::size_t structurals,
             const std::vector< std::map< std::size_t, Rational > >& rows )
        : _total( bounds.size() ), _bounds( std::move( bounds ) ), _beta( _total )
    {
        _row_of.assign( _total, none );
        for ( std::size_t v = 0; v < structurals; ++v )
        {
            if ( _bounds[ v ].lower && *_bounds[ v ].lower > 0 )
                _beta[ v ] = *_bounds[ v ].lower;
            else if ( _bounds[ v ].upper && *_bounds[ v ].upper < 0 )
                _beta[ v ] = *_bounds[ v ].upper;
        }
        for ( std::size_t r = 0; r < rows.size(); ++r )
        {
            const std::size_t slack = structurals + r;
            std::vector< Rational > dense( _total );
            for ( const auto& [ v, c ] : rows[ r ] )
            {
                dense[ v ] = c;
                _beta[ slack ] += c * _beta[ v ];
            }
            _rows.push_back( std::move( dense ) );
            _basic.push_back( slack );
            _row_of[ slack ] = r;
        }
    }

    bool check()
    {
        while ( true )
        {
            std::size_t r = none;
            for ( std::size_t i = 0; i < _rows.size(); ++i )
                if ( ( below( _basic[ i ] ) || above( _basic[ i ] ) ) && ( r == none || _basic[ i ] < _basic[ r ] ) )
                    r = i;
            if ( r == none )
                return true;

            const std::size_t xi = _basic[ r ];
            const bool raise = below( xi );
            std::size_t entering = none;
            for ( std::size_t j = 0; j < _total && entering == none; ++j )
            {
                if ( _row_of[ j ] != none )
                    continue;
                const int sign = sgn( _rows[ r ][ j ] );
                if ( sign == 0 )
                    continue;
                const bool up = raise == ( sign > 0 );
                if ( up ? can_increase( j ) : can_decrease( j ) )
                    entering = j;
            }
            if ( entering == none )
                return false;
            pivot_and_update( r, entering, raise ? *_bounds[ xi ].lower : *_bounds[ xi ].upper );
        }
    }

    [[nodiscard]] const Rational& value( std::size_t v ) const { return _beta[ v ]; }
    [[nodiscard]] std::size_t pivots() const { return _pivots; }
};

void substitute( LinearExpression& e, VarId var, const LinearExpression& replacement )
{
    const Rational c = e.coefficient( var );
    if ( c == 0 )
        return;
    e.add_term( var, -c );
    e += c * replacement;
}

Verdict unsat()
{
    return Verdict{ Status::unsat, std::nullopt, 0 };
}

} // namespace

Verdict lp_feasible( const LpProblem& lp, SimplexStats* stats )
{
    const std::size_t n = lp.variable_count();
    std::vector< LinearConstraint > work = lp.constraints;
    for ( const auto& c : work )
        for ( const auto& [ v, coef ] : c.expression.coefficients() )
            if ( v >= n )
                throw PreconditionError( "lp_feasible: constraint references variable " + std::to_string( v )
                                         + " outside the problem" );

    // Gaussian elimination of every equality, pivoting on its smallest variable.
    std::vector< std::pair< VarId, LinearExpression > > eliminated;
    std::vector< bool > consumed( work.size(), false );
    for ( std::size_t i = 0; i < work.size(); ++i )
    {
        if ( work[ i ].relation != Relation::eq )
            continue;
        consumed[ i ] = true;
        const LinearExpression& e = work[ i ].expression;
        if ( e.is_constant() )
        {
            if ( e.constant() != 0 )
                return unsat();
            continue;
        }
        const auto [ pivot, a ] = *e.coefficients().begin();
        LinearExpression replacement = e;
        replacement.add_term( pivot, -a );
        replacement *= Rational( -1 / a );
        for ( std::size_t k = 0; k < work.size(); ++k )
            if ( !consumed[ k ] )
                substitute( work[ k ].expression, pivot, replacement );
        eliminated.emplace_back( pivot, std::move( replacement ) );
    }

    std::vector< bool > is_eliminated( n, false );
    for ( const auto& [ v, e ] : eliminated )
        is_eliminated[ v ] = true;
    std::vector< std::size_t > local( n, none );
    std::vector< VarId > global;
    for ( VarId v = 0; v < n; ++v )
        if ( !is_eliminated[ v ] )
        {
            local[ v ] = global.size();
            global.push_back( v );
        }

    std::vector< Bounds > bounds( global.size() );
    std::map< std::map< std::size_t, Rational >, std::size_t > slack_of;
    std::vector< std::map< std::size_t, Rational > > rows;
    std::vector< Bounds > slack_bounds;
    for ( std::size_t i = 0; i < work.size(); ++i )
    {
        if ( consumed[ i ] )
            continue;
        LinearExpression e = work[ i ].expression;
        const Relation rel = work[ i ].relation;
        if ( e.is_constant() )
        {
            const Rational& c = e.constant();
            if ( ( rel == Relation::le && c > 0 ) || ( rel == Relation::ge && c < 0 ) )
                return unsat();
            continue;
        }
        // Scale so the leading coefficient is +-1; identical rows share a slack.
        e *= Rational( 1 / abs( e.coefficients().begin()->second ) );
        const Rational bound = -e.constant();
        if ( e.coefficients().size() == 1 )
        {
            const auto& [ v, a ] = *e.coefficients().begin();
            Bounds& b = bounds[ local[ v ] ];
            if ( ( rel == Relation::le ) == ( a > 0 ) )
                b.tighten_upper( bound / a );
            else
                b.tighten_lower( bound / a );
            continue;
        }
        std::map< std::size_t, Rational > row;
        for ( const auto& [ v, a ] : e.coefficients() )
            row.emplace( local[ v ], a );
        auto [ it, fresh ] = slack_of.try_emplace( row, rows.size() );
        if ( fresh )
        {
            rows.push_back( std::move( row ) );
            slack_bounds.emplace_back();
        }
        Bounds& b = slack_bounds[ it->second ];
        if ( rel == Relation::le )
            b.tighten_upper( bound );
        else
            b.tighten_lower( bound );
    }
    for ( const auto& b : bounds )
        if ( b.empty() )
            return unsat();
    for ( const auto& b : slack_bounds )
        if ( b.empty() )
            return unsat();

    const std::size_t structurals = global.size();
    bounds.insert( bounds.end(), slack_bounds.begin(), slack_bounds.end() );
    Tableau tableau( std::move( bounds ), structurals, rows );
    const bool feasible = tableau.check();
    if ( stats )
        *stats = { eliminated.size(), rows.size(), tableau.pivots() };
    if ( !feasible )
        return unsat();

    std::vector< Rational > witness( n );
    for ( std::size_t k = 0; k < structurals; ++k )
        witness[ global[ k ] ] = tableau.value( k );
    for ( auto it = eliminated.rbegin(); it != eliminated.rend(); ++it )
        witness[ it->first ] = it->second.evaluate( witness );

    for ( std::size_t i = 0; i < lp.constraints.size(); ++i )
        if ( !lp.constraints[ i ].satisfied_by( witness ) )
            throw InternalError( "simplex witness violates constraint " + std::to_string( i ) + ": "
                                 + format_constraint( lp.constraints[ i ], lp.variable_names ) );
    return Verdict{ Status::sat, std::move( witness ), 0 };
}

std::string format_lp( const LpProblem& lp )
{
    std::ostringstream out;
    out << "variables " << lp.variable_count() << "\n";
    for ( std::size_t v = 0; v < lp.variable_count(); ++v )
        out << "  " << v << " " << lp.variable_names[ v ] << "\n";
    out << "constraints " << lp.constraints.size() << "\n";
    for ( const auto& c : lp.constraints )
        out << "  " << format_constraint( c, lp.variable_names ) << "\n";
    return out.str();
}

} // namespace wpx
