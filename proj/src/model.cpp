#include "wpx/model.hpp"

#include "wpx/errors.hpp"

namespace wpx
{

LinearExpression LinearExpression::variable( VarId var, const Rational& coefficient )
{
    LinearExpression e;
    e.add_term( var, coefficient );
    return e;
}

LinearExpression LinearExpression::constant_term( const Rational& value )
{
    LinearExpression e;
    e._constant = value;
    return e;
}

void LinearExpression::add_term( VarId var, const Rational& coefficient )
{
    if ( coefficient == 0 )
        return;
    auto [ it, inserted ] = _coefficients.try_emplace( var, coefficient );
    if ( inserted )
        return;
    it->second += coefficient;
    if ( it->second == 0 )
        _coefficients.erase( it );
}

LinearExpression& LinearExpression::operator+=( const LinearExpression& other )
{
    for ( const auto& [ var, c ] : other._coefficients )
        add_term( var, c );
    _constant += other._constant;
    return *this;
}

LinearExpression& LinearExpression::operator-=( const LinearExpression& other )
{
    for ( const auto& [ var, c ] : other._coefficients )
        add_term( var, -c );
    _constant -= other._constant;
    return *this;
}

LinearExpression& LinearExpression::operator*=( const Rational& factor )
{
    if ( factor == 0 )
    {
        _coefficients.clear();
        _constant = 0;
        return *this;
    }
    for ( auto& entry : _coefficients )
        entry.second *= factor;
    _constant *= factor;
    return *this;
}

Rational LinearExpression::coefficient( VarId var ) const
{
    auto it = _coefficients.find( var );
    return it == _coefficients.end() ? Rational( 0 ) : it->second;
}

Rational LinearExpression::evaluate( std::span< const Rational > valuation ) const
{
    Rational sum = _constant;
    for ( const auto& [ var, c ] : _coefficients )
        sum += c * valuation[ var ];
    return sum;
}

LinearExpression operator+( LinearExpression lhs, const LinearExpression& rhs )
{
    lhs += rhs;
    return lhs;
}

LinearExpression operator-( LinearExpression lhs, const LinearExpression& rhs )
{
    lhs -= rhs;
    return lhs;
}

LinearExpression operator*( const Rational& factor, LinearExpression expr )
{
    expr *= factor;
    return expr;
}

const char* relation_symbol( Relation relation )
{
    switch ( relation )
    {
    case Relation::le:
        return "<=";
    case Relation::ge:
        return ">=";
    case Relation::eq:
        return "=";
    }
    return "?";
}

bool LinearConstraint::satisfied_by( std::span< const Rational > valuation ) const
{
    const Rational value = expression.evaluate( valuation );
    switch ( relation )
    {
    case Relation::le:
        return value <= 0;
    case Relation::ge:
        return value >= 0;
    case Relation::eq:
        return value == 0;
    }
    return false;
}

LinearConstraint make_constraint( LinearExpression lhs, Relation relation, const LinearExpression& rhs )
{
    lhs -= rhs;
    return { std::move( lhs ), relation };
}

bool Polyhedron::contains( std::span< const Rational > valuation ) const
{
    for ( const auto& c : constraints )
        if ( !c.satisfied_by( valuation ) )
            return false;
    return true;
}

std::optional< LocationId > HybridAutomaton::find_location( std::string_view wanted ) const
{
    for ( const auto& loc : locations )
        if ( loc.name == wanted )
            return loc.id;
    return std::nullopt;
}

std::optional< VarId > HybridAutomaton::find_variable( std::string_view wanted ) const
{
    for ( VarId v = 0; v < variables.size(); ++v )
        if ( variables[ v ] == wanted )
            return v;
    return std::nullopt;
}

const char* depth_unit_name( DepthUnit unit )
{
    return unit == DepthUnit::transitions ? "transitions" : "locations";
}

std::optional< std::size_t > PlanningProblem::max_transitions() const
{
    if ( depth_unit == DepthUnit::transitions )
        return depth;
    if ( depth == 0 )
        return std::nullopt;
    return depth - 1;
}

PlanningProblem make_problem( std::shared_ptr< const HybridAutomaton > automaton, GoalSpec goal,
                              std::size_t depth, DepthUnit unit )
{
    if ( !automaton )
        throw PreconditionError( "problem requires a domain automaton" );
    PlanningProblem p;
    p.init = automaton->initial;
    p.domain = std::move( automaton );
    p.goal = std::move( goal );
    p.depth = depth;
    p.depth_unit = unit;
    return p;
}

} // namespace wpx
