#pragma once

#include "wpx/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace wpx
{

using VarId = std::size_t;
using LocationId = std::size_t;
using TransitionId = std::size_t;

// Affine form sum(c_v * v) + constant. Zero coefficients are never stored,
// so structural equality is semantic equality of the form.
class LinearExpression
{
    std::map< VarId, Rational > _coefficients;
    Rational _constant;

public:
    LinearExpression() = default;

    static LinearExpression variable( VarId var, const Rational& coefficient = 1 );
    static LinearExpression constant_term( const Rational& value );

    void add_term( VarId var, const Rational& coefficient );
    void add_constant( const Rational& value ) { _constant += value; }

    LinearExpression& operator+=( const LinearExpression& other );
    LinearExpression& operator-=( const LinearExpression& other );
    LinearExpression& operator*=( const Rational& factor );

    [[nodiscard]] const std::map< VarId, Rational >& coefficients() const { return _coefficients; }
    [[nodiscard]] const Rational& constant() const { return _constant; }
    [[nodiscard]] Rational coefficient( VarId var ) const;
    [[nodiscard]] bool is_constant() const { return _coefficients.empty(); }

    // Variables missing from the valuation are an error; callers size it to Var.
    [[nodiscard]] Rational evaluate( std::span< const Rational > valuation ) const;

    friend bool operator==( const LinearExpression&, const LinearExpression& ) = default;
};

LinearExpression operator+( LinearExpression lhs, const LinearExpression& rhs );
LinearExpression operator-( LinearExpression lhs, const LinearExpression& rhs );
LinearExpression operator*( const Rational& factor, LinearExpression expr );

// Closed relations only; strict inequalities are not representable.
enum class Relation
{
    le,
    ge,
    eq,
};

const char* relation_symbol( Relation relation );

// expression <relation> 0
struct LinearConstraint
{
    LinearExpression expression;
    Relation relation = Relation::le;

    [[nodiscard]] bool satisfied_by( std::span< const Rational > valuation ) const;

    friend bool operator==( const LinearConstraint&, const LinearConstraint& ) = default;
};

// lhs <relation> rhs, normalised to (lhs - rhs) <relation> 0.
LinearConstraint make_constraint( LinearExpression lhs, Relation relation,
                                  const LinearExpression& rhs = {} );

// Conjunction of closed linear constraints; the empty list is all of V.
struct Polyhedron
{
    std::vector< LinearConstraint > constraints;

    [[nodiscard]] bool is_universe() const { return constraints.empty(); }
    [[nodiscard]] bool contains( std::span< const Rational > valuation ) const;

    friend bool operator==( const Polyhedron&, const Polyhedron& ) = default;
};

struct Interval
{
    Rational lower;
    Rational upper;

    [[nodiscard]] bool contains( const Rational& value ) const { return lower <= value && value <= upper; }
    [[nodiscard]] bool well_formed() const { return lower <= upper; }

    friend bool operator==( const Interval&, const Interval& ) = default;
};

// One rate interval per variable, indexed by VarId.
struct RateSpec
{
    std::vector< Interval > rates;

    friend bool operator==( const RateSpec&, const RateSpec& ) = default;
};

// Variables without an entry keep their value across the transition.
struct Reset
{
    std::map< VarId, Interval > assignments;

    [[nodiscard]] bool keeps( VarId var ) const { return !assignments.contains( var ); }

    friend bool operator==( const Reset&, const Reset& ) = default;
};

struct Location
{
    LocationId id = 0;
    std::string name;
    Polyhedron invariant;
    RateSpec rates;

    friend bool operator==( const Location&, const Location& ) = default;
};

struct Transition
{
    TransitionId id = 0;
    LocationId source = 0;
    LocationId target = 0;
    std::string label;
    Polyhedron guard;
    Reset reset;

    friend bool operator==( const Transition&, const Transition& ) = default;
};

struct InitialCondition
{
    LocationId location = 0;
    Polyhedron region;

    friend bool operator==( const InitialCondition&, const InitialCondition& ) = default;
};

struct HybridAutomaton
{
    std::string name;
    std::vector< std::string > variables;
    std::vector< Location > locations;
    std::vector< Transition > transitions;
    std::set< std::string > labels;
    InitialCondition initial;

    [[nodiscard]] std::optional< LocationId > find_location( std::string_view name ) const;
    [[nodiscard]] std::optional< VarId > find_variable( std::string_view name ) const;
    [[nodiscard]] const Location& location( LocationId id ) const { return locations.at( id ); }
    [[nodiscard]] const Transition& transition( TransitionId id ) const { return transitions.at( id ); }
    [[nodiscard]] std::size_t variable_count() const { return variables.size(); }

    friend bool operator==( const HybridAutomaton&, const HybridAutomaton& ) = default;
};

struct GoalSpec
{
    LocationId location = 0;
    Polyhedron region;

    friend bool operator==( const GoalSpec&, const GoalSpec& ) = default;
};

// What the depth bound counts. Plans and runs are measured in discrete
// transitions; the bundled benchmark problems bound the number of location
// visits along a path instead, which allows one transition fewer.
enum class DepthUnit
{
    transitions,
    locations,
};

const char* depth_unit_name( DepthUnit unit );

struct PlanningProblem
{
    std::shared_ptr< const HybridAutomaton > domain;
    std::string name;
    InitialCondition init;
    GoalSpec goal;
    std::size_t depth = 0;
    DepthUnit depth_unit = DepthUnit::transitions;

    // Largest admissible number of discrete transitions, or nullopt when
    // the bound admits no path at all (depth 0 counted in locations).
    [[nodiscard]] std::optional< std::size_t > max_transitions() const;
    [[nodiscard]] const HybridAutomaton& automaton() const { return *domain; }
};

// Problem over `automaton` with its own initial condition and the given goal.
PlanningProblem make_problem( std::shared_ptr< const HybridAutomaton > automaton, GoalSpec goal,
                              std::size_t depth, DepthUnit unit = DepthUnit::transitions );

struct PlanStep
{
    Rational time;
    std::string action;

    friend bool operator==( const PlanStep&, const PlanStep& ) = default;
};

struct Plan
{
    std::vector< PlanStep > steps;
    Rational makespan;

    friend bool operator==( const Plan&, const Plan& ) = default;
};

struct WitnessSegment
{
    LocationId location = 0;
    std::vector< Rational > entry;
    Rational dwell;
    std::vector< Rational > exit;

    friend bool operator==( const WitnessSegment&, const WitnessSegment& ) = default;
};

// segments[i] --transitions[i]--> segments[i + 1]
struct WitnessRun
{
    std::vector< WitnessSegment > segments;
    std::vector< TransitionId > transitions;

    friend bool operator==( const WitnessRun&, const WitnessRun& ) = default;
};

} // namespace wpx
