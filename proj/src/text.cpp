#include "wpx/text.hpp"

#include "wpx/errors.hpp"
#include "wpx/validate.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace wpx
{

namespace
{

enum class TokenKind
{
    identifier,
    number,
    string,
    punct,
    end,
};

struct Token
{
    TokenKind kind = TokenKind::end;
    std::string text;
    SourcePosition position;
};

class Lexer
{
    std::string_view _src;
    std::size_t _pos = 0;
    std::size_t _line = 1;
    std::size_t _column = 1;

    [[nodiscard]] char peek( std::size_t ahead = 0 ) const
    {
        return _pos + ahead < _src.size() ? _src[ _pos + ahead ] : '\0';
    }

    void advance()
    {
        if ( _src[ _pos ] == '\n' )
        {
            ++_line;
            _column = 1;
        }
        else
            ++_column;
        ++_pos;
    }

    static bool ident_start( char c ) { return std::isalpha( static_cast< unsigned char >( c ) ) || c == '_'; }
    static bool ident_char( char c ) { return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_'; }
    static bool digit( char c ) { return std::isdigit( static_cast< unsigned char >( c ) ) != 0; }

    void skip_blank()
    {
        while ( _pos < _src.size() )
        {
            char c = peek();
            if ( c == ' ' || c == '\t' || c == '\r' || c == '\n' )
                advance();
            else if ( c == '#' || ( c == '/' && peek( 1 ) == '/' ) )
                while ( _pos < _src.size() && peek() != '\n' )
                    advance();
            else
                break;
        }
    }

public:
    explicit Lexer( std::string_view src ) : _src( src ) {}

    Token next()
    {
        skip_blank();
        Token tok;
        tok.position = { _line, _column };
        if ( _pos >= _src.size() )
            return tok;

        const char c = peek();
        const std::size_t start = _pos;
        if ( ident_start( c ) )
        {
            while ( _pos < _src.size() && ident_char( peek() ) )
                advance();
            tok.kind = TokenKind::identifier;
        }
        else if ( digit( c ) || ( c == '.' && digit( peek( 1 ) ) ) )
        {
            while ( digit( peek() ) )
                advance();
            if ( peek() == '.' && digit( peek( 1 ) ) )
            {
                advance();
                while ( digit( peek() ) )
                    advance();
            }
            else if ( peek() == '/' && digit( peek( 1 ) ) )
            {
                advance();
                while ( digit( peek() ) )
                    advance();
            }
            if ( ident_start( peek() ) || peek() == '.' )
                throw ParseError( "malformed number", tok.position.line, tok.position.column );
            tok.kind = TokenKind::number;
        }
        else if ( c == '"' )
        {
            advance();
            std::string value;
            while ( true )
            {
                if ( _pos >= _src.size() || peek() == '\n' )
                    throw ParseError( "unterminated string", tok.position.line, tok.position.column );
                if ( peek() == '"' )
                {
                    advance();
                    break;
                }
                if ( peek() == '\\' && ( peek( 1 ) == '"' || peek( 1 ) == '\\' ) )
                    advance();
                value.push_back( peek() );
                advance();
            }
            tok.kind = TokenKind::string;
            tok.text = std::move( value );
            return tok;
        }
        else
        {
            static constexpr std::string_view two[] = { "->", ":=", "<=", ">=", "==", "!=", "&&" };
            for ( auto op : two )
                if ( _src.substr( _pos, 2 ) == op )
                {
                    advance();
                    advance();
                    tok.kind = TokenKind::punct;
                    tok.text = op == "&&" ? "&" : std::string( op );
                    return tok;
                }
            static constexpr std::string_view one = "{}[]();:,&+-*<>=";
            if ( one.find( c ) == std::string_view::npos )
                throw ParseError( "unexpected character", tok.position.line, tok.position.column );
            advance();
            tok.kind = TokenKind::punct;
        }
        tok.text = std::string( _src.substr( start, _pos - start ) );
        return tok;
    }
};

const char* describe( TokenKind kind )
{
    switch ( kind )
    {
    case TokenKind::identifier:
        return "identifier";
    case TokenKind::number:
        return "number";
    case TokenKind::string:
        return "string";
    case TokenKind::punct:
        return "symbol";
    case TokenKind::end:
        return "end of input";
    }
    return "token";
}

struct RawLocation
{
    std::string name;
    SourcePosition position;
    std::vector< RawConstraint > invariant;
    struct Rate
    {
        std::string variable;
        Interval interval;
        SourcePosition position;
    };
    std::vector< Rate > rates;
};

struct RawTransition
{
    std::string source;
    std::string target;
    SourcePosition position;
    std::optional< std::string > label;
    std::vector< RawConstraint > guard;
    struct Assign
    {
        std::string variable;
        Interval interval;
        SourcePosition position;
    };
    std::vector< Assign > resets;
};

struct RawModel
{
    std::string name;
    std::vector< std::pair< std::string, SourcePosition > > variables;
    std::optional< std::vector< std::string > > labels;
    std::vector< RawLocation > locations;
    std::vector< RawTransition > transitions;
    std::optional< RawRegion > init;
};

class Parser
{
    Lexer _lexer;
    Token _tok;

public:
    explicit Parser( std::string_view text ) : _lexer( text ) { _tok = _lexer.next(); }

    [[nodiscard]] const Token& current() const { return _tok; }

    [[noreturn]] void fail( std::vector< std::string > expected ) const
    {
        std::string found = _tok.kind == TokenKind::end ? "end of input" : "'" + _tok.text + "'";
        throw ParseError( "unexpected " + found, _tok.position.line, _tok.position.column, std::move( expected ) );
    }

    void bump() { _tok = _lexer.next(); }

    bool at( std::string_view punct_or_word ) const
    {
        return ( _tok.kind == TokenKind::punct || _tok.kind == TokenKind::identifier ) && _tok.text == punct_or_word;
    }

    bool accept( std::string_view text )
    {
        if ( !at( text ) )
            return false;
        bump();
        return true;
    }

    void expect( std::string_view text )
    {
        if ( !accept( text ) )
            fail( { "'" + std::string( text ) + "'" } );
    }

    Token expect_kind( TokenKind kind )
    {
        if ( _tok.kind != kind )
            fail( { describe( kind ) } );
        Token t = _tok;
        bump();
        return t;
    }

    std::string identifier() { return expect_kind( TokenKind::identifier ).text; }

    Rational number_literal()
    {
        Token t = expect_kind( TokenKind::number );
        try
        {
            return parse_rational( t.text );
        }
        catch ( const std::invalid_argument& e )
        {
            throw ParseError( e.what(), t.position.line, t.position.column );
        }
    }

    Rational signed_number()
    {
        bool negative = false;
        while ( at( "-" ) || at( "+" ) )
        {
            negative ^= at( "-" );
            bump();
        }
        Rational r = number_literal();
        return negative ? Rational( -r ) : r;
    }

    Interval interval()
    {
        expect( "[" );
        Interval i;
        i.lower = signed_number();
        expect( "," );
        i.upper = signed_number();
        expect( "]" );
        return i;
    }

    // term := number ['*'] ident | number | ident ['*' number]
    void term( Rational sign, RawConstraint& out )
    {
        const SourcePosition pos = _tok.position;
        if ( _tok.kind == TokenKind::number )
        {
            Rational value = number_literal();
            bool star = accept( "*" );
            if ( _tok.kind == TokenKind::identifier )
                out.terms.push_back( { identifier(), sign * value, pos } );
            else if ( star )
                fail( { "identifier" } );
            else
                out.constant += sign * value;
            return;
        }
        if ( _tok.kind == TokenKind::identifier )
        {
            std::string name = identifier();
            Rational c = sign;
            if ( accept( "*" ) )
                c *= number_literal();
            out.terms.push_back( { std::move( name ), c, pos } );
            return;
        }
        fail( { "number", "identifier" } );
    }

    // Collected into `out` with the given sign applied.
    void expression( Rational sign, RawConstraint& out )
    {
        Rational s = sign;
        while ( at( "+" ) || at( "-" ) )
        {
            if ( at( "-" ) )
                s = -s;
            bump();
        }
        term( s, out );
        while ( at( "+" ) || at( "-" ) )
        {
            s = sign;
            while ( at( "+" ) || at( "-" ) )
            {
                if ( at( "-" ) )
                    s = -s;
                bump();
            }
            term( s, out );
        }
    }

    std::optional< Relation > relation()
    {
        if ( at( "<" ) || at( ">" ) || at( "!=" ) )
            throw ParseError( "strict inequality '" + _tok.text +
                                  "' is not supported: only closed constraints (<=, >=, =) are accepted",
                              _tok.position.line, _tok.position.column );
        if ( accept( "<=" ) )
            return Relation::le;
        if ( accept( ">=" ) )
            return Relation::ge;
        if ( accept( "=" ) || accept( "==" ) )
            return Relation::eq;
        return std::nullopt;
    }

    // a <= b <= c chains expand to one constraint per adjacent pair.
    void comparison_chain( std::vector< RawConstraint >& out )
    {
        const SourcePosition pos = _tok.position;
        RawConstraint left;
        expression( 1, left );
        auto rel = relation();
        if ( !rel )
            fail( { "'<='", "'>='", "'='" } );
        while ( rel )
        {
            RawConstraint right;
            expression( 1, right );
            const bool flip = left.terms.empty() && !right.terms.empty();
            const RawConstraint& lhs = flip ? right : left;
            const RawConstraint& rhs = flip ? left : right;
            RawConstraint c = lhs;
            for ( const auto& t : rhs.terms )
                c.terms.push_back( { t.variable, -t.coefficient, t.position } );
            c.constant -= rhs.constant;
            c.relation = !flip || *rel == Relation::eq ? *rel : *rel == Relation::le ? Relation::ge : Relation::le;
            c.position = pos;
            out.push_back( std::move( c ) );
            left = std::move( right );
            rel = relation();
        }
    }

    std::vector< RawConstraint > conjunction()
    {
        std::vector< RawConstraint > out;
        if ( accept( "true" ) )
            return out;
        comparison_chain( out );
        while ( accept( "&" ) || accept( "and" ) )
        {
            while ( accept( "&" ) )
                ;
            comparison_chain( out );
        }
        return out;
    }

    std::vector< std::string > identifier_list( std::vector< SourcePosition >* positions = nullptr )
    {
        std::vector< std::string > out;
        if ( at( ";" ) )
            return out;
        do
        {
            if ( positions )
                positions->push_back( _tok.position );
            out.push_back( identifier() );
        } while ( accept( "," ) );
        return out;
    }

    RawRegion region_block( std::string location, SourcePosition pos )
    {
        RawRegion r{ std::move( location ), pos, {} };
        if ( accept( ";" ) )
            return r;
        expect( "{" );
        while ( !at( "}" ) )
        {
            auto cs = conjunction();
            r.constraints.insert( r.constraints.end(), cs.begin(), cs.end() );
            if ( !at( "}" ) )
                expect( ";" );
        }
        expect( "}" );
        return r;
    }

    RawLocation location_block()
    {
        RawLocation loc;
        loc.position = _tok.position;
        loc.name = identifier();
        expect( "{" );
        while ( !accept( "}" ) )
        {
            if ( accept( "inv" ) )
            {
                expect( ":" );
                auto cs = conjunction();
                loc.invariant.insert( loc.invariant.end(), cs.begin(), cs.end() );
                expect( ";" );
            }
            else if ( at( "rate" ) )
            {
                bump();
                RawLocation::Rate rate;
                rate.position = _tok.position;
                rate.variable = identifier();
                if ( accept( "=" ) )
                {
                    Rational v = signed_number();
                    rate.interval = { v, v };
                }
                else
                {
                    expect( "in" );
                    rate.interval = interval();
                }
                expect( ";" );
                loc.rates.push_back( std::move( rate ) );
            }
            else
                fail( { "'inv'", "'rate'", "'}'" } );
        }
        return loc;
    }

    RawTransition transition_block()
    {
        RawTransition t;
        t.position = _tok.position;
        t.source = identifier();
        expect( "->" );
        t.target = identifier();
        expect( "{" );
        while ( !accept( "}" ) )
        {
            if ( accept( "label" ) )
            {
                expect( ":" );
                t.label = identifier();
                expect( ";" );
            }
            else if ( accept( "guard" ) )
            {
                expect( ":" );
                auto cs = conjunction();
                t.guard.insert( t.guard.end(), cs.begin(), cs.end() );
                expect( ";" );
            }
            else if ( at( "reset" ) )
            {
                bump();
                RawTransition::Assign a;
                a.position = _tok.position;
                a.variable = identifier();
                if ( accept( ":=" ) )
                {
                    Rational v = signed_number();
                    a.interval = { v, v };
                }
                else
                {
                    expect( "in" );
                    a.interval = interval();
                }
                expect( ";" );
                t.resets.push_back( std::move( a ) );
            }
            else
                fail( { "'label'", "'guard'", "'reset'", "'}'" } );
        }
        return t;
    }

    RawModel model()
    {
        RawModel m;
        bool saw_vars = false;
        while ( _tok.kind != TokenKind::end )
        {
            const SourcePosition pos = _tok.position;
            if ( accept( "automaton" ) )
            {
                m.name = identifier();
                expect( ";" );
            }
            else if ( accept( "vars" ) )
            {
                if ( saw_vars )
                    throw ParseError( "duplicate vars section", pos.line, pos.column );
                saw_vars = true;
                std::vector< SourcePosition > positions;
                auto names = identifier_list( &positions );
                for ( std::size_t i = 0; i < names.size(); ++i )
                    m.variables.emplace_back( names[ i ], positions[ i ] );
                expect( ";" );
            }
            else if ( accept( "labels" ) )
            {
                if ( m.labels )
                    throw ParseError( "duplicate labels section", pos.line, pos.column );
                m.labels = identifier_list();
                expect( ";" );
            }
            else if ( accept( "location" ) )
                m.locations.push_back( location_block() );
            else if ( accept( "trans" ) )
                m.transitions.push_back( transition_block() );
            else if ( accept( "init" ) )
            {
                if ( m.init )
                    throw ParseError( "duplicate init section", pos.line, pos.column );
                SourcePosition at_name = _tok.position;
                std::string loc = identifier();
                m.init = region_block( std::move( loc ), at_name );
            }
            else
                fail( { "'automaton'", "'vars'", "'labels'", "'location'", "'trans'", "'init'" } );
        }
        return m;
    }

    ProblemDocument problem()
    {
        ProblemDocument doc;
        bool saw_goal = false;
        bool saw_depth = false;
        while ( _tok.kind != TokenKind::end )
        {
            const SourcePosition pos = _tok.position;
            if ( accept( "problem" ) )
            {
                doc.name = identifier();
                expect( ";" );
            }
            else if ( accept( "model" ) )
            {
                doc.model_path = expect_kind( TokenKind::string ).text;
                expect( ";" );
            }
            else if ( accept( "init" ) )
            {
                if ( doc.init )
                    throw ParseError( "duplicate init section", pos.line, pos.column );
                SourcePosition at_name = _tok.position;
                std::string loc = identifier();
                doc.init = region_block( std::move( loc ), at_name );
            }
            else if ( accept( "goal" ) )
            {
                if ( saw_goal )
                    throw ParseError( "duplicate goal section", pos.line, pos.column );
                saw_goal = true;
                SourcePosition at_name = _tok.position;
                std::string loc = identifier();
                doc.goal = region_block( std::move( loc ), at_name );
            }
            else if ( accept( "depth" ) )
            {
                if ( saw_depth )
                    throw ParseError( "duplicate depth declaration", pos.line, pos.column );
                saw_depth = true;
                Token t = expect_kind( TokenKind::number );
                std::size_t value = 0;
                auto [ end, ec ] = std::from_chars( t.text.data(), t.text.data() + t.text.size(), value );
                if ( ec != std::errc{} || end != t.text.data() + t.text.size() )
                    throw ParseError( "depth must be a non-negative integer", t.position.line, t.position.column );
                doc.depth = value;
                if ( accept( "locations" ) )
                    doc.depth_unit = DepthUnit::locations;
                else if ( accept( "transitions" ) )
                    doc.depth_unit = DepthUnit::transitions;
                expect( ";" );
            }
            else
                fail( { "'problem'", "'model'", "'init'", "'goal'", "'depth'" } );
        }
        if ( !saw_goal )
            throw SemanticError( "problem has no goal declaration", _tok.position.line, _tok.position.column );
        if ( !saw_depth )
            throw SemanticError( "missing depth declaration", _tok.position.line, _tok.position.column );
        return doc;
    }
};

class NameTable
{
    std::map< std::string, std::size_t, std::less<> > _ids;

public:
    explicit NameTable( const std::vector< std::string >& names )
    {
        for ( std::size_t i = 0; i < names.size(); ++i )
            _ids.emplace( names[ i ], i );
    }

    [[nodiscard]] std::optional< std::size_t > find( std::string_view name ) const
    {
        auto it = _ids.find( name );
        return it == _ids.end() ? std::nullopt : std::optional< std::size_t >( it->second );
    }
};

Polyhedron resolve_constraints( const std::vector< RawConstraint >& raw, const NameTable& vars )
{
    Polyhedron poly;
    for ( const auto& rc : raw )
    {
        LinearExpression e = LinearExpression::constant_term( rc.constant );
        for ( const auto& t : rc.terms )
        {
            auto id = vars.find( t.variable );
            if ( !id )
                throw SemanticError( "undeclared variable " + t.variable, t.position.line, t.position.column );
            e.add_term( *id, t.coefficient );
        }
        poly.constraints.push_back( { std::move( e ), rc.relation } );
    }
    return poly;
}

LocationId resolve_location( const std::string& name, SourcePosition pos, const HybridAutomaton& ha )
{
    auto id = ha.find_location( name );
    if ( !id )
        throw SemanticError( "unknown location '" + name + "'", pos.line, pos.column );
    return *id;
}

ModelDocument build_model( RawModel raw, std::string source_name )
{
    auto ha = std::make_shared< HybridAutomaton >();
    ha->name = raw.name;
    for ( const auto& [ name, pos ] : raw.variables )
    {
        if ( std::ranges::find( ha->variables, name ) != ha->variables.end() )
            throw SemanticError( "duplicate variable '" + name + "'", pos.line, pos.column );
        ha->variables.push_back( name );
    }
    const NameTable vars( ha->variables );

    ModelDocument doc;
    doc.source_name = std::move( source_name );

    for ( auto& rl : raw.locations )
    {
        if ( ha->find_location( rl.name ) )
            throw SemanticError( "duplicate location '" + rl.name + "'", rl.position.line, rl.position.column );
        Location loc;
        loc.id = ha->locations.size();
        loc.name = rl.name;
        loc.invariant = resolve_constraints( rl.invariant, vars );
        loc.rates.rates.assign( ha->variables.size(), Interval{ 0, 0 } );
        std::vector< bool > given( ha->variables.size(), false );
        for ( const auto& rate : rl.rates )
        {
            auto id = vars.find( rate.variable );
            if ( !id )
                throw SemanticError( "undeclared variable " + rate.variable, rate.position.line, rate.position.column );
            if ( given[ *id ] )
                throw SemanticError( "duplicate rate for '" + rate.variable + "'", rate.position.line,
                                     rate.position.column );
            given[ *id ] = true;
            loc.rates.rates[ *id ] = rate.interval;
        }
        doc.location_positions[ loc.id ] = rl.position;
        ha->locations.push_back( std::move( loc ) );
    }

    std::set< std::string > used_labels;
    for ( auto& rt : raw.transitions )
    {
        Transition t;
        t.id = ha->transitions.size();
        t.source = resolve_location( rt.source, rt.position, *ha );
        t.target = resolve_location( rt.target, rt.position, *ha );
        if ( !rt.label )
            throw SemanticError( "transition " + rt.source + " -> " + rt.target + " has no label", rt.position.line,
                                 rt.position.column );
        t.label = *rt.label;
        used_labels.insert( t.label );
        t.guard = resolve_constraints( rt.guard, vars );
        for ( const auto& a : rt.resets )
        {
            auto id = vars.find( a.variable );
            if ( !id )
                throw SemanticError( "undeclared variable " + a.variable, a.position.line, a.position.column );
            if ( !t.reset.assignments.emplace( *id, a.interval ).second )
                throw SemanticError( "duplicate reset of '" + a.variable + "'", a.position.line, a.position.column );
        }
        doc.transition_positions[ t.id ] = rt.position;
        ha->transitions.push_back( std::move( t ) );
    }

    if ( raw.labels )
        ha->labels = std::set< std::string >( raw.labels->begin(), raw.labels->end() );
    else
        ha->labels = std::move( used_labels );

    if ( !raw.init )
        throw SemanticError( std::vector< std::string >{ "model has no init declaration" } );
    ha->initial.location = resolve_location( raw.init->location, raw.init->position, *ha );
    ha->initial.region = resolve_constraints( raw.init->constraints, vars );

    if ( auto report = validate_model( *ha ); !report.empty() )
        throw SemanticError( messages( report ) );
    doc.automaton = std::move( ha );
    return doc;
}

std::string format_expression( const LinearExpression& e, const std::vector< std::string >& names )
{
    std::ostringstream out;
    bool first = true;
    for ( const auto& [ var, c ] : e.coefficients() )
    {
        Rational magnitude = abs( c );
        if ( first )
            out << ( c < 0 ? "-" : "" );
        else
            out << ( c < 0 ? " - " : " + " );
        if ( magnitude != 1 )
            out << to_string( magnitude ) << "*";
        out << ( var < names.size() ? names[ var ] : "v" + std::to_string( var ) );
        first = false;
    }
    if ( first )
        out << "0";
    return out.str();
}

} // namespace

std::string format_constraint( const LinearConstraint& c, const std::vector< std::string >& names )
{
    return format_expression( c.expression, names ) + " " + relation_symbol( c.relation ) + " "
           + to_string( Rational( -c.expression.constant() ) );
}

std::string format_polyhedron( const Polyhedron& poly, const std::vector< std::string >& names )
{
    if ( poly.is_universe() )
        return "true";
    std::string out;
    for ( std::size_t i = 0; i < poly.constraints.size(); ++i )
    {
        if ( i > 0 )
            out += " & ";
        out += format_constraint( poly.constraints[ i ], names );
    }
    return out;
}

ModelDocument parse_model( std::string_view text, std::string source_name )
{
    Parser parser( text );
    return build_model( parser.model(), std::move( source_name ) );
}

ProblemDocument parse_problem_document( std::string_view text )
{
    Parser parser( text );
    return parser.problem();
}

PlanningProblem resolve_problem( const ProblemDocument& doc, const ModelDocument& model )
{
    if ( !model.automaton )
        throw PreconditionError( "resolve_problem: model document has no automaton" );
    const HybridAutomaton& ha = *model.automaton;
    const NameTable vars( ha.variables );

    GoalSpec goal;
    goal.location = resolve_location( doc.goal.location, doc.goal.position, ha );
    goal.region = resolve_constraints( doc.goal.constraints, vars );

    PlanningProblem problem = make_problem( model.automaton, std::move( goal ), doc.depth, doc.depth_unit );
    problem.name = doc.name.empty() ? ha.name : doc.name;
    if ( doc.init )
    {
        problem.init.location = resolve_location( doc.init->location, doc.init->position, ha );
        problem.init.region = resolve_constraints( doc.init->constraints, vars );
    }
    return problem;
}

PlanningProblem parse_problem( std::string_view text, const ModelDocument& model )
{
    return resolve_problem( parse_problem_document( text ), model );
}

std::string serialize_model( const HybridAutomaton& ha )
{
    std::ostringstream out;
    const auto& names = ha.variables;
    if ( !ha.name.empty() )
        out << "automaton " << ha.name << ";\n";
    out << "vars";
    for ( std::size_t i = 0; i < names.size(); ++i )
        out << ( i == 0 ? " " : ", " ) << names[ i ];
    out << ";\n";
    out << "labels";
    std::size_t k = 0;
    for ( const auto& label : ha.labels )
        out << ( k++ == 0 ? " " : ", " ) << label;
    out << ";\n\n";

    for ( const auto& loc : ha.locations )
    {
        out << "location " << loc.name << " {\n";
        if ( !loc.invariant.is_universe() )
            out << "  inv: " << format_polyhedron( loc.invariant, names ) << ";\n";
        for ( VarId v = 0; v < loc.rates.rates.size() && v < names.size(); ++v )
            out << "  rate " << names[ v ] << " in [" << to_string( loc.rates.rates[ v ].lower ) << ", "
                << to_string( loc.rates.rates[ v ].upper ) << "];\n";
        out << "}\n";
    }
    out << "\n";
    for ( const auto& t : ha.transitions )
    {
        out << "trans " << ha.location( t.source ).name << " -> " << ha.location( t.target ).name << " {\n";
        out << "  label: " << t.label << ";\n";
        if ( !t.guard.is_universe() )
            out << "  guard: " << format_polyhedron( t.guard, names ) << ";\n";
        for ( const auto& [ var, interval ] : t.reset.assignments )
            out << "  reset " << names[ var ] << " in [" << to_string( interval.lower ) << ", "
                << to_string( interval.upper ) << "];\n";
        out << "}\n";
    }
    out << "\ninit " << ha.location( ha.initial.location ).name << " { "
        << format_polyhedron( ha.initial.region, names ) << "; }\n";
    return out.str();
}

std::string serialize_problem( const PlanningProblem& problem, const std::string& model_path )
{
    const HybridAutomaton& ha = problem.automaton();
    std::ostringstream out;
    if ( !problem.name.empty() )
        out << "problem " << problem.name << ";\n";
    if ( !model_path.empty() )
        out << "model \"" << model_path << "\";\n";
    out << "init " << ha.location( problem.init.location ).name << " { "
        << format_polyhedron( problem.init.region, ha.variables ) << "; }\n";
    out << "goal " << ha.location( problem.goal.location ).name << " { "
        << format_polyhedron( problem.goal.region, ha.variables ) << "; }\n";
    out << "depth " << problem.depth << " " << depth_unit_name( problem.depth_unit ) << ";\n";
    return out.str();
}

} // namespace wpx
