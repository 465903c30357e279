#include "wpx/chain.hpp"
#include "wpx/errors.hpp"
#include "wpx/explain.hpp"
#include "wpx/graph.hpp"
#include "wpx/lcs.hpp"
#include "wpx/reach.hpp"
#include "wpx/report.hpp"
#include "wpx/text.hpp"
#include "wpx/validate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace
{

std::vector< std::string > names( const wpx::HybridAutomaton& ha, const wpx::PathString& locations )
{
    std::vector< std::string > out;
    for ( auto v : locations )
        out.push_back( ha.location( v ).name );
    return out;
}

wpx::ExplainOptions explain_options( std::size_t max_paths, std::size_t max_candidates, std::size_t parallel,
                                     bool exhaustive )
{
    wpx::ExplainOptions o;
    o.max_paths = max_paths;
    o.max_candidates = max_candidates;
    o.parallelism = parallel;
    o.mode = exhaustive ? wpx::SearchMode::exhaustive : wpx::SearchMode::pruned;
    return o;
}

} // namespace

PYBIND11_MODULE( _wpx, m )
{
    m.doc() = "Waypoint explanations for unsolvable hybrid planning problems";

    auto error = py::register_exception< wpx::Error >( m, "Error" );
    py::register_exception< wpx::ParseError >( m, "ParseError", error );
    py::register_exception< wpx::SemanticError >( m, "SemanticError", error );
    py::register_exception< wpx::PreconditionError >( m, "PreconditionError", error );
    py::register_exception< wpx::ResourceError >( m, "ResourceError", error );
    py::register_exception< wpx::InternalError >( m, "InternalError", error );

    m.attr( "DEFAULT_MAX_PATHS" ) = wpx::default_path_cap;
    m.attr( "DEFAULT_MAX_CANDIDATES" ) = wpx::default_candidate_cap;

    py::class_< wpx::ModelDocument >( m, "Model" )
        .def_property_readonly( "name", []( const wpx::ModelDocument& d ) { return d.automaton->name; } )
        .def_property_readonly( "variables", []( const wpx::ModelDocument& d ) { return d.automaton->variables; } )
        .def_property_readonly( "locations",
                                []( const wpx::ModelDocument& d ) {
                                    std::vector< std::string > out;
                                    for ( const auto& l : d.automaton->locations )
                                        out.push_back( l.name );
                                    return out;
                                } )
        .def_property_readonly( "transition_count",
                                []( const wpx::ModelDocument& d ) { return d.automaton->transitions.size(); } )
        .def( "serialize", []( const wpx::ModelDocument& d ) { return wpx::serialize_model( *d.automaton ); } )
        .def( "__repr__", []( const wpx::ModelDocument& d ) {
            return "<wpx.Model " + d.automaton->name + " with " + std::to_string( d.automaton->locations.size() ) +
                   " locations>";
        } );

    py::class_< wpx::PlanningProblem >( m, "Problem" )
        .def_readonly( "name", &wpx::PlanningProblem::name )
        .def_property(
            "depth", []( const wpx::PlanningProblem& p ) { return p.depth; },
            []( wpx::PlanningProblem& p, std::size_t d ) { p.depth = d; } )
        .def_property_readonly( "depth_unit",
                                []( const wpx::PlanningProblem& p ) { return wpx::depth_unit_name( p.depth_unit ); } )
        .def_property_readonly( "max_transitions", &wpx::PlanningProblem::max_transitions )
        .def_property_readonly( "init",
                                []( const wpx::PlanningProblem& p ) { return p.automaton().location( p.init.location ).name; } )
        .def_property_readonly( "goal",
                                []( const wpx::PlanningProblem& p ) { return p.automaton().location( p.goal.location ).name; } )
        .def( "serialize", []( const wpx::PlanningProblem& p ) { return wpx::serialize_problem( p ); } )
        .def( "__repr__", []( const wpx::PlanningProblem& p ) { return "<wpx.Problem " + p.name + ">"; } );

    m.def( "parse_model", &wpx::parse_model, py::arg( "text" ), py::arg( "source_name" ) = "<input>" );
    m.def( "parse_problem", &wpx::parse_problem, py::arg( "text" ), py::arg( "model" ) );
    m.def(
        "problem_model_path",
        []( const std::string& text ) { return wpx::parse_problem_document( text ).model_path; }, py::arg( "text" ),
        "The model path named by a problem text, if any." );
    m.def(
        "validate", []( const wpx::PlanningProblem& p ) { return wpx::messages( wpx::validate_problem( p ) ); },
        py::arg( "problem" ) );

    m.def(
        "enumerate_paths",
        []( const wpx::PlanningProblem& p, std::size_t max_paths ) {
            py::gil_scoped_release release;
            const auto ps = wpx::enumerate_paths( wpx::Graph::from_automaton( p.automaton() ), p, max_paths );
            std::vector< std::vector< std::string > > out;
            for ( const auto& path : ps.paths )
                out.push_back( names( p.automaton(), path ) );
            return out;
        },
        py::arg( "problem" ), py::arg( "max_paths" ) = wpx::default_path_cap );

    m.def(
        "count_paths",
        []( const wpx::PlanningProblem& p ) -> std::uint64_t {
            const auto bound = p.max_transitions();
            if ( !bound )
                return 0;
            return wpx::count_walks( wpx::Graph::from_automaton( p.automaton() ), p.init.location, p.goal.location,
                                     *bound );
        },
        py::arg( "problem" ) );

    m.def(
        "waypoints",
        []( const wpx::PlanningProblem& p, std::size_t max_paths, std::size_t max_candidates, std::size_t parallel ) {
            py::gil_scoped_release release;
            const auto ps = wpx::enumerate_paths( wpx::Graph::from_automaton( p.automaton() ), p, max_paths );
            if ( ps.empty() )
                return std::vector< std::string >{};
            const auto chain = wpx::chain_from_lcs( p, wpx::lcs_multi( ps, { max_candidates, parallel } ) );
            return names( p.automaton(), chain.locations() );
        },
        py::arg( "problem" ), py::arg( "max_paths" ) = wpx::default_path_cap,
        py::arg( "max_candidates" ) = wpx::default_candidate_cap, py::arg( "parallel" ) = 1 );

    m.def(
        "explain_json",
        []( const wpx::PlanningProblem& p, std::size_t max_paths, std::size_t max_candidates, std::size_t parallel,
            bool exhaustive ) {
            py::gil_scoped_release release;
            return wpx::serialize_report(
                wpx::explain( p, explain_options( max_paths, max_candidates, parallel, exhaustive ) ) );
        },
        py::arg( "problem" ), py::arg( "max_paths" ) = wpx::default_path_cap,
        py::arg( "max_candidates" ) = wpx::default_candidate_cap, py::arg( "parallel" ) = 1,
        py::arg( "exhaustive" ) = false );

    m.def(
        "check_json",
        []( const wpx::PlanningProblem& p, std::size_t max_paths, std::size_t parallel, bool exhaustive ) {
            py::gil_scoped_release release;
            wpx::ReachOptions o;
            o.max_paths = max_paths;
            o.parallelism = parallel;
            o.mode = exhaustive ? wpx::SearchMode::exhaustive : wpx::SearchMode::pruned;
            return wpx::serialize_check( p, wpx::bounded_reachable( p, o ) );
        },
        py::arg( "problem" ), py::arg( "max_paths" ) = wpx::default_path_cap, py::arg( "parallel" ) = 1,
        py::arg( "exhaustive" ) = false );
}
