#include "wpx/chain.hpp"
#include "wpx/errors.hpp"
#include "wpx/explain.hpp"
#include "wpx/graph.hpp"
#include "wpx/lcs.hpp"
#include "wpx/reach.hpp"
#include "wpx/report.hpp"
#include "wpx/text.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace
{

enum ExitCode
{
    answered = 0,
    input_error = 2,
    resource_error = 3,
    internal_error = 4,
};

struct Config
{
    std::string model_path;
    std::string problem_path;
    std::optional< std::size_t > depth;
    bool json = false;
    std::size_t max_paths = wpx::default_path_cap;
    std::size_t max_candidates = wpx::default_candidate_cap;
    std::size_t parallel = 1;
    std::string dump_lp;
    bool exhaustive = false;
    bool verbose = false;
};

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw InputError( "cannot read " + path.string() );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string located( const std::string& file, const std::exception& e )
{
    const std::string what = e.what();
    return file + ( !what.empty() && std::isdigit( static_cast< unsigned char >( what[ 0 ] ) ) ? ":" : ": " ) + what;
}

// The problem names its model relative to its own directory unless --model is given.
wpx::PlanningProblem load( const Config& cfg )
{
    const std::string problem_text = read_file( cfg.problem_path );
    const wpx::ProblemDocument doc = [ & ] {
        try
        {
            return wpx::parse_problem_document( problem_text );
        }
        catch ( const wpx::Error& e )
        {
            throw InputError( located( cfg.problem_path, e ) );
        }
    }();
    std::filesystem::path model_path = cfg.model_path;
    if ( model_path.empty() )
    {
        if ( !doc.model_path )
            throw InputError( cfg.problem_path + ": no model given; pass --model or add a model line" );
        model_path = std::filesystem::path( cfg.problem_path ).parent_path() / *doc.model_path;
    }
    const wpx::ModelDocument model = [ & ] {
        try
        {
            return wpx::parse_model( read_file( model_path ), model_path.string() );
        }
        catch ( const wpx::Error& e )
        {
            throw InputError( located( model_path.string(), e ) );
        }
    }();
    try
    {
        wpx::PlanningProblem problem = wpx::resolve_problem( doc, model );
        if ( cfg.depth )
            problem.depth = *cfg.depth;
        if ( problem.name.empty() )
            problem.name = std::filesystem::path( cfg.problem_path ).stem().string();
        return problem;
    }
    catch ( const wpx::Error& e )
    {
        throw InputError( located( cfg.problem_path, e ) );
    }
}

const char* paths_word( std::uint64_t n )
{
    return n == 1 ? "path" : "paths";
}

std::string join_names( const wpx::HybridAutomaton& ha, const wpx::PathString& locations )
{
    std::string out;
    for ( std::size_t i = 0; i < locations.size(); ++i )
        out += ( i ? " " : "" ) + ha.location( locations[ i ] ).name;
    return out;
}

std::string ms( std::uint64_t us )
{
    std::ostringstream out;
    out << std::fixed << std::setprecision( 3 ) << static_cast< double >( us ) / 1000.0;
    return out.str();
}

void print_plan( const wpx::Plan& plan )
{
    for ( const auto& step : plan.steps )
        std::cout << "  " << wpx::to_decimal_string( step.time ) << " " << step.action << "\n";
    std::cout << "makespan " << wpx::to_decimal_string( plan.makespan ) << "\n";
}

wpx::ExplainOptions explain_options( const Config& cfg )
{
    wpx::ExplainOptions o;
    o.max_paths = cfg.max_paths;
    o.max_candidates = cfg.max_candidates;
    o.parallelism = cfg.parallel;
    o.mode = cfg.exhaustive ? wpx::SearchMode::exhaustive : wpx::SearchMode::pruned;
    if ( !cfg.dump_lp.empty() )
        o.dump_dir = cfg.dump_lp;
    return o;
}

int cmd_paths( const Config& cfg )
{
    const auto problem = load( cfg );
    const auto graph = wpx::Graph::from_automaton( problem.automaton() );
    const auto paths = wpx::enumerate_paths( graph, problem, cfg.max_paths );
    if ( cfg.json )
    {
        std::cout << wpx::serialize_paths( problem, paths, cfg.verbose ) << "\n";
        return answered;
    }
    std::cout << paths.count() << "\n";
    if ( cfg.verbose )
        for ( const auto& p : paths.paths )
            std::cout << join_names( problem.automaton(), p ) << "\n";
    return answered;
}

int cmd_waypoints( const Config& cfg )
{
    const auto problem = load( cfg );
    const auto& ha = problem.automaton();
    const auto graph = wpx::Graph::from_automaton( ha );
    const auto paths = wpx::enumerate_paths( graph, problem, cfg.max_paths );
    std::set< wpx::LocationId > cut;
    if ( auto bound = problem.max_transitions() )
        cut = wpx::disconnecting_articulation_points( graph, problem.init.location, problem.goal.location, *bound );
    std::optional< wpx::WaypointChain > chain;
    if ( !paths.empty() )
        chain = wpx::chain_from_lcs( problem, wpx::lcs_multi( paths, { cfg.max_candidates, cfg.parallel } ) );
    if ( cfg.json )
    {
        std::cout << wpx::serialize_waypoints( problem, paths, chain ? &*chain : nullptr, cut ) << "\n";
        return answered;
    }
    if ( !chain )
    {
        std::cout << "discrete infeasible: no path from " << ha.location( problem.init.location ).name << " to "
                  << ha.location( problem.goal.location ).name << " within the depth bound\n";
        return answered;
    }
    std::cout << join_names( ha, chain->locations() ) << "\n";
    if ( chain->size() == 2 )
        std::cout << "trivial chain: no disconnecting articulation point within the depth bound\n";
    if ( cfg.verbose && !cut.empty() )
        std::cout << "articulation points: " << join_names( ha, { cut.begin(), cut.end() } ) << "\n";
    return answered;
}

int cmd_explain( const Config& cfg )
{
    const auto problem = load( cfg );
    const auto report = wpx::explain( problem, explain_options( cfg ) );
    if ( cfg.json )
    {
        std::cout << wpx::serialize_report( report ) << "\n";
        return answered;
    }
    const auto& ha = problem.automaton();
    std::cout << "problem " << problem.name << " (depth " << problem.depth << " "
              << wpx::depth_unit_name( problem.depth_unit ) << ")\n";
    std::cout << "paths " << report.path_count << "\n";
    if ( report.chain )
    {
        std::cout << "chain (" << report.chain->size() << ") " << join_names( ha, report.chain->locations() ) << "\n";
        for ( const auto& v : report.verdicts )
        {
            std::cout << "  " << std::left << std::setw( 12 ) << v.name << ( v.status == wpx::Status::sat ? "reachable" : "unreachable" );
            if ( v.assumed )
                std::cout << " (initial states lie in the invariant)";
            else
                std::cout << " (" << v.paths_checked << " " << paths_word( v.paths_checked ) << ")";
            std::cout << "\n";
        }
    }
    switch ( report.outcome )
    {
    case wpx::OutcomeKind::discrete_infeasible:
        std::cout << "explanation: discrete infeasible\n";
        break;
    case wpx::OutcomeKind::first_unreachable_waypoint:
        std::cout << "explanation: first unreachable waypoint " << ha.location( *report.explanation ).name << "\n";
        break;
    case wpx::OutcomeKind::no_waypoint_explanation:
        std::cout << "explanation: none; every waypoint is reachable but the goal region is not\n";
        break;
    case wpx::OutcomeKind::solvable_contradiction:
        std::cout << "explanation: none; the problem is solvable within the depth bound\n";
        print_plan( *report.plan );
        break;
    }
    for ( const auto& note : report.annotations )
        std::cout << "note: " << note << "\n";
    std::cout << "timings (ms): path enumeration " << ms( report.timings.path_enumeration_us ) << ", lcs "
              << ms( report.timings.lcs_us ) << ", reachability " << ms( report.timings.reachability_us ) << "\n";
    return answered;
}

int cmd_check( const Config& cfg )
{
    const auto problem = load( cfg );
    const auto o = explain_options( cfg );
    const auto result = wpx::bounded_reachable( problem, { o.max_paths, o.parallelism, o.mode, o.dump_dir } );
    if ( cfg.json )
    {
        std::cout << wpx::serialize_check( problem, result ) << "\n";
        return answered;
    }
    const auto checked = result.verdict.paths_checked;
    if ( !result.verdict.sat() )
    {
        std::cout << "unreachable (" << checked << " " << paths_word( checked ) << " checked)\n";
        return answered;
    }
    std::cout << "reachable (" << checked << " " << paths_word( checked ) << " checked)\n";
    std::cout << "path " << join_names( problem.automaton(), result.path->locations ) << "\n";
    print_plan( *result.plan );
    return answered;
}

void setup_logging( bool verbose )
{
    auto logger = spdlog::stderr_color_mt( "wpx" );
    spdlog::set_default_logger( logger );
    spdlog::set_pattern( "[%l] %v" );
    spdlog::set_level( verbose ? spdlog::level::debug : spdlog::level::warn );
    if ( const char* env = std::getenv( "WPX_LOG" ) )
        spdlog::set_level( spdlog::level::from_str( env ) );
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Inevitable waypoints and unsolvability explanations for hybrid planning problems" };
    app.require_subcommand( 1 );
    Config cfg;

    auto add_common = [ & ]( CLI::App* sub ) {
        sub->add_option( "--model", cfg.model_path, "Model file (.lha); defaults to the problem's model line" );
        sub->add_option( "--problem", cfg.problem_path, "Problem file (.prob)" )->required();
        sub->add_option( "--depth", cfg.depth, "Override the problem's depth bound" );
        sub->add_flag( "--json", cfg.json, "Emit JSON" );
        sub->add_option( "--max-paths", cfg.max_paths, "Path count cap" )->check( CLI::PositiveNumber );
        sub->add_option( "--max-candidates", cfg.max_candidates, "LCS candidate cap" )->check( CLI::PositiveNumber );
        sub->add_option( "--parallel", cfg.parallel, "Worker threads" )->check( CLI::PositiveNumber );
        sub->add_flag( "--verbose,-v", cfg.verbose, "More detail and debug logging" );
    };
    auto* paths = app.add_subcommand( "paths", "Count the bounded initial-to-goal paths" );
    auto* waypoints = app.add_subcommand( "waypoints", "Print the chain of inevitable waypoints" );
    auto* explain = app.add_subcommand( "explain", "Explain why the problem is unsolvable" );
    auto* check = app.add_subcommand( "check", "Decide bounded reachability of the goal" );
    for ( auto* sub : { paths, waypoints, explain, check } )
        add_common( sub );
    for ( auto* sub : { explain, check } )
    {
        sub->add_option( "--dump-lp", cfg.dump_lp, "Write every solved LP to this directory" );
        sub->add_flag( "--exhaustive", cfg.exhaustive, "Solve one full LP per path, without prefix pruning" );
    }

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? answered : input_error;
    }

    setup_logging( cfg.verbose );
    try
    {
        if ( *paths )
            return cmd_paths( cfg );
        if ( *waypoints )
            return cmd_waypoints( cfg );
        if ( *explain )
            return cmd_explain( cfg );
        return cmd_check( cfg );
    }
    catch ( const InputError& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch ( const wpx::SemanticError& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch ( const wpx::PreconditionError& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch ( const wpx::ResourceError& e )
    {
        std::cerr << "resource limit: " << e.what() << "\n";
        return resource_error;
    }
    catch ( const wpx::InternalError& e )
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    catch ( const std::filesystem::filesystem_error& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}
