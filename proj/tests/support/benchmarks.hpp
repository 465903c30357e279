#pragma once

#include "wpx/text.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace bench
{

inline std::filesystem::path root()
{
    return WPX_BENCHMARK_DIR;
}

inline std::string slurp( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw std::runtime_error( "cannot open " + path.string() );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline wpx::ModelDocument model( const std::string& name )
{
    const auto path = root() / name / "model.lha";
    return wpx::parse_model( slurp( path ), path.string() );
}

inline wpx::PlanningProblem problem( const std::string& name, int depth )
{
    const auto doc = model( name );
    return wpx::parse_problem( slurp( root() / name / ( "depth" + std::to_string( depth ) + ".prob" ) ), doc );
}

struct Instance
{
    std::string name;
    int depth;
};

// Every bundled (directory, depth) pair.
inline std::vector< Instance > all()
{
    std::vector< Instance > out;
    for ( const auto& dir : std::filesystem::directory_iterator( root() ) )
    {
        if ( !dir.is_directory() )
            continue;
        for ( const auto& f : std::filesystem::directory_iterator( dir.path() ) )
        {
            const auto stem = f.path().stem().string();
            if ( f.path().extension() == ".prob" && stem.starts_with( "depth" ) )
                out.push_back( { dir.path().filename().string(), std::stoi( stem.substr( 5 ) ) } );
        }
    }
    std::ranges::sort( out, {}, []( const Instance& i ) { return std::pair( i.name, i.depth ); } );
    return out;
}

} // namespace bench
