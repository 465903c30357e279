#pragma once

#include "wpx/model.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace wpx
{

inline constexpr std::size_t default_path_cap = std::size_t{ 1 } << 22;

struct GraphEdge
{
    LocationId source = 0;
    LocationId target = 0;
    // Every transition source -> target, ascending by id.
    std::vector< TransitionId > transitions;
};

// Discrete skeleton of an automaton: one vertex per location, one edge per
// ordered location pair joined by at least one transition.
class Graph
{
    std::size_t _vertices = 0;
    std::vector< GraphEdge > _edges;
    std::vector< std::vector< std::size_t > > _out;

public:
    Graph() = default;
    // Arcs may repeat; repeats collapse onto one edge without back-references.
    Graph( std::size_t vertices, const std::vector< std::pair< LocationId, LocationId > >& arcs );

    static Graph from_automaton( const HybridAutomaton& automaton );

    [[nodiscard]] std::size_t vertex_count() const { return _vertices; }
    [[nodiscard]] std::size_t edge_count() const { return _edges.size(); }
    [[nodiscard]] const std::vector< GraphEdge >& edges() const { return _edges; }
    // Out-edges of `v` ordered by target id.
    [[nodiscard]] const std::vector< std::size_t >& out_edges( LocationId v ) const { return _out.at( v ); }
    [[nodiscard]] std::vector< LocationId > successors( LocationId v ) const;
    [[nodiscard]] const GraphEdge* find_edge( LocationId source, LocationId target ) const;
};

using PathString = std::vector< LocationId >;

struct PathSet
{
    // Ascending by edge count, lexicographic by location id within a length.
    std::vector< PathString > paths;

    [[nodiscard]] std::size_t count() const { return paths.size(); }
    [[nodiscard]] bool empty() const { return paths.empty(); }
};

// Number of walks source -> target with at most `max_transitions` edges,
// saturating at UINT64_MAX.
std::uint64_t count_walks( const Graph& graph, LocationId source, LocationId target, std::size_t max_transitions );

// Every walk source -> target with at most `max_transitions` edges, the
// zero-length walk included when source == target. Throws ResourceError
// (path enumeration stage) when the count exceeds `cap`; the check runs on
// the counting recurrence before anything is materialised.
PathSet enumerate_paths( const Graph& graph, LocationId source, LocationId target, std::size_t max_transitions,
                         std::size_t cap = default_path_cap );

// PS of a problem under its own depth bound.
PathSet enumerate_paths( const Graph& graph, const PlanningProblem& problem, std::size_t cap = default_path_cap );

// Length of a shortest walk source -> target avoiding `excluded`, if any.
std::optional< std::size_t > bounded_distance( const Graph& graph, LocationId source, LocationId target,
                                               std::optional< LocationId > excluded = std::nullopt );

// Vertices other than the endpoints whose removal leaves no source -> target
// walk within the bound. Empty when no such walk exists to begin with.
std::set< LocationId > disconnecting_articulation_points( const Graph& graph, LocationId source, LocationId target,
                                                          std::size_t max_transitions );

} // namespace wpx
