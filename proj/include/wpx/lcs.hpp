#pragma once

#include "wpx/graph.hpp"

#include <optional>
#include <set>
#include <vector>

namespace wpx
{

inline constexpr std::size_t default_candidate_cap = std::size_t{ 1 } << 20;

struct PrunedPaths
{
    std::vector< PathString > paths;
    std::set< LocationId > kept;
};

// Drops from every string each symbol missing from at least one string.
PrunedPaths prune_alphabet( const PathSet& paths );

bool is_subsequence( const PathString& needle, const PathString& haystack );

// Positions of the greedy leftmost match of `needle` in `haystack`.
std::optional< std::vector< std::size_t > > leftmost_embedding( const PathString& needle, const PathString& haystack );

struct CandidateSet
{
    // Distinct, in lexicographic order.
    std::vector< PathString > members;

    [[nodiscard]] std::size_t size() const { return members.size(); }
    [[nodiscard]] bool contains( const PathString& s ) const;
};

// Every distinct nonempty common subsequence of the pair. Throws
// ResourceError (lcs stage) when there are more than `cap`.
CandidateSet common_subsequences_pair( const PathString& s1, const PathString& s2,
                                       std::size_t cap = default_candidate_cap );

struct LcsOptions
{
    std::size_t max_candidates = default_candidate_cap;
    std::size_t parallelism = 1;
};

struct LcsResult
{
    PathString sequence;
    bool trivial = false;
    std::size_t seed_candidates = 0;
    std::size_t survivors = 0;

    [[nodiscard]] std::size_t length() const { return sequence.size(); }
};

// Longest common subsequence of all strings, seeded from the two shortest.
// Ties go to the candidate whose leftmost embedding into the first string is
// lexicographically smallest, then to the smaller symbol sequence.
LcsResult lcs_multi( const PathSet& paths, const LcsOptions& options = {} );

} // namespace wpx
