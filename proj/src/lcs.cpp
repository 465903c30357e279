#include "wpx/lcs.hpp"

#include "wpx/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace wpx
{

namespace
{

constexpr std::size_t none = static_cast< std::size_t >( -1 );

// next[i][c]: first position >= i holding symbol c, or `none`.
std::vector< std::vector< std::size_t > > next_table( const PathString& s, const std::vector< LocationId >& alphabet )
{
    std::vector< std::vector< std::size_t > > next( s.size() + 1, std::vector< std::size_t >( alphabet.size(), none ) );
    for ( std::size_t i = s.size(); i-- > 0; )
    {
        next[ i ] = next[ i + 1 ];
        const auto it = std::ranges::lower_bound( alphabet, s[ i ] );
        if ( it != alphabet.end() && *it == s[ i ] )
            next[ i ][ std::size_t( it - alphabet.begin() ) ] = i;
    }
    return next;
}

// Each distinct common subsequence corresponds to exactly one pair of
// leftmost embeddings, so a walk over the next-occurrence tables visits
// every one once. Optional first/last symbols filter what is reported.
std::vector< PathString > common_subsequences( const PathString& s1, const PathString& s2,
                                               std::optional< LocationId > first, std::optional< LocationId > last,
                                               std::size_t cap )
{
    std::vector< LocationId > alphabet;
    {
        std::set< LocationId > a( s1.begin(), s1.end() ), b( s2.begin(), s2.end() );
        std::ranges::set_intersection( a, b, std::back_inserter( alphabet ) );
    }
    std::vector< PathString > out;
    if ( alphabet.empty() )
        return out;
    const auto n1 = next_table( s1, alphabet );
    const auto n2 = next_table( s2, alphabet );

    PathString prefix;
    auto walk = [ & ]( auto&& self, std::size_t i, std::size_t j ) -> void {
        for ( std::size_t c = 0; c < alphabet.size(); ++c )
        {
            if ( prefix.empty() && first && alphabet[ c ] != *first )
                continue;
            const std::size_t a = n1[ i ][ c ], b = n2[ j ][ c ];
            if ( a == none || b == none )
                continue;
            prefix.push_back( alphabet[ c ] );
            if ( !last || alphabet[ c ] == *last )
            {
                if ( out.size() >= cap )
                    throw ResourceError( Stage::lcs, "more than " + std::to_string( cap )
                                                         + " LCS candidates; raise --max-candidates or lower the depth" );
                out.push_back( prefix );
            }
            self( self, a + 1, b + 1 );
            prefix.pop_back();
        }
    };
    walk( walk, 0, 0 );
    return out;
}

bool embedding_less( const std::vector< std::size_t >& a, const std::vector< std::size_t >& b )
{
    return std::ranges::lexicographical_compare( a, b );
}

} // namespace

PrunedPaths prune_alphabet( const PathSet& paths )
{
    if ( paths.empty() )
        throw PreconditionError( "prune_alphabet: empty path set" );
    PrunedPaths out;
    out.kept = std::set< LocationId >( paths.paths.front().begin(), paths.paths.front().end() );
    for ( const auto& p : paths.paths )
    {
        std::set< LocationId > here( p.begin(), p.end() ), both;
        std::ranges::set_intersection( out.kept, here, std::inserter( both, both.end() ) );
        out.kept.swap( both );
    }
    out.paths.reserve( paths.count() );
    for ( const auto& p : paths.paths )
    {
        PathString reduced;
        std::ranges::copy_if( p, std::back_inserter( reduced ), [ & ]( LocationId v ) { return out.kept.contains( v ); } );
        out.paths.push_back( std::move( reduced ) );
    }
    return out;
}

bool is_subsequence( const PathString& needle, const PathString& haystack )
{
    std::size_t k = 0;
    for ( std::size_t i = 0; i < haystack.size() && k < needle.size(); ++i )
        if ( haystack[ i ] == needle[ k ] )
            ++k;
    return k == needle.size();
}

std::optional< std::vector< std::size_t > > leftmost_embedding( const PathString& needle, const PathString& haystack )
{
    std::vector< std::size_t > pos;
    pos.reserve( needle.size() );
    for ( std::size_t i = 0; i < haystack.size() && pos.size() < needle.size(); ++i )
        if ( haystack[ i ] == needle[ pos.size() ] )
            pos.push_back( i );
    if ( pos.size() != needle.size() )
        return std::nullopt;
    return pos;
}

bool CandidateSet::contains( const PathString& s ) const
{
    return std::ranges::binary_search( members, s );
}

CandidateSet common_subsequences_pair( const PathString& s1, const PathString& s2, std::size_t cap )
{
    if ( s1.empty() || s2.empty() )
        throw PreconditionError( "common_subsequences_pair: empty string" );
    CandidateSet out{ common_subsequences( s1, s2, std::nullopt, std::nullopt, cap ) };
    std::ranges::sort( out.members );
    return out;
}

LcsResult lcs_multi( const PathSet& paths, const LcsOptions& options )
{
    if ( paths.empty() )
        throw PreconditionError( "lcs_multi: empty path set" );
    const PrunedPaths pruned = prune_alphabet( paths );
    const auto& strings = pruned.paths;
    const LocationId l0 = paths.paths.front().front();
    const LocationId lg = paths.paths.front().back();

    // Stable sort keeps BFS order among equal lengths.
    std::vector< std::size_t > order( strings.size() );
    std::iota( order.begin(), order.end(), 0 );
    std::ranges::stable_sort( order, {}, [ & ]( std::size_t i ) { return strings[ i ].size(); } );

    LcsResult result;
    std::vector< PathString > candidates;
    if ( strings.size() == 1 )
        candidates.push_back( strings.front() );
    else
        candidates = common_subsequences( strings[ order[ 0 ] ], strings[ order[ 1 ] ], l0, lg, options.max_candidates );
    result.seed_candidates = candidates.size();

    std::vector< char > alive( candidates.size(), 1 );
    auto filter = [ & ]( std::size_t begin, std::size_t end ) {
        for ( std::size_t k = 2; k < order.size(); ++k )
            for ( std::size_t c = begin; c < end; ++c )
                if ( alive[ c ] && !is_subsequence( candidates[ c ], strings[ order[ k ] ] ) )
                    alive[ c ] = 0;
    };
    const std::size_t workers = std::max< std::size_t >( 1, std::min( options.parallelism, candidates.size() / 64 + 1 ) );
    if ( workers == 1 )
        filter( 0, candidates.size() );
    else
    {
        std::vector< std::jthread > pool;
        const std::size_t chunk = ( candidates.size() + workers - 1 ) / workers;
        for ( std::size_t w = 0; w < workers; ++w )
            pool.emplace_back( [ &, w ] {
                const std::size_t b = std::min( candidates.size(), w * chunk );
                filter( b, std::min( candidates.size(), b + chunk ) );
            } );
    }

    const PathString& reference = paths.paths.front();
    std::optional< std::size_t > best;
    std::vector< std::size_t > best_embedding;
    for ( std::size_t c = 0; c < candidates.size(); ++c )
    {
        if ( !alive[ c ] )
            continue;
        ++result.survivors;
        const auto& cand = candidates[ c ];
        if ( best && cand.size() < candidates[ *best ].size() )
            continue;
        auto emb = *leftmost_embedding( cand, reference );
        if ( !best || cand.size() > candidates[ *best ].size() || embedding_less( emb, best_embedding )
             || ( emb == best_embedding && cand < candidates[ *best ] ) )
        {
            best = c;
            best_embedding = std::move( emb );
        }
    }
    if ( !best )
        throw InternalError( "lcs_multi: no candidate survived; endpoints must be common to every path" );
    result.sequence = candidates[ *best ];
    result.trivial = result.sequence.size() <= 2;
    return result;
}

} // namespace wpx
