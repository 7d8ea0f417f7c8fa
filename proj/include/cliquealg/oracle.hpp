#ifndef CLIQUEALG_ORACLE_HPP
#define CLIQUEALG_ORACLE_HPP

#include <cstddef>

#include "cliquealg/freealg.hpp"
#include "cliquealg/series.hpp"

namespace cliquealg {

// Brute-force dimension check: dim A(Gamma)_n computed directly from the
// presentation by exact rational rank, with no rewriting or monoid
// machinery involved.

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (#words of degree n) minus the rank of the span of all u * r * v with r a
// defining relation. signs: per-edge override, empty = the graph's
// effective signs. Throws OracleError when the degree-n word count exceeds
// word_cap.
long long dimension_by_rank(const WeightedGraph& g, const SignAssignment& signs, int n,
                            std::size_t word_cap = 1000000);

TruncatedSeries oracle_hilbert(const WeightedGraph& g, const SignAssignment& signs, int N,
                               std::size_t word_cap = 1000000);

}  // namespace cliquealg

#endif
