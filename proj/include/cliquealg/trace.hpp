#ifndef CLIQUEALG_TRACE_HPP
#define CLIQUEALG_TRACE_HPP

#include <map>
#include <string>
#include <vector>

#include "cliquealg/freealg.hpp"
#include "cliquealg/series.hpp"

namespace cliquealg {

// Free partially commutative monoid on the vertices of g: letters are
// internal vertex indices, and two letters commute iff they share an edge.
// Edge signs are ignored here.

// Canonical (lexicographically least) representative of the trace class of
// w: greedily emit the least letter that commutes with everything before it.
Word trace_normal_form(const Word& w, const WeightedGraph& g);

int trace_weight(const Word& w, const WeightedGraph& g);

// All trace classes of weight <= N by normal form, ordered by weight then
// lexicographically.
std::vector<Word> enumerate_traces(const WeightedGraph& g, int N);

// Integer-valued function on trace normal forms of weight <= truncation.
struct MonoidSeries {
    int truncation = 0;
    std::map<Word, long long> terms;  // keys are normal forms, no zeros

    void add_term(const Word& normal_form, long long c);
    bool operator==(const MonoidSeries&) const = default;
    std::string to_string(const WeightedGraph& g, const GradedAlphabet& alpha) const;
};

MonoidSeries monoid_one(int truncation);
// Characteristic series of the whole monoid, materialized to the truncation.
MonoidSeries monoid_identity_series(const WeightedGraph& g, int truncation);

// Cauchy product over trace factorizations, discarding weight > truncation.
MonoidSeries monoid_mul(const MonoidSeries& f, const MonoidSeries& h, const WeightedGraph& g);

// Signed sum over all cliques: one entry per clique at the trace class of
// the product of its letters.
MonoidSeries clique_series(const WeightedGraph& g, int truncation);

struct CartierFoataResult {
    bool ok = true;
    MonoidSeries residual_left;   // clique_series * chi_M
    MonoidSeries residual_right;  // chi_M * clique_series
};
CartierFoataResult verify_cartier_foata(const WeightedGraph& g, int N);

// Pushforward by weight: z-series with coefficient k the sum of values on
// weight-k traces.
TruncatedSeries weight_map(const MonoidSeries& f, const WeightedGraph& g);

// Hilbert series via trace enumeration (the q = 0 model).
TruncatedSeries hilbert_via_traces(const WeightedGraph& g, int N);

}  // namespace cliquealg

#endif
