#ifndef CLIQUEALG_GROEBNER_HPP
#define CLIQUEALG_GROEBNER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cliquealg/freealg.hpp"
#include "cliquealg/series.hpp"

namespace cliquealg {

// Rewrite rule lhs -> rhs for the monic polynomial lhs - rhs; every word
// of rhs is DegLex-smaller than lhs.
struct RewriteRule {
    Word lhs;
    NCPolynomial rhs;

    NCPolynomial polynomial() const {
        NCPolynomial p = word_poly(lhs);
        p -= rhs;
        return p;
    }
    bool operator==(const RewriteRule&) const = default;
};

// Monic normalization of a nonzero polynomial into a rule.
RewriteRule make_rule(const NCPolynomial& f, const GradedAlphabet& alpha);

// Replace every occurrence of rule.lhs in every word of p (leftmost first,
// repeated until no occurrence remains under this one rule).
NCPolynomial rewrite_once(const NCPolynomial& p, const RewriteRule& rule,
                          const GradedAlphabet& alpha);

// Normal form of f under S: rules tried in list order, leftmost occurrence
// first, until no lhs occurs as a subword.
NCPolynomial reduce(const NCPolynomial& f, const std::vector<RewriteRule>& S,
                    const GradedAlphabet& alpha);

// Overlap a.b = lhs(f), b.c = lhs(g) with b nonempty and proper on both
// sides; the trivial b = 1 triple is excluded.
struct Composition {
    Word a, b, c;
};
std::vector<Composition> compositions(const RewriteRule& f, const RewriteRule& g);

// a*rhs(g) - rhs(f)*c.
NCPolynomial composition_result(const RewriteRule& f, const RewriteRule& g,
                                const Composition& comp);

// Reduce each rule by the others until a fixpoint; rules reducing to zero
// are dropped, surviving ones re-normalized to monic.
std::vector<RewriteRule> self_reduce(std::vector<RewriteRule> rules,
                                     const GradedAlphabet& alpha);

struct TruncatedGB {
    std::vector<RewriteRule> rules;
    int degree_bound = 0;  // compositions of total degree <= this reduce to zero

    std::vector<Word> leading_words() const;
};

// Degree-truncated completion: processes compositions in ascending overlap
// degree, appending reduced nonzero results and self-reducing, until every
// composition of degree <= D vanishes.
TruncatedGB mora_truncated(const std::vector<NCPolynomial>& gens,
                           const GradedAlphabet& alpha, int D);

// Number of words of each degree <= N avoiding every leading word as a
// contiguous subword, via a factor-avoidance automaton. `count_normal_words`
// may use OpenMP; the serial variant is the reference. Requires N <=
// the completeness bound of the supplying basis (checked by callers).
TruncatedSeries count_normal_words(const std::vector<Word>& leading_words,
                                   const GradedAlphabet& alpha, int N);
TruncatedSeries count_normal_words_serial(const std::vector<Word>& leading_words,
                                          const GradedAlphabet& alpha, int N);

// Checked variant: refuses N beyond the basis' completeness bound.
TruncatedSeries count_normal_words(const TruncatedGB& gb, const GradedAlphabet& alpha, int N);

TruncatedSeries hilbert_via_groebner(const WeightedGraph& g,
                                     const std::vector<int>& precedence, int N);

struct SignIndependenceReport {
    bool ok = true;
    int assignments_tested = 0;
    // First discrepancy, if any.
    std::optional<SignAssignment> counterexample_signs;
    std::string detail;
};

// Leading words and normal-word counts through degree N must coincide for
// the all-zero assignment, the default assignment, and `trials` random ones.
SignIndependenceReport verify_sign_independence(const WeightedGraph& g, int trials, int N,
                                                unsigned long seed = 0,
                                                const std::vector<int>& precedence = {});

// Same check over an explicit list of assignments (used by the exhaustive suites).
SignIndependenceReport verify_sign_independence_explicit(
    const WeightedGraph& g, const std::vector<SignAssignment>& assignments, int N,
    const std::vector<int>& precedence = {});

}  // namespace cliquealg

#endif
