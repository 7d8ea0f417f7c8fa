#ifndef CLIQUEALG_FREEALG_HPP
#define CLIQUEALG_FREEALG_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquealg/graph.hpp"

namespace cliquealg {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word is a sequence of variable indices into a GradedAlphabet.
using Word = std::vector<int>;

// Graded variables with a total precedence used by DegLex.
struct GradedAlphabet {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<int> rank;  // rank[i] = 0 for the highest-precedence variable

    int size() const { return static_cast<int>(names.size()); }
    int degree(const Word& w) const {
        int d = 0;
        for (int v : w) d += degrees[v];
        return d;
    }
    std::string word_string(const Word& w) const;  // "x1*x4^2*x5", "1" for empty
};

// -1 / 0 / +1 for u < v / u == v / u > v in DegLex: degree first, then
// position by position with higher-precedence variables comparing larger.
// At equal degree a proper prefix compares smaller.
int deglex_compare(const Word& u, const Word& v, const GradedAlphabet& alpha);

// Finite rational combination of words. Keys are kept in plain
// lexicographic-by-index order; DegLex enters only through initial_term.
struct NCPolynomial {
    std::map<Word, mpq_class> terms;  // no explicit zeros

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const mpq_class& c);
    NCPolynomial& operator+=(const NCPolynomial& other);
    NCPolynomial& operator-=(const NCPolynomial& other);
    NCPolynomial operator*(const mpq_class& c) const;
    bool operator==(const NCPolynomial&) const = default;

    // Homogeneous degree, if every word has the same one.
    std::optional<int> homogeneous_degree(const GradedAlphabet& alpha) const;
    std::string to_string(const GradedAlphabet& alpha) const;
};

NCPolynomial word_poly(const Word& w, const mpq_class& c = 1);
// u * p * v (concatenation on both sides).
NCPolynomial pad(const Word& u, const NCPolynomial& p, const Word& v);

// The DegLex-largest word of f and its coefficient; throws on zero.
std::pair<Word, mpq_class> initial_term(const NCPolynomial& f, const GradedAlphabet& alpha);

// x_a x_b - (-1)^q x_b x_a.
NCPolynomial graded_commutator(int a, int b, int q);

// Edge-sign assignment, indexed like WeightedGraph::edges().
using SignAssignment = std::vector<int>;
SignAssignment signs_default(const WeightedGraph& g);
SignAssignment signs_zero(const WeightedGraph& g);

struct Presentation {
    GradedAlphabet alphabet;                 // one variable per vertex
    std::vector<NCPolynomial> relations;     // one commutator per edge
    struct YGen {
        std::string name;
        int degree;   // p_a + p_b + 1
        int a, b;     // variable indices of the differential commutator
    };
    std::vector<YGen> y_generators;          // for the DGA / Adams-Hilton display
};

// precedence: vertex ids in descending precedence order (empty = default,
// which is descending by vertex id). signs: per-edge override, empty = the
// graph's effective signs.
Presentation presentation_of(const WeightedGraph& g,
                             const std::vector<int>& precedence = {},
                             const SignAssignment& signs = {});

}  // namespace cliquealg

#endif
