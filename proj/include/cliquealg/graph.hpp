#ifndef CLIQUEALG_GRAPH_HPP
#define CLIQUEALG_GRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquealg {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple graph with positive integer vertex weights and optional
// Z/2 edge signs. Vertices keep their user-supplied ids; internally
// they are re-indexed densely in ascending id order.
class WeightedGraph {
public:
    struct Edge {
        int a = 0, b = 0;            // internal indices, a < b
        std::optional<int> sign;     // explicit Z/2 sign, if any
    };

    WeightedGraph() = default;
    // vertices: (id, weight) pairs; edges: (id_a, id_b, optional sign).
    WeightedGraph(std::vector<std::pair<int, int>> vertices,
                  std::vector<std::tuple<int, int, std::optional<int>>> edges);

    int size() const { return static_cast<int>(weights_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int weight(int v) const { return weights_[v]; }
    int id(int v) const { return ids_[v]; }
    int index_of(int id) const;
    bool adjacent(int u, int v) const { return adj_[u][v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Explicit sign if present, otherwise p_a * p_b mod 2.
    int effective_sign(const Edge& e) const;
    int effective_sign(int edge_index) const { return effective_sign(edges_[edge_index]); }

private:
    std::vector<int> ids_;       // ascending user ids
    std::vector<int> weights_;   // by internal index
    std::vector<Edge> edges_;    // sorted by (a, b)
    std::vector<std::vector<bool>> adj_;
    std::map<int, int> id_to_index_;
};

// Parse either the JSON graph document or the plain-text edge list
// (lines `v <id> <weight>` / `e <a> <b> [sign]`, `#` comments).
WeightedGraph parse_graph(const std::string& source);
WeightedGraph parse_graph_json(const std::string& source);
WeightedGraph parse_graph_text(const std::string& source);

struct Clique {
    std::vector<int> vertex_ids;  // sorted user ids
    int size = 0;
    int weight = 0;

    bool operator==(const Clique&) const = default;
};

// All complete subgraphs, including the empty clique and singletons,
// ordered by size then sorted vertex ids. `cliques` may use OpenMP;
// `cliques_serial` is the reference implementation.
std::vector<Clique> cliques(const WeightedGraph& g);
std::vector<Clique> cliques_serial(const WeightedGraph& g);

// Signed clique counts: coefficient at weight j is sum_i (-1)^i c_{i,j}.
struct CliquePolynomial {
    std::map<int, long long> coefficients;  // weight -> signed count, no zeros

    long long at(int j) const {
        auto it = coefficients.find(j);
        return it == coefficients.end() ? 0 : it->second;
    }
    int degree() const {
        return coefficients.empty() ? 0 : coefficients.rbegin()->first;
    }
    bool operator==(const CliquePolynomial&) const = default;
    std::string to_string() const;  // e.g. "1 - 5z + 5z^2"
};

CliquePolynomial clique_polynomial(const WeightedGraph& g);

// True iff g has no 3-clique; otherwise witness holds the
// lexicographically least triangle (sorted user ids).
struct TriangleCheck {
    bool triangle_free = true;
    std::optional<std::vector<int>> witness;
};
TriangleCheck is_triangle_free(const WeightedGraph& g);

struct InertnessReport {
    bool triangle_free = false;
    CliquePolynomial clique_poly;
    CliquePolynomial two_term_polynomial;  // 1 - sum z^{p_i} + sum z^{p_a + p_b}
    bool matches = false;
    std::optional<std::vector<int>> witness_triangle;
};
InertnessReport inertness_report(const WeightedGraph& g);

}  // namespace cliquealg

#endif
