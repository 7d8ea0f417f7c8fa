#include "cliquealg/corpus.hpp"

#include <fstream>
#include <sstream>

namespace cliquealg {

namespace {

using V = std::vector<std::pair<int, int>>;
using E = std::vector<std::tuple<int, int, std::optional<int>>>;

V unit_vertices(int n) {
    V v;
    for (int i = 1; i <= n; ++i) v.emplace_back(i, 1);
    return v;
}

WeightedGraph cycle(int n) {
    E e;
    for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1, std::nullopt);
    return WeightedGraph(unit_vertices(n), std::move(e));
}

WeightedGraph complete(int n) {
    E e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j, std::nullopt);
    return WeightedGraph(unit_vertices(n), std::move(e));
}

WeightedGraph path(int n) {
    E e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1, std::nullopt);
    return WeightedGraph(unit_vertices(n), std::move(e));
}

// Hub vertex 1 joined to a cycle on 2..n+1.
WeightedGraph wheel(int n) {
    E e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(2 + i, 2 + (i + 1) % n, std::nullopt);
        e.emplace_back(1, 2 + i, std::nullopt);
    }
    return WeightedGraph(unit_vertices(n + 1), std::move(e));
}

// Dodecahedron 1-skeleton from its LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
WeightedGraph dodecahedron() {
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    E e;
    for (int i = 0; i < 20; ++i) {
        int j = (i + 1) % 20;
        e.emplace_back(i + 1, j + 1, std::nullopt);
        int k = ((i + lcf[i % 10]) % 20 + 20) % 20;
        if (i < k) e.emplace_back(i + 1, k + 1, std::nullopt);
    }
    return WeightedGraph(unit_vertices(20), std::move(e));
}

// The five-vertex example a,b,c,d,e with commutations ab, ac, bc, cd;
// vertices 1..5 stand for a..e.
WeightedGraph section4_example() {
    return WeightedGraph(unit_vertices(5),
                         {{1, 2, std::nullopt},
                          {1, 3, std::nullopt},
                          {2, 3, std::nullopt},
                          {3, 4, std::nullopt}});
}

}  // namespace

std::vector<std::string> corpus_names() {
    return {"pentagon", "section4", "k2",     "k3",     "k4",     "k5",    "c3",
            "c4",       "c5",       "c6",     "c7",     "c8",     "p2",    "p3",
            "p4",       "p5",       "dodecahedron",     "wheel4", "wheel5", "k1p2",
            "mixed12",  "free3",    "empty"};
}

WeightedGraph corpus_graph(const std::string& name) {
    if (name == "pentagon" || name == "c5") return cycle(5);
    if (name == "section4") return section4_example();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "k1p2") return WeightedGraph({{1, 2}}, {});
    if (name == "mixed12")
        return WeightedGraph({{1, 1}, {2, 2}}, {{1, 2, std::nullopt}});
    if (name == "free3") return WeightedGraph(unit_vertices(3), {});
    if (name == "empty") return WeightedGraph({}, {});
    if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'c' || name[0] == 'p')) {
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (...) {
            n = 0;
        }
        if (n >= 1) {
            if (name[0] == 'k') return complete(n);
            if (name[0] == 'c' && n >= 3) return cycle(n);
            if (name[0] == 'p') return path(n);
        }
    }
    if (name.rfind("wheel", 0) == 0) {
        int n = std::stoi(name.substr(5));
        if (n >= 3) return wheel(n);
    }
    throw GraphError("unknown corpus graph: " + name);
}

WeightedGraph load_graph(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) return corpus_graph(spec.substr(7));
    std::ifstream in(spec);
    if (!in) throw GraphError("cannot open graph file: " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace cliquealg
