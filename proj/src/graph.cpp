#include "cliquealg/graph.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace cliquealg {

WeightedGraph::WeightedGraph(std::vector<std::pair<int, int>> vertices,
                             std::vector<std::tuple<int, int, std::optional<int>>> edges) {
    std::sort(vertices.begin(), vertices.end());
    for (auto& [id, w] : vertices) {
        if (id <= 0)
            throw GraphError("vertex id must be positive: " + std::to_string(id));
        if (w < 1)
            throw GraphError("vertex " + std::to_string(id) +
                             ": weight must be >= 1, got " + std::to_string(w));
        if (id_to_index_.count(id))
            throw GraphError("duplicate vertex id: " + std::to_string(id));
        id_to_index_[id] = static_cast<int>(ids_.size());
        ids_.push_back(id);
        weights_.push_back(w);
    }
    int n = size();
    adj_.assign(n, std::vector<bool>(n, false));
    for (auto& [ia, ib, sign] : edges) {
        if (ia == ib)
            throw GraphError("loop edge at vertex " + std::to_string(ia));
        auto pa = id_to_index_.find(ia);
        auto pb = id_to_index_.find(ib);
        if (pa == id_to_index_.end())
            throw GraphError("edge endpoint is not a declared vertex: " + std::to_string(ia));
        if (pb == id_to_index_.end())
            throw GraphError("edge endpoint is not a declared vertex: " + std::to_string(ib));
        if (sign && *sign != 0 && *sign != 1)
            throw GraphError("edge {" + std::to_string(ia) + "," + std::to_string(ib) +
                             "}: sign must be 0 or 1");
        Edge e;
        e.a = std::min(pa->second, pb->second);
        e.b = std::max(pa->second, pb->second);
        e.sign = sign;
        if (adj_[e.a][e.b])
            throw GraphError("duplicate edge {" + std::to_string(ia) + "," +
                             std::to_string(ib) + "}");
        adj_[e.a][e.b] = adj_[e.b][e.a] = true;
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

int WeightedGraph::index_of(int id) const {
    auto it = id_to_index_.find(id);
    if (it == id_to_index_.end())
        throw GraphError("unknown vertex id: " + std::to_string(id));
    return it->second;
}

int WeightedGraph::effective_sign(const Edge& e) const {
    if (e.sign) return *e.sign;
    return (weights_[e.a] * weights_[e.b]) % 2;
}

WeightedGraph parse_graph(const std::string& source) {
    // JSON documents start with '{'; everything else is the text format.
    for (char c : source) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(source);
        break;
    }
    return parse_graph_text(source);
}

WeightedGraph parse_graph_json(const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<std::pair<int, int>> vertices;
    std::vector<std::tuple<int, int, std::optional<int>>> edges;
    try {
        for (const auto& v : doc.value("vertices", nlohmann::json::array()))
            vertices.emplace_back(v.at("id").get<int>(), v.value("weight", 1));
        for (const auto& e : doc.value("edges", nlohmann::json::array())) {
            std::optional<int> sign;
            if (e.contains("sign")) sign = e.at("sign").get<int>();
            edges.emplace_back(e.at("a").get<int>(), e.at("b").get<int>(), sign);
        }
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("malformed graph document: ") + e.what());
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

WeightedGraph parse_graph_text(const std::string& source) {
    std::vector<std::pair<int, int>> vertices;
    std::vector<std::tuple<int, int, std::optional<int>>> edges;
    std::istringstream in(source);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        auto fail = [&](const std::string& msg) {
            throw GraphError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (kind == "v") {
            int id, w;
            if (!(ls >> id >> w)) fail("expected `v <id> <weight>`");
            vertices.emplace_back(id, w);
        } else if (kind == "e") {
            int a, b;
            if (!(ls >> a >> b)) fail("expected `e <a> <b> [sign]`");
            std::optional<int> sign;
            int s;
            if (ls >> s) sign = s;
            edges.emplace_back(a, b, sign);
        } else {
            fail("unknown record `" + kind + "`");
        }
    }
    return WeightedGraph(std::move(vertices), std::move(edges));
}

namespace {

// Extend the clique `base` (internal indices, ascending) by candidates,
// all adjacent to every member of base and larger than its last element.
void extend_clique(const WeightedGraph& g, std::vector<int>& base,
                   const std::vector<int>& cand, std::vector<std::vector<int>>& out) {
    for (size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        base.push_back(v);
        out.push_back(base);
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
        if (!next.empty()) extend_clique(g, base, next, out);
        base.pop_back();
    }
}

std::vector<Clique> finish(const WeightedGraph& g, std::vector<std::vector<int>> sets) {
    std::vector<Clique> result;
    result.reserve(sets.size() + 1);
    result.push_back(Clique{});  // empty clique
    for (auto& s : sets) {
        Clique c;
        c.size = static_cast<int>(s.size());
        for (int v : s) {
            c.vertex_ids.push_back(g.id(v));
            c.weight += g.weight(v);
        }
        result.push_back(std::move(c));
    }
    std::sort(result.begin(), result.end(), [](const Clique& x, const Clique& y) {
        if (x.size != y.size) return x.size < y.size;
        return x.vertex_ids < y.vertex_ids;
    });
    return result;
}

}  // namespace

std::vector<Clique> cliques_serial(const WeightedGraph& g) {
    std::vector<std::vector<int>> sets;
    std::vector<int> base;
    std::vector<int> all(g.size());
    for (int v = 0; v < g.size(); ++v) all[v] = v;
    extend_clique(g, base, all, sets);
    return finish(g, std::move(sets));
}

std::vector<Clique> cliques(const WeightedGraph& g) {
    int n = g.size();
    std::vector<std::vector<std::vector<int>>> per_root(n);
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < n; ++v) {
        std::vector<int> base{v};
        per_root[v].push_back(base);
        std::vector<int> cand;
        for (int u = v + 1; u < n; ++u)
            if (g.adjacent(v, u)) cand.push_back(u);
        if (!cand.empty()) extend_clique(g, base, cand, per_root[v]);
    }
    std::vector<std::vector<int>> sets;
    for (int v = 0; v < n; ++v)
        sets.insert(sets.end(), per_root[v].begin(), per_root[v].end());
    return finish(g, std::move(sets));
}

CliquePolynomial clique_polynomial(const WeightedGraph& g) {
    CliquePolynomial p;
    for (const Clique& c : cliques(g)) {
        long long sign = (c.size % 2 == 0) ? 1 : -1;
        auto it = p.coefficients.find(c.weight);
        if (it == p.coefficients.end()) {
            p.coefficients[c.weight] = sign;
        } else {
            it->second += sign;
            if (it->second == 0) p.coefficients.erase(it);
        }
    }
    return p;
}

std::string CliquePolynomial::to_string() const {
    if (coefficients.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto [j, c] : coefficients) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long a = std::llabs(c);
        if (a != 1 || j == 0) out << a;
        if (j >= 1) out << "z";
        if (j >= 2) out << "^" << j;
    }
    return out.str();
}

TriangleCheck is_triangle_free(const WeightedGraph& g) {
    TriangleCheck r;
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) {
                    r.triangle_free = false;
                    r.witness = std::vector<int>{g.id(a), g.id(b), g.id(c)};
                    return r;
                }
        }
    return r;
}

InertnessReport inertness_report(const WeightedGraph& g) {
    InertnessReport rep;
    auto tri = is_triangle_free(g);
    rep.triangle_free = tri.triangle_free;
    rep.witness_triangle = tri.witness;
    rep.clique_poly = clique_polynomial(g);

    CliquePolynomial& two = rep.two_term_polynomial;
    two.coefficients[0] = 1;
    auto bump = [&two](int j, long long d) {
        two.coefficients[j] += d;
        if (two.coefficients[j] == 0) two.coefficients.erase(j);
    };
    for (int v = 0; v < g.size(); ++v) bump(g.weight(v), -1);
    for (const auto& e : g.edges()) bump(g.weight(e.a) + g.weight(e.b), +1);

    rep.matches = (rep.clique_poly == rep.two_term_polynomial);
    return rep;
}

}  // namespace cliquealg
