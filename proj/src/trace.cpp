#include "cliquealg/trace.hpp"

#include <algorithm>
#include <sstream>

namespace cliquealg {

Word trace_normal_form(const Word& w, const WeightedGraph& g) {
    for (int v : w)
        if (v < 0 || v >= g.size()) throw GraphError("unknown letter in trace word");
    Word remaining = w;
    Word out;
    out.reserve(w.size());
    while (!remaining.empty()) {
        // Letters movable to the front: they commute with everything before
        // them in the remaining word. Pick the least such letter.
        int best_pos = -1;
        for (size_t i = 0; i < remaining.size(); ++i) {
            bool movable = true;
            for (size_t j = 0; j < i && movable; ++j)
                movable = g.adjacent(remaining[j], remaining[i]);
            if (movable && (best_pos < 0 || remaining[i] < remaining[best_pos]))
                best_pos = static_cast<int>(i);
        }
        out.push_back(remaining[best_pos]);
        remaining.erase(remaining.begin() + best_pos);
    }
    return out;
}

int trace_weight(const Word& w, const WeightedGraph& g) {
    int total = 0;
    for (int v : w) total += g.weight(v);
    return total;
}

std::vector<Word> enumerate_traces(const WeightedGraph& g, int N) {
    std::vector<Word> out;
    // Normal forms are closed under taking prefixes, so extend letter by
    // letter and keep the words that are their own normal form.
    std::vector<Word> frontier{Word{}};
    out.push_back(Word{});
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            int wt = trace_weight(w, g);
            for (int v = 0; v < g.size(); ++v) {
                if (wt + g.weight(v) > N) continue;
                Word cand = w;
                cand.push_back(v);
                if (trace_normal_form(cand, g) == cand) {
                    out.push_back(cand);
                    next.push_back(std::move(cand));
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
        int wx = trace_weight(x, g), wy = trace_weight(y, g);
        if (wx != wy) return wx < wy;
        return x < y;
    });
    return out;
}

void MonoidSeries::add_term(const Word& normal_form, long long c) {
    if (c == 0) return;
    auto it = terms.find(normal_form);
    if (it == terms.end()) {
        terms.emplace(normal_form, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string MonoidSeries::to_string(const WeightedGraph& g, const GradedAlphabet& alpha) const {
    (void)g;
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long a = std::llabs(c);
        if (a != 1 || w.empty()) out << a;
        if (!w.empty()) {
            if (a != 1) out << "*";
            out << alpha.word_string(w);
        }
    }
    return out.str();
}

MonoidSeries monoid_one(int truncation) {
    MonoidSeries s;
    s.truncation = truncation;
    s.terms.emplace(Word{}, 1);
    return s;
}

MonoidSeries monoid_identity_series(const WeightedGraph& g, int truncation) {
    MonoidSeries s;
    s.truncation = truncation;
    for (const Word& w : enumerate_traces(g, truncation)) s.terms.emplace(w, 1);
    return s;
}

MonoidSeries monoid_mul(const MonoidSeries& f, const MonoidSeries& h, const WeightedGraph& g) {
    if (f.truncation != h.truncation)
        throw SeriesError("mismatched monoid series truncations");
    MonoidSeries r;
    r.truncation = f.truncation;
    for (const auto& [u, cu] : f.terms) {
        int wu = trace_weight(u, g);
        if (wu > r.truncation) continue;
        for (const auto& [v, cv] : h.terms) {
            if (wu + trace_weight(v, g) > r.truncation) continue;
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            r.add_term(trace_normal_form(uv, g), cu * cv);
        }
    }
    return r;
}

MonoidSeries clique_series(const WeightedGraph& g, int truncation) {
    MonoidSeries s;
    s.truncation = truncation;
    for (const Clique& c : cliques(g)) {
        if (c.weight > truncation) continue;
        Word w;
        for (int id : c.vertex_ids) w.push_back(g.index_of(id));
        std::sort(w.begin(), w.end());  // pairwise-commuting letters: sorted = normal
        s.add_term(w, c.size % 2 == 0 ? 1 : -1);
    }
    return s;
}

CartierFoataResult verify_cartier_foata(const WeightedGraph& g, int N) {
    CartierFoataResult res;
    MonoidSeries mu = clique_series(g, N);
    MonoidSeries chi = monoid_identity_series(g, N);
    MonoidSeries one = monoid_one(N);
    res.residual_left = monoid_mul(mu, chi, g);
    res.residual_right = monoid_mul(chi, mu, g);
    res.ok = (res.residual_left == one) && (res.residual_right == one);
    return res;
}

TruncatedSeries weight_map(const MonoidSeries& f, const WeightedGraph& g) {
    TruncatedSeries s(f.truncation);
    for (const auto& [w, c] : f.terms) {
        int wt = trace_weight(w, g);
        if (wt <= f.truncation) s.coefficients[wt] += static_cast<long>(c);
    }
    return s;
}

TruncatedSeries hilbert_via_traces(const WeightedGraph& g, int N) {
    return weight_map(monoid_identity_series(g, N), g);
}

}  // namespace cliquealg
