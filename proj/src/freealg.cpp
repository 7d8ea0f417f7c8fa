#include "cliquealg/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace cliquealg {

std::string GradedAlphabet::word_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream out;
    size_t i = 0;
    while (i < w.size()) {
        size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        if (i > 0) out << "*";
        out << names[w[i]];
        if (run > 1) out << "^" << run;
        i += run;
    }
    return out.str();
}

int deglex_compare(const Word& u, const Word& v, const GradedAlphabet& alpha) {
    int du = alpha.degree(u), dv = alpha.degree(v);
    if (du != dv) return du < dv ? -1 : 1;
    size_t n = std::min(u.size(), v.size());
    for (size_t i = 0; i < n; ++i) {
        if (u[i] == v[i]) continue;
        // smaller rank = higher precedence = larger word
        return alpha.rank[u[i]] < alpha.rank[v[i]] ? 1 : -1;
    }
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;  // prefix compares smaller
}

void NCPolynomial::add_term(const Word& w, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
    for (const auto& [w, c] : other.terms) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
    for (const auto& [w, c] : other.terms) add_term(w, -c);
    return *this;
}

NCPolynomial NCPolynomial::operator*(const mpq_class& c) const {
    NCPolynomial r;
    if (c == 0) return r;
    for (const auto& [w, a] : terms) r.terms.emplace(w, a * c);
    return r;
}

std::optional<int> NCPolynomial::homogeneous_degree(const GradedAlphabet& alpha) const {
    std::optional<int> deg;
    for (const auto& [w, c] : terms) {
        int d = alpha.degree(w);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::string NCPolynomial::to_string(const GradedAlphabet& alpha) const {
    if (terms.empty()) return "0";
    // Display words in descending DegLex order.
    std::vector<const std::pair<const Word, mpq_class>*> items;
    for (const auto& t : terms) items.push_back(&t);
    std::sort(items.begin(), items.end(), [&](auto* x, auto* y) {
        return deglex_compare(x->first, y->first, alpha) > 0;
    });
    std::ostringstream out;
    bool first = true;
    for (auto* t : items) {
        mpq_class c = t->second;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        mpq_class a = abs(c);
        if (a != 1 || t->first.empty()) {
            out << a.get_str();
            if (!t->first.empty()) out << "*";
        }
        if (!t->first.empty()) out << alpha.word_string(t->first);
    }
    return out.str();
}

NCPolynomial word_poly(const Word& w, const mpq_class& c) {
    NCPolynomial p;
    p.add_term(w, c);
    return p;
}

NCPolynomial pad(const Word& u, const NCPolynomial& p, const Word& v) {
    NCPolynomial r;
    for (const auto& [w, c] : p.terms) {
        Word padded;
        padded.reserve(u.size() + w.size() + v.size());
        padded.insert(padded.end(), u.begin(), u.end());
        padded.insert(padded.end(), w.begin(), w.end());
        padded.insert(padded.end(), v.begin(), v.end());
        r.add_term(padded, c);
    }
    return r;
}

std::pair<Word, mpq_class> initial_term(const NCPolynomial& f, const GradedAlphabet& alpha) {
    if (f.is_zero()) throw AlgebraError("initial term of the zero polynomial");
    const std::pair<const Word, mpq_class>* best = nullptr;
    for (const auto& t : f.terms)
        if (!best || deglex_compare(t.first, best->first, alpha) > 0) best = &t;
    return {best->first, best->second};
}

NCPolynomial graded_commutator(int a, int b, int q) {
    if (a == b) throw AlgebraError("graded commutator requires distinct variables");
    NCPolynomial p;
    p.add_term(Word{a, b}, 1);
    p.add_term(Word{b, a}, q == 0 ? mpq_class(-1) : mpq_class(1));
    return p;
}

SignAssignment signs_default(const WeightedGraph& g) {
    SignAssignment s;
    for (const auto& e : g.edges()) s.push_back(g.effective_sign(e));
    return s;
}

SignAssignment signs_zero(const WeightedGraph& g) {
    return SignAssignment(g.edge_count(), 0);
}

Presentation presentation_of(const WeightedGraph& g, const std::vector<int>& precedence,
                             const SignAssignment& signs) {
    Presentation pres;
    int n = g.size();
    for (int v = 0; v < n; ++v) {
        pres.alphabet.names.push_back("x" + std::to_string(g.id(v)));
        pres.alphabet.degrees.push_back(g.weight(v));
    }
    pres.alphabet.rank.assign(n, 0);
    if (precedence.empty()) {
        // default: descending by vertex id
        for (int v = 0; v < n; ++v) pres.alphabet.rank[v] = n - 1 - v;
    } else {
        if (static_cast<int>(precedence.size()) != n)
            throw AlgebraError("precedence list must mention every vertex exactly once");
        std::vector<bool> seen(n, false);
        for (int r = 0; r < n; ++r) {
            int v = g.index_of(precedence[r]);
            if (seen[v])
                throw AlgebraError("precedence list repeats vertex " +
                                   std::to_string(precedence[r]));
            seen[v] = true;
            pres.alphabet.rank[v] = r;
        }
    }
    SignAssignment effective = signs.empty() ? signs_default(g) : signs;
    if (static_cast<int>(effective.size()) != g.edge_count())
        throw AlgebraError("sign assignment size does not match edge count");
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edges()[j];
        pres.relations.push_back(graded_commutator(e.a, e.b, effective[j]));
        Presentation::YGen y;
        y.name = "y" + std::to_string(j + 1);
        y.degree = g.weight(e.a) + g.weight(e.b) + 1;
        y.a = e.a;
        y.b = e.b;
        pres.y_generators.push_back(y);
    }
    return pres;
}

}  // namespace cliquealg
