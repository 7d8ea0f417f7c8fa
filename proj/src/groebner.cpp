#include "cliquealg/groebner.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cliquealg {

RewriteRule make_rule(const NCPolynomial& f, const GradedAlphabet& alpha) {
    auto [lead, coeff] = initial_term(f, alpha);
    RewriteRule rule;
    rule.lhs = lead;
    NCPolynomial monic = f * (mpq_class(1) / coeff);
    monic.add_term(lead, -1);
    rule.rhs = monic * mpq_class(-1);
    return rule;
}

// Index of the leftmost occurrence of `pattern` in `w`, or -1.
static int find_subword(const Word& w, const Word& pattern) {
    if (pattern.size() > w.size()) return -1;
    auto it = std::search(w.begin(), w.end(), pattern.begin(), pattern.end());
    return it == w.end() ? -1 : static_cast<int>(it - w.begin());
}

NCPolynomial rewrite_once(const NCPolynomial& p, const RewriteRule& rule,
                          const GradedAlphabet& alpha) {
    (void)alpha;
    NCPolynomial result = p;
    for (;;) {
        const Word* hit = nullptr;
        int pos = -1;
        for (const auto& [w, c] : result.terms) {
            pos = find_subword(w, rule.lhs);
            if (pos >= 0) {
                hit = &w;
                break;
            }
        }
        if (!hit) return result;
        Word w = *hit;
        mpq_class c = result.terms.at(w);
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
        result.add_term(w, -c);
        result += pad(prefix, rule.rhs, suffix) * c;
    }
}

NCPolynomial reduce(const NCPolynomial& f, const std::vector<RewriteRule>& S,
                    const GradedAlphabet& alpha) {
    NCPolynomial result = f;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const RewriteRule& rule : S) {
            for (const auto& [w, c] : result.terms) {
                int pos = find_subword(w, rule.lhs);
                if (pos < 0) continue;
                Word word = w;
                mpq_class coeff = c;
                Word prefix(word.begin(), word.begin() + pos);
                Word suffix(word.begin() + pos + rule.lhs.size(), word.end());
                result.add_term(word, -coeff);
                result += pad(prefix, rule.rhs, suffix) * coeff;
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    (void)alpha;
    return result;
}

std::vector<Composition> compositions(const RewriteRule& f, const RewriteRule& g) {
    std::vector<Composition> out;
    int nf = static_cast<int>(f.lhs.size());
    int ng = static_cast<int>(g.lhs.size());
    // b is a proper nonempty suffix of lhs(f) and proper prefix of lhs(g).
    for (int len = 1; len < std::min(nf, ng); ++len) {
        if (!std::equal(f.lhs.end() - len, f.lhs.end(), g.lhs.begin())) continue;
        Composition comp;
        comp.a = Word(f.lhs.begin(), f.lhs.end() - len);
        comp.b = Word(f.lhs.end() - len, f.lhs.end());
        comp.c = Word(g.lhs.begin() + len, g.lhs.end());
        out.push_back(std::move(comp));
    }
    return out;
}

NCPolynomial composition_result(const RewriteRule& f, const RewriteRule& g,
                                const Composition& comp) {
    Word ab = comp.a;
    ab.insert(ab.end(), comp.b.begin(), comp.b.end());
    Word bc = comp.b;
    bc.insert(bc.end(), comp.c.begin(), comp.c.end());
    if (ab != f.lhs || bc != g.lhs)
        throw AlgebraError("composition does not belong to the given rule pair");
    NCPolynomial r = pad(comp.a, g.rhs, {});
    r -= pad({}, f.rhs, comp.c);
    return r;
}

std::vector<RewriteRule> self_reduce(std::vector<RewriteRule> rules,
                                     const GradedAlphabet& alpha) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rules.size(); ++i) {
            std::vector<RewriteRule> others;
            others.reserve(rules.size() - 1);
            for (size_t j = 0; j < rules.size(); ++j)
                if (j != i) others.push_back(rules[j]);
            NCPolynomial p = reduce(rules[i].polynomial(), others, alpha);
            if (p.is_zero()) {
                rules.erase(rules.begin() + i);
                changed = true;
                break;
            }
            RewriteRule updated = make_rule(p, alpha);
            if (!(updated == rules[i])) {
                rules[i] = std::move(updated);
                changed = true;
                break;
            }
        }
    }
    return rules;
}

std::vector<Word> TruncatedGB::leading_words() const {
    std::vector<Word> out;
    out.reserve(rules.size());
    for (const auto& r : rules) out.push_back(r.lhs);
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

TruncatedGB mora_truncated(const std::vector<NCPolynomial>& gens,
                           const GradedAlphabet& alpha, int D) {
    std::vector<RewriteRule> rules;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous_degree(alpha))
            throw AlgebraError("generators must be homogeneous");
        rules.push_back(make_rule(g, alpha));
    }
    rules = self_reduce(std::move(rules), alpha);

    for (;;) {
        struct Pending {
            int degree;
            size_t fi, gi, k;  // discovery order within the pass
            Composition comp;
        };
        std::vector<Pending> pending;
        for (size_t fi = 0; fi < rules.size(); ++fi)
            for (size_t gi = 0; gi < rules.size(); ++gi) {
                auto comps = compositions(rules[fi], rules[gi]);
                for (size_t k = 0; k < comps.size(); ++k) {
                    int deg = alpha.degree(comps[k].a) + alpha.degree(comps[k].b) +
                              alpha.degree(comps[k].c);
                    if (deg <= D) pending.push_back({deg, fi, gi, k, comps[k]});
                }
            }
        std::stable_sort(pending.begin(), pending.end(),
                         [](const Pending& x, const Pending& y) { return x.degree < y.degree; });
        bool grew = false;
        for (const Pending& p : pending) {
            NCPolynomial r = composition_result(rules[p.fi], rules[p.gi], p.comp);
            r = reduce(r, rules, alpha);
            if (r.is_zero()) continue;
            rules.push_back(make_rule(r, alpha));
            rules = self_reduce(std::move(rules), alpha);
            grew = true;
            break;  // re-enumerate compositions against the new rule set
        }
        if (!grew) break;
    }

    TruncatedGB gb;
    gb.rules = std::move(rules);
    gb.degree_bound = D;
    return gb;
}

TruncatedSeries hilbert_via_groebner(const WeightedGraph& g,
                                     const std::vector<int>& precedence, int N) {
    Presentation pres = presentation_of(g, precedence);
    TruncatedGB gb = mora_truncated(pres.relations, pres.alphabet, N);
    return count_normal_words(gb.leading_words(), pres.alphabet, N);
}

namespace {

struct GBSummary {
    std::vector<Word> leading;
    TruncatedSeries counts;
};

GBSummary summarize(const WeightedGraph& g, const SignAssignment& signs,
                    const std::vector<int>& precedence, int N) {
    Presentation pres = presentation_of(g, precedence, signs);
    TruncatedGB gb = mora_truncated(pres.relations, pres.alphabet, N);
    GBSummary s;
    // Only leading words relevant below the truncation are comparable.
    for (const Word& w : gb.leading_words())
        if (pres.alphabet.degree(w) <= N) s.leading.push_back(w);
    s.counts = count_normal_words(s.leading, pres.alphabet, N);
    return s;
}

std::string describe_signs(const SignAssignment& s) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "]";
    return out.str();
}

}  // namespace

SignIndependenceReport verify_sign_independence_explicit(
    const WeightedGraph& g, const std::vector<SignAssignment>& assignments, int N,
    const std::vector<int>& precedence) {
    SignIndependenceReport rep;
    if (assignments.empty()) return rep;
    GBSummary base = summarize(g, assignments.front(), precedence, N);
    rep.assignments_tested = 1;
    for (size_t i = 1; i < assignments.size(); ++i) {
        GBSummary other = summarize(g, assignments[i], precedence, N);
        ++rep.assignments_tested;
        if (other.leading != base.leading || !(other.counts == base.counts)) {
            rep.ok = false;
            rep.counterexample_signs = assignments[i];
            std::ostringstream out;
            out << "signs " << describe_signs(assignments[i]) << " vs "
                << describe_signs(assignments.front());
            if (other.leading != base.leading)
                out << ": leading-word sets differ";
            else
                out << ": normal-word counts differ (" << other.counts.to_string() << " vs "
                    << base.counts.to_string() << ")";
            rep.detail = out.str();
            return rep;
        }
    }
    return rep;
}

SignIndependenceReport verify_sign_independence(const WeightedGraph& g, int trials, int N,
                                                unsigned long seed,
                                                const std::vector<int>& precedence) {
    std::vector<SignAssignment> assignments;
    assignments.push_back(signs_zero(g));
    assignments.push_back(signs_default(g));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < trials; ++t) {
        SignAssignment s(g.edge_count());
        for (int& q : s) q = bit(rng);
        assignments.push_back(std::move(s));
    }
    return verify_sign_independence_explicit(g, assignments, N, precedence);
}

}  // namespace cliquealg
