#include <algorithm>
#include <queue>

#include "cliquealg/groebner.hpp"

namespace cliquealg {

namespace {

// Factor-avoidance automaton over the leading-word set. States are the
// proper prefixes of leading words (plus the root); a state is dead once
// some suffix of the read word equals a leading word.
struct Automaton {
    int nvars = 0;
    std::vector<std::vector<int>> delta;  // state x variable -> state
    std::vector<bool> dead;
};

Automaton build_automaton(const std::vector<Word>& leading_words, int nvars) {
    Automaton ac;
    ac.nvars = nvars;
    std::vector<std::vector<int>> child(1, std::vector<int>(nvars, -1));
    std::vector<bool> terminal(1, false);
    for (const Word& w : leading_words) {
        if (w.empty()) throw AlgebraError("empty leading word");
        int s = 0;
        for (int v : w) {
            if (child[s][v] < 0) {
                child[s][v] = static_cast<int>(child.size());
                child.emplace_back(nvars, -1);
                terminal.push_back(false);
            }
            s = child[s][v];
        }
        terminal[s] = true;
    }
    int states = static_cast<int>(child.size());
    std::vector<int> fail(states, 0);
    ac.delta.assign(states, std::vector<int>(nvars, 0));
    ac.dead = terminal;
    std::queue<int> bfs;
    for (int v = 0; v < nvars; ++v) {
        int c = child[0][v];
        if (c >= 0) {
            fail[c] = 0;
            ac.delta[0][v] = c;
            bfs.push(c);
        }
    }
    while (!bfs.empty()) {
        int s = bfs.front();
        bfs.pop();
        if (ac.dead[fail[s]]) ac.dead[s] = true;
        for (int v = 0; v < nvars; ++v) {
            int c = child[s][v];
            if (c >= 0) {
                fail[c] = ac.delta[fail[s]][v];
                ac.delta[s][v] = c;
                bfs.push(c);
            } else {
                ac.delta[s][v] = ac.delta[fail[s]][v];
            }
        }
    }
    return ac;
}

}  // namespace

TruncatedSeries count_normal_words_serial(const std::vector<Word>& leading_words,
                                          const GradedAlphabet& alpha, int N) {
    Automaton ac = build_automaton(leading_words, alpha.size());
    int states = static_cast<int>(ac.delta.size());
    // dp[k][s]: words of degree k avoiding every leading word, ending in state s.
    std::vector<std::vector<mpz_class>> dp(N + 1, std::vector<mpz_class>(states, 0));
    if (!ac.dead[0]) dp[0][0] = 1;
    for (int k = 0; k <= N; ++k)
        for (int s = 0; s < states; ++s) {
            if (dp[k][s] == 0) continue;
            for (int v = 0; v < alpha.size(); ++v) {
                int t = ac.delta[s][v];
                if (ac.dead[t]) continue;
                int kk = k + alpha.degrees[v];
                if (kk <= N) dp[kk][t] += dp[k][s];
            }
        }
    TruncatedSeries out(N);
    for (int k = 0; k <= N; ++k)
        for (int s = 0; s < states; ++s) out.coefficients[k] += dp[k][s];
    return out;
}

TruncatedSeries count_normal_words(const TruncatedGB& gb, const GradedAlphabet& alpha, int N) {
    if (N > gb.degree_bound)
        throw AlgebraError("basis is complete only through degree " +
                           std::to_string(gb.degree_bound) + "; cannot count to " +
                           std::to_string(N));
    return count_normal_words(gb.leading_words(), alpha, N);
}

TruncatedSeries count_normal_words(const std::vector<Word>& leading_words,
                                   const GradedAlphabet& alpha, int N) {
    Automaton ac = build_automaton(leading_words, alpha.size());
    int states = static_cast<int>(ac.delta.size());
    // Inverse transitions between live states, so each destination row is
    // owned by exactly one loop iteration.
    std::vector<std::vector<std::pair<int, int>>> into(states);  // t -> (s, v)
    for (int s = 0; s < states; ++s) {
        if (ac.dead[s]) continue;
        for (int v = 0; v < alpha.size(); ++v) {
            int t = ac.delta[s][v];
            if (!ac.dead[t]) into[t].emplace_back(s, v);
        }
    }
    std::vector<std::vector<mpz_class>> dp(N + 1, std::vector<mpz_class>(states, 0));
    if (!ac.dead[0]) dp[0][0] = 1;
    for (int k = 1; k <= N; ++k) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < states; ++t) {
            for (auto [s, v] : into[t]) {
                int prev = k - alpha.degrees[v];
                if (prev >= 0) dp[k][t] += dp[prev][s];
            }
        }
    }
    TruncatedSeries out(N);
    for (int k = 0; k <= N; ++k)
        for (int s = 0; s < states; ++s) out.coefficients[k] += dp[k][s];
    return out;
}

}  // namespace cliquealg
