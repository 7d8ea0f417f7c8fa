#include "cliquealg/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace cliquealg {

namespace {

std::vector<Word> words_of_degree(const WeightedGraph& g, int n, std::size_t cap) {
    // Count first so the cap fires before any allocation blowup.
    std::vector<unsigned long long> count(n + 1, 0);
    count[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int v = 0; v < g.size(); ++v)
            if (k >= g.weight(v)) count[k] += count[k - g.weight(v)];
    if (count[n] > cap)
        throw OracleError("degree " + std::to_string(n) + " has " + std::to_string(count[n]) +
                          " words, exceeding the cap of " + std::to_string(cap));
    std::vector<Word> out;
    out.reserve(count[n]);
    Word w;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(w);
            return;
        }
        for (int v = 0; v < g.size(); ++v) {
            if (g.weight(v) > remaining) continue;
            w.push_back(v);
            self(self, remaining - g.weight(v));
            w.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

using SparseRow = std::vector<std::pair<int, mpq_class>>;  // (column, coeff), sorted

SparseRow subtract_multiple(const SparseRow& row, const mpq_class& factor,
                            const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -factor * pivot[j].second);
            ++j;
        } else {
            mpq_class c = row[i].second - factor * pivot[j].second;
            if (c != 0) out.emplace_back(row[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t rank_of(std::vector<SparseRow> rows) {
    std::map<int, SparseRow> pivots;  // leading column -> reduced row
    std::size_t rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            mpq_class factor = row.front().second / it->second.front().second;
            row = subtract_multiple(row, factor, it->second);
        }
        if (row.empty()) continue;
        ++rank;
        pivots.emplace(row.front().first, std::move(row));
    }
    return rank;
}

}  // namespace

long long dimension_by_rank(const WeightedGraph& g, const SignAssignment& signs, int n,
                            std::size_t word_cap) {
    if (n == 0) return 1;
    SignAssignment effective = signs.empty() ? signs_default(g) : signs;
    if (static_cast<int>(effective.size()) != g.edge_count())
        throw OracleError("sign assignment size does not match edge count");

    std::vector<std::vector<Word>> by_degree(n + 1);
    for (int k = 0; k <= n; ++k) by_degree[k] = words_of_degree(g, k, word_cap);
    const std::vector<Word>& words = by_degree[n];
    std::map<Word, int> column;
    for (size_t i = 0; i < words.size(); ++i) column.emplace(words[i], static_cast<int>(i));

    // One row per padded relation u * [x_a, x_b] * v of total degree n.
    std::vector<SparseRow> rows;
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edges()[j];
        int rel_degree = g.weight(e.a) + g.weight(e.b);
        if (rel_degree > n) continue;
        // coefficient of x_b x_a in x_a x_b - (-1)^q x_b x_a
        mpq_class swapped = (effective[j] == 0) ? mpq_class(-1) : mpq_class(1);
        for (int du = 0; du + rel_degree <= n; ++du) {
            int dv = n - rel_degree - du;
            for (const Word& u : by_degree[du])
                for (const Word& v : by_degree[dv]) {
                    Word w1 = u;
                    w1.push_back(e.a);
                    w1.push_back(e.b);
                    w1.insert(w1.end(), v.begin(), v.end());
                    Word w2 = u;
                    w2.push_back(e.b);
                    w2.push_back(e.a);
                    w2.insert(w2.end(), v.begin(), v.end());
                    int c1 = column.at(w1), c2 = column.at(w2);
                    SparseRow row;
                    if (c1 < c2) {
                        row = {{c1, 1}, {c2, swapped}};
                    } else {
                        row = {{c2, swapped}, {c1, 1}};
                    }
                    rows.push_back(std::move(row));
                }
        }
    }
    // Identical padded relations occur often; drop duplicates (up to sign).
    for (auto& row : rows)
        if (!row.empty() && row.front().second < 0)
            for (auto& [c, q] : row) q = -q;
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    return static_cast<long long>(words.size()) - static_cast<long long>(rank_of(std::move(rows)));
}

TruncatedSeries oracle_hilbert(const WeightedGraph& g, const SignAssignment& signs, int N,
                               std::size_t word_cap) {
    TruncatedSeries s(N);
    for (int n = 0; n <= N; ++n) {
        try {
            s.coefficients[n] = static_cast<long>(dimension_by_rank(g, signs, n, word_cap));
        } catch (const OracleError& e) {
            TruncatedSeries partial(n - 1);
            for (int k = 0; k < n; ++k) partial.coefficients[k] = s.coefficients[k];
            throw OracleError(std::string(e.what()) + "; computed through degree " +
                              std::to_string(n - 1) + ": " + partial.to_string());
        }
    }
    return s;
}

}  // namespace cliquealg
