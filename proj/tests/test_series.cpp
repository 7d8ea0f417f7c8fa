#include <random>

#include "doctest.h"

#include "cliquealg/corpus.hpp"
#include "cliquealg/series.hpp"

using namespace cliquealg;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int trunc, bool unit_constant = false) {
    std::uniform_int_distribution<int> cd(-9, 9);
    TruncatedSeries s(trunc);
    for (int k = 0; k <= trunc; ++k) s.coefficients[k] = cd(rng);
    if (unit_constant) s.coefficients[0] = (cd(rng) % 2 == 0) ? 1 : -1;
    return s;
}

}  // namespace

TEST_CASE("series_add") {
    TruncatedSeries one(3, {1});
    TruncatedSeries minus_one(3, {-1});
    CHECK(series_add(one, minus_one) == TruncatedSeries(3));

    TruncatedSeries pent(3, {1, -5, 5});
    TruncatedSeries five_z(3, {0, 5});
    CHECK(series_add(pent, five_z) == TruncatedSeries(3, {1, 0, 5}));

    CHECK_THROWS_AS(series_add(TruncatedSeries(2), TruncatedSeries(3)), SeriesError);
}

TEST_CASE("series_mul") {
    int n = 8;
    TruncatedSeries one_minus_z(n, {1, -1});
    TruncatedSeries geo(n);
    for (int k = 0; k <= n; ++k) geo.coefficients[k] = 1;
    TruncatedSeries one(n, {1});
    CHECK(series_mul(one_minus_z, geo) == one);

    TruncatedSeries cube = series_mul(series_mul(one_minus_z, one_minus_z), one_minus_z);
    CHECK(cube == TruncatedSeries(n, {1, -3, 3, -1}));
}

TEST_CASE("series ring axioms on random inputs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto f = random_series(rng, 6);
        auto g = random_series(rng, 6);
        auto h = random_series(rng, 6);
        CHECK(series_add(f, g) == series_add(g, f));
        CHECK(series_mul(f, g) == series_mul(g, f));
        CHECK(series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h)));
        // distributivity
        CHECK(series_mul(f, series_add(g, h)) ==
              series_add(series_mul(f, g), series_mul(f, h)));
    }
}

TEST_CASE("series_invert: examples") {
    TruncatedSeries one_minus_z(5, {1, -1});
    CHECK(series_invert(one_minus_z) == TruncatedSeries(5, {1, 1, 1, 1, 1, 1}));

    TruncatedSeries pentagon(5, {1, -5, 5});
    CHECK(series_invert(pentagon) == TruncatedSeries(5, {1, 5, 20, 75, 275, 1000}));

    TruncatedSeries k3(6, {1, -3, 3, -1});
    auto inv = series_invert(k3);
    for (int k = 0; k <= 6; ++k)  // 1/(1-z)^3: binomial(k+2, 2)
        CHECK(inv.at(k) == (k + 2) * (k + 1) / 2);

    CHECK_THROWS_AS(series_invert(TruncatedSeries(3, {2})), SeriesError);
    CHECK_THROWS_AS(series_invert(TruncatedSeries(3, {0, 1})), SeriesError);
}

TEST_CASE("series_invert: f * invert(f) = 1 and involution") {
    std::mt19937_64 rng(23);
    TruncatedSeries one(7, {1});
    for (int t = 0; t < 200; ++t) {
        auto f = random_series(rng, 7, true);
        auto g = series_invert(f);
        CHECK(series_mul(f, g) == one);
        CHECK(series_invert(g) == f);
    }
}

TEST_CASE("hilbert_series") {
    auto pent = hilbert_series(corpus_graph("pentagon"), 4);
    CHECK(pent == TruncatedSeries(4, {1, 5, 20, 75, 275}));

    // edgeless graph: free algebra on n generators
    auto free3 = hilbert_series(corpus_graph("free3"), 5);
    for (int k = 0; k <= 5; ++k) {
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 3, k);
        CHECK(free3.at(k) == expect);
    }

    auto single = hilbert_series(corpus_graph("k1p2"), 5);
    CHECK(single == TruncatedSeries(5, {1, 0, 1, 0, 1, 0}));
}

TEST_CASE("hilbert series times clique polynomial is 1; coefficients non-negative") {
    for (const auto& name : corpus_names()) {
        auto g = corpus_graph(name);
        int N = 12;
        auto h = hilbert_series(g, N);
        auto c = series_of(clique_polynomial(g), N);
        CHECK(series_mul(h, c) == TruncatedSeries(N, {1}));
        for (int k = 0; k <= N; ++k) CHECK(h.at(k) >= 0);
    }
}

TEST_CASE("series rendering") {
    TruncatedSeries s(4, {1, 5, 20, 0, 275});
    CHECK(s.to_string() == "1 + 5z + 20z^2 + 275z^4");
    CHECK(s.to_json() ==
          R"({"coefficients":[1,5,20,0,275],"truncation":4})");
}
