#ifndef CLIQUEALG_SERIES_HPP
#define CLIQUEALG_SERIES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "cliquealg/graph.hpp"

namespace cliquealg {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer power series in z truncated at degree N: exactly N+1 coefficients.
struct TruncatedSeries {
    std::vector<mpz_class> coefficients;

    TruncatedSeries() : coefficients(1, 0) {}
    explicit TruncatedSeries(int truncation) : coefficients(truncation + 1, 0) {}
    TruncatedSeries(int truncation, std::vector<long> coeffs) : coefficients(truncation + 1, 0) {
        for (size_t i = 0; i < coeffs.size() && i < coefficients.size(); ++i)
            coefficients[i] = coeffs[i];
    }

    int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
    const mpz_class& at(int k) const { return coefficients[k]; }
    bool operator==(const TruncatedSeries&) const = default;
    std::string to_string() const;  // "1 + 5z + 20z^2 + ..."
    std::string to_json() const;    // {"truncation": N, "coefficients": [...]}
};

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// Multiplicative inverse through degree N; requires a_0 = +-1.
TruncatedSeries series_invert(const TruncatedSeries& f);

TruncatedSeries series_of(const CliquePolynomial& p, int truncation);

// Hilbert series of A(Gamma) as the inverse of the clique polynomial.
TruncatedSeries hilbert_series(const WeightedGraph& g, int truncation);

}  // namespace cliquealg

#endif
