#include "cliquealg/series.hpp"

#include <sstream>

#include "json.hpp"

namespace cliquealg {

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= truncation(); ++k) {
        const mpz_class& c = coefficients[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) out << a.get_str();
        if (k >= 1) out << "z";
        if (k >= 2) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

std::string TruncatedSeries::to_json() const {
    nlohmann::json j;
    j["truncation"] = truncation();
    auto arr = nlohmann::json::array();
    for (const auto& c : coefficients) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());  // beyond int64: decimal string
    }
    j["coefficients"] = arr;
    return j.dump();
}

static void check_same_truncation(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.truncation() != g.truncation())
        throw SeriesError("mismatched truncation degrees: " + std::to_string(f.truncation()) +
                          " vs " + std::to_string(g.truncation()));
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_truncation(f, g);
    TruncatedSeries r(f.truncation());
    for (int k = 0; k <= f.truncation(); ++k)
        r.coefficients[k] = f.coefficients[k] + g.coefficients[k];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_truncation(f, g);
    TruncatedSeries r(f.truncation());
    for (int i = 0; i <= f.truncation(); ++i) {
        if (f.coefficients[i] == 0) continue;
        for (int j = 0; i + j <= f.truncation(); ++j)
            r.coefficients[i + j] += f.coefficients[i] * g.coefficients[j];
    }
    return r;
}

TruncatedSeries series_invert(const TruncatedSeries& f) {
    const mpz_class& a0 = f.coefficients[0];
    if (a0 != 1 && a0 != -1)
        throw SeriesError("series is not invertible: constant term must be +-1");
    int n = f.truncation();
    TruncatedSeries g(n);
    g.coefficients[0] = a0;  // 1/a0 = a0 for a0 = +-1
    for (int k = 1; k <= n; ++k) {
        mpz_class s = 0;
        for (int i = 1; i <= k; ++i) s += f.coefficients[i] * g.coefficients[k - i];
        g.coefficients[k] = -a0 * s;
    }
    return g;
}

TruncatedSeries series_of(const CliquePolynomial& p, int truncation) {
    TruncatedSeries s(truncation);
    for (auto [j, c] : p.coefficients)
        if (j <= truncation) s.coefficients[j] = static_cast<long>(c);
    return s;
}

TruncatedSeries hilbert_series(const WeightedGraph& g, int truncation) {
    return series_invert(series_of(clique_polynomial(g), truncation));
}

}  // namespace cliquealg
