#include "logsine/polybernoulli.hpp"

#include <future>
#include <string>
#include <vector>

#include "logsine/errors.hpp"

namespace logsine {

namespace {

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binomial(int n, int k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace

TruncatedSeries poly_bernoulli_series(int k, std::size_t order) {
    // Li_k(u) / u with u = 1 - e^{-x}; u has valuation 1, so one extra order
    // of Li_k(u) is needed to keep `order` after the division.
    const TruncatedSeries u = series_exp_em1(order + 1);
    const TruncatedSeries li = series_polylog(k, u, order + 1);
    return series_divide(li, u).with_order(order);
}

Rational poly_bernoulli(int n, int k) {
    if (n < 0) throw DomainError("poly-Bernoulli index n must be >= 0, got " + std::to_string(n));
    const TruncatedSeries g = poly_bernoulli_series(k, static_cast<std::size_t>(n));
    return g[static_cast<std::size_t>(n)] * Rational(factorial(n));
}

std::vector<Rational> antidiagonal_sums(int n_max) {
    if (n_max < 0) throw DomainError("antidiagonal sum needs n >= 0");
    std::vector<Rational> sums(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) {
        // B_j^{(-k)} contributes to the sum with index n = j + k.
        const TruncatedSeries g = poly_bernoulli_series(-k, static_cast<std::size_t>(n_max - k));
        for (int j = 0; j + k <= n_max; ++j)
            sums[static_cast<std::size_t>(j + k)] += g[static_cast<std::size_t>(j)] * Rational(factorial(j));
    }
    return sums;
}

Rational antidiagonal_sum(int n) {
    if (n < 0) throw DomainError("antidiagonal sum needs n >= 0, got " + std::to_string(n));
    Rational total;
    for (int k = 0; k <= n; ++k) total += poly_bernoulli(n - k, -k);
    return total;
}

RationalPolynomial bernoulli_polynomial(int n) {
    if (n < 0) throw DomainError("Bernoulli polynomial degree must be >= 0");
    const TruncatedSeries g = poly_bernoulli_series(1, static_cast<std::size_t>(n));
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational bk = g[static_cast<std::size_t>(k)] * Rational(factorial(k));
        if (k == 1) bk -= 1;  // B_1 = +1/2 from the k = 1 series; B_1(0) = -1/2
        coeffs[static_cast<std::size_t>(n - k)] = Rational(binomial(n, k)) * bk;
    }
    return RationalPolynomial(std::move(coeffs));
}

PolyBernoulliTable::PolyBernoulliTable(int max_n, int k_min, int k_max)
    : max_n_(max_n), k_min_(k_min), k_max_(k_max) {
    if (max_n < 0) throw DomainError("poly-Bernoulli table needs max_n >= 0");
    if (k_min > k_max) throw DomainError("poly-Bernoulli table needs k_min <= k_max");

    std::vector<std::future<std::vector<Rational>>> rows;
    for (int k = k_min; k <= k_max; ++k) {
        rows.push_back(std::async(std::launch::async, [k, max_n] {
            const TruncatedSeries g = poly_bernoulli_series(k, static_cast<std::size_t>(max_n));
            std::vector<Rational> row;
            BigInt fact = 1;
            for (int n = 0; n <= max_n; ++n) {
                if (n > 0) fact *= n;
                row.push_back(g[static_cast<std::size_t>(n)] * Rational(fact));
            }
            return row;
        }));
    }
    for (int k = k_min; k <= k_max; ++k) {
        auto row = rows[static_cast<std::size_t>(k - k_min)].get();
        for (int n = 0; n <= max_n; ++n) values_.emplace(std::pair{n, k}, std::move(row[static_cast<std::size_t>(n)]));
    }
}

const Rational& PolyBernoulliTable::value(int n, int k) const {
    const auto it = values_.find({n, k});
    if (it == values_.end())
        throw DomainError("(" + std::to_string(n) + ", " + std::to_string(k) + ") outside the poly-Bernoulli table");
    return it->second;
}

}  // namespace logsine
