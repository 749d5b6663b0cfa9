#pragma once

// Poly-Bernoulli numbers B_n^{(k)}, defined by
//
//     sum_n B_n^{(k)} x^n / n! = Li_k(1 - e^{-x}) / (1 - e^{-x}),
//
// for any integer k, together with the classical Bernoulli polynomials.
// Note the k = 1 case gives the Bernoulli numbers with B_1 = +1/2, while
// bernoulli_polynomial() uses the t e^{xt} / (e^t - 1) convention where
// B_1(0) = -1/2. The two are never mixed silently.

#include <map>
#include <utility>

#include "logsine/exact.hpp"

namespace logsine {

/// Exponential generating series of B_n^{(k)} as ordinary coefficients,
/// i.e. coefficient n is B_n^{(k)} / n!, truncated at `order`.
TruncatedSeries poly_bernoulli_series(int k, std::size_t order);

/// B_n^{(k)}; throws DomainError for n < 0.
Rational poly_bernoulli(int n, int k);

/// sum_{k=0}^{n} B_{n-k}^{(-k)}.
Rational antidiagonal_sum(int n);

/// antidiagonal_sum(0..n_max), sharing one generating series per k.
std::vector<Rational> antidiagonal_sums(int n_max);

/// B_n(x) with B_1(x) = x - 1/2.
RationalPolynomial bernoulli_polynomial(int n);

/// B_n^{(k)} for 0 <= n <= max_n and k_min <= k <= k_max. The generating
/// series is composed once per k; distinct k are built concurrently.
class PolyBernoulliTable {
public:
    PolyBernoulliTable(int max_n, int k_min, int k_max);

    int max_n() const { return max_n_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }

    /// Throws DomainError outside the table.
    const Rational& value(int n, int k) const;

private:
    int max_n_;
    int k_min_;
    int k_max_;
    std::map<std::pair<int, int>, Rational> values_;
};

}  // namespace logsine
