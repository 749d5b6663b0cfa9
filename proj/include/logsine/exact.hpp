#pragma once

// Exact arithmetic substrate: reduced rationals over GMP integers, dense
// univariate polynomials, and truncated formal power series over Q.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logsine {

using BigInt = mpz_class;

long double to_long_double(const BigInt& v);

/// Signed rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Exact value of a finite double.
    static Rational from_double(double v);

    /// Parses "num/den" or "num" (decimal, optional leading '-').
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const { return value_.get_str(); }

    Rational pow(int exponent) const;
    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class value_{0};
};

inline long double to_long_double(const Rational& v) { return v.to_long_double(); }

/// Dense univariate polynomial; coefficient i multiplies x^i. Trailing zero
/// coefficients are stripped, so the zero polynomial has no coefficients.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) {
        normalize();
    }
    Polynomial(std::initializer_list<T> coefficients) : coeffs_(coefficients) { normalize(); }

    static Polynomial monomial(T c, std::size_t degree) {
        std::vector<T> v(degree + 1, T(0));
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coefficients() const { return coeffs_; }
    T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    /// Exact evaluation at a rational point.
    Rational evaluate(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    long double evaluate(long double x) const {
        long double acc = 0.0L;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_long_double(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const T& c, const Polynomial& p) {
        std::vector<T> out(p.coeffs_);
        for (auto& v : out) v *= c;
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

/// Power series c_0 + c_1 t + ... + c_N t^N known exactly up to order N.
///
/// Binary operations on series of different orders zero-pad the shorter
/// operand, so a short coefficient list behaves like the polynomial it
/// spells out. The result carries the larger order.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    /// Order is coefficients.size() - 1; an empty list is rejected.
    explicit TruncatedSeries(std::vector<Rational> coefficients);
    TruncatedSeries(std::initializer_list<Rational> coefficients)
        : TruncatedSeries(std::vector<Rational>(coefficients)) {}

    static TruncatedSeries variable(std::size_t order);
    static TruncatedSeries constant(const Rational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Zero beyond the order.
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Index of the lowest nonzero coefficient; -1 if every coefficient is zero.
    long valuation() const;
    bool is_zero() const { return valuation() < 0; }

    /// Drops or zero-pads coefficients to the new order.
    TruncatedSeries with_order(std::size_t order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Exact quotient num/den. Both are padded to the larger order N; the common
/// valuation v of den is cancelled and the result has order N - v.
/// Throws DomainError when den is zero or the quotient would need negative
/// powers.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

/// f(g). Requires g(0) = 0.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// 1 - e^{-x} = sum_{i>=1} (-1)^{i+1} x^i / i!, to the given order.
TruncatedSeries series_exp_em1(std::size_t order);

/// Li_k(inner) = sum_{m=1}^{order} inner^m / m^k, truncated at `order`.
/// k may be negative (coefficients m^{|k|}). inner must vanish at 0.
TruncatedSeries series_polylog(int k, const TruncatedSeries& inner, std::size_t order);

}  // namespace logsine
