#include "logsine/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logsine/errors.hpp"

namespace logsine {

long double to_long_double(const BigInt& v) {
    // Keep 128 significant bits, convert limb by limb, then rescale.
    const long bits = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
    const long shift = bits > 128 ? bits - 128 : 0;
    BigInt top = abs(v);
    top >>= static_cast<mp_bitcnt_t>(shift);
    long double acc = 0.0L;
    const std::size_t limbs = mpz_size(top.get_mpz_t());
    for (std::size_t i = limbs; i-- > 0;) {
        acc = std::ldexp(acc, GMP_NUMB_BITS) +
              static_cast<long double>(mpz_getlimbn(top.get_mpz_t(), static_cast<mp_size_t>(i)));
    }
    acc = std::ldexp(acc, static_cast<int>(shift));
    return sgn(v) < 0 ? -acc : acc;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw DomainError("cannot convert a non-finite double to a rational");
    Rational r;
    r.value_ = mpq_class(v);
    return r;
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty()) throw DomainError("malformed rational: '" + s + "'");
        std::size_t start = part[0] == '-' ? 1 : 0;
        if (start == part.size()) throw DomainError("malformed rational: '" + s + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw DomainError("malformed rational: '" + s + "'");
        return BigInt(part, 10);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    const BigInt den = parse_int(s.substr(slash + 1));
    return Rational(parse_int(s.substr(0, slash)), den);
}

long double Rational::to_long_double() const {
    if (is_zero()) return 0.0L;
    const BigInt& num = value_.get_num();
    const BigInt& den = value_.get_den();
    // Scale so the integer quotient carries about 80 significant bits.
    const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const long k = 80 - (nb - db);
    BigInt scaled = num;
    if (k > 0) {
        scaled <<= static_cast<mp_bitcnt_t>(k);
    } else if (k < 0) {
        scaled >>= static_cast<mp_bitcnt_t>(-k);
    }
    const BigInt q = scaled / den;
    return std::ldexp(logsine::to_long_double(q), static_cast<int>(-k));
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw DomainError("zero raised to a negative power");
        Rational inv(value_.get_den(), value_.get_num());
        return inv.pow(-exponent);
    }
    Rational r;
    mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

// --- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw DomainError("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

long TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    return -1;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const {
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order && i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::max(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return out;
}

TruncatedSeries series_subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::max(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a.coefficient(i) - b.coefficient(i);
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i] * c;
    return out;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::max(a.order(), b.order());
    TruncatedSeries out(n);
    const std::size_t na = std::min(a.order(), n);
    for (std::size_t i = 0; i <= na; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n && j <= b.order(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
    const long vd = den.valuation();
    if (vd < 0) throw DomainError("series division by the zero series");
    const long vn = num.valuation();
    if (vn >= 0 && vn < vd)
        throw DomainError("series quotient has negative powers (numerator valuation " +
                          std::to_string(vn) + " < denominator valuation " + std::to_string(vd) + ")");

    const std::size_t shift = static_cast<std::size_t>(vd);
    const std::size_t n = std::max(num.order(), den.order()) - shift;
    const Rational lead = den[shift];
    TruncatedSeries q(n);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational acc = num.coefficient(i + shift);
        for (std::size_t j = 1; j <= i; ++j) {
            const Rational b = den.coefficient(j + shift);
            if (!b.is_zero()) acc -= b * q[i - j];
        }
        q[i] = acc / lead;
    }
    return q;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g[0].is_zero()) throw DomainError("series composition needs an inner series with zero constant term");
    const std::size_t n = std::max(f.order(), g.order());
    const TruncatedSeries inner = g.with_order(n);
    TruncatedSeries acc = TruncatedSeries::constant(f.coefficient(n), n);
    for (std::size_t i = n; i-- > 0;) {
        acc = series_multiply(acc, inner);
        acc[0] += f.coefficient(i);
    }
    return acc;
}

TruncatedSeries series_exp_em1(std::size_t order) {
    TruncatedSeries out(order);
    BigInt factorial = 1;
    for (std::size_t i = 1; i <= order; ++i) {
        factorial *= static_cast<unsigned long>(i);
        out[i] = Rational(BigInt(i % 2 == 1 ? 1 : -1), factorial);
    }
    return out;
}

TruncatedSeries series_polylog(int k, const TruncatedSeries& inner, std::size_t order) {
    if (!inner[0].is_zero())
        throw DomainError("polylogarithm argument series must have zero constant term");
    const TruncatedSeries u = inner.with_order(order);
    auto coeff = [k](std::size_t m) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k < 0 ? -k : k));
        return k >= 0 ? Rational(BigInt(1), p) : Rational(p);
    };
    if (order == 0) return TruncatedSeries(0);
    // Horner in u: u (a_1 + u (a_2 + ... + u a_N)).
    TruncatedSeries acc = TruncatedSeries::constant(coeff(order), order);
    for (std::size_t m = order - 1; m >= 1; --m) {
        acc = series_multiply(acc, u);
        acc[0] += coeff(m);
    }
    return series_multiply(acc, u);
}

}  // namespace logsine
