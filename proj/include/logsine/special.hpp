#pragma once

#include <cmath>

namespace logsine {

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// log Gamma(x) for x > 0 via the Lanczos approximation (g = 7, 9 terms),
/// evaluated in extended precision. Relative accuracy of Gamma is ~1e-15.
long double log_gamma(long double x);

/// Gamma(x) for real x not a non-positive integer (reflection below 1/2).
long double gamma_fn(long double x);

/// Neumaier's compensated summation.
template <class T>
class CompensatedSum {
public:
    void add(T v) {
        const T t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{};
    T comp_{};
};

}  // namespace logsine
