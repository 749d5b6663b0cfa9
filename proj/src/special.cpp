#include "logsine/special.hpp"

#include <array>

#include "logsine/errors.hpp"

namespace logsine {

namespace {

constexpr long double kLanczosG = 7.0L;
constexpr std::array<long double, 9> kLanczos = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L,
};

}  // namespace

long double log_gamma(long double x) {
    if (!(x > 0.0L)) throw DomainError("log_gamma needs a positive argument");
    if (x < 0.5L) return std::log(kPiL / std::sin(kPiL * x)) - log_gamma(1.0L - x);
    const long double y = x - 1.0L;
    long double a = kLanczos[0];
    const long double t = y + kLanczosG + 0.5L;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (y + static_cast<long double>(i));
    return 0.5L * std::log(2.0L * kPiL) + (y + 0.5L) * std::log(t) - t + std::log(a);
}

long double gamma_fn(long double x) {
    if (x <= 0.0L && x == std::floor(x)) throw DomainError("Gamma has a pole at non-positive integers");
    if (x < 0.5L) return kPiL / (std::sin(kPiL * x) * gamma_fn(1.0L - x));
    return std::exp(log_gamma(x));
}

}  // namespace logsine
