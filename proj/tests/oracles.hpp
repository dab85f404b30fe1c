// Test-only reference implementations, independent of the library's
// computation paths: series evaluation where the library uses the recurrence,
// direct sums where the library uses closed forms.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cpc/channel.hpp"
#include "cpc/photostats.hpp"

namespace oracles {

// L_k(-x) by the explicit series sum_i C(k,i) x^i / i!; every term is
// positive so long double accumulation carries full precision for k <= ~40.
inline long double laguerre_neg_series(unsigned k, long double x) {
    long double term = 1.0L;  // i = 0
    long double sum = 1.0L;
    for (unsigned i = 1; i <= k; ++i) {
        term *= static_cast<long double>(k - i + 1) * x / (static_cast<long double>(i) * i);
        sum += term;
    }
    return sum;
}

// ln L_k(-x) via lgamma-based log-sum-exp; covers k, x far beyond the range
// where the series value itself is representable.
inline double log_laguerre_series_big(std::uint64_t k, double x) {
    const double kd = static_cast<double>(k);
    const double lx = std::log(x);
    const double lg_k1 = std::lgamma(kd + 1.0);
    std::vector<double> logs(k + 1);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i <= k; ++i) {
        const double id = static_cast<double>(i);
        logs[i] = lg_k1 - std::lgamma(id + 1.0) - std::lgamma(kd - id + 1.0) + id * lx -
                  std::lgamma(id + 1.0);
        peak = std::max(peak, logs[i]);
    }
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - peak);
    return peak + std::log(acc);
}

// Truncated sum over the photocount distribution against the exact thermal
// log-pmf of the vacuum output, in bits.
inline double brute_cross_entropy(const cpc::photostats::PhotonDistribution& sig, double n_b) {
    const double l2_nb = std::log2(n_b);
    const double l2_nb1 = std::log1p(n_b) / std::log(2.0);
    double acc = 0.0;
    const auto probs = sig.probs.entries();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double kd = static_cast<double>(k);
        acc += probs[k] * ((kd + 1.0) * l2_nb1 - kd * l2_nb);
    }
    return acc;
}

inline double poisson_pmf(std::uint64_t k, double mean) {
    const double kd = static_cast<double>(k);
    return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
}

inline double thermal_pmf(std::uint64_t k, double n_b) {
    const double kd = static_cast<double>(k);
    return std::exp(kd * std::log(n_b) - (kd + 1.0) * std::log1p(n_b));
}

// A random physical channel built the way the canonical form composes it:
// X = M X_F(eta) R(phi), Y = M Y_F(y, s) M^T with M = R(a) diag(e^z, e^-z) R(b).
struct RandomChannel {
    cpc::channel::Mat2 X, Y;
    double eta, y, s;
};

inline RandomChannel random_physical_channel(std::mt19937_64& rng) {
    using cpc::channel::Mat2;
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    double eta = 0.0;
    do {
        eta = -2.0 + 4.0 * uni(rng);
    } while (std::fabs(eta) < 1e-3);
    const double y = 0.5 * std::fabs(1.0 - eta) + 1.5 * uni(rng);
    const double s = uni(rng);

    const double z = -1.0 + 2.0 * uni(rng);
    const double pi = 3.14159265358979323846;
    const Mat2 m = Mat2::rotation(pi * (2.0 * uni(rng) - 1.0)) *
                   Mat2::diagonal(std::exp(z), std::exp(-z)) *
                   Mat2::rotation(pi * (2.0 * uni(rng) - 1.0));
    const Mat2 theta = Mat2::rotation(pi * (2.0 * uni(rng) - 1.0));

    const Mat2 x = m * cpc::channel::fiducial_x(eta) * theta;
    const Mat2 yy = m * cpc::channel::fiducial_y(y, s) * m.transpose();
    return {x, yy, eta, y, s};
}

}  // namespace oracles
