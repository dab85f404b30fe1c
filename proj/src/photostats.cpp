#include "cpc/photostats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace cpc::photostats {

namespace {

constexpr std::size_t kRatioWindow = 12;
constexpr int kMaxGrowthAttempts = 400;

enum class Law { vacuum, thermal, poisson, displaced_thermal };

Law classify(double gamma2, double n_b) {
    if (gamma2 == 0.0) return n_b == 0.0 ? Law::vacuum : Law::thermal;
    return n_b < kPoissonSwitchNb ? Law::poisson : Law::displaced_thermal;
}

void require_params(double gamma2, double n_b, double eps_tail) {
    if (!(gamma2 >= 0.0) || !std::isfinite(gamma2)) {
        throw Error(Errc::invalid_argument, "gamma2 must be finite and >= 0");
    }
    if (!(n_b >= 0.0) || !std::isfinite(n_b)) {
        throw Error(Errc::invalid_argument, "n_b must be finite and >= 0");
    }
    if (!(eps_tail > 0.0) || !(eps_tail < 1.0)) {
        throw Error(Errc::invalid_argument, "eps_tail must lie in (0, 1)");
    }
}

// ln p(k) for k = 0..k_max.
std::vector<double> log_pmf(Law law, double gamma2, double n_b, std::size_t k_max) {
    std::vector<double> lp(k_max + 1);
    switch (law) {
        case Law::vacuum: {
            lp[0] = 0.0;
            std::fill(lp.begin() + 1, lp.end(), -std::numeric_limits<double>::infinity());
            break;
        }
        case Law::thermal: {
            const double step = std::log(n_b) - std::log1p(n_b);
            const double base = -std::log1p(n_b);
            for (std::size_t k = 0; k <= k_max; ++k) {
                lp[k] = base + static_cast<double>(k) * step;
            }
            break;
        }
        case Law::poisson: {
            const double lg = std::log(gamma2);
            for (std::size_t k = 0; k <= k_max; ++k) {
                const double kd = static_cast<double>(k);
                lp[k] = -gamma2 + kd * lg - std::lgamma(kd + 1.0);
            }
            break;
        }
        case Law::displaced_thermal: {
            const double ln_nb = std::log(n_b);
            const double ln_nb1 = std::log1p(n_b);
            const double expo = -gamma2 / (n_b + 1.0);
            const double lag_arg = gamma2 / (n_b * (n_b + 1.0));
            const std::vector<double> lag = numerics::log_laguerre_neg_sequence(k_max, lag_arg);
            for (std::size_t k = 0; k <= k_max; ++k) {
                const double kd = static_cast<double>(k);
                lp[k] = kd * ln_nb - (kd + 1.0) * ln_nb1 + expo + lag[k];
            }
            break;
        }
    }
    return lp;
}

struct Certification {
    bool ok = false;
    double tail_bound = 1.0;
};

// Geometric-majorant tail bound: past the bulk the successive-term ratios
// p(k+1)/p(k) fall below 1 and keep falling, so sum_{k > K} p(k) is bounded
// by p(K+1) / (1 - rho) with rho the largest ratio in a window after K. The
// certificate requires the window to confirm both properties.
Certification certify(const std::vector<double>& lp, std::size_t cutoff, double eps_tail) {
    if (cutoff + kRatioWindow + 1 >= lp.size()) return {};
    double rho_log = -std::numeric_limits<double>::infinity();
    double prev_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t j = cutoff; j <= cutoff + kRatioWindow; ++j) {
        const double ratio_log = lp[j + 1] - lp[j];
        if (!(ratio_log < 0.0)) return {};                  // still inside the bulk
        if (ratio_log > prev_ratio + 1e-12) return {};      // ratios must be nonincreasing
        prev_ratio = ratio_log;
        rho_log = std::max(rho_log, ratio_log);
    }
    const double one_minus_rho = -std::expm1(rho_log);
    const double log_tail = lp[cutoff + 1] - std::log(one_minus_rho);
    double tail = std::exp(log_tail);
    tail = std::max(tail, std::numeric_limits<double>::denorm_min());
    return {tail < eps_tail, tail};
}

struct Plan {
    std::size_t cutoff;
    double tail_bound;
    std::vector<double> lp;  // covers 0..cutoff + window + 1
};

Plan certified_plan(double gamma2, double n_b, double eps_tail) {
    const Law law = classify(gamma2, n_b);
    if (law == Law::vacuum) return {0, 0.0, {0.0}};

    const double mean = n_b + gamma2;
    const double variance = gamma2 * (1.0 + 2.0 * n_b) + n_b * (n_b + 1.0);
    const double sigma = std::sqrt(variance);
    std::size_t cutoff =
        std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(mean + 12.0 * sigma)));
    const std::size_t step =
        std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(2.0 * sigma)));

    for (int attempt = 0; attempt < kMaxGrowthAttempts; ++attempt) {
        std::vector<double> lp = log_pmf(law, gamma2, n_b, cutoff + kRatioWindow + 1);
        const Certification cert = certify(lp, cutoff, eps_tail);
        if (cert.ok) return {cutoff, cert.tail_bound, std::move(lp)};
        cutoff += step;
    }
    throw Error(Errc::tail_certification_failure,
                "no certified cutoff for gamma2 = " + std::to_string(gamma2) +
                    ", n_b = " + std::to_string(n_b));
}

PhotonDistribution materialize(double gamma2, double n_b, std::size_t cutoff, double tail_bound,
                               const std::vector<double>& lp) {
    std::vector<double> probs(cutoff + 1);
    for (std::size_t k = 0; k <= cutoff; ++k) probs[k] = std::exp(lp[k]);
    return {numerics::ProbVector(std::move(probs)), cutoff, tail_bound, gamma2, n_b};
}

}  // namespace

std::size_t cutoff_for(double gamma2, double n_b, double eps_tail) {
    require_params(gamma2, n_b, eps_tail);
    return certified_plan(gamma2, n_b, eps_tail).cutoff;
}

PhotonDistribution photon_distribution(double gamma2, double n_b, double eps_tail) {
    require_params(gamma2, n_b, eps_tail);
    const Plan plan = certified_plan(gamma2, n_b, eps_tail);
    return materialize(gamma2, n_b, plan.cutoff, plan.tail_bound, plan.lp);
}

PhotonDistribution photon_distribution_at_cutoff(double gamma2, double n_b, std::size_t cutoff,
                                                 double eps_tail) {
    require_params(gamma2, n_b, eps_tail);
    const Law law = classify(gamma2, n_b);
    if (law == Law::vacuum) {
        std::vector<double> probs(cutoff + 1, 0.0);
        probs[0] = 1.0;
        return {numerics::ProbVector(std::move(probs)), cutoff, 0.0, gamma2, n_b};
    }
    const std::vector<double> lp = log_pmf(law, gamma2, n_b, cutoff + kRatioWindow + 1);
    const Certification cert = certify(lp, cutoff, eps_tail);
    if (!cert.ok) {
        throw Error(Errc::invalid_argument,
                    "cutoff " + std::to_string(cutoff) + " is below the certified support");
    }
    return materialize(gamma2, n_b, cutoff, cert.tail_bound, lp);
}

Moments moments(const PhotonDistribution& d) {
    const auto probs = d.probs.entries();
    double mean = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        mean += static_cast<double>(k) * probs[k];
    }
    // Central form: the raw second moment cancels catastrophically once the
    // mean dwarfs the spread.
    double variance = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double dev = static_cast<double>(k) - mean;
        variance += dev * dev * probs[k];
    }
    return {mean, variance};
}

}  // namespace cpc::photostats
