#include "cpc/capacity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace cpc::capacity {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kEntropyBoundSlack = 1e-9;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

channel::OutputNoise noisy_or_throw(const channel::FiducialParams& f) {
    const channel::OutputNoise noise = channel::output_noise(f);
    if (noise.n_b == 0.0) {
        throw Error(Errc::zero_noise_channel,
                    "CPC diverges for n_b = 0; quantum_cpc_bound reports it as infinite");
    }
    return noise;
}

void require_positive_cost(double n_s) {
    if (!(n_s > 0.0) || !std::isfinite(n_s)) {
        throw Error(Errc::invalid_argument, "signal cost n_s must be finite and > 0");
    }
}

// Binary KL divergence in bits with the reference side given as log2
// probabilities; nonnegative by construction up to fp residue.
double binary_kl_bits(double p0, double p1, double log2_q0, double log2_q1) {
    double acc = 0.0;
    if (p0 > 0.0) acc += p0 * (std::log2(p0) - log2_q0);
    if (p1 > 0.0) acc += p1 * (std::log2(p1) - log2_q1);
    return acc > 0.0 ? acc : 0.0;
}

}  // namespace

QuantumBound quantum_cpc_bound(const channel::OutputNoise& noise, double eta) {
    if (noise.n_b == 0.0) return {true, 0.0};
    return {false, std::fabs(eta) * noise.omega_max * log2_1p(1.0 / noise.n_b)};
}

double cross_entropy_term(double gamma2, double n_b) {
    if (!(n_b > 0.0)) {
        throw Error(Errc::invalid_argument, "cross_entropy_term requires n_b > 0");
    }
    return (n_b + gamma2) * log2_1p(1.0 / n_b) + log2_1p(n_b);
}

CPCResult pnr_cpc(double n_s, const channel::FiducialParams& f, double eps_tail) {
    require_positive_cost(n_s);
    const channel::OutputNoise noise = noisy_or_throw(f);
    const double gamma2 = std::fabs(f.eta) * n_s * noise.omega_max;

    const double ce = cross_entropy_term(gamma2, noise.n_b);
    const photostats::PhotonDistribution dist =
        photostats::photon_distribution(gamma2, noise.n_b, eps_tail);
    const double entropy = numerics::shannon_entropy(dist.probs);

    // The photocount entropy is capped by the max-entropy distribution of the
    // same mean; a violation means the distribution construction is broken.
    const double cap = numerics::thermal_entropy_g(noise.n_b + gamma2);
    if (entropy > cap + kEntropyBoundSlack) {
        throw Error(Errc::entropy_bound_violation,
                    "H = " + std::to_string(entropy) + " exceeds g(mean) = " + std::to_string(cap));
    }

    return {(ce - entropy) / n_s, ce, entropy, n_s, Scheme::pnr, -1, gamma2};
}

ThresholdProbs threshold_probs(std::uint64_t k_th, double gamma2, double n_b, double eps_tail) {
    if (!(n_b > 0.0)) {
        throw Error(Errc::invalid_argument, "threshold_probs requires n_b > 0");
    }
    // The split point must lie inside the materialized support, so thresholds
    // past the certified cutoff extend it. Far beyond the extension cap the
    // above-threshold mass is already below anything representable and the
    // certified remainder stands in for it.
    constexpr std::uint64_t kMaxExtension = 4'000'000;
    const std::size_t natural = photostats::cutoff_for(gamma2, n_b, eps_tail);
    std::size_t cutoff = natural;
    if (k_th >= natural) {
        const std::uint64_t cap = static_cast<std::uint64_t>(natural) + kMaxExtension;
        cutoff = static_cast<std::size_t>(k_th <= cap - 16 ? k_th + 16 : cap);
    }
    const photostats::PhotonDistribution dist =
        photostats::photon_distribution_at_cutoff(gamma2, n_b, cutoff, eps_tail);
    // The above-threshold mass sums the small side directly, so a nearly
    // exhausted threshold keeps full precision; the certified tail completes it.
    double above = dist.tail_bound;
    const auto probs = dist.probs.entries();
    for (std::size_t k = probs.size(); k-- > 0 && k > k_th;) above += probs[k];
    above = std::min(above, 1.0);
    return {1.0 - above, above};
}

CPCResult threshold_cpc(double n_s, std::uint64_t k_th, const channel::FiducialParams& f,
                        double eps_tail) {
    require_positive_cost(n_s);
    const channel::OutputNoise noise = noisy_or_throw(f);
    const double gamma2 = std::fabs(f.eta) * n_s * noise.omega_max;

    const ThresholdProbs sig = threshold_probs(k_th, gamma2, noise.n_b, eps_tail);

    // Vacuum side exactly, in log space: p1(0) = (n_b/(n_b+1))^{k_th+1}.
    const double ln_ratio = std::log(noise.n_b) - std::log1p(noise.n_b);
    const double ln_p1_vac = static_cast<double>(k_th + 1) * ln_ratio;
    const double log2_p1_vac = ln_p1_vac / kLn2;
    if (!std::isfinite(log2_p1_vac)) {
        throw Error(Errc::degenerate_threshold,
                    "p1(0) vanishes beyond floating precision for k_th = " +
                        std::to_string(k_th));
    }
    const double p1_vac = std::exp(ln_p1_vac);
    const double log2_p0_vac = std::log1p(-p1_vac) / kLn2;

    const double divergence = binary_kl_bits(sig.p0, sig.p1, log2_p0_vac, log2_p1_vac);
    const double entropy = numerics::binary_entropy(sig.p0);
    return {divergence / n_s, divergence + entropy, entropy,
            n_s,              Scheme::threshold,    static_cast<std::int64_t>(k_th),
            gamma2};
}

std::uint64_t default_threshold(double gamma2_s, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw Error(Errc::invalid_argument, "threshold eps must lie in (0, 1)");
    }
    if (!(gamma2_s >= 0.0)) {
        throw Error(Errc::invalid_argument, "gamma2_s must be >= 0");
    }
    return static_cast<std::uint64_t>(std::floor((1.0 - eps) * gamma2_s));
}

double generic_cpc(const photostats::PhotonDistribution& signal,
                   const photostats::PhotonDistribution& vacuum, double n_s) {
    require_positive_cost(n_s);
    const auto ps = signal.probs.entries();
    const auto qs = vacuum.probs.entries();
    const std::size_t common = std::min(ps.size(), qs.size());

    std::vector<double> p, q;
    p.reserve(common + 1);
    q.reserve(common + 1);
    double p_pooled = signal.tail_bound;
    double q_pooled = vacuum.tail_bound;
    for (std::size_t k = common; k < ps.size(); ++k) p_pooled += ps[k];
    for (std::size_t k = common; k < qs.size(); ++k) q_pooled += qs[k];
    for (std::size_t k = 0; k < common; ++k) {
        if (qs[k] == 0.0) {
            // Vacuum entry lost to underflow; fold the pair into the aggregate.
            p_pooled += ps[k];
            continue;
        }
        p.push_back(ps[k]);
        q.push_back(qs[k]);
    }
    p.push_back(std::min(p_pooled, 1.0));
    q.push_back(std::min(std::max(q_pooled, std::numeric_limits<double>::denorm_min()), 1.0));

    const double d = numerics::kl_divergence(numerics::ProbVector(std::move(p)),
                                             numerics::ProbVector(std::move(q)));
    return std::max(d, 0.0) / n_s;
}

MutualInfo ook_mutual_information(const OOKParams& params, const channel::FiducialParams& f,
                                  double eps_tail) {
    if (!(params.lambda > 0.0) || !(params.lambda <= 1.0)) {
        throw Error(Errc::invalid_argument, "OOK lambda must lie in (0, 1]");
    }
    require_positive_cost(params.n_s);
    const channel::OutputNoise noise = noisy_or_throw(f);
    const double gamma2 = std::fabs(f.eta) * params.n_s * noise.omega_max;

    const std::size_t cutoff = std::max(photostats::cutoff_for(gamma2, noise.n_b, eps_tail),
                                        photostats::cutoff_for(0.0, noise.n_b, eps_tail));
    const photostats::PhotonDistribution sig =
        photostats::photon_distribution_at_cutoff(gamma2, noise.n_b, cutoff, eps_tail);
    const photostats::PhotonDistribution vac =
        photostats::photon_distribution_at_cutoff(0.0, noise.n_b, cutoff, eps_tail);

    const double lam = params.lambda;
    std::vector<double> mix(cutoff + 1);
    for (std::size_t k = 0; k <= cutoff; ++k) {
        mix[k] = (1.0 - lam) * vac.probs[k] + lam * sig.probs[k];
    }
    double info = numerics::shannon_entropy(numerics::ProbVector(std::move(mix))) -
                  (1.0 - lam) * numerics::shannon_entropy(vac.probs) -
                  lam * numerics::shannon_entropy(sig.probs);
    if (info < 0.0) info = 0.0;  // concavity guarantees >= 0 up to fp residue
    return {info, info / (lam * params.n_s)};
}

}  // namespace cpc::capacity
