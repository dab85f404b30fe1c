#pragma once

#include <cstdint>

#include "cpc/channel.hpp"
#include "cpc/photostats.hpp"

namespace cpc::capacity {

/// Ultimate quantum capacity per unit cost. Channels with no additive noise
/// (n_b = 0) have an unbounded CPC; that outcome is carried as a flag, not as
/// a floating-point infinity.
struct QuantumBound {
    bool infinite;
    double bits_per_photon;  // meaningful only when !infinite
};

QuantumBound quantum_cpc_bound(const channel::OutputNoise& noise, double eta);

/// Closed form of the cross-entropy sum sum_k p(k|signal) log2 1/p(k|0):
/// (n_b + gamma2) log2(1 + 1/n_b) + log2(1 + n_b), in bits.
double cross_entropy_term(double gamma2, double n_b);

enum class Scheme { pnr, threshold };

struct CPCResult {
    double value;               // bits per photon
    double cross_entropy_term;  // bits
    double entropy_term;        // bits; value = (cross_entropy_term - entropy_term) / n_s
    double n_s;
    Scheme scheme;
    std::int64_t k_th;  // threshold scheme only; -1 for pnr
    double gamma2;      // |gamma_s|^2 at this operating point
};

/// Capacity per unit cost of the photon-number-resolving projective receiver.
CPCResult pnr_cpc(double n_s, const channel::FiducialParams& f,
                  double eps_tail = photostats::kDefaultTailEps);

struct ThresholdProbs {
    double p0;  // mass at or below k_th
    double p1;
};

ThresholdProbs threshold_probs(std::uint64_t k_th, double gamma2, double n_b,
                               double eps_tail = photostats::kDefaultTailEps);

/// Capacity per unit cost of the binary threshold receiver. Equals the binary
/// KL divergence D[(p0(s), p1(s)) || (p0(0), p1(0))] / n_s; the vacuum-side
/// probabilities enter in log form so deep thresholds never underflow.
CPCResult threshold_cpc(double n_s, std::uint64_t k_th, const channel::FiducialParams& f,
                        double eps_tail = photostats::kDefaultTailEps);

/// k_th = floor((1 - eps) |gamma_s|^2).
std::uint64_t default_threshold(double gamma2_s, double eps);

/// Single-symbol CPC from two photocount distributions: D[signal || vacuum] / n_s.
/// All mass above the common support (and any vacuum entries lost to
/// underflow) is pooled into one aggregate outcome for both distributions, so
/// absolute continuity holds and the truncation bias is one-sided.
double generic_cpc(const photostats::PhotonDistribution& signal,
                   const photostats::PhotonDistribution& vacuum, double n_s);

/// Generalized on-off keying ensemble: the signal state is sent with
/// probability lambda, so the average cost is n_a = lambda n_s.
struct OOKParams {
    double lambda;
    double n_s;
    double n_a() const { return lambda * n_s; }
};

struct MutualInfo {
    double bits_per_use;
    double pie;  // photon information efficiency, bits per photon of average cost
};

MutualInfo ook_mutual_information(const OOKParams& params, const channel::FiducialParams& f,
                                  double eps_tail = photostats::kDefaultTailEps);

}  // namespace cpc::capacity
