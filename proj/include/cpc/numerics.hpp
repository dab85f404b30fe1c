#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpc/errors.hpp"

namespace cpc::numerics {

/// Finite probability vector. Entries lie in [0, 1]; the total mass may fall
/// short of 1 (truncated distributions) but never exceeds 1 beyond fp slack.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> entries);

    std::span<const double> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const noexcept { return entries_[i]; }
    double sum() const noexcept;

    static constexpr double kSumSlack = 1e-10;
    static constexpr double kEntrySlack = 1e-12;

private:
    std::vector<double> entries_;
};

// ln L_k(-x) for x >= 0. Every term of L_k at a nonpositive argument is
// positive, so the log is well defined for all k. The three-term recurrence
// is carried with running rescaling: whenever the live values exceed 1e100
// they are divided down and the shed factor is accumulated in log space, so
// nothing overflows even for k and x up to 1e6 (L_k(-x) ~ e^{2 sqrt(kx)}).
double log_laguerre_neg(std::uint64_t k, double x);

/// Same recurrence, returning ln L_k(-x) for every k = 0..k_max in one pass.
std::vector<double> log_laguerre_neg_sequence(std::uint64_t k_max, double x);

/// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const ProbVector& p);

/// Kullback-Leibler divergence in bits. Requires equal lengths and absolute
/// continuity (q_i = 0 forces p_i = 0), else throws.
double kl_divergence(const ProbVector& p, const ProbVector& q);

/// Entropy of a thermal state with mean energy x, in bits:
/// g(x) = (x+1) log2(x+1) - x log2 x, g(0) = 0.
double thermal_entropy_g(double x);

/// Binary entropy h2(p) in bits.
double binary_entropy(double p);

}  // namespace cpc::numerics
