#pragma once

#include <cstddef>

#include "cpc/numerics.hpp"

namespace cpc::photostats {

/// Default truncation tolerance for capacity computations.
inline constexpr double kDefaultTailEps = 1e-15;

/// Below this thermal occupation the Laguerre argument gamma2/(n_b(n_b+1))
/// leaves the usefully representable range and the photocount law is taken in
/// its analytic n_b -> 0 limit (Poisson), exact to O(n_b) relative error.
inline constexpr double kPoissonSwitchNb = 1e-10;

/// Truncated photocount distribution of the channel output under the
/// squeezed-number projective measurement, with a certified bound on the
/// probability mass lost to truncation.
struct PhotonDistribution {
    numerics::ProbVector probs;  // p(k), k = 0..cutoff
    std::size_t cutoff;
    double tail_bound;  // certified upper bound on 1 - sum(probs)
    double gamma2;      // |gamma|^2 the entries were built from
    double n_b;
};

/// Smallest cutoff K (from the mean + 12 sigma initial guess upward) whose
/// tail past K certifies below eps_tail via a geometric majorant of the
/// successive-term ratios.
std::size_t cutoff_for(double gamma2, double n_b, double eps_tail);

PhotonDistribution photon_distribution(double gamma2, double n_b,
                                       double eps_tail = kDefaultTailEps);

/// Same law evaluated on a caller-chosen support [0, cutoff]; used to put
/// several distributions on a common support. The cutoff must be at least the
/// certified one for these parameters.
PhotonDistribution photon_distribution_at_cutoff(double gamma2, double n_b, std::size_t cutoff,
                                                 double eps_tail = kDefaultTailEps);

struct Moments {
    double mean;
    double variance;
};

/// Empirical moments of the truncated vector; oracle counterpart of the
/// closed forms mean = n_b + gamma2, var = gamma2 (1 + 2 n_b) + n_b (n_b + 1).
Moments moments(const PhotonDistribution& d);

}  // namespace cpc::photostats
