#include "cpc/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cpc::numerics {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Rescaling threshold for the Laguerre recurrence. Dividing both live terms
// by this factor keeps every intermediate below ~1e107 while the shed factor
// accumulates in log space.
constexpr double kRescale = 1e100;
const double kRescaleLog = std::log(kRescale);

void require_laguerre_domain(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(Errc::invalid_argument,
                    "log_laguerre_neg requires finite x >= 0, got " + std::to_string(x));
    }
}

}  // namespace

ProbVector::ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {
    double total = 0.0;
    for (double p : entries_) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0 + kEntrySlack) {
            throw Error(Errc::invalid_argument,
                        "probability entry out of [0, 1]: " + std::to_string(p));
        }
        total += p;
    }
    if (total > 1.0 + kSumSlack) {
        throw Error(Errc::invalid_argument,
                    "probability mass exceeds 1: sum = " + std::to_string(total));
    }
}

double ProbVector::sum() const noexcept {
    double total = 0.0;
    for (double p : entries_) total += p;
    return total;
}

double log_laguerre_neg(std::uint64_t k, double x) {
    require_laguerre_domain(x);
    if (k == 0) return 0.0;
    if (k == 1) return std::log1p(x);

    double prev = 1.0;       // L_0, rescaled
    double cur = 1.0 + x;    // L_1, rescaled
    double shed = 0.0;       // log of divided-out factors
    for (std::uint64_t n = 1; n < k; ++n) {
        const double nd = static_cast<double>(n);
        double next = ((2.0 * nd + 1.0 + x) * cur - nd * prev) / (nd + 1.0);
        prev = cur;
        cur = next;
        if (cur > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            shed += kRescaleLog;
        }
    }
    return std::log(cur) + shed;
}

std::vector<double> log_laguerre_neg_sequence(std::uint64_t k_max, double x) {
    require_laguerre_domain(x);
    std::vector<double> out(k_max + 1);
    out[0] = 0.0;
    if (k_max == 0) return out;
    out[1] = std::log1p(x);

    double prev = 1.0;
    double cur = 1.0 + x;
    double shed = 0.0;
    for (std::uint64_t n = 1; n < k_max; ++n) {
        const double nd = static_cast<double>(n);
        double next = ((2.0 * nd + 1.0 + x) * cur - nd * prev) / (nd + 1.0);
        prev = cur;
        cur = next;
        if (cur > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            shed += kRescaleLog;
        }
        out[n + 1] = std::log(cur) + shed;
    }
    return out;
}

double shannon_entropy(const ProbVector& p) {
    double acc = 0.0;  // sum of p ln p, nonpositive for entries <= 1
    for (double v : p.entries()) {
        if (v > 0.0) acc += v * std::log(v);
    }
    double h = -acc / kLn2;
    return h > 0.0 ? h : 0.0;
}

double kl_divergence(const ProbVector& p, const ProbVector& q) {
    if (p.size() != q.size()) {
        throw Error(Errc::invalid_argument, "kl_divergence requires equal lengths");
    }
    double acc = 0.0;  // nats
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pi = p[i];
        if (pi <= 0.0) continue;
        const double qi = q[i];
        if (qi <= 0.0) {
            throw Error(Errc::absolute_continuity_violation,
                        "p[" + std::to_string(i) + "] > 0 while q[" + std::to_string(i) + "] = 0");
        }
        acc += pi * std::log(pi / qi);
    }
    double bits = acc / kLn2;
    // Rounding can leave a vanishing negative residue for p == q up to fp.
    if (bits < 0.0 && bits > -1e-12) bits = 0.0;
    return bits;
}

double thermal_entropy_g(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(Errc::invalid_argument, "thermal_entropy_g requires finite x >= 0");
    }
    if (x == 0.0) return 0.0;
    return (x * std::log1p(1.0 / x) + std::log1p(x)) / kLn2;
}

double binary_entropy(double p) {
    if (!(p >= -1e-12) || !(p <= 1.0 + 1e-12)) {
        throw Error(Errc::invalid_argument, "binary_entropy requires p in [0, 1]");
    }
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log(p) + (1.0 - p) * std::log1p(-p)) / kLn2;
}

}  // namespace cpc::numerics
