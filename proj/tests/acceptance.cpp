// Acceptance suite: end-to-end checks of the capacity pipeline at pinned
// tolerances, one verdict line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpc/capacity.hpp"
#include "cpc/channel.hpp"
#include "cpc/photostats.hpp"
#include "oracles.hpp"

using namespace cpc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const double kGrid_gamma2[] = {0.1, 1.0, 10.0, 100.0};
const double kGrid_nb[] = {0.01, 0.1, 1.0};

struct SweepChannel {
    const char* name;
    channel::FiducialParams f;
};

std::vector<SweepChannel> reference_channels() {
    return {
        {"n_b=1", channel::fiducial_from_params(1.0, 1.0, 0.0)},
        {"n_b=0.1", channel::fiducial_from_params(1.0, 0.1, 0.0)},
        {"n_b=0.01", channel::fiducial_from_params(1.0, 0.01, 0.0)},
        {"n_b=0.1,r=ln2/2",
         channel::fiducial_from_params(0.4, std::sqrt(0.1), std::log(10.0) / 4.0)},
    };
}

// Criterion 1: closed-form cross entropy vs the explicit truncated sum.
Outcome criterion_cross_entropy() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double gamma2 : kGrid_gamma2) {
        for (double n_b : kGrid_nb) {
            const auto dist = photostats::photon_distribution(gamma2, n_b, 1e-15);
            const double brute = oracles::brute_cross_entropy(dist, n_b);
            const double closed = capacity::cross_entropy_term(gamma2, n_b);
            worst = std::max(worst, std::fabs(brute - closed) / closed);
        }
    }
    const double elapsed = seconds_since(start);
    Outcome out;
    out.pass = worst <= 1e-9 && elapsed < 5.0;
    out.detail = "max rel err " + fmt(worst) + ", " + fmt(elapsed) + " s";
    return out;
}

// Criterion 2: empirical moments vs the closed forms.
Outcome criterion_moments() {
    double worst = 0.0;
    for (double gamma2 : kGrid_gamma2) {
        for (double n_b : kGrid_nb) {
            const auto m =
                photostats::moments(photostats::photon_distribution(gamma2, n_b, 1e-15));
            const double mean = n_b + gamma2;
            const double var = gamma2 * (1.0 + 2.0 * n_b) + n_b * (n_b + 1.0);
            worst = std::max(worst, std::fabs(m.mean - mean) / mean);
            worst = std::max(worst, std::fabs(m.variance - var) / var);
        }
    }
    return {worst <= 1e-8, "max rel err " + fmt(worst)};
}

// Criterion 3: photocount entropy below the fixed-mean maximum.
Outcome criterion_entropy_bound() {
    double worst = -1e300;
    for (double gamma2 : kGrid_gamma2) {
        for (double n_b : kGrid_nb) {
            const auto dist = photostats::photon_distribution(gamma2, n_b, 1e-15);
            const double h = numerics::shannon_entropy(dist.probs);
            worst = std::max(worst, h - numerics::thermal_entropy_g(n_b + gamma2));
        }
    }
    return {worst <= 1e-9, "max H - g(mean) = " + fmt(worst)};
}

// Criterion 4: convergence of the PNR receiver toward the quantum bound.
Outcome criterion_convergence() {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::ostringstream notes;
    for (const auto& [name, f] : reference_channels()) {
        const channel::OutputNoise noise = channel::output_noise(f);
        const double bound =
            capacity::quantum_cpc_bound(noise, f.eta).bits_per_photon;
        const double abs_eta = std::fabs(f.eta);

        double prev = -1e300;
        double ratio_at_10 = 0.0;
        bool monotone = true, below = true, identity_ok = true;
        for (int i = 0; i < 26; ++i) {
            const double cost = 0.1 * std::pow(10.0, 5.0 * i / 25.0);  // 0.1 .. 1e4
            const auto res = capacity::pnr_cpc(cost / abs_eta, f);
            monotone &= res.value >= prev - 1e-12;
            below &= res.value < bound;
            prev = res.value;
            if (i == 10) ratio_at_10 = res.value / bound;  // cost = 10

            const double gap = bound - res.value;
            const double identity = (res.entropy_term -
                                     noise.n_b * std::log2(1.0 + 1.0 / noise.n_b) -
                                     std::log2(1.0 + noise.n_b)) /
                                    res.n_s;
            identity_ok &= std::fabs(gap - identity) <= 1e-10;
        }
        const bool near_bound = ratio_at_10 >= 0.85;
        if (!(monotone && below && identity_ok && near_bound)) {
            out.pass = false;
            notes << " [" << name << ":";
            if (!monotone) notes << " not-monotone";
            if (!below) notes << " exceeds-bound";
            if (!identity_ok) notes << " gap-identity";
            if (!near_bound) notes << " ratio@10=" << fmt(ratio_at_10) << "<0.85";
            notes << "]";
        } else {
            notes << " [" << name << ": ratio@10=" << fmt(ratio_at_10) << "]";
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) out.pass = false;
    out.detail = fmt(elapsed) + " s," + notes.str();
    return out;
}

// Criterion 5: threshold receiver behavior.
Outcome criterion_threshold() {
    Outcome out;
    std::ostringstream notes;
    const auto f = channel::fiducial_from_params(1.0, 0.1, 0.0);
    const double bound =
        capacity::quantum_cpc_bound(channel::output_noise(f), 1.0).bits_per_photon;

    const auto deep = capacity::threshold_cpc(
        1000.0, capacity::default_threshold(1000.0, 0.1), f);
    const double ratio = deep.value / bound;
    if (!(ratio >= 0.85 && ratio <= 0.95)) out.pass = false;
    notes << "ratio@1000=" << fmt(ratio);

    bool dominated = true;
    for (int i = 0; i < 26; ++i) {
        const double cost = 0.1 * std::pow(10.0, 5.0 * i / 25.0);
        const auto k_th = capacity::default_threshold(cost, 0.1);
        const auto thr = capacity::threshold_cpc(cost, k_th, f);
        const auto pnr = capacity::pnr_cpc(cost, f);
        dominated &= thr.value <= pnr.value + 1e-12;
    }
    if (!dominated) {
        out.pass = false;
        notes << " threshold>pnr";
    }

    double worst_geo = 0.0;
    for (std::uint64_t k_th : {0, 3, 9, 30, 90}) {
        for (double n_b : {0.1, 1.0}) {
            const double expected =
                std::exp((static_cast<double>(k_th) + 1.0) *
                         (std::log(n_b) - std::log1p(n_b)));
            const double got = capacity::threshold_probs(k_th, 0.0, n_b).p1;
            worst_geo = std::max(worst_geo, std::fabs(got - expected) / expected);
        }
    }
    if (worst_geo > 1e-12) out.pass = false;
    notes << " vacuum-tail rel err " << fmt(worst_geo);
    out.detail = notes.str();
    return out;
}

// Criterion 6: OOK mutual information approaches the divergence rate.
Outcome criterion_small_lambda() {
    const auto f = channel::fiducial_from_params(1.0, 1.0, 0.0);
    const double d_rate = capacity::generic_cpc(photostats::photon_distribution(4.0, 1.0),
                                                photostats::photon_distribution(0.0, 1.0), 4.0);
    Outcome out;
    double prev_gap = 1e300;
    bool decreasing = true;
    double final_rel = 0.0;
    for (double lambda : {1e-2, 1e-3, 1e-4}) {
        const auto mi = capacity::ook_mutual_information({lambda, 4.0}, f);
        const double gap = std::fabs(mi.pie - d_rate);
        decreasing &= gap < prev_gap;
        prev_gap = gap;
        final_rel = gap / d_rate;
    }
    out.pass = decreasing && final_rel <= 0.01;
    out.detail = "final rel gap " + fmt(final_rel) + (decreasing ? "" : ", not decreasing");
    return out;
}

// Criterion 7: canonical decomposition round trip.
Outcome criterion_round_trip() {
    std::mt19937_64 rng(0x5eedacce);
    double worst_mat = 0.0, worst_param = 0.0, worst_det = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto ch = oracles::random_physical_channel(rng);
        const auto f = channel::fiducial_decompose(channel::validate_channel(ch.X, ch.Y));

        worst_param = std::max({worst_param, std::fabs(f.eta - ch.eta), std::fabs(f.y - ch.y),
                                std::fabs(f.s - ch.s)});
        worst_det = std::max(worst_det, std::fabs(f.M.det() - 1.0));

        const channel::Mat2 x_back =
            f.M * channel::fiducial_x(f.eta) * channel::Mat2::rotation(f.theta);
        const channel::Mat2 y_back = f.M * channel::fiducial_y(f.y, f.s) * f.M.transpose();
        worst_mat = std::max({worst_mat, x_back.max_abs_diff(ch.X), y_back.max_abs_diff(ch.Y)});
    }
    Outcome out;
    out.pass = worst_mat <= 1e-9 && worst_param <= 1e-9 && worst_det <= 1e-12;
    out.detail = "1000 channels: max |dX,dY| " + fmt(worst_mat) + ", max |d(eta,y,s)| " +
                 fmt(worst_param) + ", max |det M - 1| " + fmt(worst_det);
    return out;
}

// Criterion 8: Poisson limit of the photocount law.
Outcome criterion_poisson() {
    double worst = 0.0;
    for (double gamma2 : {0.5, 1.0, 5.0}) {
        const auto d = photostats::photon_distribution(gamma2, 1e-8);
        for (std::size_t k = 0; k <= d.cutoff; ++k) {
            worst = std::max(worst, std::fabs(d.probs[k] - oracles::poisson_pmf(k, gamma2)));
        }
    }
    return {worst <= 1e-6, "max abs dev " + fmt(worst)};
}

// Criterion 9: physicality gate and the divergent lossless bound.
Outcome criterion_gate() {
    Outcome out;
    std::ostringstream notes;
    try {
        channel::validate_channel(channel::Mat2::identity().scaled(std::sqrt(2.0)),
                                  channel::Mat2::identity().scaled(0.25));
        out.pass = false;
        notes << "noiseless amplifier accepted;";
    } catch (const Error& e) {
        if (e.code() != Errc::not_completely_positive) {
            out.pass = false;
            notes << "wrong rejection " << errc_name(e.code()) << ";";
        }
    }
    const auto loss = channel::validate_channel(
        channel::Mat2::identity().scaled(std::sqrt(0.5)),
        channel::Mat2::identity().scaled(0.25));
    const auto noise = channel::output_noise(channel::fiducial_decompose(loss));
    if (noise.n_b != 0.0) {
        out.pass = false;
        notes << " n_b=" << fmt(noise.n_b) << " not 0;";
    }
    if (!capacity::quantum_cpc_bound(noise, 0.5).infinite) {
        out.pass = false;
        notes << " bound not infinite;";
    }
    notes << " amplifier rejected, pure loss n_b=0 with infinite bound";
    out.detail = notes.str();
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "closed-form cross entropy vs brute-force sum", criterion_cross_entropy},
        {2, "moment oracle", criterion_moments},
        {3, "entropy upper bound", criterion_entropy_bound},
        {4, "PNR convergence to the quantum bound", criterion_convergence},
        {5, "threshold receiver", criterion_threshold},
        {6, "small-lambda mutual information limit", criterion_small_lambda},
        {7, "decomposition round trip", criterion_round_trip},
        {8, "Poisson limit", criterion_poisson},
        {9, "physicality gate", criterion_gate},
    };

    bool all = true;
    for (const auto& e : entries) {
        Outcome out;
        try {
            out = e.fn();
        } catch (const std::exception& ex) {
            out.pass = false;
            out.detail = std::string("exception: ") + ex.what();
        }
        all &= out.pass;
        std::printf("criterion %d %-46s %s (%s)\n", e.id, e.title, out.pass ? "PASS" : "FAIL",
                    out.detail.c_str());
    }
    std::printf("acceptance: %s\n", all ? "all criteria passed" : "FAILURES present");
    return all ? 0 : 1;
}
