#include "cpc/cli.hpp"

#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace cpc::cli {

namespace {

void append_kv(std::string& out, const char* key, const std::string& value) {
    out += key;
    out += ' ';
    out += value;
    out += '\n';
}

std::string bound_cell(const capacity::QuantumBound& b) {
    return b.infinite ? "inf" : format_number(b.bits_per_photon);
}

// text: "key value" lines; csv: header row + one value row.
std::string render(Format format, const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out;
    if (format == Format::text) {
        for (const auto& [k, v] : fields) append_kv(out, k.c_str(), v);
        return out;
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += fields[i].first;
        out += i + 1 < fields.size() ? ',' : '\n';
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += fields[i].second;
        out += i + 1 < fields.size() ? ',' : '\n';
    }
    return out;
}

void check_sweep_config(const SweepConfig& cfg) {
    if (!(cfg.min_cost > 0.0) || !(cfg.max_cost > cfg.min_cost)) {
        throw Error(Errc::invalid_argument, "sweep grid needs 0 < min < max");
    }
    if (cfg.points < 2) throw Error(Errc::invalid_argument, "sweep grid needs points >= 2");
    if (!(cfg.eps > 0.0) || !(cfg.eps < 1.0)) {
        throw Error(Errc::invalid_argument, "sweep eps must lie in (0, 1)");
    }
    if (!(cfg.eps_tail > 0.0) || !(cfg.eps_tail < 1.0)) {
        throw Error(Errc::invalid_argument, "sweep eps_tail must lie in (0, 1)");
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string sweep_csv(const channel::FiducialParams& f, const SweepConfig& cfg) {
    check_sweep_config(cfg);
    const channel::OutputNoise noise = channel::output_noise(f);
    if (noise.n_b == 0.0) {
        throw Error(Errc::zero_noise_channel, "sweep needs n_b > 0; the CPC bound is infinite");
    }
    const double abs_eta = std::fabs(f.eta);
    const capacity::QuantumBound bound = capacity::quantum_cpc_bound(noise, f.eta);
    const std::string bound_col = format_number(bound.bits_per_photon / abs_eta);

    std::string out = "eta_ns,cpc_pnr_over_eta,cpc_threshold_over_eta,k_th,quantum_bound_over_eta\n";
    const double log_min = std::log(cfg.min_cost);
    const double log_step = (std::log(cfg.max_cost) - log_min) / (cfg.points - 1);
    for (int i = 0; i < cfg.points; ++i) {
        const double cost = std::exp(log_min + i * log_step);  // |eta| n_s
        const double n_s = cost / abs_eta;
        out += format_number(cost);
        out += ',';
        if (cfg.pnr) {
            out += format_number(capacity::pnr_cpc(n_s, f, cfg.eps_tail).value / abs_eta);
        }
        out += ',';
        if (cfg.threshold) {
            const double gamma2 = cost * noise.omega_max;
            const std::uint64_t k_th = capacity::default_threshold(gamma2, cfg.eps);
            const capacity::CPCResult res = capacity::threshold_cpc(n_s, k_th, f, cfg.eps_tail);
            out += format_number(res.value / abs_eta);
            out += ',';
            out += std::to_string(k_th);
        } else {
            out += ',';
        }
        out += ',';
        out += bound_col;
        out += '\n';
    }
    return out;
}

std::string dist_csv(const channel::FiducialParams& f, double n_s, double eps_tail) {
    const double gamma2 = channel::gamma_displacement(f, n_s);
    const channel::OutputNoise noise = channel::output_noise(f);
    const photostats::PhotonDistribution dist =
        photostats::photon_distribution(gamma2, noise.n_b, eps_tail);
    std::string out = "k,p\n";
    const auto probs = dist.probs.entries();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_number(probs[k]);
        out += '\n';
    }
    return out;
}

std::string validate_report(const ResolvedChannel& ch, Format format) {
    return render(format, {
                              {"physical", "true"},
                              {"eta", format_number(ch.fiducial.eta)},
                              {"y", format_number(ch.fiducial.y)},
                              {"s", format_number(ch.fiducial.s)},
                              {"theta", format_number(ch.fiducial.theta)},
                              {"n_b", format_number(ch.noise.n_b)},
                              {"omega_max", format_number(ch.noise.omega_max)},
                              {"r", format_number(ch.noise.r)},
                              {"quantum_bound",
                               bound_cell(capacity::quantum_cpc_bound(ch.noise, ch.fiducial.eta))},
                          });
}

std::string decompose_report(const channel::FiducialParams& f, Format format) {
    return render(format, {
                              {"eta", format_number(f.eta)},
                              {"y", format_number(f.y)},
                              {"s", format_number(f.s)},
                              {"theta", format_number(f.theta)},
                              {"M00", format_number(f.M.a)},
                              {"M01", format_number(f.M.b)},
                              {"M10", format_number(f.M.c)},
                              {"M11", format_number(f.M.d)},
                          });
}

std::string bound_report(const ResolvedChannel& ch, Format format) {
    return render(format, {
                              {"quantum_bound",
                               bound_cell(capacity::quantum_cpc_bound(ch.noise, ch.fiducial.eta))},
                          });
}

std::string point_report(const capacity::CPCResult& res, const ResolvedChannel& ch,
                         Format format) {
    std::vector<std::pair<std::string, std::string>> fields = {
        {"scheme", res.scheme == capacity::Scheme::pnr ? "pnr" : "threshold"},
        {"n_s", format_number(res.n_s)},
        {"gamma2", format_number(res.gamma2)},
        {"k_th", res.k_th < 0 ? "" : std::to_string(res.k_th)},
        {"value", format_number(res.value)},
        {"cross_entropy_term", format_number(res.cross_entropy_term)},
        {"entropy_term", format_number(res.entropy_term)},
        {"quantum_bound", bound_cell(capacity::quantum_cpc_bound(ch.noise, ch.fiducial.eta))},
    };
    if (format == Format::text && res.k_th < 0) fields.erase(fields.begin() + 3);
    return render(format, fields);
}

std::string mi_report(const capacity::OOKParams& params, const capacity::MutualInfo& mi,
                      double gamma2, Format format) {
    return render(format, {
                              {"lambda", format_number(params.lambda)},
                              {"n_s", format_number(params.n_s)},
                              {"n_a", format_number(params.n_a())},
                              {"gamma2", format_number(gamma2)},
                              {"mi_bits_per_use", format_number(mi.bits_per_use)},
                              {"pie", format_number(mi.pie)},
                          });
}

int exit_code_for(Errc code) noexcept {
    switch (code) {
        case Errc::not_symmetric:
        case Errc::not_psd:
        case Errc::not_completely_positive:
        case Errc::singular_x:
            return 2;
        case Errc::zero_noise_channel:
            return 3;
        default:
            return 1;
    }
}

}  // namespace cpc::cli
