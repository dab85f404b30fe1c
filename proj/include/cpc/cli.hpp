#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cpc/capacity.hpp"
#include "cpc/channel_spec.hpp"

namespace cpc::cli {

enum class Format { text, csv };

/// Convergence sweep over the output signal cost |eta| n_s.
struct SweepConfig {
    double min_cost = 0.1;
    double max_cost = 1e4;
    int points = 26;
    bool pnr = true;
    bool threshold = true;
    double eps = 0.1;  // threshold fraction: k_th = floor((1 - eps) |gamma_s|^2)
    double eps_tail = photostats::kDefaultTailEps;
};

/// 12-significant-digit locale-independent rendering used by every report.
std::string format_number(double v);

/// CSV with columns eta_ns, cpc_pnr_over_eta, cpc_threshold_over_eta, k_th,
/// quantum_bound_over_eta; one row per geometric grid point, deterministic
/// for a fixed config. Disabled schemes leave their cells empty.
std::string sweep_csv(const channel::FiducialParams& f, const SweepConfig& cfg);

/// CSV of the photocount distribution at signal cost n_s: columns k, p.
std::string dist_csv(const channel::FiducialParams& f, double n_s, double eps_tail);

std::string validate_report(const ResolvedChannel& ch, Format format);
std::string decompose_report(const channel::FiducialParams& f, Format format);
std::string bound_report(const ResolvedChannel& ch, Format format);
std::string point_report(const capacity::CPCResult& res, const ResolvedChannel& ch, Format format);
std::string mi_report(const capacity::OOKParams& params, const capacity::MutualInfo& mi,
                      double gamma2, Format format);

/// Process exit status for a library error: 1 usage/parse, 2 unphysical
/// channel, 3 zero-noise divergence where a finite value was requested.
int exit_code_for(Errc code) noexcept;

}  // namespace cpc::cli
