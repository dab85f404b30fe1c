#pragma once

#include <stdexcept>
#include <string>

namespace cpc {

enum class Errc {
    invalid_argument,
    parse_error,
    not_symmetric,
    not_psd,
    not_completely_positive,
    singular_x,
    absolute_continuity_violation,
    zero_noise_channel,
    degenerate_threshold,
    entropy_bound_violation,
    tail_certification_failure,
};

const char* errc_name(Errc c) noexcept;

/// Library-wide exception carrying a machine-checkable condition code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::parse_error: return "parse_error";
        case Errc::not_symmetric: return "not_symmetric";
        case Errc::not_psd: return "not_psd";
        case Errc::not_completely_positive: return "not_completely_positive";
        case Errc::singular_x: return "singular_x";
        case Errc::absolute_continuity_violation: return "absolute_continuity_violation";
        case Errc::zero_noise_channel: return "zero_noise_channel";
        case Errc::degenerate_threshold: return "degenerate_threshold";
        case Errc::entropy_bound_violation: return "entropy_bound_violation";
        case Errc::tail_certification_failure: return "tail_certification_failure";
    }
    return "unknown";
}

}  // namespace cpc
