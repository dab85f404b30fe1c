#include "cpc/channel.hpp"

#include <cmath>
#include <string>

namespace cpc::channel {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kPsdTol = 1e-12;
constexpr double kCpSlack = 1e-12;       // boundary channels (pure loss) sit exactly on the CP edge
constexpr double kSingularEta = 1e-14;
constexpr double kZeroNbSnap = 1e-12;    // below this, vacuum-output noise is fp residue of an exact zero

bool all_finite(const Mat2& m) {
    return std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) && std::isfinite(m.d);
}

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

}  // namespace

Mat2 fiducial_x(double eta) {
    const double root = std::sqrt(std::fabs(eta));
    return Mat2::diagonal(root, sign_of(eta) * root);
}

Mat2 fiducial_y(double y, double s) {
    return Mat2::diagonal(y * std::exp(2.0 * s), y * std::exp(-2.0 * s));
}

ChannelMatrices validate_channel(const Mat2& X, const Mat2& Y) {
    if (!all_finite(X) || !all_finite(Y)) {
        throw Error(Errc::invalid_argument, "channel matrices must have finite entries");
    }
    const double scale = std::max(1.0, Y.max_abs());
    if (std::fabs(Y.b - Y.c) > kSymTol * scale) {
        throw Error(Errc::not_symmetric,
                    "Y off-diagonal mismatch " + std::to_string(Y.b) + " vs " + std::to_string(Y.c));
    }
    Mat2 ys = Y;
    ys.b = ys.c = 0.5 * (Y.b + Y.c);

    const SymEigen2 eig = sym_eigen(ys);
    if (eig.lambda_min < -kPsdTol * scale) {
        throw Error(Errc::not_psd,
                    "Y has negative eigenvalue " + std::to_string(eig.lambda_min));
    }

    const double root_det_y = std::sqrt(std::max(ys.det(), 0.0));
    const double cp_rhs = 0.5 * std::fabs(1.0 - X.det());
    if (root_det_y + kCpSlack < cp_rhs) {
        throw Error(Errc::not_completely_positive,
                    "sqrt(det Y) = " + std::to_string(root_det_y) + " < |1 - det X|/2 = " +
                        std::to_string(cp_rhs));
    }
    return {X, ys};
}

FiducialParams fiducial_decompose(const ChannelMatrices& ch) {
    const double eta = ch.X.det();
    if (std::fabs(eta) < kSingularEta) {
        throw Error(Errc::singular_x, "det X = " + std::to_string(eta) +
                                          "; the fiducial form needs eta != 0");
    }
    const double abs_eta = std::fabs(eta);
    const double det_y = std::max(ch.Y.det(), 0.0);
    const double y = std::sqrt(det_y);

    // Polar part of X / sqrt(|eta|): det(X X^T / |eta|) = 1, so its symmetric
    // square root is symplectic.
    const Mat2 xxt = ch.X * ch.X.transpose();
    const Mat2 m0 = sqrt_spd(xxt.scaled(1.0 / abs_eta));
    const Mat2 m0_inv = inverse(m0);

    Mat2 noise = m0_inv * ch.Y * m0_inv.transpose();
    noise.b = noise.c = 0.5 * (noise.b + noise.c);

    double s = 0.0;
    Mat2 rot = Mat2::identity();
    if (det_y > 0.0) {
        const SymEigen2 eig = sym_eigen(noise);
        const double lo = std::max(eig.lambda_min, 1e-300);
        s = 0.25 * std::log(eig.lambda_max / lo);
        rot = Mat2::rotation(eig.angle);
    }

    const Mat2 m = m0 * rot;
    const Mat2 xf_inv =
        Mat2::diagonal(1.0, static_cast<double>(sign_of(eta))).scaled(1.0 / std::sqrt(abs_eta));
    const Mat2 input_rot = xf_inv * inverse(m) * ch.X;
    const double theta = std::atan2(input_rot.c, input_rot.a);

    return {eta, y, s, m, theta};
}

FiducialParams fiducial_from_params(double eta, double y, double s) {
    if (!std::isfinite(eta) || !std::isfinite(y) || !std::isfinite(s)) {
        throw Error(Errc::invalid_argument, "fiducial parameters must be finite");
    }
    if (std::fabs(eta) < kSingularEta) {
        throw Error(Errc::singular_x, "fiducial eta must be nonzero");
    }
    if (y < 0.0) throw Error(Errc::invalid_argument, "fiducial y must be >= 0");
    if (s < 0.0) throw Error(Errc::invalid_argument, "fiducial s must be >= 0 by convention");
    if (y + kCpSlack < 0.5 * std::fabs(1.0 - eta)) {
        throw Error(Errc::not_completely_positive,
                    "y = " + std::to_string(y) + " < |1 - eta|/2 = " +
                        std::to_string(0.5 * std::fabs(1.0 - eta)));
    }
    return {eta, y, s, Mat2::identity(), 0.0};
}

OutputNoise output_noise(const FiducialParams& f) {
    const double half_eta = 0.5 * std::fabs(f.eta);
    const double hi = half_eta + f.y * std::exp(2.0 * f.s);
    const double lo = half_eta + f.y * std::exp(-2.0 * f.s);
    double n_b = std::sqrt(hi * lo) - 0.5;
    if (n_b < kZeroNbSnap) n_b = 0.0;
    const double omega = std::sqrt(hi / lo);  // >= 1 since s >= 0
    return {n_b, omega, 0.5 * std::log(omega)};
}

double gamma_displacement(const FiducialParams& f, double n_s) {
    if (!(n_s >= 0.0)) {
        throw Error(Errc::invalid_argument, "gamma_displacement requires n_s >= 0");
    }
    return std::fabs(f.eta) * n_s * output_noise(f).omega_max;
}

ChannelMatrices pure_loss(double tau) {
    return validate_channel(Mat2::identity().scaled(std::sqrt(tau)),
                            Mat2::identity().scaled(0.5 * (1.0 - tau)));
}

ChannelMatrices thermal_loss(double tau, double nth) {
    return validate_channel(Mat2::identity().scaled(std::sqrt(tau)),
                            Mat2::identity().scaled((1.0 - tau) * (nth + 0.5)));
}

ChannelMatrices amplifier(double gain, double nth) {
    return validate_channel(Mat2::identity().scaled(std::sqrt(gain)),
                            Mat2::identity().scaled((gain - 1.0) * (nth + 0.5)));
}

}  // namespace cpc::channel
