#pragma once

#include "cpc/errors.hpp"
#include "cpc/mat2.hpp"

namespace cpc::channel {

/// Single-mode Gaussian channel in the vacuum-covariance-(1/2)I convention:
/// d_out = X d_in, V_out = X V_in X^T + Y. Construct through validate_channel.
struct ChannelMatrices {
    Mat2 X;
    Mat2 Y;  // symmetric PSD
};

/// Canonical (fiducial) form of a channel: X = M X_F(eta) R(theta) and
/// Y = M Y_F(y, s) M^T with symplectic M.
struct FiducialParams {
    double eta;    // det X; characteristic transmission, may be negative or > 1
    double y;      // sqrt(det Y)
    double s;      // intrinsic squeezing, >= 0 by ordering convention
    Mat2 M;        // det M = 1
    double theta;  // input rotation angle; no capacity formula consumes it
};

/// Vacuum-output parameters of the fiducial channel.
struct OutputNoise {
    double n_b;        // thermal photon number, >= 0 (snapped to exact 0 below fp slack)
    double omega_max;  // e^{2r} >= 1
    double r;
};

Mat2 fiducial_x(double eta);
Mat2 fiducial_y(double y, double s);

/// Checks symmetry of Y, positive semidefiniteness and the single-mode
/// complete-positivity condition sqrt(det Y) >= |1 - det X| / 2. Throws a
/// coded Error naming the violated condition; returns the channel with Y
/// symmetrized.
ChannelMatrices validate_channel(const Mat2& X, const Mat2& Y);

/// Canonical decomposition. M is the symmetric square root of X X^T / |eta|
/// times the rotation ordering the noise eigenvalues; theta reconstructs X.
/// Throws singular_x for det X ~ 0. y = 0 yields s = 0 by convention.
FiducialParams fiducial_decompose(const ChannelMatrices& ch);

/// Fiducial channel taken directly as (eta, y, s) with M = I, theta = 0.
/// Applies the same physicality gate as validate_channel.
FiducialParams fiducial_from_params(double eta, double y, double s);

OutputNoise output_noise(const FiducialParams& f);

/// Effective displacement energy at the measurement: |gamma_s|^2 = |eta| n_s omega_max.
double gamma_displacement(const FiducialParams& f, double n_s);

// Preset channels, expanded to (X, Y).
ChannelMatrices pure_loss(double tau);
ChannelMatrices thermal_loss(double tau, double nth);
ChannelMatrices amplifier(double gain, double nth);

}  // namespace cpc::channel
