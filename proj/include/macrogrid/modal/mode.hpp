#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace macrogrid {

/// One estimated oscillation mode. The underlying eigenvalue pair is
/// lambda = -sigma +/- j 2*pi*freq_hz, so sigma > 0 means decaying.
struct Mode {
    double freq_hz = 0.0;
    double sigma = 0.0;       // decay rate, 1/s
    double damping_ratio = 0.0;
    double energy = 0.0;      // relative contribution used for ranking
    bool oscillatory = true;  // false for real poles (freq_hz == 0)

    std::complex<double> eigenvalue() const {
        return {-sigma, 6.283185307179586 * freq_hz};
    }
};

/// zeta = sigma / sqrt(sigma^2 + omega^2); negative for growing modes.
inline double damping_ratio_of(double sigma, double omega) {
    const double mag = std::hypot(sigma, omega);
    return mag > 0.0 ? sigma / mag : 0.0;
}

/// Build a Mode from one eigenvalue (the conjugate is implied).
inline Mode mode_from_eigenvalue(std::complex<double> lambda, double energy = 0.0) {
    Mode m;
    m.sigma = -lambda.real();
    const double omega = std::abs(lambda.imag());
    m.freq_hz = omega / 6.283185307179586;
    m.damping_ratio = damping_ratio_of(m.sigma, omega);
    m.energy = energy;
    m.oscillatory = omega > 1e-9;
    return m;
}

struct ModeShapePoint {
    std::string channel;
    double amplitude = 0.0;  // normalized, largest channel = 1
    double phase_deg = 0.0;  // in (-180, 180]
};

struct ModeShape {
    Mode mode;
    std::vector<ModeShapePoint> points;
    double residual_fraction = 0.0; // worst per-channel residual energy fraction
    bool warning = false;
    std::string warning_text;
};

/// Wrap an angle in degrees into (-180, 180].
inline double wrap_deg(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d <= -180.0) d += 360.0;
    if (d > 180.0) d -= 360.0;
    return d;
}

} // namespace macrogrid
