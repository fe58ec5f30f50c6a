#pragma once

#include <cstdint>
#include <vector>

namespace macrogrid::sysid {

/// Multi-sine probe: sum of sines on a uniform frequency grid with
/// seeded random amplitudes and phases, peak-clamped.
struct ProbeSignal {
    std::vector<double> freqs_hz;
    std::vector<double> amplitudes_mw;
    std::vector<double> phases_rad;
    uint64_t seed = 0;
    double peak_clamp_mw = 0.0;

    double value(double t) const;
    double peak_estimate(double period_s, double dt) const;
};

struct MultisineSpec {
    double f_lo_hz = 0.05;
    double f_hi_hz = 3.00;
    double step_hz = 0.01;
    double amp_lo_mw = 0.5;
    double amp_hi_mw = 1.0;
    double peak_clamp_mw = 0.0; // 0 disables the clamp
};

ProbeSignal gen_multisine(const MultisineSpec& spec, uint64_t seed);

} // namespace macrogrid::sysid
