#include "macrogrid/sysid/probe.hpp"

#include "macrogrid/util/errors.hpp"
#include "macrogrid/util/rng.hpp"

#include <cmath>
#include <numbers>

namespace macrogrid::sysid {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ProbeSignal::value(double t) const {
    double u = 0.0;
    for (size_t i = 0; i < freqs_hz.size(); ++i)
        u += amplitudes_mw[i] * std::sin(kTwoPi * freqs_hz[i] * t + phases_rad[i]);
    return u;
}

double ProbeSignal::peak_estimate(double period_s, double dt) const {
    double peak = 0.0;
    for (double t = 0.0; t <= period_s; t += dt) peak = std::max(peak, std::abs(value(t)));
    return peak;
}

ProbeSignal gen_multisine(const MultisineSpec& spec, uint64_t seed) {
    if (!(spec.f_lo_hz > 0.0) || !(spec.f_hi_hz > spec.f_lo_hz) || !(spec.step_hz > 0.0))
        throw ConfigError("gen_multisine: empty or invalid band");
    if (!(spec.amp_hi_mw >= spec.amp_lo_mw) || spec.amp_lo_mw < 0.0)
        throw ConfigError("gen_multisine: invalid amplitude range");

    ProbeSignal sig;
    sig.seed = seed;
    sig.peak_clamp_mw = spec.peak_clamp_mw;
    const int n = static_cast<int>(std::lround((spec.f_hi_hz - spec.f_lo_hz) / spec.step_hz)) + 1;
    if (n < 1) throw ConfigError("gen_multisine: empty band");
    Rng rng(seed);
    sig.freqs_hz.resize(n);
    sig.amplitudes_mw.resize(n);
    sig.phases_rad.resize(n);
    for (int i = 0; i < n; ++i) {
        sig.freqs_hz[i] = spec.f_lo_hz + spec.step_hz * i;
        sig.amplitudes_mw[i] = rng.uniform(spec.amp_lo_mw, spec.amp_hi_mw);
        sig.phases_rad[i] = rng.uniform(0.0, kTwoPi);
    }
    if (spec.peak_clamp_mw > 0.0) {
        // scan one grid period at a resolution past the highest component
        const double period = 1.0 / spec.step_hz;
        const double dt = 1.0 / (20.0 * spec.f_hi_hz);
        const double peak = sig.peak_estimate(period, dt);
        if (peak > spec.peak_clamp_mw) {
            const double scale = spec.peak_clamp_mw / peak;
            for (double& a : sig.amplitudes_mw) a *= scale;
        }
    }
    return sig;
}

} // namespace macrogrid::sysid
