#include "macrogrid/sysid/frf.hpp"

#include "macrogrid/util/errors.hpp"
#include "macrogrid/util/fft.hpp"

#include <algorithm>
#include <cmath>

namespace macrogrid::sysid {

void FrequencyResponse::validate() const {
    if (freqs_hz.size() != values.size()) throw ConfigError("frf: freq/value size mismatch");
    for (size_t i = 1; i < freqs_hz.size(); ++i)
        if (freqs_hz[i] <= freqs_hz[i - 1])
            throw ConfigError("frf: frequencies must be strictly increasing");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConfigError("frf: non-finite value");
}

FrequencyResponse estimate_frf(const std::vector<double>& u, const std::vector<double>& y,
                               double dt, const std::vector<double>& freqs_hz) {
    if (u.size() != y.size()) throw ConfigError("estimate_frf: u and y must share a time base");
    if (u.size() < 8 || dt <= 0.0) throw ConfigError("estimate_frf: record too short");
    const double n = static_cast<double>(u.size());
    const double record_s = n * dt;

    double u_max = 0.0;
    for (double v : u) u_max = std::max(u_max, std::abs(v));
    const double floor_mag = 1e-9 * u_max * n + 1e-300;

    FrequencyResponse frf;
    for (double f : freqs_hz) {
        const double periods = f * record_s;
        if (std::abs(periods - std::round(periods)) > 1e-6 * std::max(1.0, periods))
            throw ConfigError("estimate_frf: record is not an integer number of periods of " +
                              std::to_string(f) + " Hz");
        if (f >= 0.5 / dt) throw ConfigError("estimate_frf: frequency above Nyquist");

        const auto spec_u = fft::dft_bin(u, dt, f);
        if (std::abs(spec_u) < floor_mag) {
            frf.warnings.push_back("bin " + std::to_string(f) +
                                   " Hz dropped: input spectrum below the numeric floor");
            continue;
        }
        const auto spec_y = fft::dft_bin(y, dt, f);
        // local-noise quality estimate: compare the bin against the
        // half-grid offset where no probe energy lands
        const double df_local = 1.0 / record_s;
        const auto mid1 = fft::dft_bin(y, dt, f + 0.5 * df_local);
        const auto mid2 = fft::dft_bin(y, dt, f > df_local ? f - 0.5 * df_local : f + 1.5 * df_local);
        const double signal = std::norm(spec_y);
        const double noise = 0.5 * (std::norm(mid1) + std::norm(mid2));
        frf.freqs_hz.push_back(f);
        frf.values.push_back(spec_y / spec_u);
        frf.coherence.push_back(signal > 0.0 ? signal / (signal + noise) : 0.0);
    }
    frf.validate();
    return frf;
}

} // namespace macrogrid::sysid
