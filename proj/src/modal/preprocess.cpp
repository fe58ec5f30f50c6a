#include "macrogrid/modal/preprocess.hpp"

#include "macrogrid/util/errors.hpp"
#include "macrogrid/util/fft.hpp"

#include <cmath>
#include <numbers>

namespace macrogrid::modal {

namespace {

void detrend(std::vector<double>& y) {
    const size_t n = y.size();
    if (n < 2) {
        for (double& v : y) v = 0.0;
        return;
    }
    // least-squares line over k = 0..n-1
    double sy = 0.0, sky = 0.0;
    for (size_t k = 0; k < n; ++k) {
        sy += y[k];
        sky += static_cast<double>(k) * y[k];
    }
    const double nn = static_cast<double>(n);
    const double sk = nn * (nn - 1.0) / 2.0;
    const double skk = (nn - 1.0) * nn * (2.0 * nn - 1.0) / 6.0;
    const double det = nn * skk - sk * sk;
    const double slope = (nn * sky - sk * sy) / det;
    const double offset = (sy - slope * sk) / nn;
    for (size_t k = 0; k < n; ++k) y[k] -= offset + slope * static_cast<double>(k);
}

double band_gain(double f, double f_lo, double f_hi, double w_lo, double w_hi) {
    const double af = std::abs(f);
    if (af < f_lo - w_lo || af > f_hi + w_hi) return 0.0;
    double g = 1.0;
    if (af < f_lo)
        g *= 0.5 * (1.0 + std::cos(std::numbers::pi * (f_lo - af) / w_lo));
    if (af > f_hi)
        g *= 0.5 * (1.0 + std::cos(std::numbers::pi * (af - f_hi) / w_hi));
    return g;
}

} // namespace

std::vector<double> preprocess_channel(const std::vector<double>& y, double dt,
                                       const PreprocessOptions& opts) {
    const double nyquist = 0.5 / dt;
    if (!(opts.f_lo_hz > 0.0) || !(opts.f_hi_hz > opts.f_lo_hz) || opts.f_hi_hz >= nyquist)
        throw ConfigError("preprocess: band must satisfy 0 < f_lo < f_hi < Nyquist");
    const double w_lo = opts.transition_lo_hz > 0.0 ? opts.transition_lo_hz : 0.2 * opts.f_lo_hz;
    const double w_hi = opts.transition_hi_hz > 0.0 ? opts.transition_hi_hz : 0.2 * opts.f_hi_hz;

    std::vector<double> work = y;
    detrend(work);

    const size_t n = work.size();
    std::vector<std::complex<double>> spec = fft::dft_real(work);
    const double df = 1.0 / (dt * static_cast<double>(n));
    for (size_t k = 0; k < n; ++k) {
        // two-sided frequency of bin k
        double f = static_cast<double>(k) * df;
        if (f > nyquist) f -= 1.0 / dt;
        spec[k] *= band_gain(f, opts.f_lo_hz, opts.f_hi_hz, w_lo, w_hi);
    }
    std::vector<std::complex<double>> back = fft::dft(spec, /*inverse=*/true);
    std::vector<double> out(n);
    for (size_t k = 0; k < n; ++k) out[k] = back[k].real();
    return out;
}

TimeSeriesSet preprocess(const TimeSeriesSet& ts, const PreprocessOptions& opts) {
    ts.validate();
    TimeSeriesSet out;
    out.t0 = ts.t0;
    out.dt = ts.dt;
    out.names = ts.names;
    out.channels.reserve(ts.channels.size());
    for (const auto& ch : ts.channels)
        out.channels.push_back(preprocess_channel(ch, ts.dt, opts));
    return out;
}

} // namespace macrogrid::modal
