#pragma once

#include "macrogrid/sim/timeseries.hpp"

namespace macrogrid::modal {

struct PreprocessOptions {
    double f_lo_hz = 0.1;
    double f_hi_hz = 2.0;
    // raised-cosine transition widths; 0 picks 20% of the respective edge
    double transition_lo_hz = 0.0;
    double transition_hi_hz = 0.0;
};

/// Per-channel mean/linear-trend removal followed by a zero-phase
/// frequency-domain band-pass. Length is preserved.
TimeSeriesSet preprocess(const TimeSeriesSet& ts, const PreprocessOptions& opts);

/// Detrend + band-pass for a single channel (same filter as preprocess).
std::vector<double> preprocess_channel(const std::vector<double>& y, double dt,
                                       const PreprocessOptions& opts);

} // namespace macrogrid::modal
