#pragma once

#include <string>
#include <vector>

namespace macrogrid {

/// Uniformly sampled named channels from one simulation run.
struct TimeSeriesSet {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> channels; // aligned with names, equal length

    size_t samples() const { return channels.empty() ? 0 : channels[0].size(); }
    double t_end() const { return t0 + dt * (samples() > 0 ? static_cast<double>(samples() - 1) : 0.0); }

    int channel_index(const std::string& name) const;
    const std::vector<double>& channel(const std::string& name) const;
    bool has_channel(const std::string& name) const { return channel_index(name) >= 0; }

    /// Contiguous slice [t_start, t_start + length) on the sample grid.
    /// Throws if the window extends past the end of the data.
    TimeSeriesSet slice(double t_start, double length) const;

    /// Integer-factor decimation with a boxcar anti-alias average.
    TimeSeriesSet decimate(int factor) const;

    void validate() const;
};

} // namespace macrogrid
