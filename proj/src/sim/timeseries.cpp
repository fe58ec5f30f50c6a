#include "macrogrid/sim/timeseries.hpp"

#include "macrogrid/util/errors.hpp"

#include <cmath>

namespace macrogrid {

int TimeSeriesSet::channel_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

const std::vector<double>& TimeSeriesSet::channel(const std::string& name) const {
    const int i = channel_index(name);
    if (i < 0) throw ConfigError("no such channel: " + name);
    return channels[i];
}

TimeSeriesSet TimeSeriesSet::slice(double t_start, double length) const {
    validate();
    const long k0 = std::lround((t_start - t0) / dt);
    const long n = std::lround(length / dt);
    if (k0 < 0) throw ConfigError("window starts before the data");
    if (k0 + n > static_cast<long>(samples()))
        throw ConfigError("window extends past end of data (have " +
                          std::to_string(t_end()) + " s, need " +
                          std::to_string(t_start + length) + " s)");
    TimeSeriesSet out;
    out.t0 = t0 + dt * static_cast<double>(k0);
    out.dt = dt;
    out.names = names;
    out.channels.reserve(channels.size());
    for (const auto& ch : channels)
        out.channels.emplace_back(ch.begin() + k0, ch.begin() + k0 + n);
    return out;
}

TimeSeriesSet TimeSeriesSet::decimate(int factor) const {
    validate();
    if (factor < 1) throw ConfigError("decimation factor must be >= 1");
    if (factor == 1) return *this;
    TimeSeriesSet out;
    out.t0 = t0;
    out.dt = dt * factor;
    out.names = names;
    const size_t n_out = samples() / static_cast<size_t>(factor);
    for (const auto& ch : channels) {
        std::vector<double> d(n_out);
        for (size_t k = 0; k < n_out; ++k) {
            double acc = 0.0;
            for (int j = 0; j < factor; ++j) acc += ch[k * factor + j];
            d[k] = acc / factor;
        }
        out.channels.push_back(std::move(d));
    }
    return out;
}

void TimeSeriesSet::validate() const {
    if (dt <= 0.0) throw ConfigError("time series dt must be > 0");
    if (names.size() != channels.size()) throw ConfigError("channel name/data mismatch");
    for (const auto& ch : channels)
        if (ch.size() != samples()) throw ConfigError("channels have unequal length");
}

} // namespace macrogrid
