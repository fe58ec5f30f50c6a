#pragma once

#include <complex>
#include <string>
#include <vector>

namespace macrogrid::sysid {

/// Empirical frequency response between an input and an output channel.
struct FrequencyResponse {
    std::vector<double> freqs_hz;               // strictly increasing
    std::vector<std::complex<double>> values;   // output units per input unit
    std::vector<double> coherence;              // per-bin quality in [0, 1]
    std::vector<std::string> warnings;

    void validate() const;
};

/// Ratio of output and input spectra at the probed bins. The record must
/// cover an integer number of periods of every probed frequency; bins where
/// the input spectrum is below the numeric floor are dropped with a warning.
FrequencyResponse estimate_frf(const std::vector<double>& u, const std::vector<double>& y,
                               double dt, const std::vector<double>& freqs_hz);

} // namespace macrogrid::sysid
