#pragma once

#include "macrogrid/modal/mode.hpp"
#include "macrogrid/sysid/frf.hpp"

#include <complex>
#include <string>
#include <vector>

namespace macrogrid::sysid {

/// Continuous-time rational model. Coefficients are stored in descending
/// powers of s; the denominator is monic (leading coefficient 1).
struct TransferFunctionModel {
    std::vector<double> num;
    std::vector<double> den;

    struct FitQuality {
        double max_mag_err_rel = 0.0;
        double max_phase_err_deg = 0.0;
        bool ok = false;
        int pruned_poles = 0;
        std::string note;
    } fit;

    std::complex<double> eval(std::complex<double> s) const;
    int num_order() const { return static_cast<int>(num.size()) - 1; }
    int den_order() const { return static_cast<int>(den.size()) - 1; }
};

struct FitOptions {
    int max_iterations = 30;       // Sanathanan-Koerner reweighting passes
    double mag_tol_rel = 0.02;     // fit-quality gate
    double phase_tol_deg = 2.0;
    bool prune_unstable = true;
};

/// Frequency-domain iteratively reweighted rational least squares.
/// `order` = (numerator order nz, denominator order np), nz <= np, np >= 1.
TransferFunctionModel fit_tf(const FrequencyResponse& frf, int nz, int np,
                             const FitOptions& opts = {});

/// Denominator roots as modes, sorted by damping ratio ascending. Real
/// poles are reported with freq_hz = 0 and oscillatory = false.
std::vector<Mode> dominant_poles(const TransferFunctionModel& tf);

/// Exact FRF of a rational model on a frequency grid (test/round-trip aid).
FrequencyResponse synthesize_frf(const TransferFunctionModel& tf,
                                 const std::vector<double>& freqs_hz);

/// Uniform grid helper: f_lo, f_lo+step, ..., f_hi.
std::vector<double> frequency_grid(double f_lo_hz, double f_hi_hz, double step_hz);

} // namespace macrogrid::sysid
