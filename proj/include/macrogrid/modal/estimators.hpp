#pragma once

#include "macrogrid/modal/mode.hpp"
#include "macrogrid/sim/timeseries.hpp"

#include <optional>
#include <vector>

namespace macrogrid::modal {

struct EstimationResult {
    std::vector<Mode> modes;          // oscillatory modes, sorted by energy desc
    double reconstruction_error = 0.0; // relative RMS of (fit - data), full model
};

/// Least-squares Prony on a single channel. `model_order` is the linear
/// prediction order n; at most n/2 oscillatory modes are returned.
EstimationResult prony(const std::vector<double>& y, double dt, int model_order);

struct MatrixPencilOptions {
    int pencil_param = 0;       // L; 0 means the N/3 default
    double sv_cutoff = 1e-8;    // relative singular-value threshold
    int max_modes = 0;          // 0 = no cap beyond the rank decision
};

/// Matrix Pencil on a single channel: SVD-filtered Hankel pencil.
EstimationResult matrix_pencil(const std::vector<double>& y, double dt,
                               const MatrixPencilOptions& opts = {});

/// Per-channel complex residues against fixed modal exponentials,
/// normalized so the largest channel amplitude is 1 per mode.
std::vector<ModeShape> mode_shapes(const TimeSeriesSet& ts, const std::vector<Mode>& modes,
                                   double residual_warn_fraction = 0.5);

struct DampingFlag {
    Mode mode;
    bool critical = false;
};

/// Flags modes with damping ratio below `zeta_min` (default 0.05) as critical.
std::vector<DampingFlag> damping_report(const std::vector<Mode>& modes, double zeta_min = 0.05);

struct JointMode {
    Mode combined;                    // energy-weighted average over events
    std::vector<std::optional<Mode>> per_event;
    int observations = 0;
};

/// Matches per-event mode lists by frequency proximity and reports jointly.
std::vector<JointMode> match_modes_across_events(
    const std::vector<std::vector<Mode>>& per_event_modes, double freq_tol_hz = 0.05);

/// Reconstructs a signal from modes + residues fit; used by tests and the
/// reconstruction-error metric. Returns the relative RMS misfit.
double reconstruction_rms_error(const std::vector<double>& y, double dt,
                                const std::vector<Mode>& modes);

} // namespace macrogrid::modal
