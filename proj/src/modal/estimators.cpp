#include "macrogrid/modal/estimators.hpp"

#include "macrogrid/util/errors.hpp"
#include "macrogrid/util/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace macrogrid::modal {

namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double damping_from(double sigma, double omega) {
    const double mag = std::hypot(sigma, omega);
    return mag > 0.0 ? sigma / mag : 0.0;
}

/// Residue fit against fixed discrete poles and conversion to modes.
EstimationResult assemble_modes(const std::vector<double>& y, double dt,
                                const std::vector<Complex>& z_roots, int max_modes) {
    const int n_samp = static_cast<int>(y.size());

    std::vector<Complex> z;
    for (const Complex& zi : z_roots) {
        if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag())) continue;
        if (std::abs(zi) < 1e-12) continue; // log undefined, pure numerical artifact
        z.push_back(zi);
    }

    EstimationResult res;
    if (z.empty()) {
        res.reconstruction_error = 1.0;
        return res;
    }

    const int m = static_cast<int>(z.size());
    Eigen::MatrixXcd vand(n_samp, m);
    for (int i = 0; i < m; ++i) {
        Complex p(1.0, 0.0);
        for (int k = 0; k < n_samp; ++k) {
            vand(k, i) = p;
            p *= z[i];
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) p = Complex(0.0, 0.0);
        }
    }
    Eigen::VectorXcd rhs(n_samp);
    for (int k = 0; k < n_samp; ++k) rhs(k) = Complex(y[k], 0.0);
    Eigen::VectorXcd residues = vand.colPivHouseholderQr().solve(rhs);

    double y_rms = 0.0;
    for (double v : y) y_rms += v * v;
    y_rms = std::sqrt(y_rms / n_samp);
    Eigen::VectorXcd fit = vand * residues;
    double err = 0.0;
    for (int k = 0; k < n_samp; ++k) {
        const double d = y[k] - fit(k).real();
        err += d * d;
    }
    err = std::sqrt(err / n_samp);
    res.reconstruction_error = y_rms > 0.0 ? err / y_rms : err;

    // one entry per conjugate pair: keep the positive-frequency root
    const double omega_tol = 1e-7 / dt * 0.0 + 1e-6; // rad/s floor for "oscillatory"
    for (int i = 0; i < m; ++i) {
        const Complex s = std::log(z[i]) / dt;
        if (s.imag() <= omega_tol) continue;
        Mode mode;
        mode.freq_hz = s.imag() / kTwoPi;
        mode.sigma = -s.real();
        mode.damping_ratio = damping_from(mode.sigma, s.imag());
        mode.oscillatory = true;
        // energy: RMS of this pair's contribution over the window
        double acc = 0.0;
        Complex p(1.0, 0.0);
        for (int k = 0; k < n_samp; ++k) {
            const double xk = 2.0 * (residues(i) * p).real();
            acc += xk * xk;
            p *= z[i];
        }
        mode.energy = std::sqrt(acc / n_samp);
        res.modes.push_back(mode);
    }
    std::stable_sort(res.modes.begin(), res.modes.end(),
                     [](const Mode& a, const Mode& b) { return a.energy > b.energy; });
    if (max_modes > 0 && static_cast<int>(res.modes.size()) > max_modes)
        res.modes.resize(max_modes);
    return res;
}

} // namespace

EstimationResult prony(const std::vector<double>& y, double dt, int model_order) {
    const int n = model_order;
    const int n_samp = static_cast<int>(y.size());
    if (dt <= 0.0) throw ConfigError("prony: dt must be > 0");
    if (n < 2) throw ConfigError("prony: model order must be >= 2");
    if (n_samp < 3 * n)
        throw ConfigError("prony: need at least 3*order samples, have " + std::to_string(n_samp));

    // forward linear prediction y[k] = -sum_j a_j y[k-j]
    const int rows = n_samp - n;
    Eigen::MatrixXd lp(rows, n);
    Eigen::VectorXd rhs(rows);
    for (int k = 0; k < rows; ++k) {
        for (int j = 0; j < n; ++j) lp(k, j) = y[n - 1 + k - j];
        rhs(k) = -y[n + k];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(lp, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double s_max = svd.singularValues()(0);
    const double s_min = svd.singularValues()(svd.singularValues().size() - 1);
    if (!(s_max > 0.0) || s_min < 1e-13 * s_max)
        throw NumericalError(
            "prony: ill-conditioned linear prediction; reduce the model order or "
            "use a different window");
    Eigen::VectorXd a = svd.solve(rhs);

    std::vector<double> charpoly(n + 1);
    charpoly[0] = 1.0;
    for (int j = 0; j < n; ++j) charpoly[j + 1] = a(j);
    return assemble_modes(y, dt, poly::roots(charpoly), n / 2);
}

EstimationResult matrix_pencil(const std::vector<double>& y, double dt,
                               const MatrixPencilOptions& opts) {
    const int n_samp = static_cast<int>(y.size());
    if (dt <= 0.0) throw ConfigError("matrix_pencil: dt must be > 0");
    if (n_samp < 8) throw ConfigError("matrix_pencil: record too short");
    int pencil = opts.pencil_param > 0 ? opts.pencil_param : n_samp / 3;
    if (pencil < n_samp / 3 || pencil > n_samp / 2)
        throw ConfigError("matrix_pencil: pencil parameter must satisfy N/3 <= L <= N/2");

    const int rows = n_samp - pencil;
    Eigen::MatrixXd hankel(rows, pencil + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= pencil; ++j) hankel(i, j) = y[i + j];

    Eigen::BDCSVD<Eigen::MatrixXd> svd(hankel, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0)) throw NumericalError("matrix_pencil: no modes found (zero data)");
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) >= opts.sv_cutoff * sv(0)) ++rank;
    if (rank == 0) throw NumericalError("matrix_pencil: no modes found");
    rank = std::min(rank, pencil);

    Eigen::MatrixXd vt = svd.matrixV().leftCols(rank); // (L+1) x rank
    Eigen::MatrixXd v1 = vt.topRows(pencil);
    Eigen::MatrixXd v2 = vt.bottomRows(pencil);
    Eigen::MatrixXd pencil_mat = v1.colPivHouseholderQr().solve(v2); // rank x rank
    Eigen::EigenSolver<Eigen::MatrixXd> es(pencil_mat, /*computeEigenvectors=*/false);

    std::vector<Complex> z(rank);
    for (int i = 0; i < rank; ++i) z[i] = es.eigenvalues()(i);
    return assemble_modes(y, dt, z, opts.max_modes > 0 ? opts.max_modes : rank);
}

std::vector<ModeShape> mode_shapes(const TimeSeriesSet& ts, const std::vector<Mode>& modes,
                                   double residual_warn_fraction) {
    ts.validate();
    if (modes.empty()) return {};
    const int n_samp = static_cast<int>(ts.samples());
    const int m = static_cast<int>(modes.size());
    if (n_samp < 2 * m + 2) throw ConfigError("mode_shapes: record too short for the mode set");

    // fixed modal basis, phases referenced to the window start
    Eigen::MatrixXd basis(n_samp, 2 * m);
    for (int i = 0; i < m; ++i) {
        const double w = kTwoPi * modes[i].freq_hz;
        const double sg = modes[i].sigma;
        for (int k = 0; k < n_samp; ++k) {
            const double t = k * ts.dt;
            const double env = std::exp(-sg * t);
            basis(k, 2 * i) = env * std::cos(w * t);
            basis(k, 2 * i + 1) = env * std::sin(w * t);
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);

    struct Raw {
        double amp, phase_deg;
    };
    std::vector<std::vector<Raw>> raw(m);
    for (auto& r : raw) r.resize(ts.channels.size());
    double worst_residual = 0.0;
    std::string worst_channel;

    for (size_t c = 0; c < ts.channels.size(); ++c) {
        Eigen::VectorXd rhs(n_samp);
        for (int k = 0; k < n_samp; ++k) rhs(k) = ts.channels[c][k];
        Eigen::VectorXd coef = qr.solve(rhs);
        const double energy = rhs.squaredNorm();
        const double resid = (rhs - basis * coef).squaredNorm();
        const double frac = energy > 0.0 ? resid / energy : 0.0;
        if (frac > worst_residual) {
            worst_residual = frac;
            worst_channel = ts.names[c];
        }
        for (int i = 0; i < m; ++i) {
            // y ~ A exp(-sigma t) cos(w t + phi) = a cos - b sin with a = A cos phi, b = -A sin phi
            const double a = coef(2 * i);
            const double b = coef(2 * i + 1);
            raw[i][c].amp = std::hypot(a, b);
            raw[i][c].phase_deg = wrap_deg(std::atan2(-b, a) * 180.0 / std::numbers::pi);
        }
    }

    std::vector<ModeShape> shapes(m);
    for (int i = 0; i < m; ++i) {
        shapes[i].mode = modes[i];
        double amax = 0.0;
        for (const Raw& r : raw[i]) amax = std::max(amax, r.amp);
        for (size_t c = 0; c < ts.channels.size(); ++c) {
            ModeShapePoint pt;
            pt.channel = ts.names[c];
            pt.amplitude = amax > 0.0 ? raw[i][c].amp / amax : 0.0;
            pt.phase_deg = raw[i][c].phase_deg;
            shapes[i].points.push_back(pt);
        }
        shapes[i].residual_fraction = worst_residual;
        if (worst_residual > residual_warn_fraction) {
            shapes[i].warning = true;
            shapes[i].warning_text = "residual energy fraction " + std::to_string(worst_residual) +
                                     " on channel " + worst_channel +
                                     " exceeds " + std::to_string(residual_warn_fraction);
        }
    }
    return shapes;
}

std::vector<DampingFlag> damping_report(const std::vector<Mode>& modes, double zeta_min) {
    std::vector<DampingFlag> out;
    out.reserve(modes.size());
    for (const Mode& mode : modes)
        out.push_back({mode, mode.damping_ratio < zeta_min});
    return out;
}

std::vector<JointMode> match_modes_across_events(
    const std::vector<std::vector<Mode>>& per_event_modes, double freq_tol_hz) {
    const int n_events = static_cast<int>(per_event_modes.size());
    std::vector<JointMode> clusters;
    for (int e = 0; e < n_events; ++e) {
        for (const Mode& mode : per_event_modes[e]) {
            JointMode* best = nullptr;
            double best_df = freq_tol_hz;
            for (auto& cl : clusters) {
                if (cl.per_event[e].has_value()) continue; // one match per event
                const double df = std::abs(cl.combined.freq_hz - mode.freq_hz);
                if (df <= best_df) {
                    best_df = df;
                    best = &cl;
                }
            }
            if (!best) {
                JointMode cl;
                cl.per_event.assign(n_events, std::nullopt);
                cl.combined = mode;
                cl.per_event[e] = mode;
                cl.observations = 1;
                clusters.push_back(std::move(cl));
            } else {
                best->per_event[e] = mode;
                ++best->observations;
            }
        }
    }
    // energy-weighted joint estimate
    for (auto& cl : clusters) {
        double wsum = 0.0, f = 0.0, sg = 0.0, en = 0.0;
        for (const auto& m : cl.per_event) {
            if (!m) continue;
            const double w = std::max(m->energy, 1e-300);
            wsum += w;
            f += w * m->freq_hz;
            sg += w * m->sigma;
            en += m->energy;
        }
        if (wsum > 0.0) {
            cl.combined.freq_hz = f / wsum;
            cl.combined.sigma = sg / wsum;
            cl.combined.energy = en / cl.observations;
            cl.combined.damping_ratio =
                damping_from(cl.combined.sigma, kTwoPi * cl.combined.freq_hz);
        }
    }
    std::stable_sort(clusters.begin(), clusters.end(), [](const JointMode& a, const JointMode& b) {
        return a.combined.energy > b.combined.energy;
    });
    return clusters;
}

double reconstruction_rms_error(const std::vector<double>& y, double dt,
                                const std::vector<Mode>& modes) {
    TimeSeriesSet ts;
    ts.t0 = 0.0;
    ts.dt = dt;
    ts.names = {"y"};
    ts.channels = {y};
    const int n_samp = static_cast<int>(y.size());
    const int m = static_cast<int>(modes.size());
    Eigen::MatrixXd basis(n_samp, 2 * m);
    for (int i = 0; i < m; ++i) {
        const double w = kTwoPi * modes[i].freq_hz;
        for (int k = 0; k < n_samp; ++k) {
            const double t = k * dt;
            const double env = std::exp(-modes[i].sigma * t);
            basis(k, 2 * i) = env * std::cos(w * t);
            basis(k, 2 * i + 1) = env * std::sin(w * t);
        }
    }
    Eigen::VectorXd rhs(n_samp);
    for (int k = 0; k < n_samp; ++k) rhs(k) = y[k];
    Eigen::VectorXd coef = basis.colPivHouseholderQr().solve(rhs);
    const double denom = rhs.norm();
    return denom > 0.0 ? (rhs - basis * coef).norm() / denom : 0.0;
}

} // namespace macrogrid::modal
