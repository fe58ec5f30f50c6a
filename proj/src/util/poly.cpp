#include "macrogrid/util/poly.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace macrogrid::poly {

Complex eval(const std::vector<double>& coeffs, Complex s) {
    Complex acc(0.0, 0.0);
    for (double c : coeffs) acc = acc * s + c;
    return acc;
}

Complex eval(const std::vector<Complex>& coeffs, Complex s) {
    Complex acc(0.0, 0.0);
    for (const Complex& c : coeffs) acc = acc * s + c;
    return acc;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    const size_t n = std::max(a.size(), b.size());
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i < a.size(); ++i) out[n - a.size() + i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[n - b.size() + i] += b[i];
    return out;
}

std::vector<Complex> roots(const std::vector<double>& coeffs) {
    // strip leading coefficients that are negligible next to the largest
    double cmax = 0.0;
    for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
    if (cmax == 0.0) return {};
    size_t lead = 0;
    while (lead < coeffs.size() && std::abs(coeffs[lead]) < 1e-14 * cmax) ++lead;
    std::vector<double> p(coeffs.begin() + lead, coeffs.end());
    const int n = static_cast<int>(p.size()) - 1;
    if (n < 1) return {};

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(0, i) = -p[i + 1] / p[0];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

std::vector<double> from_roots(const std::vector<Complex>& r, double imag_tol) {
    std::vector<Complex> p{Complex(1.0, 0.0)};
    for (const Complex& root : r) {
        std::vector<Complex> q(p.size() + 1, Complex(0.0, 0.0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i];
            q[i + 1] -= p[i] * root;
        }
        p.swap(q);
    }
    std::vector<double> out(p.size());
    double scale = 0.0;
    for (const Complex& c : p) scale = std::max(scale, std::abs(c));
    for (size_t i = 0; i < p.size(); ++i) {
        if (std::abs(p[i].imag()) > imag_tol * std::max(1.0, scale))
            throw std::invalid_argument("from_roots: root set is not conjugate-closed");
        out[i] = p[i].real();
    }
    return out;
}

std::vector<double> derivative(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {0.0};
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = coeffs[i] * (n - i);
    return out;
}

std::vector<double> deflate(const std::vector<double>& coeffs, Complex root, double imag_tol) {
    if (std::abs(root.imag()) <= imag_tol) {
        // synthetic division by (s - r)
        std::vector<double> out(coeffs.size() - 1);
        double carry = 0.0;
        for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
            carry = coeffs[i] + carry * root.real();
            out[i] = carry;
        }
        return out;
    }
    // divide by (s^2 - 2 Re(r) s + |r|^2)
    const double b = -2.0 * root.real();
    const double c = std::norm(root);
    std::vector<double> q(coeffs.size() - 2, 0.0);
    std::vector<double> rem(coeffs.begin(), coeffs.end());
    for (size_t i = 0; i + 2 < rem.size() + 1 && i < q.size(); ++i) {
        q[i] = rem[i];
        rem[i + 1] -= q[i] * b;
        rem[i + 2] -= q[i] * c;
    }
    return q;
}

std::vector<double> monic(std::vector<double> coeffs) {
    if (coeffs.empty() || coeffs[0] == 0.0)
        throw std::invalid_argument("monic: zero leading coefficient");
    const double lead = coeffs[0];
    for (double& c : coeffs) c /= lead;
    return coeffs;
}

} // namespace macrogrid::poly
