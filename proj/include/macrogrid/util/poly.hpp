#pragma once

#include <complex>
#include <vector>

namespace macrogrid::poly {

using Complex = std::complex<double>;

// Polynomials are stored as real coefficient vectors in descending powers,
// e.g. {1, 3, 2} is s^2 + 3s + 2. The zero polynomial is {} or {0}.

/// Horner evaluation at a complex point.
Complex eval(const std::vector<double>& coeffs, Complex s);
Complex eval(const std::vector<Complex>& coeffs, Complex s);

/// Product of two polynomials (convolution of coefficients).
std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b);

/// Sum; shorter polynomial is zero-padded on the high side.
std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);

/// Roots via the companion-matrix eigenvalues. Leading near-zero
/// coefficients are stripped first; degree 0 yields no roots.
std::vector<Complex> roots(const std::vector<double>& coeffs);

/// Real polynomial from a conjugate-closed root set. Throws if the
/// imaginary residue of any coefficient exceeds the tolerance.
std::vector<double> from_roots(const std::vector<Complex>& r, double imag_tol = 1e-8);

/// Derivative.
std::vector<double> derivative(const std::vector<double>& coeffs);

/// Divide out a single real root or a complex-conjugate pair
/// (synthetic division). `root` with |imag| > tol removes the pair.
std::vector<double> deflate(const std::vector<double>& coeffs, Complex root, double imag_tol = 1e-9);

/// Normalize so the leading coefficient is 1.
std::vector<double> monic(std::vector<double> coeffs);

} // namespace macrogrid::poly
