#pragma once

#include <complex>
#include <vector>

namespace macrogrid::fft {

using Complex = std::complex<double>;

/// In-place radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<Complex>& x, bool inverse);

/// DFT of arbitrary length via Bluestein's algorithm (exact bins).
std::vector<Complex> dft(const std::vector<Complex>& x, bool inverse = false);
std::vector<Complex> dft_real(const std::vector<double>& x);

/// Single-bin DFT sum X(f) = sum_n x[n] exp(-j 2 pi f n dt). `f` need not
/// lie on the record's bin grid.
Complex dft_bin(const std::vector<double>& x, double dt, double f_hz);

} // namespace macrogrid::fft
