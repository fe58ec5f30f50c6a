#include "macrogrid/util/fft.hpp"

#include <cmath>
#include <numbers>

namespace macrogrid::fft {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}
} // namespace

void fft_pow2(std::vector<Complex>& x, bool inverse) {
    const size_t n = x.size();
    if (n < 2) return;
    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                Complex u = x[i + k];
                Complex v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        for (auto& v : x) v /= static_cast<double>(n);
    }
}

std::vector<Complex> dft(const std::vector<Complex>& x, bool inverse) {
    const size_t n = x.size();
    if (n == 0) return {};
    if ((n & (n - 1)) == 0) {
        std::vector<Complex> y = x;
        fft_pow2(y, inverse);
        return y;
    }
    // Bluestein: X[k] = conj(w[k]) * (a * b)[k], a[n] = x[n] conj(w[n]),
    // b[n] = w[n] with w[n] = exp(+/- j pi n^2 / N)
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Complex> w(n);
    for (size_t i = 0; i < n; ++i) {
        // n^2 mod 2N keeps the argument bounded for large records
        const size_t m = (i * i) % (2 * n);
        const double ang = sign * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        w[i] = Complex(std::cos(ang), std::sin(ang));
    }
    const size_t m = next_pow2(2 * n - 1);
    std::vector<Complex> a(m, Complex(0, 0)), b(m, Complex(0, 0));
    for (size_t i = 0; i < n; ++i) a[i] = x[i] * w[i];
    b[0] = std::conj(w[0]);
    for (size_t i = 1; i < n; ++i) b[i] = b[m - i] = std::conj(w[i]);
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);
    std::vector<Complex> y(n);
    for (size_t i = 0; i < n; ++i) y[i] = a[i] * w[i];
    if (inverse) {
        for (auto& v : y) v /= static_cast<double>(n);
    }
    return y;
}

std::vector<Complex> dft_real(const std::vector<double>& x) {
    std::vector<Complex> xc(x.size());
    for (size_t i = 0; i < x.size(); ++i) xc[i] = Complex(x[i], 0.0);
    return dft(xc, false);
}

Complex dft_bin(const std::vector<double>& x, double dt, double f_hz) {
    const double w = kTwoPi * f_hz * dt;
    const Complex step(std::cos(w), -std::sin(w));
    Complex acc(0.0, 0.0);
    Complex rot(1.0, 0.0);
    for (size_t k = 0; k < x.size(); ++k) {
        // refresh the rotator periodically to keep phase drift at roundoff
        if ((k & 1023u) == 0u) {
            const double a = w * static_cast<double>(k);
            rot = Complex(std::cos(a), -std::sin(a));
        }
        acc += x[k] * rot;
        rot *= step;
    }
    return acc;
}

} // namespace macrogrid::fft
