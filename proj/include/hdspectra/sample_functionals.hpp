#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "hdspectra/errors.hpp"
#include "hdspectra/sample_spectrum.hpp"

namespace hdspectra {

struct FgValue {
    double f;
    double g;
};

// Relative pole-proximity threshold: x is rejected when the gap to the
// largest non-spiked eigenvalue falls below this fraction of max(x, 1).
inline constexpr double kFgSeparationTol = 1e-3;

// Sample-side functionals evaluated from the empirical spectrum with the top
// m eigenvalues treated as spikes and excluded from the integrals:
//
//   f(x) = x / (1 + gamma/(p-m) * sum_{i>m} d_i / (x - d_i))
//   g(x) = 1 / (1 + gamma * f(x)/(p-m) * sum_{i>m} d_i / (x - d_i)^2)
//
// f inverts the spike-forward map directly from the data; g is the squared
// eigenvector-angle limit. Zero eigenvalues contribute nothing to either sum.
inline FgValue f_g_eval(const std::vector<double>& d, double gamma, std::size_t m, double x,
                        double separation_tol = kFgSeparationTol) {
    const std::size_t p = d.size();
    if (m >= p) throw DomainError("f_g_eval: m must be < p");
    if (gamma == 0.0) return {x, 1.0};
    const double nearest_pole = d[m];
    if (x - nearest_pole < separation_tol * std::max(x, 1.0))
        throw SeparationError("f_g_eval: x too close to a non-spiked sample eigenvalue");

    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t i = m; i < p; ++i) {
        if (d[i] == 0.0) continue;
        const double gap = x - d[i];
        s1 += d[i] / gap;
        s2 += d[i] / (gap * gap);
    }
    const double scale = gamma / static_cast<double>(p - m);
    const double f = x / (1.0 + scale * s1);
    const double g = 1.0 / (1.0 + scale * f * s2);
    return {f, g};
}

inline FgValue f_g_eval(const SampleSpectrum& sample, std::size_t m, double x,
                        double separation_tol = kFgSeparationTol) {
    return f_g_eval(sample.eigenvalues(), sample.gamma(), m, x, separation_tol);
}

// Companion Stieltjes transform of the Gram-matrix spectrum with the top m
// eigenvalues excluded:
//
//   v(z) = 1/(n-m) * sum_{i=m+1}^{n} 1 / (d_i - z),  Im(z) != 0.
//
// Values in the lower half-plane follow by reflection: v(conj z) = conj v(z).
inline std::complex<double> companion_stieltjes(const std::vector<double>& gram_eigs,
                                                std::size_t m, std::complex<double> z) {
    const std::size_t n = gram_eigs.size();
    if (m >= n) throw DomainError("companion_stieltjes: m must be < n");
    if (z.imag() == 0.0) throw DomainError("companion_stieltjes: z must not be real");
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = m; i < n; ++i) acc += 1.0 / (gram_eigs[i] - z);
    return acc / static_cast<double>(n - m);
}

}  // namespace hdspectra
