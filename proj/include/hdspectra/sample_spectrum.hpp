#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hdspectra/errors.hpp"

namespace hdspectra {

// Sorted sample eigenvalues of S_p = X^T X / n, together with the dimensions
// that produced them. Always carries all p eigenvalues: when p > n the
// trailing p - n entries are structural zeros, so the empirical spectral
// distribution of S_p is exactly the uniform measure on d.
class SampleSpectrum {
public:
    // eigs: descending, non-negative, at most min(n, p) strictly positive.
    SampleSpectrum(std::vector<double> eigs, std::size_t n, std::size_t p)
        : d_(std::move(eigs)), n_(n), p_(p) {
        if (n_ == 0 || p_ == 0) throw DataError("SampleSpectrum: n and p must be positive");
        if (d_.size() != p_) throw DataError("SampleSpectrum: expected p eigenvalues");
        std::size_t positive = 0;
        double prev = d_.empty() ? 0.0 : d_.front();
        for (double v : d_) {
            if (v < 0.0) throw DataError("SampleSpectrum: eigenvalues must be >= 0");
            if (v > prev + 1e-12 * std::max(1.0, prev))
                throw DataError("SampleSpectrum: eigenvalues must be non-increasing");
            prev = std::max(prev, v);
            if (v > 0.0) ++positive;
        }
        // Re-scan with exact ordering (tolerant check above guards rounding).
        for (std::size_t i = 1; i < d_.size(); ++i)
            if (d_[i] > d_[i - 1]) d_[i] = d_[i - 1];
        if (positive > std::min(n_, p_))
            throw DataError("SampleSpectrum: more than min(n,p) positive eigenvalues");
    }

    // The top min(n,p) eigenvalues plus explicit p: pads structural zeros.
    static SampleSpectrum from_top_eigs(std::vector<double> eigs, std::size_t n, std::size_t p) {
        if (eigs.size() > p) throw DataError("SampleSpectrum: more eigenvalues than p");
        eigs.resize(p, 0.0);
        return SampleSpectrum(std::move(eigs), n, p);
    }

    const std::vector<double>& eigenvalues() const { return d_; }
    double eig(std::size_t k) const { return d_.at(k); }  // 0-based
    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    double gamma() const { return static_cast<double>(p_) / static_cast<double>(n_); }

    // The n eigenvalues of the Gram matrix X X^T / n: the p sample eigenvalues
    // truncated (p > n) or zero-padded (p < n) to length n.
    std::vector<double> gram_eigenvalues() const {
        std::vector<double> g(d_.begin(), d_.begin() + std::min(n_, p_));
        g.resize(n_, 0.0);
        return g;
    }

private:
    std::vector<double> d_;
    std::size_t n_;
    std::size_t p_;
};

}  // namespace hdspectra
