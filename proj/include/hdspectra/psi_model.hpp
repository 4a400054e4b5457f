#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "hdspectra/discrete_distribution.hpp"
#include "hdspectra/errors.hpp"

namespace hdspectra {

struct PsiValue {
    double psi;
    double psi_prime;
};

// The spike-forward map of a spectral model: for a non-spike distribution H
// and aspect ratio gamma,
//
//   psi(a)  = a + gamma * a * sum_k w_k t_k / (a - t_k)
//   psi'(a) = 1 - gamma * sum_k w_k (t_k / (a - t_k))^2
//
// psi' is strictly increasing on (max atom, inf); its unique root S_psi marks
// the lower boundary of the distant-spike domain, and psi is strictly
// increasing on (S_psi, inf) with image (psi(S_psi), inf).
class PsiModel {
public:
    PsiModel(DiscreteDistribution nonspikes, double gamma)
        : nonspikes_(std::move(nonspikes)), gamma_(gamma) {
        if (gamma_ < 0.0) throw DataError("PsiModel: gamma must be >= 0");
        if (gamma_ == 0.0) {
            // psi degenerates to the identity; every spike is distant.
            s_psi_ = std::numeric_limits<double>::infinity();
            psi_at_s_psi_ = -std::numeric_limits<double>::infinity();
            return;
        }
        s_psi_ = find_s_psi();
        psi_at_s_psi_ = eval(s_psi_).psi;
    }

    const DiscreteDistribution& nonspikes() const { return nonspikes_; }
    double gamma() const { return gamma_; }

    // gamma == 0: no high-dimensional distortion, psi == identity.
    bool no_distortion() const { return gamma_ == 0.0; }

    double s_psi() const { return s_psi_; }
    double psi_at_s_psi() const { return psi_at_s_psi_; }

    PsiValue eval(double alpha) const {
        if (gamma_ == 0.0) return {alpha, 1.0};
        if (!(alpha > nonspikes_.max_location()))
            throw DomainError("psi_eval: alpha must exceed the largest non-spike atom");
        double s1 = 0.0;  // sum w t / (a - t)
        double s2 = 0.0;  // sum w (t / (a - t))^2
        for (const auto& atom : nonspikes_.atoms()) {
            const double r = atom.location / (alpha - atom.location);
            s1 += atom.weight * atom.location / (alpha - atom.location);
            s2 += atom.weight * r * r;
        }
        return {alpha + gamma_ * alpha * s1, 1.0 - gamma_ * s2};
    }

    // Left inverse of psi on the distant-spike domain: the unique
    // lambda > S_psi with psi(lambda) = d. Requires d > psi(S_psi).
    double invert(double d) const {
        if (gamma_ == 0.0) return d;
        if (!(d > psi_at_s_psi_)) {
            std::ostringstream msg;
            msg << "psi_inverse: d = " << d << " is not in the distant-spike image (psi(S_psi) = "
                << psi_at_s_psi_ << ")";
            throw NotDistantSpikeError(msg.str(), psi_at_s_psi_);
        }
        const double tol = 1e-13 * std::max(d, 1.0);

        // Newton from the spiked-population closed-form inverse seeded with
        // the mean of the non-spikes.
        double lambda = sp_seed(d);
        if (!(lambda > s_psi_)) lambda = std::max(d, 2.0 * s_psi_);
        bool newton_ok = false;
        for (int it = 0; it < 200; ++it) {
            const PsiValue v = eval(lambda);
            const double resid = v.psi - d;
            if (std::abs(resid) <= tol) {
                newton_ok = true;
                break;
            }
            const double next = lambda - resid / v.psi_prime;
            if (!std::isfinite(next) || next <= s_psi_) break;  // fell out of the monotone region
            lambda = next;
        }
        if (newton_ok) return lambda;

        // Bisection on (S_psi, hi]; psi is strictly increasing there.
        double lo = s_psi_ * (1.0 + 1e-12);
        double hi = std::max(d, 2.0 * s_psi_);
        int guard = 0;
        while (eval(hi).psi < d) {
            hi *= 2.0;
            if (++guard > 200) throw ConvergenceError("psi_inverse: failed to bracket the root");
        }
        for (int it = 0; it < 500; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double resid = eval(mid).psi - d;
            if (std::abs(resid) <= tol || (hi - lo) <= 1e-15 * hi) return mid;
            if (resid < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        throw ConvergenceError("psi_inverse: bisection did not converge");
    }

private:
    double psi_prime_at(double alpha) const { return eval(alpha).psi_prime; }

    // d^2/da^2 psi = 2 gamma sum w t^2 / (a - t)^3, positive above the atoms.
    double psi_second_at(double alpha) const {
        double s = 0.0;
        for (const auto& atom : nonspikes_.atoms()) {
            const double g = alpha - atom.location;
            s += atom.weight * atom.location * atom.location / (g * g * g);
        }
        return 2.0 * gamma_ * s;
    }

    double find_s_psi() const {
        const double top = nonspikes_.max_location();
        const double tol = 1e-12;

        double alpha = top * 1.5;
        bool newton_ok = false;
        for (int it = 0; it < 200; ++it) {
            const double f = psi_prime_at(alpha);
            if (std::abs(f) <= tol) {
                newton_ok = true;
                break;
            }
            const double next = alpha - f / psi_second_at(alpha);
            if (!std::isfinite(next) || next <= top) break;  // overshot into the pole region
            alpha = next;
        }
        if (newton_ok && alpha > top) return alpha;

        // psi' is strictly increasing on (top, inf), from -inf up to 1.
        double lo = top * (1.0 + 1e-9);
        double hi = top * 1e6;
        if (psi_prime_at(hi) < 0.0) throw ConvergenceError("s_psi_root: psi' < 0 on the whole bracket");
        for (int it = 0; it < 500; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double f = psi_prime_at(mid);
            if (std::abs(f) <= tol || (hi - lo) <= 1e-15 * hi) return mid;
            if (f < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        throw ConvergenceError("s_psi_root: bisection did not converge");
    }

    // Closed-form inverse under a degenerate (single-atom) model at the mean
    // of the non-spikes; used only as a Newton starting point.
    double sp_seed(double d) const {
        const double zeta = nonspikes_.mean();
        const double dp = d / zeta;
        const double s = dp + 1.0 - gamma_;
        const double disc = s * s - 4.0 * dp;
        if (disc <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        return zeta * 0.5 * (s + std::sqrt(disc));
    }

    DiscreteDistribution nonspikes_;
    double gamma_;
    double s_psi_;
    double psi_at_s_psi_;
};

// Operation-style wrappers.
inline PsiValue psi_eval(const PsiModel& model, double alpha) { return model.eval(alpha); }
inline double s_psi_root(const PsiModel& model) { return model.s_psi(); }
inline double psi_inverse(const PsiModel& model, double d) { return model.invert(d); }

}  // namespace hdspectra
