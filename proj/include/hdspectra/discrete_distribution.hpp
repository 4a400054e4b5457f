#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "hdspectra/errors.hpp"

namespace hdspectra {

// A weighted point-mass distribution on the positive reals. Used for the
// population spectral distribution H, its estimate, and empirical spectral
// distributions built from eigenvalue lists.
class DiscreteDistribution {
public:
    struct Atom {
        double location;
        double weight;
    };

    // Atoms must have strictly increasing positive locations and positive
    // weights summing to 1 (within 1e-12).
    explicit DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        validate();
    }

    // Builds from (location, weight) pairs in any order; merges exactly
    // coincident locations and drops zero-weight atoms. Weights are
    // renormalized to sum to 1.
    static DiscreteDistribution from_weighted(std::vector<Atom> atoms) {
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return a.location < b.location; });
        std::vector<Atom> merged;
        double total = 0.0;
        for (const Atom& a : atoms) {
            if (a.weight <= 0.0) continue;
            total += a.weight;
            if (!merged.empty() && coincident(merged.back().location, a.location)) {
                merged.back().weight += a.weight;
            } else {
                merged.push_back(a);
            }
        }
        if (merged.empty()) throw DataError("DiscreteDistribution: no positive-weight atoms");
        for (Atom& a : merged) a.weight /= total;
        return DiscreteDistribution(std::move(merged));
    }

    // Equal-weight empirical distribution of a list of values (an ESD).
    // Coincident values merge into a single atom carrying their joint mass.
    static DiscreteDistribution from_values(const std::vector<double>& values) {
        std::vector<Atom> atoms;
        atoms.reserve(values.size());
        const double w = 1.0 / static_cast<double>(values.size());
        for (double v : values) atoms.push_back({v, w});
        return from_weighted(std::move(atoms));
    }

    // Single unit atom.
    static DiscreteDistribution point_mass(double location) {
        return DiscreteDistribution({{location, 1.0}});
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    double min_location() const { return atoms_.front().location; }
    double max_location() const { return atoms_.back().location; }

    double mean() const {
        double m = 0.0;
        for (const Atom& a : atoms_) m += a.weight * a.location;
        return m;
    }

    double variance() const {
        const double m = mean();
        double v = 0.0;
        for (const Atom& a : atoms_) v += a.weight * (a.location - m) * (a.location - m);
        return v;
    }

    double cdf(double x) const {
        double c = 0.0;
        for (const Atom& a : atoms_) {
            if (a.location > x) break;
            c += a.weight;
        }
        return c;
    }

    // Smallest atom location with CDF >= level.
    double quantile(double level) const {
        double c = 0.0;
        for (const Atom& a : atoms_) {
            c += a.weight;
            if (c >= level - 1e-15) return a.location;
        }
        return atoms_.back().location;
    }

    // sup_x |F(x) - G(x)| evaluated over the union of atom locations.
    static double kolmogorov_distance(const DiscreteDistribution& f,
                                      const DiscreteDistribution& g) {
        double dist = 0.0;
        for (const Atom& a : f.atoms_) dist = std::max(dist, std::abs(f.cdf(a.location) - g.cdf(a.location)));
        for (const Atom& a : g.atoms_) dist = std::max(dist, std::abs(f.cdf(a.location) - g.cdf(a.location)));
        return dist;
    }

private:
    static bool coincident(double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
    }

    void validate() const {
        if (atoms_.empty()) throw DataError("DiscreteDistribution: empty atom list");
        double total = 0.0;
        double prev = 0.0;
        for (const Atom& a : atoms_) {
            if (!(a.location > 0.0)) throw DataError("DiscreteDistribution: atom location must be > 0");
            if (!(a.location > prev)) throw DataError("DiscreteDistribution: locations must be strictly increasing");
            if (!(a.weight > 0.0)) throw DataError("DiscreteDistribution: weights must be > 0");
            total += a.weight;
            prev = a.location;
        }
        if (std::abs(total - 1.0) > 1e-12) throw DataError("DiscreteDistribution: weights must sum to 1");
    }

    std::vector<Atom> atoms_;
};

}  // namespace hdspectra
