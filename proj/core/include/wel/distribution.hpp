#pragma once

#include <cstddef>
#include <vector>

#include "wel/observation.hpp"

namespace wel {

// Discrete, possibly improper distribution: strictly increasing support with
// positive masses summing to at most 1. A final support point may be +inf to
// carry tail mass that the data cannot localize; cdf(t) excludes it for every
// finite t, so total() counts it but cdf(inf-) does not.
class DiscreteDistribution {
public:
    DiscreteDistribution() = default;
    DiscreteDistribution(std::vector<double> support, std::vector<double> masses);

    const std::vector<double>& support() const { return support_; }
    const std::vector<double>& masses() const { return masses_; }

    std::size_t size() const { return support_.size(); }
    bool empty() const { return support_.empty(); }

    double total() const { return total_; }
    // Mass on finite support points only.
    double finite_total() const;
    bool is_proper(double tol = 1e-8) const { return total_ >= 1.0 - tol; }

    double cdf(double t) const;
    double pmf_at(double v) const;
    // P{X in (lo, hi]}; hi == +inf includes any +inf atom.
    double mass_in(double lo, double hi) const;

    // Copy without a trailing +inf atom.
    DiscreteDistribution finite_part() const;

    // Atoms at distinct sorted values with masses; merges duplicates, drops zeros.
    static DiscreteDistribution from_atoms(std::vector<std::pair<double, double>> atoms);

private:
    std::vector<double> support_;
    std::vector<double> masses_;
    double total_ = 0.0;
};

// Exact sup over finite t of |cdf_a - cdf_b|, evaluated on the union of jump
// points (sufficient for right-continuous step functions).
double sup_diff(const DiscreteDistribution& a, const DiscreteDistribution& b);

// Empirical distribution of exact values.
DiscreteDistribution ecdf(const std::vector<double>& values);

} // namespace wel
