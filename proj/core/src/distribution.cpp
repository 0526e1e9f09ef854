#include "wel/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wel/errors.hpp"

namespace wel {

DiscreteDistribution::DiscreteDistribution(std::vector<double> support, std::vector<double> masses)
    : support_(std::move(support)), masses_(std::move(masses)) {
    if (support_.size() != masses_.size())
        throw DomainError("support and masses must have equal length");
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (std::isnan(support_[i]) || support_[i] < 0.0)
            throw DomainError("support points must be nonnegative");
        if (i + 1 < support_.size() && !(support_[i] < support_[i + 1]))
            throw DomainError("support must be strictly increasing");
        if (!(masses_[i] > 0.0)) throw DomainError("masses must be positive");
    }
    total_ = std::accumulate(masses_.begin(), masses_.end(), 0.0);
    if (total_ > 1.0 + 1e-12) throw DomainError("total mass exceeds 1: " + std::to_string(total_));
}

double DiscreteDistribution::finite_total() const {
    double t = total_;
    if (!support_.empty() && std::isinf(support_.back())) t -= masses_.back();
    return t;
}

double DiscreteDistribution::cdf(double t) const {
    double c = 0.0;
    for (std::size_t i = 0; i < support_.size() && support_[i] <= t; ++i) {
        if (std::isinf(support_[i]) && std::isfinite(t)) break;
        c += masses_[i];
    }
    return c;
}

double DiscreteDistribution::pmf_at(double v) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), v);
    if (it != support_.end() && *it == v) return masses_[static_cast<std::size_t>(it - support_.begin())];
    return 0.0;
}

double DiscreteDistribution::mass_in(double lo, double hi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        double w = support_[i];
        bool in = std::isinf(w) ? std::isinf(hi) : (w > lo && w <= hi);
        if (in) m += masses_[i];
    }
    return m;
}

DiscreteDistribution DiscreteDistribution::finite_part() const {
    if (support_.empty() || !std::isinf(support_.back())) return *this;
    std::vector<double> s(support_.begin(), support_.end() - 1);
    std::vector<double> m(masses_.begin(), masses_.end() - 1);
    return DiscreteDistribution(std::move(s), std::move(m));
}

DiscreteDistribution DiscreteDistribution::from_atoms(std::vector<std::pair<double, double>> atoms) {
    std::sort(atoms.begin(), atoms.end());
    std::vector<double> s, m;
    for (const auto& [w, p] : atoms) {
        if (p == 0.0) continue;
        if (!s.empty() && s.back() == w)
            m.back() += p;
        else {
            s.push_back(w);
            m.push_back(p);
        }
    }
    return DiscreteDistribution(std::move(s), std::move(m));
}

double sup_diff(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    const auto& sa = a.support();
    const auto& sb = b.support();
    double ca = 0.0, cb = 0.0, best = 0.0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() || j < sb.size()) {
        double wa = i < sa.size() ? sa[i] : kInf;
        double wb = j < sb.size() ? sb[j] : kInf;
        double w = std::min(wa, wb);
        if (std::isinf(w)) break; // sup over finite t only
        while (i < sa.size() && sa[i] == w) ca += a.masses()[i++];
        while (j < sb.size() && sb[j] == w) cb += b.masses()[j++];
        best = std::max(best, std::abs(ca - cb));
    }
    return best;
}

DiscreteDistribution ecdf(const std::vector<double>& values) {
    if (values.empty()) throw EmptySample("ecdf of empty sample");
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(values.size());
    const double w = 1.0 / static_cast<double>(values.size());
    for (double v : values) atoms.emplace_back(v, w);
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

} // namespace wel
