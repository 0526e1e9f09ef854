#pragma once

#include <cstdint>
#include <vector>

#include "wel/distribution.hpp"
#include "wel/observation.hpp"

namespace wel {

// Endpoint of an information set with open/closed bookkeeping: eps=0 means the
// point itself is included, eps=1 means "just above" (open left endpoint).
struct EndpointKey {
    double value;
    std::int8_t eps;
    friend bool operator<(const EndpointKey& a, const EndpointKey& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.eps < b.eps;
    }
    friend bool operator==(const EndpointKey& a, const EndpointKey& b) {
        return a.value == b.value && a.eps == b.eps;
    }
    friend bool operator<=(const EndpointKey& a, const EndpointKey& b) { return a < b || a == b; }
};

EndpointKey left_key(const Observation& o);
EndpointKey right_key(const Observation& o);

// Maximal intersections of the observations' information sets. The NPMLE can
// only place mass inside these; within one, the likelihood does not resolve
// the location, so mass is reported at the right endpoint (+inf when
// unbounded). Every observation covers a contiguous, nonempty range of them.
struct TurnbullSupport {
    struct Interval {
        EndpointKey left;
        EndpointKey right;
        double representative() const { return right.value; }
        bool degenerate() const { return left == right; }
    };
    std::vector<Interval> intervals;
    // membership[i] = {first, last} covered interval indices for observation i.
    std::vector<std::pair<std::size_t, std::size_t>> membership;
};

TurnbullSupport turnbull_support(const std::vector<Observation>& sample);

struct EmOptions {
    double tol = 1e-8;
    int max_iter = 10000;
    double prune = 1e-12;
    bool track_loglik = false;
};

struct NpmleResult {
    DiscreteDistribution dist;
    int iterations = 0;
    bool converged = true;
    double residual = 0.0;        // last max-abs mass change
    std::vector<double> loglik_trace; // filled when EmOptions::track_loglik
};

// Product-limit estimator for exact/right-censored samples. Improper when the
// largest observation is censored.
DiscreteDistribution kaplan_meier(const std::vector<Observation>& sample);

// Self-consistency EM on the Turnbull intervals, covering all censoring
// schemes handled here. Masses are never renormalized.
NpmleResult turnbull_em(const std::vector<Observation>& sample, const EmOptions& opts = {});

// Isotonic (max-min) estimator for current-status samples; coincides with the
// EM limit.
DiscreteDistribution pava_case1(const std::vector<Observation>& sample);

// Sum over observations of log P{X in information set} under dist.
double loglik_censored(const DiscreteDistribution& dist, const std::vector<Observation>& sample);

// Scheme-aware dispatcher: product-limit for complete/right-censored samples,
// isotonic fit for current-status, EM otherwise.
NpmleResult estimate_npmle(const std::vector<Observation>& sample, SampleScheme scheme,
                           const EmOptions& opts = {});

// Weighted isotonic regression (pool adjacent violators), nondecreasing fit.
std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& w);

} // namespace wel
