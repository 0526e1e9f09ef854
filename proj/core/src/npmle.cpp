#include "wel/npmle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "wel/errors.hpp"

namespace wel {

EndpointKey left_key(const Observation& o) {
    // Exact v is the closed point {v}; everything else is open on the left.
    return {o.lower, static_cast<std::int8_t>(o.kind == ObsKind::Exact ? 0 : 1)};
}

EndpointKey right_key(const Observation& o) { return {o.upper, 0}; }

TurnbullSupport turnbull_support(const std::vector<Observation>& sample) {
    if (sample.empty()) throw EmptySample("turnbull_support of empty sample");

    struct Event {
        EndpointKey key;
        std::int8_t type; // 0 = left, 1 = right; left sorts first at equal keys
    };
    std::vector<Event> events;
    events.reserve(2 * sample.size());
    for (const auto& o : sample) {
        events.push_back({left_key(o), 0});
        events.push_back({right_key(o), 1});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.key == b.key) return a.type < b.type;
        return a.key < b.key;
    });

    TurnbullSupport ts;
    bool have_left = false;
    EndpointKey pending{};
    for (const auto& ev : events) {
        if (ev.type == 0) {
            pending = ev.key;
            have_left = true;
        } else if (have_left) {
            ts.intervals.push_back({pending, ev.key});
            have_left = false;
        }
    }

    ts.membership.reserve(sample.size());
    const auto& iv = ts.intervals;
    for (const auto& o : sample) {
        EndpointKey lk = left_key(o), rk = right_key(o);
        // intervals with q >= lk form a suffix, those with p <= rk a prefix
        std::size_t lo = static_cast<std::size_t>(
            std::lower_bound(iv.begin(), iv.end(), lk,
                             [](const TurnbullSupport::Interval& a, const EndpointKey& k) {
                                 return a.left < k;
                             }) -
            iv.begin());
        std::size_t hi = static_cast<std::size_t>(
            std::upper_bound(iv.begin(), iv.end(), rk,
                             [](const EndpointKey& k, const TurnbullSupport::Interval& a) {
                                 return k < a.right;
                             }) -
            iv.begin());
        if (lo >= hi)
            throw DegenerateDatum("observation covers no Turnbull interval");
        ts.membership.emplace_back(lo, hi - 1);
    }
    return ts;
}

DiscreteDistribution kaplan_meier(const std::vector<Observation>& sample) {
    if (sample.empty()) throw EmptySample("kaplan_meier of empty sample");
    for (const auto& o : sample)
        if (o.kind != ObsKind::Exact && o.kind != ObsKind::RightCensored)
            throw SchemeViolation("kaplan_meier accepts exact and right-censored observations only");

    // (time, is_event); events precede censorings at tied times
    std::vector<std::pair<double, int>> rows;
    rows.reserve(sample.size());
    for (const auto& o : sample) rows.emplace_back(o.lower, o.kind == ObsKind::Exact ? 1 : 0);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return std::tie(a.first, b.second) < std::tie(b.first, a.second); });

    const std::size_t n = rows.size();
    double surv = 1.0;
    std::vector<std::pair<double, double>> atoms;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        std::size_t deaths = 0;
        while (j < n && rows[j].first == rows[i].first) deaths += static_cast<std::size_t>(rows[j++].second);
        if (deaths > 0) {
            double jump = surv * static_cast<double>(deaths) / static_cast<double>(n - i);
            atoms.emplace_back(rows[i].first, jump);
            surv -= jump;
        }
        i = j;
    }
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

namespace {

struct CollapsedSample {
    std::vector<Observation> obs;
    std::vector<double> count;
    double n = 0.0;
};

CollapsedSample collapse_ties(const std::vector<Observation>& sample) {
    std::map<std::tuple<std::uint8_t, double, double>, double> tally;
    for (const auto& o : sample)
        tally[{static_cast<std::uint8_t>(o.kind), o.lower, o.upper}] += 1.0;
    CollapsedSample c;
    c.obs.reserve(tally.size());
    c.count.reserve(tally.size());
    for (const auto& [key, cnt] : tally) {
        c.obs.push_back({static_cast<ObsKind>(std::get<0>(key)), std::get<1>(key), std::get<2>(key)});
        c.count.push_back(cnt);
    }
    c.n = static_cast<double>(sample.size());
    return c;
}

} // namespace

NpmleResult turnbull_em(const std::vector<Observation>& sample, const EmOptions& opts) {
    if (sample.empty()) throw EmptySample("turnbull_em of empty sample");
    if (!(opts.tol > 0.0)) throw ParamError("turnbull_em requires tol > 0");

    CollapsedSample c = collapse_ties(sample);
    TurnbullSupport ts = turnbull_support(c.obs);
    const std::size_t k = ts.intervals.size();
    const std::size_t nobs = c.obs.size();

    std::vector<double> p(k, 1.0 / static_cast<double>(k));
    std::vector<double> cum(k + 1, 0.0), scatter(k + 1, 0.0), pnew(k, 0.0);

    NpmleResult res;
    double prev_ll = -kInf;
    int it = 0;
    double residual = kInf;
    for (it = 1; it <= opts.max_iter; ++it) {
        cum[0] = 0.0;
        for (std::size_t j = 0; j < k; ++j) cum[j + 1] = cum[j] + p[j];
        std::fill(scatter.begin(), scatter.end(), 0.0);
        double ll = 0.0;
        for (std::size_t i = 0; i < nobs; ++i) {
            auto [lo, hi] = ts.membership[i];
            double denom = cum[hi + 1] - cum[lo];
            ll += c.count[i] * std::log(denom);
            double w = c.count[i] / denom;
            scatter[lo] += w;
            scatter[hi + 1] -= w;
        }
        // EM ascent must hold up to roundoff; a violation indicates a bug
        if (ll < prev_ll - 1e-9 * (1.0 + std::abs(prev_ll)))
            throw NoConvergence("EM log-likelihood decreased");
        prev_ll = ll;
        if (opts.track_loglik) res.loglik_trace.push_back(ll);

        double acc = 0.0;
        residual = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            acc += scatter[j];
            pnew[j] = p[j] * acc / c.n;
            residual = std::max(residual, std::abs(pnew[j] - p[j]));
        }
        p.swap(pnew);
        if (residual < opts.tol) break;
    }

    res.iterations = std::min(it, opts.max_iter);
    res.converged = residual < opts.tol;
    res.residual = residual;

    std::vector<std::pair<double, double>> atoms;
    for (std::size_t j = 0; j < k; ++j)
        if (p[j] >= opts.prune) atoms.emplace_back(ts.intervals[j].representative(), p[j]);
    res.dist = DiscreteDistribution::from_atoms(std::move(atoms));
    return res;
}

std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& w) {
    struct Block {
        double mean, weight;
        std::size_t len;
    };
    std::vector<Block> stack;
    for (std::size_t i = 0; i < y.size(); ++i) {
        Block b{y[i], w[i], 1};
        while (!stack.empty() && stack.back().mean >= b.mean) {
            const Block& t = stack.back();
            b.mean = (t.mean * t.weight + b.mean * b.weight) / (t.weight + b.weight);
            b.weight += t.weight;
            b.len += t.len;
            stack.pop_back();
        }
        stack.push_back(b);
    }
    std::vector<double> fit;
    fit.reserve(y.size());
    for (const Block& b : stack) fit.insert(fit.end(), b.len, b.mean);
    return fit;
}

DiscreteDistribution pava_case1(const std::vector<Observation>& sample) {
    if (sample.empty()) throw EmptySample("pava_case1 of empty sample");
    // current-status row: examination time plus whether the event preceded it
    std::map<double, std::pair<double, double>> at; // time -> (count, events)
    for (const auto& o : sample) {
        double c;
        double d;
        if (o.kind == ObsKind::LeftCensored) {
            c = o.upper;
            d = 1.0;
        } else if (o.kind == ObsKind::RightCensored) {
            c = o.lower;
            d = 0.0;
        } else {
            throw SchemeViolation("pava_case1 accepts left/right-censored (current status) rows only");
        }
        at[c].first += 1.0;
        at[c].second += d;
    }

    std::vector<double> times, frac, wgt;
    for (const auto& [t, cd] : at) {
        times.push_back(t);
        wgt.push_back(cd.first);
        frac.push_back(cd.second / cd.first);
    }
    std::vector<double> f = isotonic_fit(frac, wgt);

    std::vector<std::pair<double, double>> atoms;
    double prev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        double jump = f[i] - prev;
        if (jump > 1e-15) atoms.emplace_back(times[i], jump);
        prev = std::max(prev, f[i]);
    }
    if (1.0 - prev > 1e-15) atoms.emplace_back(kInf, 1.0 - prev);
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

double loglik_censored(const DiscreteDistribution& dist, const std::vector<Observation>& sample) {
    double ll = 0.0;
    for (const auto& o : sample) {
        double pr = o.kind == ObsKind::Exact ? dist.pmf_at(o.lower) : dist.mass_in(o.lower, o.upper);
        if (!(pr > 0.0)) throw DegenerateDatum("observation has probability 0 under the distribution");
        ll += std::log(pr);
    }
    return ll;
}

NpmleResult estimate_npmle(const std::vector<Observation>& sample, SampleScheme scheme,
                           const EmOptions& opts) {
    switch (scheme) {
        case SampleScheme::Complete:
        case SampleScheme::RightCensored: {
            NpmleResult r;
            r.dist = kaplan_meier(sample);
            return r;
        }
        case SampleScheme::IntervalCase1: {
            NpmleResult r;
            r.dist = pava_case1(sample);
            return r;
        }
        default: return turnbull_em(sample, opts);
    }
}

} // namespace wel
