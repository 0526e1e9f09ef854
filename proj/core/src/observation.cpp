#include "wel/observation.hpp"

#include <cmath>

namespace wel {

namespace {

void require_finite_nonnegative(double v, const char* what) {
    if (std::isnan(v) || v < 0.0)
        throw NegativeTime(std::string(what) + " must be a nonnegative number, got " + std::to_string(v));
    if (std::isinf(v))
        throw NegativeTime(std::string(what) + " must be finite");
}

} // namespace

Observation Observation::exact(double v) {
    require_finite_nonnegative(v, "exact value");
    return {ObsKind::Exact, v, v};
}

Observation Observation::right_censored(double at) {
    require_finite_nonnegative(at, "right-censoring time");
    return {ObsKind::RightCensored, at, kInf};
}

Observation Observation::left_censored(double at) {
    require_finite_nonnegative(at, "left-censoring time");
    if (at <= 0.0) throw ParseError("left-censoring time must be positive");
    return {ObsKind::LeftCensored, 0.0, at};
}

Observation Observation::interval(double lo, double hi) {
    require_finite_nonnegative(lo, "interval lower endpoint");
    require_finite_nonnegative(hi, "interval upper endpoint");
    if (!(lo < hi))
        throw ParseError("interval requires lower < upper, got [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return {ObsKind::Interval, lo, hi};
}

const char* to_string(SampleScheme s) {
    switch (s) {
        case SampleScheme::RightCensored: return "right";
        case SampleScheme::DoublyCensored: return "doubly";
        case SampleScheme::IntervalCase1: return "interval1";
        case SampleScheme::IntervalCase2: return "interval2";
        case SampleScheme::PartlyIntervalCase1: return "partly1";
        case SampleScheme::PartlyIntervalGeneral: return "partly";
        case SampleScheme::Complete: return "complete";
    }
    return "?";
}

SampleScheme scheme_from_string(const std::string& s) {
    if (s == "right") return SampleScheme::RightCensored;
    if (s == "doubly") return SampleScheme::DoublyCensored;
    if (s == "interval1") return SampleScheme::IntervalCase1;
    if (s == "interval2") return SampleScheme::IntervalCase2;
    if (s == "partly1") return SampleScheme::PartlyIntervalCase1;
    if (s == "partly") return SampleScheme::PartlyIntervalGeneral;
    if (s == "complete") return SampleScheme::Complete;
    throw ParseError("unknown scheme '" + s +
                     "' (expected right|doubly|interval1|interval2|partly1|partly|complete)");
}

bool scheme_admits(SampleScheme s, ObsKind k) {
    using K = ObsKind;
    switch (s) {
        case SampleScheme::RightCensored: return k == K::Exact || k == K::RightCensored;
        case SampleScheme::DoublyCensored:
            return k == K::Exact || k == K::RightCensored || k == K::LeftCensored;
        case SampleScheme::IntervalCase1: return k == K::RightCensored || k == K::LeftCensored;
        case SampleScheme::IntervalCase2:
            return k == K::RightCensored || k == K::LeftCensored || k == K::Interval;
        case SampleScheme::PartlyIntervalCase1:
            return k == K::Exact || k == K::RightCensored || k == K::LeftCensored;
        case SampleScheme::PartlyIntervalGeneral:
            return k == K::Exact || k == K::Interval || k == K::RightCensored;
        case SampleScheme::Complete: return k == K::Exact;
    }
    return false;
}

void validate_sample(const std::vector<Observation>& sample, SampleScheme s) {
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (!scheme_admits(s, sample[i].kind))
            throw SchemeViolation("row " + std::to_string(i) + ": observation kind not admitted by scheme '" +
                                  to_string(s) + "'");
    }
}

void TwoSampleData::validate() const {
    if (sample_x.empty()) throw EmptySample("sample X is empty");
    if (sample_y.empty()) throw EmptySample("sample Y is empty");
    validate_sample(sample_x, scheme_x);
    validate_sample(sample_y, scheme_y);
}

} // namespace wel
