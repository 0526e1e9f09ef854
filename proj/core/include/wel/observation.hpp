#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wel/errors.hpp"

namespace wel {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ObsKind : std::uint8_t { Exact, RightCensored, LeftCensored, Interval };

// One censored datum, canonically encoded as the information set (lower, upper]
// (a degenerate point for Exact). All times are nonnegative; upper may be +inf.
struct Observation {
    ObsKind kind;
    double lower;
    double upper;

    static Observation exact(double v);
    static Observation right_censored(double at);
    static Observation left_censored(double at);
    static Observation interval(double lo, double hi);

    bool operator==(const Observation&) const = default;
};

// Returns the information set (lower, upper]; degenerate point for Exact.
inline std::pair<double, double> to_interval(const Observation& o) {
    return {o.lower, o.upper};
}

enum class SampleScheme : std::uint8_t {
    RightCensored,
    DoublyCensored,
    IntervalCase1,
    IntervalCase2,
    PartlyIntervalCase1,
    PartlyIntervalGeneral,
    Complete,
};

const char* to_string(SampleScheme s);
SampleScheme scheme_from_string(const std::string& s);

// Which observation kinds a scheme can produce.
bool scheme_admits(SampleScheme s, ObsKind k);

// Throws SchemeViolation naming the first offending row.
void validate_sample(const std::vector<Observation>& sample, SampleScheme s);

struct TwoSampleData {
    std::vector<Observation> sample_x;
    std::vector<Observation> sample_y;
    SampleScheme scheme_x = SampleScheme::Complete;
    SampleScheme scheme_y = SampleScheme::Complete;

    std::size_t n0() const { return sample_x.size(); }
    std::size_t n1() const { return sample_y.size(); }
    std::size_t n() const { return n0() + n1(); }

    void validate() const;
};

} // namespace wel
