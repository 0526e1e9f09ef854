#pragma once

#include <stdexcept>
#include <string>

namespace wel {

// Base for all library errors. `name()` is the stable machine-readable
// identifier carried into CLI diagnostics; `what()` adds context.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define WEL_DEFINE_ERROR(Type)                                   \
    class Type : public Error {                                  \
    public:                                                      \
        explicit Type(const std::string& msg) : Error(#Type, msg) {} \
    }

WEL_DEFINE_ERROR(ParseError);
WEL_DEFINE_ERROR(SchemeViolation);
WEL_DEFINE_ERROR(NegativeTime);
WEL_DEFINE_ERROR(EmptySample);
WEL_DEFINE_ERROR(EmptyDistribution);
WEL_DEFINE_ERROR(NoConvergence);
WEL_DEFINE_ERROR(DegenerateDatum);
WEL_DEFINE_ERROR(DomainError);
WEL_DEFINE_ERROR(Overflow);
WEL_DEFINE_ERROR(NoBracket);
WEL_DEFINE_ERROR(SingularHessian);
WEL_DEFINE_ERROR(Infeasible);
WEL_DEFINE_ERROR(DegenerateResample);
WEL_DEFINE_ERROR(ParamError);
WEL_DEFINE_ERROR(EnvelopeUnbounded);
WEL_DEFINE_ERROR(QuadratureFailure);

#undef WEL_DEFINE_ERROR

} // namespace wel
