#pragma once

#include <stdexcept>
#include <string>

namespace lommelq {

// Base of every error raised by the library. kind() names the case so
// front-ends can report it without RTTI games.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define LOMMELQ_ERROR(Name)                                              \
    class Name : public Error {                                          \
    public:                                                              \
        using Error::Error;                                              \
        const char* kind() const noexcept override { return #Name; }     \
    }

LOMMELQ_ERROR(PoleError);
LOMMELQ_ERROR(ConvergenceError);
LOMMELQ_ERROR(SectorError);
LOMMELQ_ERROR(AccuracyError);
LOMMELQ_ERROR(BranchError);
LOMMELQ_ERROR(NotDegenerateError);
LOMMELQ_ERROR(DegenerateDenominator);
LOMMELQ_ERROR(UnsupportedCase);
LOMMELQ_ERROR(ValidityError);
LOMMELQ_ERROR(HypothesisError);
LOMMELQ_ERROR(DivergenceError);
LOMMELQ_ERROR(BoxEscapeError);
LOMMELQ_ERROR(ParamError);
LOMMELQ_ERROR(DegenerateQuadratic);
LOMMELQ_ERROR(ZeroOnContour);
LOMMELQ_ERROR(QuadratureError);
LOMMELQ_ERROR(DerivativeError);

#undef LOMMELQ_ERROR

} // namespace lommelq
