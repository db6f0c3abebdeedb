#pragma once

#include <stdexcept>
#include <string>

namespace schwarzian {

// Base class of every typed error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SCHWARZIAN_ERROR(Name)                                        \
  struct Name : Error {                                               \
    explicit Name(const std::string& what = #Name) : Error(what) {}   \
  }

// exact algebra
SCHWARZIAN_ERROR(DivisionByZero);
SCHWARZIAN_ERROR(PoleAtConstant);
SCHWARZIAN_ERROR(SingularMatrix);
SCHWARZIAN_ERROR(NonUnitSeries);
SCHWARZIAN_ERROR(NonNilpotentExponent);

// differential calculus
SCHWARZIAN_ERROR(ConstantInput);
SCHWARZIAN_ERROR(ZeroEccentricity);
SCHWARZIAN_ERROR(SingularGauge);
SCHWARZIAN_ERROR(SingularFrameChange);
SCHWARZIAN_ERROR(ZeroWeight);
SCHWARZIAN_ERROR(SingularInput);
SCHWARZIAN_ERROR(DegenerateCoupling);

// modular forms
SCHWARZIAN_ERROR(UnsupportedWeight);

// mechanics
SCHWARZIAN_ERROR(NonPositiveStiffness);
SCHWARZIAN_ERROR(PoleOnPath);
SCHWARZIAN_ERROR(NonMonotoneClock);
SCHWARZIAN_ERROR(ConstantPhase);

#undef SCHWARZIAN_ERROR

}  // namespace schwarzian
