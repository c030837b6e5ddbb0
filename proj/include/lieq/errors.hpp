#pragma once

#include <stdexcept>
#include <string>

namespace lieq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIEQ_DEFINE_ERROR(Name)                 \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what_arg)  \
        : Error(#Name ": " + what_arg) {}       \
  };

LIEQ_DEFINE_ERROR(DivisionByZero)
LIEQ_DEFINE_ERROR(EvalAtZeroWithNegativeDegree)
LIEQ_DEFINE_ERROR(ParseError)
LIEQ_DEFINE_ERROR(DimensionMismatch)
LIEQ_DEFINE_ERROR(NotAnIdeal)
LIEQ_DEFINE_ERROR(NotLie)
LIEQ_DEFINE_ERROR(SourceMismatch)
LIEQ_DEFINE_ERROR(NotLieAtParameter)
LIEQ_DEFINE_ERROR(CocycleViolation)
LIEQ_DEFINE_ERROR(TrivialCenter)
LIEQ_DEFINE_ERROR(UnknownName)
LIEQ_DEFINE_ERROR(NonDivisible)
LIEQ_DEFINE_ERROR(QZero)
LIEQ_DEFINE_ERROR(SingularWeight)
LIEQ_DEFINE_ERROR(NonpositiveWeight)
LIEQ_DEFINE_ERROR(NegativeWeight)
LIEQ_DEFINE_ERROR(SingularT)
LIEQ_DEFINE_ERROR(SizeCap)
LIEQ_DEFINE_ERROR(NotARepresentation)
LIEQ_DEFINE_ERROR(UsageError)

#undef LIEQ_DEFINE_ERROR

}  // namespace lieq
