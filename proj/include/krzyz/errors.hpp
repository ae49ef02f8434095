#pragma once

#include <stdexcept>
#include <string>

namespace krzyz {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KRZYZ_ERROR_CLASS(Name)                                 \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

// series
KRZYZ_ERROR_CLASS(ModeMismatch);
KRZYZ_ERROR_CLASS(DivisionByNonunit);
KRZYZ_ERROR_CLASS(BadConstantTerm);
KRZYZ_ERROR_CLASS(CompositionAtNonzero);
KRZYZ_ERROR_CLASS(InsufficientOrder);

// majorant
KRZYZ_ERROR_CLASS(NonpositiveParameter);
KRZYZ_ERROR_CLASS(NonrationalRotationInExactMode);

// caratheodory
KRZYZ_ERROR_CLASS(BadNormalization);
KRZYZ_ERROR_CLASS(FloatModeRefused);
KRZYZ_ERROR_CLASS(EmptySegment);

// schur
KRZYZ_ERROR_CLASS(NotInOmega);
KRZYZ_ERROR_CLASS(InvalidParameters);
KRZYZ_ERROR_CLASS(SingularSystem);
KRZYZ_ERROR_CLASS(RankDeficient);
KRZYZ_ERROR_CLASS(ZeroOutsideDisk);

// bounds
KRZYZ_ERROR_CLASS(BeyondHorizon);

// cli / report
KRZYZ_ERROR_CLASS(UnsupportedPayloadForCsv);

#undef KRZYZ_ERROR_CLASS

}  // namespace krzyz
