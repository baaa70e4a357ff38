#pragma once

#include <stdexcept>
#include <string>

namespace lk {

/// Base of every error the library raises on bad input or failed invariants.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LK_DEFINE_ERROR(Name)      \
  struct Name : Error {            \
    using Error::Error;            \
  }

LK_DEFINE_ERROR(InvalidType);
LK_DEFINE_ERROR(UnknownRoot);
LK_DEFINE_ERROR(NotClosed);
LK_DEFINE_ERROR(TooLarge);
LK_DEFINE_ERROR(BudgetExceeded);
LK_DEFINE_ERROR(NotFound);
LK_DEFINE_ERROR(NegativeLetter);
LK_DEFINE_ERROR(UnknownSuite);
LK_DEFINE_ERROR(NotInCone);
// The following indicate implementation bugs; they are raised, never swallowed.
LK_DEFINE_ERROR(InconsistentSystem);
LK_DEFINE_ERROR(RuleNotApplicable);
LK_DEFINE_ERROR(NotMonomialMatrix);
LK_DEFINE_ERROR(AmbiguousRule);

#undef LK_DEFINE_ERROR

/// Enumeration limits. LK_BUDGET ("closed=14,weyl=5000,words=100000,ball=50000")
/// overrides individual fields.
struct Budget {
  int closed_set_roots = 12;
  long weyl_elements = 2000;
  long words = 1'000'000;
  long ball_elements = 200'000;

  static Budget from_env();
};

}  // namespace lk
