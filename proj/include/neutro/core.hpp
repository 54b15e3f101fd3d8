#pragma once

#include "neutro/errors.hpp"

namespace neutro {

// Identities in this library hold exactly in real arithmetic; computed doubles
// may carry dust up to this magnitude. Anything worse is a logic error.
inline constexpr double kIdentityTol = 1e-12;

// A membership degree in [0,1].
//
// Construction clamps values that miss the interval by at most `noise_tol`
// (floating-point dust from upstream arithmetic) and throws InternalError for
// anything farther out. Negative zero is normalised so rendering never
// produces "-0".
class UnitValue {
 public:
  constexpr UnitValue() = default;
  explicit UnitValue(double raw, double noise_tol = kIdentityTol);

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

// The result of splitting a degree x against a weight w: the part of x covered
// by w and the overflow beyond it. Recombines to x exactly: weak = x - strong.
struct SplitPair {
  UnitValue strong;
  UnitValue weak;
};

// Largest t-norm: min(x, y).
UnitValue godel_and(UnitValue x, UnitValue y);

// Smallest continuous t-norm: max(x + y - 1, 0).
UnitValue lukasiewicz_and(UnitValue x, UnitValue y);

// Splits x against weight w into (min(x, w), x - min(x, w)).
// The strong part equals godel_and(x, w); the weak part agrees with
// lukasiewicz_and(x, 1 - w) up to one rounding step.
SplitPair conjugate_split(UnitValue x, UnitValue w);

}  // namespace neutro
