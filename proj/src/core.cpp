#include "neutro/core.hpp"

#include <string>

namespace neutro {

UnitValue::UnitValue(double raw, double noise_tol) {
  if (raw < 0.0) {
    if (raw < -noise_tol) {
      throw InternalError("unit value out of range: " + std::to_string(raw));
    }
    raw = 0.0;
  } else if (raw > 1.0) {
    if (raw > 1.0 + noise_tol) {
      throw InternalError("unit value out of range: " + std::to_string(raw));
    }
    raw = 1.0;
  } else if (raw == 0.0) {
    raw = 0.0;  // collapse -0.0
  }
  value_ = raw;
}

UnitValue godel_and(UnitValue x, UnitValue y) {
  return x.value() <= y.value() ? x : y;
}

UnitValue lukasiewicz_and(UnitValue x, UnitValue y) {
  const double sum = x.value() + y.value() - 1.0;
  return UnitValue{sum > 0.0 ? sum : 0.0};
}

SplitPair conjugate_split(UnitValue x, UnitValue w) {
  const UnitValue strong = godel_and(x, w);
  return {strong, UnitValue{x.value() - strong.value()}};
}

}  // namespace neutro
