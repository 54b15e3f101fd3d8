#pragma once

#include "neutro/core.hpp"

namespace neutro {

// The two scaling conventions of the decomposition family. Variant I is the
// piecewise-linear form with an exact inverse; variant II damps each certainty
// component by the opposing uncertainty and has no closed-form inverse.
enum class Variant { I = 1, II = 2 };

// A pair of independent truth/falsity degrees. mu + nu is NOT constrained to 1;
// the excess or deficit is exactly what the decomposition measures.
struct BifuzzyPair {
  UnitValue mu;  // degree of truth
  UnitValue nu;  // degree of falsity
};

// Derived coordinates of a pair: both live in [-1, 1].
struct BifuzzyAux {
  double net_truth;    // mu - nu: signed balance of truth over falsity
  double definedness;  // mu + nu - 1: positive = contradiction, negative = ignorance
};

// Five-way partition of unity carried by a pair.
struct PentaIndexes {
  UnitValue truth;
  UnitValue falsity;
  UnitValue ambiguity;
  UnitValue ignorance;
  UnitValue contradiction;
  Variant variant = Variant::I;
};

// Scalar entropy split of a pair: entropy + non_entropy = 1.
struct BifuzzyEntropy {
  UnitValue entropy;
  UnitValue non_entropy;
};

BifuzzyAux bifuzzy_aux(const BifuzzyPair& pair) noexcept;

// Decomposes a pair into the five indexes. Always sums to 1; truth*falsity and
// ignorance*contradiction are exactly zero.
PentaIndexes penta_decompose(const BifuzzyPair& pair, Variant variant);

// Exact inverse of the variant-I decomposition:
// mu = truth + contradiction + ambiguity/2, nu symmetric.
// Throws VariantUnsupported for variant-II indexes.
BifuzzyPair penta_recompose(const PentaIndexes& indexes);

// entropy = ambiguity + ignorance + contradiction, non_entropy = truth + falsity.
BifuzzyEntropy bifuzzy_entropy(const BifuzzyPair& pair, Variant variant);

}  // namespace neutro
