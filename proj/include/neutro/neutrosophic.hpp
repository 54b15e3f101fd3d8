#pragma once

#include <array>
#include <string_view>

#include "neutro/bifuzzy.hpp"

namespace neutro {

// Independent truth / indeterminacy / falsity degrees; the unconstrained cube.
struct NeutrosophicTriplet {
  UnitValue mu;     // degree of truth
  UnitValue omega;  // degree of indeterminacy
  UnitValue nu;     // degree of falsity
};

// Ten-way partition of unity carried by a triplet. Field names follow the
// canonical column order used by the batch formats.
struct DecaIndexes {
  UnitValue t;    // truth
  UnitValue t_w;  // weak truth (truth in excess of 1 - omega)
  UnitValue f;    // falsity
  UnitValue f_w;  // weak falsity
  UnitValue c;    // contradiction
  UnitValue n;    // negation (ignorance covered by omega)
  UnitValue s;    // saturation (contradiction covered by omega)
  UnitValue u;    // unknownness (ignorance in excess of omega)
  UnitValue a;    // ambiguity
  UnitValue h;    // hesitation
  Variant variant = Variant::I;
};

// Three-way split of total uncertainty: entropy + neutro_entropy + anti_entropy = 1.
struct EntropyTriad {
  UnitValue entropy;        // strict uncertainty (everything outside net truth/falsity)
  UnitValue neutro_entropy; // certainty rendered moot by indeterminacy
  UnitValue anti_entropy;   // surviving certainty
};

// The ten pure information states; each decomposes to a unit indicator vector.
enum class PrototypeLabel { T, Tw, F, Fw, C, N, S, A, H, U };

inline constexpr std::array<PrototypeLabel, 10> kPrototypeLabels = {
    PrototypeLabel::T, PrototypeLabel::Tw, PrototypeLabel::F, PrototypeLabel::Fw,
    PrototypeLabel::C, PrototypeLabel::N,  PrototypeLabel::S, PrototypeLabel::A,
    PrototypeLabel::H, PrototypeLabel::U};

std::string_view to_string(PrototypeLabel label) noexcept;

// Cube coordinates of a prototype, e.g. T -> (1,0,0), A -> (0.5,0,0.5).
NeutrosophicTriplet prototype_coordinates(PrototypeLabel label) noexcept;

// Decomposes a triplet into the ten indexes. The truth/falsity masses split
// against 1 - omega, the ignorance/contradiction masses against omega; a and h
// absorb the remainder. Always sums to 1.
DecaIndexes deca_decompose(const NeutrosophicTriplet& triplet, Variant variant);

// Exact inverse of the variant-I decomposition. Throws VariantUnsupported for
// variant-II indexes.
NeutrosophicTriplet deca_recompose(const DecaIndexes& indexes);

// Convex combination of the ten prototypes weighted by the indexes. For
// variant-I indexes this reproduces deca_recompose bit for bit.
NeutrosophicTriplet prototype_combination(const DecaIndexes& indexes);

// entropy = u+c+n+s+a+h, neutro_entropy = t_w+f_w, anti_entropy = t+f.
EntropyTriad entropy_triad(const NeutrosophicTriplet& triplet, Variant variant);

// Number of indexes strictly above `tolerance`. Variant I yields at most 4;
// variant II can reach 5.
int support_count(const DecaIndexes& indexes, double tolerance = kIdentityTol);

}  // namespace neutro
