#include "neutro/bifuzzy.hpp"

#include <cmath>

namespace neutro {

BifuzzyAux bifuzzy_aux(const BifuzzyPair& pair) noexcept {
  return {pair.mu.value() - pair.nu.value(), pair.mu.value() + pair.nu.value() - 1.0};
}

PentaIndexes penta_decompose(const BifuzzyPair& pair, Variant variant) {
  const BifuzzyAux aux = bifuzzy_aux(pair);
  const double abs_net = std::fabs(aux.net_truth);
  const double abs_def = std::fabs(aux.definedness);

  double truth = std::fmax(aux.net_truth, 0.0);
  double falsity = std::fmax(-aux.net_truth, 0.0);
  double ignorance = std::fmax(-aux.definedness, 0.0);
  double contradiction = std::fmax(aux.definedness, 0.0);
  double ambiguity;
  if (variant == Variant::I) {
    ambiguity = (1.0 - abs_net) - abs_def;
  } else {
    // Each certainty component is damped by half the opposing mass; the
    // remainders still tile the unit.
    const double net_scale = 1.0 - abs_def / 2.0;
    const double def_scale = 1.0 - abs_net / 2.0;
    truth *= net_scale;
    falsity *= net_scale;
    ignorance *= def_scale;
    contradiction *= def_scale;
    ambiguity = (1.0 - abs_net) * (1.0 - abs_def);
  }
  return {UnitValue{truth},     UnitValue{falsity},       UnitValue{ambiguity},
          UnitValue{ignorance}, UnitValue{contradiction}, variant};
}

BifuzzyPair penta_recompose(const PentaIndexes& indexes) {
  if (indexes.variant != Variant::I) {
    throw VariantUnsupported("penta_recompose: variant II has no exact inverse");
  }
  const double half_ambiguity = 0.5 * indexes.ambiguity.value();
  return {UnitValue{indexes.truth.value() + indexes.contradiction.value() + half_ambiguity},
          UnitValue{indexes.falsity.value() + indexes.contradiction.value() + half_ambiguity}};
}

BifuzzyEntropy bifuzzy_entropy(const BifuzzyPair& pair, Variant variant) {
  const PentaIndexes idx = penta_decompose(pair, variant);
  return {UnitValue{idx.ambiguity.value() + idx.ignorance.value() + idx.contradiction.value()},
          UnitValue{idx.truth.value() + idx.falsity.value()}};
}

}  // namespace neutro
