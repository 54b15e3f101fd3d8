#include "neutro/neutrosophic.hpp"

#include <cmath>

namespace neutro {

std::string_view to_string(PrototypeLabel label) noexcept {
  switch (label) {
    case PrototypeLabel::T:  return "T";
    case PrototypeLabel::Tw: return "Tw";
    case PrototypeLabel::F:  return "F";
    case PrototypeLabel::Fw: return "Fw";
    case PrototypeLabel::C:  return "C";
    case PrototypeLabel::N:  return "N";
    case PrototypeLabel::S:  return "S";
    case PrototypeLabel::A:  return "A";
    case PrototypeLabel::H:  return "H";
    case PrototypeLabel::U:  return "U";
  }
  return "?";
}

NeutrosophicTriplet prototype_coordinates(PrototypeLabel label) noexcept {
  switch (label) {
    case PrototypeLabel::T:  return {UnitValue{1.0}, UnitValue{0.0}, UnitValue{0.0}};
    case PrototypeLabel::Tw: return {UnitValue{1.0}, UnitValue{1.0}, UnitValue{0.0}};
    case PrototypeLabel::F:  return {UnitValue{0.0}, UnitValue{0.0}, UnitValue{1.0}};
    case PrototypeLabel::Fw: return {UnitValue{0.0}, UnitValue{1.0}, UnitValue{1.0}};
    case PrototypeLabel::C:  return {UnitValue{1.0}, UnitValue{0.0}, UnitValue{1.0}};
    case PrototypeLabel::N:  return {UnitValue{0.0}, UnitValue{1.0}, UnitValue{0.0}};
    case PrototypeLabel::S:  return {UnitValue{1.0}, UnitValue{1.0}, UnitValue{1.0}};
    case PrototypeLabel::A:  return {UnitValue{0.5}, UnitValue{0.0}, UnitValue{0.5}};
    case PrototypeLabel::H:  return {UnitValue{0.5}, UnitValue{1.0}, UnitValue{0.5}};
    case PrototypeLabel::U:  return {UnitValue{0.0}, UnitValue{0.0}, UnitValue{0.0}};
  }
  return {};
}

namespace {

double index_for(const DecaIndexes& d, PrototypeLabel label) noexcept {
  switch (label) {
    case PrototypeLabel::T:  return d.t;
    case PrototypeLabel::Tw: return d.t_w;
    case PrototypeLabel::F:  return d.f;
    case PrototypeLabel::Fw: return d.f_w;
    case PrototypeLabel::C:  return d.c;
    case PrototypeLabel::N:  return d.n;
    case PrototypeLabel::S:  return d.s;
    case PrototypeLabel::A:  return d.a;
    case PrototypeLabel::H:  return d.h;
    case PrototypeLabel::U:  return d.u;
  }
  return 0.0;
}

}  // namespace

DecaIndexes deca_decompose(const NeutrosophicTriplet& triplet, Variant variant) {
  const BifuzzyAux aux = bifuzzy_aux({triplet.mu, triplet.nu});
  const double abs_net = std::fabs(aux.net_truth);
  const double abs_def = std::fabs(aux.definedness);
  const UnitValue omega_bar{1.0 - triplet.omega.value()};

  // Unscaled masses; the truth pair splits against 1 - omega, the
  // ignorance/contradiction pair against omega itself.
  const SplitPair truth = conjugate_split(UnitValue{std::fmax(aux.net_truth, 0.0)}, omega_bar);
  const SplitPair falsity = conjugate_split(UnitValue{std::fmax(-aux.net_truth, 0.0)}, omega_bar);
  const SplitPair ignorance =
      conjugate_split(UnitValue{std::fmax(-aux.definedness, 0.0)}, triplet.omega);
  const SplitPair contradiction =
      conjugate_split(UnitValue{std::fmax(aux.definedness, 0.0)}, triplet.omega);

  double t = truth.strong, t_w = truth.weak;
  double f = falsity.strong, f_w = falsity.weak;
  double n = ignorance.strong, u = ignorance.weak;
  double s = contradiction.strong, c = contradiction.weak;
  double a, h;
  if (variant == Variant::I) {
    a = (1.0 - std::fmin(abs_net, omega_bar)) - std::fmax(abs_def, triplet.omega);
    h = (1.0 - std::fmax(abs_net, omega_bar)) - std::fmin(abs_def, triplet.omega);
  } else {
    const double net_scale = 1.0 - abs_def / 2.0;
    const double def_scale = 1.0 - abs_net / 2.0;
    t *= net_scale;
    t_w *= net_scale;
    f *= net_scale;
    f_w *= net_scale;
    n *= def_scale;
    u *= def_scale;
    s *= def_scale;
    c *= def_scale;
    const double scaled_net = abs_net * net_scale;
    const double scaled_def = abs_def * def_scale;
    a = (1.0 - std::fmin(scaled_net, omega_bar)) - std::fmax(scaled_def, triplet.omega);
    h = (1.0 - std::fmax(scaled_net, omega_bar)) - std::fmin(scaled_def, triplet.omega);
  }
  return {UnitValue{t}, UnitValue{t_w}, UnitValue{f}, UnitValue{f_w}, UnitValue{c},
          UnitValue{n}, UnitValue{s},   UnitValue{u}, UnitValue{a},   UnitValue{h},
          variant};
}

NeutrosophicTriplet deca_recompose(const DecaIndexes& d) {
  if (d.variant != Variant::I) {
    throw VariantUnsupported("deca_recompose: variant II has no exact inverse");
  }
  // Summation order mirrors prototype_combination so the two routes agree
  // bit for bit.
  const double mu =
      d.t.value() + d.t_w.value() + d.c.value() + d.s.value() + 0.5 * d.a.value() + 0.5 * d.h.value();
  const double omega =
      d.n.value() + d.t_w.value() + d.f_w.value() + d.s.value() + d.h.value();
  const double nu =
      d.f.value() + d.f_w.value() + d.c.value() + d.s.value() + 0.5 * d.a.value() + 0.5 * d.h.value();
  return {UnitValue{mu}, UnitValue{omega}, UnitValue{nu}};
}

NeutrosophicTriplet prototype_combination(const DecaIndexes& indexes) {
  double mu = 0.0, omega = 0.0, nu = 0.0;
  for (PrototypeLabel label : kPrototypeLabels) {
    const double weight = index_for(indexes, label);
    const NeutrosophicTriplet p = prototype_coordinates(label);
    mu += weight * p.mu.value();
    omega += weight * p.omega.value();
    nu += weight * p.nu.value();
  }
  return {UnitValue{mu}, UnitValue{omega}, UnitValue{nu}};
}

EntropyTriad entropy_triad(const NeutrosophicTriplet& triplet, Variant variant) {
  const DecaIndexes d = deca_decompose(triplet, variant);
  return {UnitValue{d.u.value() + d.c.value() + d.n.value() + d.s.value() + d.a.value() +
                    d.h.value()},
          UnitValue{d.t_w.value() + d.f_w.value()},
          UnitValue{d.t.value() + d.f.value()}};
}

int support_count(const DecaIndexes& indexes, double tolerance) {
  int count = 0;
  for (PrototypeLabel label : kPrototypeLabels) {
    if (index_for(indexes, label) > tolerance) {
      ++count;
    }
  }
  return count;
}

}  // namespace neutro
