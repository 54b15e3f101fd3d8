#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "neutro/bifuzzy.hpp"
#include "test_util.hpp"

using neutro::BifuzzyAux;
using neutro::BifuzzyEntropy;
using neutro::bifuzzy_aux;
using neutro::bifuzzy_entropy;
using neutro::BifuzzyPair;
using neutro::penta_decompose;
using neutro::penta_recompose;
using neutro::PentaIndexes;
using neutro::UnitValue;
using neutro::Variant;
using testutil::close;
using testutil::unit_grid;

namespace {
BifuzzyPair pair_of(double mu, double nu) { return {UnitValue{mu}, UnitValue{nu}}; }
}  // namespace

TEST_CASE("auxiliaries") {
  const BifuzzyAux full = bifuzzy_aux(pair_of(1.0, 0.0));
  CHECK(full.net_truth == 1.0);
  CHECK(full.definedness == 0.0);

  const BifuzzyAux empty = bifuzzy_aux(pair_of(0.0, 0.0));
  CHECK(empty.net_truth == 0.0);
  CHECK(empty.definedness == -1.0);

  const BifuzzyAux mixed = bifuzzy_aux(pair_of(0.7, 0.2));
  CHECK(close(mixed.net_truth, 0.5));
  CHECK(close(mixed.definedness, -0.1));
}

TEST_CASE("five-way decomposition, plain variant") {
  const PentaIndexes p = penta_decompose(pair_of(0.7, 0.2), Variant::I);
  CHECK(close(p.truth, 0.5));
  CHECK(p.falsity.value() == 0.0);
  CHECK(close(p.ambiguity, 0.4));
  CHECK(close(p.ignorance, 0.1));
  CHECK(p.contradiction.value() == 0.0);
  CHECK(p.variant == Variant::I);
}

TEST_CASE("five-way decomposition, damped variant") {
  const PentaIndexes p = penta_decompose(pair_of(0.7, 0.2), Variant::II);
  CHECK(close(p.truth, 0.475));
  CHECK(p.falsity.value() == 0.0);
  CHECK(close(p.ambiguity, 0.45));
  CHECK(close(p.ignorance, 0.075));
  CHECK(p.contradiction.value() == 0.0);
}

TEST_CASE("pure states decompose to indicators") {
  for (Variant variant : {Variant::I, Variant::II}) {
    const PentaIndexes truth = penta_decompose(pair_of(1.0, 0.0), variant);
    CHECK(truth.truth.value() == 1.0);
    CHECK(truth.falsity.value() == 0.0);
    CHECK(truth.ambiguity.value() == 0.0);
    CHECK(truth.ignorance.value() == 0.0);
    CHECK(truth.contradiction.value() == 0.0);

    CHECK(penta_decompose(pair_of(0.0, 1.0), variant).falsity.value() == 1.0);
    CHECK(penta_decompose(pair_of(0.0, 0.0), variant).ignorance.value() == 1.0);
    CHECK(penta_decompose(pair_of(1.0, 1.0), variant).contradiction.value() == 1.0);
    CHECK(penta_decompose(pair_of(0.5, 0.5), variant).ambiguity.value() == 1.0);
  }
}

TEST_CASE("recomposition inverts the plain variant") {
  const BifuzzyPair back = penta_recompose(penta_decompose(pair_of(0.7, 0.2), Variant::I));
  CHECK(close(back.mu, 0.7));
  CHECK(close(back.nu, 0.2));

  // the fully ambiguous state recomposes onto the diagonal midpoint
  PentaIndexes ambiguous;
  ambiguous.ambiguity = UnitValue{1.0};
  const BifuzzyPair mid = penta_recompose(ambiguous);
  CHECK(mid.mu.value() == 0.5);
  CHECK(mid.nu.value() == 0.5);

  CHECK_THROWS_AS(penta_recompose(penta_decompose(pair_of(0.7, 0.2), Variant::II)),
                  neutro::VariantUnsupported);
}

TEST_CASE("entropy split") {
  const BifuzzyEntropy plain = bifuzzy_entropy(pair_of(0.7, 0.2), Variant::I);
  CHECK(close(plain.entropy, 0.5));
  CHECK(close(plain.non_entropy, 0.5));

  const BifuzzyEntropy damped = bifuzzy_entropy(pair_of(0.7, 0.2), Variant::II);
  CHECK(close(damped.entropy, 0.525));
  CHECK(close(damped.non_entropy, 0.475));
}

TEST_CASE("identities over the fine grid, both variants") {
  const std::vector<double> grid = unit_grid(100);
  for (Variant variant : {Variant::I, Variant::II}) {
    double worst_sum = 0.0, worst_roundtrip = 0.0, worst_closed = 0.0, worst_closure = 0.0;
    for (double mu : grid) {
      for (double nu : grid) {
        const BifuzzyPair x = pair_of(mu, nu);
        const PentaIndexes p = penta_decompose(x, variant);
        const double sum = p.truth.value() + p.falsity.value() + p.ambiguity.value() +
                           p.ignorance.value() + p.contradiction.value();
        worst_sum = std::fmax(worst_sum, std::fabs(sum - 1.0));

        // one side of each opposing pair is identically zero
        CHECK(p.truth.value() * p.falsity.value() == 0.0);
        CHECK(p.ignorance.value() * p.contradiction.value() == 0.0);
        CHECK(p.truth.value() >= 0.0);
        CHECK(p.falsity.value() >= 0.0);
        CHECK(p.ambiguity.value() >= 0.0);
        CHECK(p.ignorance.value() >= 0.0);
        CHECK(p.contradiction.value() >= 0.0);

        const BifuzzyEntropy e = bifuzzy_entropy(x, variant);
        worst_closure = std::fmax(worst_closure,
                                  std::fabs(e.entropy.value() + e.non_entropy.value() - 1.0));
        const BifuzzyAux aux = bifuzzy_aux(x);
        const double abs_net = std::fabs(aux.net_truth);
        const double closed =
            variant == Variant::I
                ? 1.0 - abs_net
                : 1.0 - abs_net * (1.0 - std::fabs(aux.definedness) / 2.0);
        worst_closed = std::fmax(worst_closed, std::fabs(e.entropy.value() - closed));

        if (variant == Variant::I) {
          const BifuzzyPair back = penta_recompose(p);
          worst_roundtrip = std::fmax(worst_roundtrip, std::fabs(back.mu.value() - mu));
          worst_roundtrip = std::fmax(worst_roundtrip, std::fabs(back.nu.value() - nu));
        }
      }
    }
    CHECK(worst_sum <= 1e-12);
    CHECK(worst_closure <= 1e-12);
    CHECK(worst_closed <= 1e-12);
    if (variant == Variant::I) CHECK(worst_roundtrip <= 1e-12);
  }
}
