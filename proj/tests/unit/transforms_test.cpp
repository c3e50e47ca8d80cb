#include "core/transforms.hpp"

#include "core/decomposition.hpp"
#include "core/equilibrium.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace nfgd;
using testing::Q;

TEST_SUITE("transforms") {

TEST_CASE("permutation reorders strategies and parameters") {
  auto space = StrategySpace::Make({"row", "col"}, {{"a", "b", "c"}, {"s", "t"}});
  auto g = Game<Rational>(space, {Q({"1", "2", "3", "4", "5", "6"}), Q({"0", "0", "0", "0", "0", "1"})});
  auto mu = MeasureVector<Rational>(space, {Q({"1", "2", "3"}), Q({"1", "1"})});
  auto gamma = CoMeasureVector<Rational>(space, {Q({"1", "2"}), Q({"1", "2", "3"})});
  PermutationSpec spec{0, {2, 0, 1}};
  auto p = Permute(g, spec);
  CHECK(p.space_ptr() == g.space_ptr());
  CHECK(p.payoff(0) == Q({"5", "6", "1", "2", "3", "4"}));
  auto [pmu, pgamma] = PermuteParams(mu, gamma, spec);
  CHECK(pmu.weights(0) == Q({"3", "1", "2"}));
  CHECK(pgamma.values(1) == Q({"3", "1", "2"}));
  CHECK(pgamma.values(0) == Q({"1", "2"}));
  CHECK_THROWS_AS(ValidatePermutation(*space, {0, {0, 0, 1}}), Error);
  CHECK_THROWS_AS(ValidatePermutation(*space, {2, {0, 1}}), Error);
}

TEST_CASE("translation by a strategic game is rejected") {
  auto doc = testing::Fixture("matching_pennies.game");
  CHECK_THROWS_WITH_AS(TranslateNonstrategic(doc.game, doc.game), doctest::Contains("translation not nonstrategic"),
                       Error);
  auto ns = Game<Rational>(doc.game.space_ptr(), {Q({"1", "2", "1", "2"}), Q({"5", "5", "7", "7"})});
  CHECK(TranslateNonstrategic(doc.game, ns) == doc.game + ns);
}

TEST_CASE("scaling multiplies by beta and divides gamma") {
  auto doc = testing::Fixture("strategy_dependent_scaling.game");
  auto beta = CoMeasureVector<Rational>::FromGenerator(doc.game.space_ptr(), {Q({"1", "3"}), Q({"2", "1"})});
  auto scaled = Scale(doc.game, beta);
  CHECK(scaled.payoff(0) == Q({"8", "-3", "-8", "3"}));
  CHECK(scaled.payoff(1) == Q({"-1", "1", "0", "0"}));
  auto bad = CoMeasureVector<Rational>(doc.game.space_ptr(), {Q({"1", "0"}), Q({"1", "1"})});
  CHECK_THROWS_AS(Scale(doc.game, bad), Error);
  auto product = CoMeasureProduct(CoMeasureQuotient(doc.gamma, beta), beta);
  CHECK(product == doc.gamma);
}

TEST_CASE("duplication copies payoffs and splits mu") {
  auto doc = testing::Fixture("matching_pennies.game");
  DuplicationSpec spec{0, 1, "t1", Rational(1, 4)};
  auto ext = ExtendDuplicate(doc.game, doc.mu, doc.gamma, spec);
  CHECK(ext.game.space().labels(0) == std::vector<std::string>{"s", "t", "t1"});
  CHECK(ext.game.payoff(0) == Q({"1", "-1", "-1", "1", "-1", "1"}));
  CHECK(ext.mu.weights(0) == Q({"1", "3/4", "1/4"}));
  CHECK(ext.gamma.values(1) == Q({"1", "1", "1"}));
  spec.lambda = 1;
  CHECK_THROWS_AS(ExtendDuplicate(doc.game, doc.mu, doc.gamma, spec), Error);
  spec.lambda = Rational(1, 2);
  spec.label = "s";
  CHECK_THROWS_WITH_AS(ExtendDuplicate(doc.game, doc.mu, doc.gamma, spec), doctest::Contains("label collision"), Error);
}

TEST_CASE("chain of duplicate reductions") {
  auto doc = testing::Fixture("two_duplicates.game");
  CHECK(IsHarmonic(doc.game, doc.mu, doc.gamma));
  CHECK(BestResponseEpsilon(doc.game, FindProfile(doc, "uniform")) == 0);

  auto once = ReduceDuplicate(doc.game, doc.mu, doc.gamma, 0, 0, 1);
  CHECK(once.game.space().labels(0) == std::vector<std::string>{"s1", "t"});
  CHECK(once.game.payoff(0) == Q({"2", "-1", "-1", "-4", "2", "2"}));
  CHECK(once.game.payoff(1) == Q({"-2", "1", "1", "4", "-2", "-2"}));
  CHECK(once.mu.weights(0) == Q({"2", "1"}));
  CHECK(once.mu.weights(1) == Q({"1", "1", "1"}));
  CHECK(once.gamma.values(0) == Q({"1", "1", "1"}));
  CHECK(once.gamma.values(1) == Q({"1", "1"}));
  CHECK(IsHarmonic(once.game, once.mu, once.gamma));
  auto x = MixedProfile<Rational>(once.game.space_ptr(), {Q({"2/3", "1/3"}), Q({"1/3", "1/3", "1/3"})});
  CHECK(BestResponseEpsilon(once.game, x) == 0);
  CHECK(HarmonicEquilibrium(once.game, once.mu, once.gamma).probabilities() == x.probabilities());

  auto twice = ReduceDuplicate(once.game, once.mu, once.gamma, 1, 1, 2);
  CHECK(twice.game.payoff(0) == Q({"2", "-1", "-4", "2"}));
  CHECK(twice.game.payoff(1) == Q({"-2", "1", "4", "-2"}));
  CHECK(twice.mu.weights(0) == Q({"2", "1"}));
  CHECK(twice.mu.weights(1) == Q({"1", "2"}));
  CHECK(IsHarmonic(twice.game, twice.mu, twice.gamma));
}

TEST_CASE("duplicate reduction preconditions") {
  auto doc = testing::Fixture("matching_pennies.game");
  CHECK_THROWS_WITH_AS(ReduceDuplicate(doc.game, doc.mu, doc.gamma, 0, 0, 1), doctest::Contains("not a duplicate"),
                       Error);
  auto dup = testing::Fixture("two_duplicates.game");
  auto gamma = CoMeasureVector<Rational>(dup.game.space_ptr(), {Q({"1", "1", "1"}), Q({"1", "2", "1"})});
  CHECK_THROWS_WITH_AS(ReduceDuplicate(dup.game, dup.mu, gamma, 0, 0, 1), doctest::Contains("gamma not coherent"),
                       Error);
}

TEST_CASE("redundant strategy elimination followed by scaling") {
  auto doc = testing::Fixture("redundant_scaling.game");
  CHECK(IsHarmonic(doc.game, doc.mu, doc.gamma));
  // a member of the equilibrium family with x = 2/5
  auto x = MixedProfile<Rational>(doc.game.space_ptr(), {Q({"2/5", "3/10", "3/10"}), Q({"1/2", "1/2"})});
  CHECK(BestResponseEpsilon(doc.game, x) == 0);

  RedundancySpec spec{0, 1, Q({"1/3", "2/3"})};
  auto reduced = ReduceRedundant(doc.game, doc.mu, doc.gamma, spec);
  CHECK(reduced.game.payoff(0) == Q({"1", "-1", "-1", "1"}));
  CHECK(reduced.game.payoff(1) == Q({"-2", "2", "2", "-2"}));
  CHECK(reduced.mu.weights(0) == Q({"1", "1"}));
  CHECK(reduced.mu.weights(1) == Q({"1", "1"}));
  CHECK(reduced.gamma.values(1) == Q({"1/2", "1/2"}));
  CHECK(IsHarmonic(reduced.game, reduced.mu, reduced.gamma));

  auto beta = CoMeasureVector<Rational>::Constant(reduced.game.space_ptr(), {Rational(1), Rational(1, 2)});
  auto scaled = Scale(reduced.game, beta);
  auto mp = testing::Fixture("matching_pennies.game");
  CHECK(scaled.payoff(0) == mp.game.payoff(0));
  CHECK(scaled.payoff(1) == mp.game.payoff(1));
  auto quotient = CoMeasureQuotient(reduced.gamma, beta);
  CHECK(quotient.values(0) == Q({"1", "1"}));
  CHECK(quotient.values(1) == Q({"1", "1"}));
  CHECK(IsHarmonic(scaled, reduced.mu, quotient));
}

TEST_CASE("redundancy preconditions") {
  auto doc = testing::Fixture("redundant_scaling.game");
  CHECK_THROWS_AS(ReduceRedundant(doc.game, doc.mu, doc.gamma, {0, 1, Q({"1/2", "1/2"})}), Error);
  CHECK_THROWS_AS(ReduceRedundant(doc.game, doc.mu, doc.gamma, {0, 1, Q({"1/3", "1/3"})}), Error);
  CHECK_THROWS_AS(ReduceRedundant(doc.game, doc.mu, doc.gamma, {0, 1, Q({"1"})}), Error);
  CHECK_THROWS_AS(ReduceRedundant(doc.game, doc.mu, doc.gamma, {0, 1, Q({"-1", "2"})}), Error);
  auto gamma = CoMeasureVector<Rational>(doc.game.space_ptr(), {Q({"1", "2"}), Q({"1/2", "1/2", "1/2"})});
  CHECK_THROWS_WITH_AS(ReduceRedundant(doc.game, doc.mu, gamma, {0, 1, Q({"1/3", "2/3"})}),
                       doctest::Contains("gamma not uniform"), Error);
}

TEST_CASE("duplication combined with strategy dependent scaling") {
  auto doc = testing::Fixture("strategy_dependent_scaling.game");
  auto d = Decompose(doc.game, doc.mu, doc.gamma);
  for (const char* split : {"1/2", "1/5"}) {
    CAPTURE(split);
    DuplicationSpec spec{0, 0, "s1", ParseRational(split)};
    auto ext = ExtendDuplicate(doc.game, doc.mu, doc.gamma, spec);
    const auto& space = ext.game.space_ptr();
    auto beta = CoMeasureVector<Rational>::FromGenerator(space, {Q({"1", "1", "3"}), Q({"2", "1"})});
    auto scaled = Scale(ext.game, beta);
    CHECK(scaled.payoff(0) == Q({"8", "-3", "8", "-3", "-8", "3"}));
    CHECK(scaled.payoff(1) == Q({"-1", "1", "-1", "1", "0", "0"}));
    auto gamma = CoMeasureQuotient(ext.gamma, beta);
    CHECK(gamma == CoMeasureVector<Rational>::FromGenerator(space, {Q({"1", "1", "1/3"}), Q({"1/2", "1"})}));
    auto ds = Decompose(scaled, ext.mu, gamma);
    CHECK(ds.potential.payoff(0) == Q({"4", "-1", "4", "-1", "-4", "1"}));
    CHECK(ds.potential.payoff(1) == Q({"1", "-1", "1", "-1", "-6", "6"}));
    CHECK(ds.harmonic.payoff(0) == Q({"4", "-2", "4", "-2", "-4", "2"}));
    CHECK(ds.harmonic.payoff(1) == Q({"-2", "2", "-2", "2", "6", "-6"}));
    CHECK(IsZeroGame(ds.nonstrategic));
    CHECK(ds.potential == Scale(ExtendGame(d.potential, spec), beta));
    CHECK(IsGammaPotential(ds.potential, gamma));
    CHECK(IsHarmonic(ds.harmonic, ext.mu, gamma));
  }
  const auto space = ExtendGame(doc.game, {0, 0, "s1", Rational(1, 2)}).space_ptr();
  auto beta = CoMeasureVector<Rational>::FromGenerator(space, {Q({"1", "1", "3"}), Q({"2", "1"})});
  auto pot = MapEquilibriumUnderScaling(MixedProfile<Rational>(space, {Q({"1/3", "1/3", "1/3"}), Q({"1/3", "2/3"})}), beta);
  CHECK(pot.probabilities(0) == Q({"3/7", "3/7", "1/7"}));
  CHECK(pot.probabilities(1) == Q({"1/5", "4/5"}));
  auto har = MapEquilibriumUnderScaling(MixedProfile<Rational>(space, {Q({"1/4", "1/4", "1/2"}), Q({"1/2", "1/2"})}), beta);
  CHECK(har.probabilities(0) == Q({"3/8", "3/8", "1/4"}));
  CHECK(har.probabilities(1) == Q({"1/3", "2/3"}));
  auto ext = ExtendDuplicate(doc.game, doc.mu, doc.gamma, {0, 0, "s1", Rational(1, 2)});
  auto ds = Decompose(Scale(ext.game, beta), ext.mu, CoMeasureQuotient(ext.gamma, beta));
  CHECK(BestResponseEpsilon(ds.potential, pot) == 0);
  CHECK(BestResponseEpsilon(ds.harmonic, har) == 0);
}

TEST_CASE("dropping a player slices the game") {
  auto doc = testing::Fixture("disjoint_equilibria_a.game");
  auto g = DropPlayer(doc.game, 2, 1);
  CHECK(g.num_players() == 2);
  CHECK(g.payoff(0) == Q({"-1", "2", "1", "-2"}));
  auto gamma = DropPlayer(doc.gamma, 2, 1);
  CHECK(gamma.values(0) == Q({"1", "1/2"}));
  CHECK(DropPlayer(doc.mu, 0).weights().size() == 2);
}

}  // TEST_SUITE
