#include "io/verify.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "io/doc_transforms.hpp"

using namespace nfgd;
using testing::Q;

TEST_SUITE("verify") {

TEST_CASE("law names round trip") {
  CHECK(AllLaws().size() == 11);
  for (Law law : AllLaws()) CHECK(ParseLaw(LawName(law)) == law);
  CHECK_FALSE(ParseLaw("nope").has_value());
}

TEST_CASE("generation is deterministic and within the documented ranges") {
  for (int trial = 0; trial < 30; ++trial) {
    auto a = GenerateInstance(Law::kScale, 5, trial, {});
    auto b = GenerateInstance(Law::kScale, 5, trial, {});
    CHECK(a.game == b.game);
    CHECK(a.beta == b.beta);
    const auto& space = a.game.space();
    CHECK(space.num_players() >= 2);
    CHECK(space.num_players() <= 3);
    for (int i = 0; i < space.num_players(); ++i) {
      CHECK(space.num_strategies(i) >= 2);
      CHECK(space.num_strategies(i) <= 4);
      for (std::size_t s = 0; s < space.num_profiles(); ++s) {
        CHECK(abs(a.game.at(i, s)) <= 9);
        CHECK(a.game.at(i, s).get_den() == 1);
      }
      for (const auto& w : a.mu.weights(i)) {
        CHECK((w == Rational(1, 3) || w == Rational(1, 2) || w == 1 || w == 2 || w == 3));
      }
    }
  }
  auto fixed = GenerateInstance(Law::kOrthogonality, 1, 0, {3, 4});
  CHECK(fixed.game.space().num_profiles() == 64);
  CHECK_FALSE(GenerateInstance(Law::kScale, 5, 0, {}).game == GenerateInstance(Law::kScale, 6, 0, {}).game);
}

TEST_CASE("every law passes on a few instances in both modes") {
  for (Law law : AllLaws()) {
    CAPTURE(LawName(law));
    for (bool exact : {true, false}) {
      VerifyOptions options;
      options.law = law;
      options.trials = 10;
      options.seed = 3;
      options.exact = exact;
      auto result = RunLaw(options);
      CHECK(result.passed == 10);
      CHECK_FALSE(result.failed_trial.has_value());
      CHECK(FormatVerifyResult(options, result).find("pass (10/10 trials, seed 3") != std::string::npos);
    }
  }
}

TEST_CASE("a broken instance is reported as a violation") {
  auto in = GenerateInstance(Law::kScale, 9, 0, {2, 2});
  in.beta = CoMeasureVector<Rational>::Constant(in.game.space_ptr(), {Rational(1), Rational(1)});
  CHECK(CheckLaw<Rational>(Law::kScale, in).ok);
  auto reduce = GenerateInstance(Law::kReduce, 9, 0, {});
  reduce.reduce_kept = reduce.reduce_removed == 0 ? 2 : 0;
  auto outcome = ReplayInstance(Law::kReduce, reduce, true);
  if (!outcome.ok) CHECK(outcome.detail.find("error:") == 0);
}

TEST_CASE("minimization zeroes payoffs and deletes players and strategies") {
  auto in = GenerateInstance(Law::kOrthogonality, 4, 0, {3, 3});
  // fails while player 0 has a nonzero payoff at profile 0
  auto predicate = [](const Instance& candidate) { return candidate.game.at(0, 0) != 0; };
  in.game = Game<Rational>(in.game.space_ptr(), [&] {
    auto p = in.game.payoffs();
    p[0][0] = 5;
    return p;
  }());
  auto small = MinimizeCounterexample(Law::kOrthogonality, in, predicate);
  CHECK(small.game.num_players() == 2);
  for (int i = 0; i < 2; ++i) CHECK(small.game.space().num_strategies(i) == 2);
  for (int i = 0; i < 2; ++i) {
    for (std::size_t s = 0; s < small.game.space().num_profiles(); ++s) {
      CHECK((small.game.at(i, s) == 0) == !(i == 0 && s == 0));
    }
  }
  CHECK(small.mu.weights().size() == 2);
  CHECK(small.gamma.values(1).size() == 2);
}

TEST_CASE("minimization keeps law data consistent") {
  for (Law law : {Law::kExtend, Law::kReduce, Law::kRedundant, Law::kPermute, Law::kTranslate, Law::kHarmonicEq}) {
    CAPTURE(LawName(law));
    auto in = GenerateInstance(law, 8, 1, {2, 3});
    auto small = MinimizeCounterexample(law, in, [&](const Instance& c) {
      // accept any shrink but require that the law still evaluates cleanly
      return ReplayInstance(law, c, true).ok;
    });
    CHECK(ReplayInstance(law, small, true).ok);
    CHECK(small.game.space().num_profiles() <= in.game.space().num_profiles());
  }
}

TEST_CASE("instance documents replay to the same instance") {
  for (Law law : AllLaws()) {
    CAPTURE(LawName(law));
    auto in = GenerateInstance(law, 17, 2, {});
    auto doc = InstanceDocument(law, in);
    auto parsed = ParseGameDocument(SerializeGameDocument(doc));
    auto back = InstanceFromDocument(law, parsed);
    CHECK(back.game == in.game);
    CHECK(back.mu == in.mu);
    CHECK(back.gamma == in.gamma);
    CHECK(ReplayInstance(law, back, true).ok);
    switch (law) {
      case Law::kScale:
      case Law::kHarmonicEq:
        CHECK(back.beta == in.beta);
        CHECK(back.beta.has_generator() == in.beta.has_generator());
        break;
      case Law::kTranslate:
        CHECK(back.translation == in.translation);
        break;
      case Law::kPermute:
        CHECK(back.permutation.sigma == in.permutation.sigma);
        break;
      case Law::kExtend:
        CHECK(back.duplication.lambda == in.duplication.lambda);
        CHECK(back.duplication.source == in.duplication.source);
        break;
      case Law::kReduce:
        CHECK(back.reduce_removed == in.reduce_removed);
        CHECK(back.reduce_kept == in.reduce_kept);
        break;
      case Law::kRedundant:
        CHECK(back.redundancy.alpha == in.redundancy.alpha);
        CHECK(back.redundancy.removed == in.redundancy.removed);
        break;
      case Law::kParamEquivalence:
        CHECK(back.eta == in.eta);
        CHECK(back.theta == in.theta);
        break;
      default:
        break;
    }
  }
  auto doc = InstanceDocument(Law::kScale, GenerateInstance(Law::kScale, 1, 0, {}));
  CHECK_THROWS_AS(InstanceFromDocument(Law::kExtend, doc), Error);
  doc.comments.clear();
  CHECK_THROWS_AS(InstanceFromDocument(Law::kScale, doc), Error);
}

TEST_CASE("document transforms carry profiles") {
  auto doc = testing::Fixture("two_duplicates.game");
  auto once = ReduceDocument(doc, "row", "s0", "s1");
  REQUIRE(once.profiles.size() == 1);
  CHECK(once.profiles[0].second.probabilities(0) == Q({"2/3", "1/3"}));
  auto back = ExtendDocument(once, "row", "s1", "s0", Rational(1, 2));
  CHECK(back.profiles[0].second.probabilities(0) == Q({"1/3", "1/3", "1/3"}));
  CHECK(back.mu.weights(0) == Q({"1", "1", "1"}));
  auto permuted = PermuteDocument(doc, "col", {"t1", "s", "t0"});
  CHECK(permuted.game.payoff(1)[0] == doc.game.payoff(1)[2]);
  CHECK(permuted.game.space().labels(1) == doc.game.space().labels(1));
  auto redundant = ReduceRedundantDocument(testing::Fixture("redundant_scaling.game"), "row", "r", Q({"1/3", "2/3"}));
  CHECK(redundant.mu.weights(0) == Q({"1", "1"}));
  CHECK_THROWS_WITH_AS(ReduceDocument(doc, "nobody", "s0", "s1"), doctest::Contains("unknown player"), Error);
  CHECK_THROWS_WITH_AS(ReduceDocument(doc, "row", "zz", "s1"), doctest::Contains("unknown strategy"), Error);
}

}  // TEST_SUITE
