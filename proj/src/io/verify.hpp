#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "core/transforms.hpp"
#include "io/document.hpp"

namespace nfgd {

enum class Law {
  kOrthogonality,
  kReconstruction,
  kParamEquivalence,
  kPermute,
  kTranslate,
  kScale,
  kExtend,
  kReduce,
  kRedundant,
  kHarmonicEq,
  kEpsilonBound,
};

const std::vector<Law>& AllLaws();
const char* LawName(Law law);
std::optional<Law> ParseLaw(std::string_view name);

struct GeneratorOptions {
  std::optional<int> players;     // default: uniform in {2,3}
  std::optional<int> strategies;  // default: uniform in {2,3,4} per player
};

// One random trial. Fields beyond (game, mu, gamma) are used by the laws
// that need them.
struct Instance {
  Game<Rational> game;
  MeasureVector<Rational> mu;
  CoMeasureVector<Rational> gamma;
  PermutationSpec permutation;
  Game<Rational> translation;
  // Scaling co-measure; a product co-measure for the harmonic-eq law.
  CoMeasureVector<Rational> beta;
  DuplicationSpec duplication;
  int reduce_player = 0;
  int reduce_removed = 0;
  int reduce_kept = 0;
  RedundancySpec redundancy;
  Rational eta{1};
  Rational theta{1};
};

// Portable draws: payoffs uniform in [-9,9], parameters uniform over
// {1/3, 1/2, 1, 2, 3}; all mappings are explicit modulo reductions.
class InstanceGenerator {
 public:
  InstanceGenerator(std::uint64_t seed, int trial);
  int Below(int n);
  Rational Payoff();
  Rational Parameter();
  SpacePtr Space(const GeneratorOptions& options);
  Game<Rational> RandomGame(const SpacePtr& space);
  MeasureVector<Rational> RandomMeasure(const SpacePtr& space);
  CoMeasureVector<Rational> RandomCoMeasure(const SpacePtr& space);
  CoMeasureVector<Rational> RandomProductCoMeasure(const SpacePtr& space);

 private:
  std::mt19937_64 rng_;
};

Instance GenerateInstance(Law law, std::uint64_t seed, int trial, const GeneratorOptions& options);

struct CheckOutcome {
  bool ok = true;
  std::string detail;
};

// Evaluates one law on one instance in exact (Rational) or float (double)
// arithmetic. Precondition failures propagate as nfgd::Error.
template <typename T>
CheckOutcome CheckLaw(Law law, const Instance& instance);

// Greedy payoff zeroing, then strategy and player deletion, keeping every
// step after which `still_fails` holds.
using FailurePredicate = std::function<bool(const Instance&)>;
Instance MinimizeCounterexample(Law law, Instance instance, const FailurePredicate& still_fails);

GameDocument<Rational> InstanceDocument(Law law, const Instance& instance);
// Inverse of InstanceDocument: reads the law data back from the comments.
Instance InstanceFromDocument(Law law, const GameDocument<Rational>& doc);
// Errors raised by the law's operations count as violations.
CheckOutcome ReplayInstance(Law law, const Instance& instance, bool exact);

struct VerifyOptions {
  Law law = Law::kReconstruction;
  int trials = 100;
  std::uint64_t seed = 0;
  GeneratorOptions generator;
  bool exact = true;
  bool minimize = true;
};

struct VerifyResult {
  Law law = Law::kReconstruction;
  int trials = 0;
  int passed = 0;
  std::optional<int> failed_trial;
  std::string detail;
  std::optional<GameDocument<Rational>> counterexample;
  double seconds = 0;
};

// Stops at the first failing trial.
VerifyResult RunLaw(const VerifyOptions& options);
std::string FormatVerifyResult(const VerifyOptions& options, const VerifyResult& result);

extern template CheckOutcome CheckLaw<Rational>(Law, const Instance&);
extern template CheckOutcome CheckLaw<double>(Law, const Instance&);

}  // namespace nfgd
