// Acceptance checks for the decomposition library.
// One line per criterion: "criterion N: PASS|FAIL <detail>".

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/decomposition.hpp"
#include "core/equilibrium.hpp"
#include "core/operators.hpp"
#include "core/transforms.hpp"
#include "io/document.hpp"
#include "io/verify.hpp"

using namespace nfgd;

namespace {

constexpr double kTableSeconds = 1.0;
constexpr double kLawSeconds = 60.0;
constexpr double kOracleTolerance = 1e-9;
constexpr int kLawTrials = 100;
constexpr int kEquilibriumTrials = 300;
constexpr int kBoundTrials = 300;
constexpr int kOracleTrials = 200;
constexpr std::uint64_t kSeeds[] = {1, 2, 3};

// Criteria that cannot pass as literally stated; the binary still prints
// FAIL for them but only an unexpected outcome changes the exit status.
const std::set<int> kExpectedFailures = {2};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Tensor<Rational> Q(std::initializer_list<const char*> values) {
  Tensor<Rational> out;
  for (const char* v : values) out.push_back(ParseRational(v));
  return out;
}

GameDocument<Rational> Fixture(const std::string& name) {
  std::ifstream in(std::string(NFGD_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseGameDocument(text.str());
}

std::string Show(const Tensor<Rational>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + x.get_str();
  return out;
}

// Collects failed sub-checks of one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void Payoffs(const Game<Rational>& g, int player, const Tensor<Rational>& want, const std::string& what) {
    Expect(g.payoff(player) == want, what + " player " + std::to_string(player) + ": got " +
                                         Show(g.payoff(player)) + ", want " + Show(want));
  }
  void Probabilities(const MixedProfile<Rational>& x, const std::vector<Tensor<Rational>>& want,
                     const std::string& what) {
    std::string got;
    for (const auto& p : x.probabilities()) got += "(" + Show(p) + ")";
    std::string wanted;
    for (const auto& p : want) wanted += "(" + Show(p) + ")";
    Expect(x.probabilities() == want, what + ": got " + got + ", want " + wanted);
  }
  bool ok() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

Outcome FromChecks(const Checks& checks, const std::string& summary) {
  Outcome out;
  out.pass = checks.ok();
  out.detail = summary + " (" + std::to_string(checks.count() - static_cast<int>(checks.failures().size())) + "/" +
               std::to_string(checks.count()) + " checks)";
  out.notes = checks.failures();
  return out;
}

Outcome TableReproduction() {
  auto start = Clock::now();
  Checks c;
  {
    auto doc = Fixture("duplicated_pennies.game");
    auto d = Decompose(doc.game, doc.mu, doc.gamma);
    c.Payoffs(d.potential, 0, Q({"4/15", "-4/15", "-2/15", "2/15", "-2/15", "2/15"}), "duplicated pot");
    c.Payoffs(d.potential, 1, Q({"3/5", "-3/5", "1/5", "-1/5", "1/5", "-1/5"}), "duplicated pot");
    c.Payoffs(d.harmonic, 0, Q({"16/15", "-16/15", "-8/15", "8/15", "-8/15", "8/15"}), "duplicated har");
    c.Payoffs(d.harmonic, 1, Q({"-8/5", "8/5", "4/5", "-4/5", "4/5", "-4/5"}), "duplicated har");
    c.Payoffs(d.nonstrategic, 0, Q({"-1/3", "1/3", "-1/3", "1/3", "-1/3", "1/3"}), "duplicated ns");
    c.Payoffs(d.nonstrategic, 1, Q({"0", "0", "0", "0", "0", "0"}), "duplicated ns");
  }
  {
    auto doc = Fixture("doubled_pennies.game");
    auto d = Decompose(doc.game, doc.mu, doc.gamma);
    c.Payoffs(d.potential, 0, Q({"1/2", "-1/2", "-1/2", "1/2"}), "doubled pot");
    c.Payoffs(d.potential, 1, Q({"1/2", "-1/2", "-1/2", "1/2"}), "doubled pot");
    c.Payoffs(d.harmonic, 0, Q({"3/2", "-3/2", "-3/2", "3/2"}), "doubled har");
    c.Payoffs(d.harmonic, 1, Q({"-3/2", "3/2", "3/2", "-3/2"}), "doubled har");
    c.Expect(IsZeroGame(d.nonstrategic), "doubled ns is zero");
  }
  {
    auto doc = Fixture("column_scaled_pennies.game");
    auto d = Decompose(doc.game, doc.mu, doc.gamma);
    c.Payoffs(d.potential, 0, Q({"3/4", "1/4", "-3/4", "-1/4"}), "column-scaled pot");
    c.Payoffs(d.potential, 1, Q({"1/4", "-1/4", "-1/4", "1/4"}), "column-scaled pot");
    c.Payoffs(d.harmonic, 0, Q({"5/4", "-5/4", "-5/4", "5/4"}), "column-scaled har");
    c.Payoffs(d.harmonic, 1, Q({"-5/4", "5/4", "5/4", "-5/4"}), "column-scaled har");
    c.Expect(IsZeroGame(d.nonstrategic), "column-scaled ns is zero");
  }
  double seconds = Since(start);
  c.Expect(seconds < kTableSeconds, "runtime " + std::to_string(seconds) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "three tables in %.3f s", seconds);
  return FromChecks(c, buf);
}

Outcome StrategyDependentScaling() {
  Checks c;
  auto doc = Fixture("strategy_dependent_scaling.game");
  const auto& space = doc.game.space_ptr();
  auto d = Decompose(doc.game, doc.mu, doc.gamma);
  c.Payoffs(d.potential, 0, Q({"2", "-1", "-2", "1"}), "pot");
  c.Payoffs(d.potential, 1, Q({"1", "-1", "-2", "2"}), "pot");
  c.Payoffs(d.harmonic, 0, Q({"2", "-2", "-2", "2"}), "har");
  c.Payoffs(d.harmonic, 1, Q({"-2", "2", "2", "-2"}), "har");
  c.Expect(IsZeroGame(d.nonstrategic), "ns is zero");

  auto beta = CoMeasureVector<Rational>::FromGenerator(space, {Q({"1", "3"}), Q({"2", "1"})});
  auto scaled = Scale(doc.game, beta);
  c.Payoffs(scaled, 0, Q({"8", "-3", "-8", "3"}), "beta.g");
  c.Payoffs(scaled, 1, Q({"-1", "1", "0", "0"}), "beta.g");
  auto pot = Scale(d.potential, beta);
  auto har = Scale(d.harmonic, beta);
  c.Payoffs(pot, 0, Q({"4", "-1", "-4", "1"}), "beta.pot");
  c.Payoffs(pot, 1, Q({"1", "-1", "-6", "6"}), "beta.pot");
  c.Payoffs(har, 0, Q({"4", "-2", "-4", "2"}), "beta.har");
  c.Payoffs(har, 1, Q({"-2", "2", "6", "-6"}), "beta.har");

  auto tilde = CoMeasureVector<Rational>::FromGenerator(space, {Q({"1", "1/3"}), Q({"1/2", "1"})});
  c.Expect(CoMeasureQuotient(doc.gamma, beta) == tilde, "gamma/beta has generator (1,1/3),(1/2,1)");
  c.Expect(IsGammaPotential(pot, tilde), "beta.pot is gamma~-potential");
  c.Expect(IsHarmonic(har, doc.mu, tilde), "beta.har is (mu,gamma~)-harmonic");

  auto y = MapEquilibriumUnderScaling(FindProfile(doc, "potential-eq"), beta);
  c.Probabilities(y, {Q({"6/7", "1/7"}), Q({"1/5", "4/5"})}, "mapped potential equilibrium");
  c.Expect(BestResponseEpsilon(pot, y) == 0, "mapped potential equilibrium has epsilon 0");

  auto z = MapEquilibriumUnderScaling(FindProfile(doc, "harmonic-eq"), beta);
  c.Expect(BestResponseEpsilon(har, z) == 0, "mapped harmonic equilibrium has epsilon 0");
  // The stated profile, checked literally.
  auto stated = MixedProfile<Rational>(space, {Q({"3/4", "1/4"}), Q({"2/3", "1/3"})});
  c.Probabilities(z, stated.probabilities(), "mapped harmonic equilibrium");
  Rational eps = BestResponseEpsilon(har, stated);
  c.Expect(eps == 0, "stated harmonic equilibrium ((3/4,1/4),(2/3,1/3)) has epsilon " + eps.get_str());

  Outcome out = FromChecks(c, "decomposition, scaling, classes and mapped equilibria");
  if (!out.pass) {
    out.notes.push_back(
        "the column player's mix making the row player indifferent in beta.har solves "
        "4y - 2(1-y) = -4y + 2(1-y), so y = 1/3; the computed profile ((3/4,1/4),(1/3,2/3)) has epsilon 0");
  }
  return out;
}

Outcome DuplicateChain() {
  Checks c;
  auto doc = Fixture("two_duplicates.game");
  c.Expect(IsHarmonic(doc.game, doc.mu, doc.gamma), "original is harmonic");
  c.Expect(BestResponseEpsilon(doc.game, FindProfile(doc, "uniform")) == 0, "uniform profile is an equilibrium");

  auto once = ReduceDuplicate(doc.game, doc.mu, doc.gamma, 0, 0, 1);
  c.Payoffs(once.game, 0, Q({"2", "-1", "-1", "-4", "2", "2"}), "first reduction");
  c.Payoffs(once.game, 1, Q({"-2", "1", "1", "4", "-2", "-2"}), "first reduction");
  c.Expect(once.mu.weights(0) == Q({"2", "1"}), "first reduction mu row = (2,1)");
  c.Expect(once.mu.weights(1) == Q({"1", "1", "1"}), "first reduction mu col = (1,1,1)");
  c.Expect(IsHarmonic(once.game, once.mu, once.gamma), "first reduction is harmonic");
  auto x = MixedProfile<Rational>(once.game.space_ptr(), {Q({"2/3", "1/3"}), Q({"1/3", "1/3", "1/3"})});
  c.Expect(BestResponseEpsilon(once.game, x) == 0, "((2/3,1/3),(1/3,1/3,1/3)) has epsilon 0");

  auto twice = ReduceDuplicate(once.game, once.mu, once.gamma, 1, 1, 2);
  c.Payoffs(twice.game, 0, Q({"2", "-1", "-4", "2"}), "second reduction");
  c.Payoffs(twice.game, 1, Q({"-2", "1", "4", "-2"}), "second reduction");
  c.Expect(twice.mu.weights(0) == Q({"2", "1"}), "second reduction mu row = (2,1)");
  c.Expect(twice.mu.weights(1) == Q({"1", "2"}), "second reduction mu col = (1,2)");
  c.Expect(IsHarmonic(twice.game, twice.mu, twice.gamma), "second reduction is harmonic");
  return FromChecks(c, "two reductions");
}

Outcome RunLaws(const std::vector<Law>& laws, int trials, double budget) {
  auto start = Clock::now();
  Outcome out;
  out.pass = true;
  int instances = 0;
  for (Law law : laws) {
    for (std::uint64_t seed : kSeeds) {
      VerifyOptions options;
      options.law = law;
      options.trials = trials;
      options.seed = seed;
      auto result = RunLaw(options);
      instances += result.passed;
      if (result.failed_trial) {
        out.pass = false;
        out.notes.push_back(FormatVerifyResult(options, result));
      }
    }
  }
  double seconds = Since(start);
  if (budget > 0 && seconds >= budget) {
    out.pass = false;
    out.notes.push_back("runtime " + std::to_string(seconds) + " s");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d instances over %zu law(s), %zu seeds, %.2f s", instances, laws.size(),
                std::size(kSeeds), seconds);
  out.detail = buf;
  return out;
}

// Minimum-norm least squares solution of delta phi = D(g) in the weighted
// flow and field inner products, built from the explicit edge matrix.
std::vector<double> PseudoInverseOracle(const Game<double>& g, const MeasureVector<double>& mu,
                                        const CoMeasureVector<double>& gamma) {
  const StrategySpace& space = g.space();
  const std::size_t n = space.num_profiles();
  std::vector<double> weight(n);
  for (std::size_t s = 0; s < n; ++s) weight[s] = mu.Product(s);
  std::vector<std::vector<std::size_t>> edges;
  for (int i = 0; i < space.num_players(); ++i) {
    for (std::size_t s = 0; s < n; ++s) {
      for (int k = space.Coordinate(s, i) + 1; k < space.num_strategies(i); ++k) {
        edges.push_back({static_cast<std::size_t>(i), s, space.WithCoordinate(s, i, k)});
      }
    }
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(edges.size()), static_cast<Eigen::Index>(n));
  Eigen::VectorXd b(static_cast<Eigen::Index>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int i = static_cast<int>(edges[e][0]);
    std::size_t s = edges[e][1];
    std::size_t t = edges[e][2];
    double w = 1.0 / std::sqrt(mu.ProductExcluding(s, i));
    double row = std::sqrt(weight[s] * weight[t]);
    auto r = static_cast<Eigen::Index>(e);
    a(r, static_cast<Eigen::Index>(t)) = row * w / std::sqrt(weight[t]);
    a(r, static_cast<Eigen::Index>(s)) = -row * w / std::sqrt(weight[s]);
    double c = gamma.at(i, s);
    b(r) = row * w * (c * g.at(i, t) - c * g.at(i, s));
  }
  Eigen::VectorXd psi = a.completeOrthogonalDecomposition().solve(b);
  std::vector<double> phi(n);
  for (std::size_t s = 0; s < n; ++s) phi[s] = psi(static_cast<Eigen::Index>(s)) / std::sqrt(weight[s]);
  return phi;
}

Outcome OracleAgreement() {
  Outcome out;
  out.pass = true;
  double worst = 0;
  for (int trial = 0; trial < kOracleTrials; ++trial) {
    InstanceGenerator gen(kSeeds[0], trial);
    auto space = gen.Space({});
    auto g = ConvertGame<double>(gen.RandomGame(space));
    auto mu = ConvertMeasure<double>(gen.RandomMeasure(space));
    auto gamma = ConvertCoMeasure<double>(gen.RandomCoMeasure(space));
    auto phi = SolvePoisson(DeviationDivergence(g, mu, gamma), mu);
    auto oracle = PseudoInverseOracle(g, mu, gamma);
    double diff = 0;
    for (std::size_t s = 0; s < oracle.size(); ++s) diff = std::max(diff, std::abs(phi[s] - oracle[s]));
    worst = std::max(worst, diff);
    if (!(diff <= kOracleTolerance)) {
      out.pass = false;
      if (out.notes.size() < 5) out.notes.push_back("trial " + std::to_string(trial) + ": max difference " +
                                                    std::to_string(diff));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d instances, max |phi - oracle| = %.3g (tolerance %.0e)", kOracleTrials, worst,
                kOracleTolerance);
  out.detail = buf;
  return out;
}

Outcome Noncontinuity() {
  Checks c;
  auto doc = Fixture("perturbed_duplicate.game");
  const Rational e(1, 10);
  auto d = Decompose(doc.game, doc.mu, doc.gamma);
  auto normalized = d.potential + d.harmonic;
  Rational a = (4 - e) / 3;
  Rational b = (2 + e) / 3;
  Rational f = 2 * (1 - e) / 3;
  Rational h = (1 - e) / 3;
  c.Payoffs(normalized, 0, {a, -a, -b, b, -f, f}, "normalized");
  c.Payoffs(normalized, 1, {Rational(-1), Rational(1), Rational(1), Rational(-1), Rational(1 - e), Rational(e - 1)},
            "normalized");
  c.Payoffs(d.nonstrategic, 0, {-h, h, -h, h, -h, h}, "nonstrategic");
  c.Payoffs(d.nonstrategic, 1, Tensor<Rational>(6, Rational(0)), "nonstrategic");
  return FromChecks(c, "epsilon = 1/10");
}

}  // namespace

int main() {
  const std::vector<Law> suites = {Law::kReconstruction, Law::kOrthogonality, Law::kParamEquivalence,
                                   Law::kPermute,        Law::kTranslate,     Law::kScale,
                                   Law::kExtend,         Law::kReduce,        Law::kRedundant};
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, TableReproduction},
      {2, StrategyDependentScaling},
      {3, DuplicateChain},
      {4, [&] { return RunLaws(suites, kLawTrials, kLawSeconds); }},
      {5, [] { return RunLaws({Law::kHarmonicEq}, kEquilibriumTrials, 0); }},
      {6, [] { return RunLaws({Law::kEpsilonBound}, kBoundTrials, 0); }},
      {7, OracleAgreement},
      {8, Noncontinuity},
  };
  int unexpected = 0;
  for (const auto& [id, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("threw: ") + e.what();
    }
    std::printf("criterion %d: %s %s\n", id, outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    for (const auto& note : outcome.notes) std::printf("  %s\n", note.c_str());
    bool expected_fail = kExpectedFailures.count(id) > 0;
    if (outcome.pass == expected_fail) {
      ++unexpected;
      if (expected_fail) std::printf("  unexpected pass of a criterion recorded as failing\n");
    } else if (expected_fail) {
      std::printf("  recorded as a known failure\n");
    }
  }
  return unexpected == 0 ? 0 : 1;
}
