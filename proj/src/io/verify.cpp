#include "io/verify.hpp"

#include <chrono>
#include <sstream>

#include "core/decomposition.hpp"
#include "core/equilibrium.hpp"
#include "core/inner_product.hpp"
#include "core/operators.hpp"
#include "io/doc_transforms.hpp"

namespace nfgd {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr int kMinStrategies = 2;
constexpr int kMaxStrategies = 4;

struct LawEntry {
  Law law;
  const char* name;
};

constexpr LawEntry kLaws[] = {
    {Law::kOrthogonality, "orthogonality"},
    {Law::kReconstruction, "reconstruction"},
    {Law::kParamEquivalence, "param-equivalence"},
    {Law::kPermute, "permute"},
    {Law::kTranslate, "translate"},
    {Law::kScale, "scale"},
    {Law::kExtend, "extend"},
    {Law::kReduce, "reduce"},
    {Law::kRedundant, "redundant"},
    {Law::kHarmonicEq, "harmonic-eq"},
    {Law::kEpsilonBound, "epsilon-bound"},
};

Rational Ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

const Rational kParameters[] = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
                                Rational(3)};

}  // namespace

const std::vector<Law>& AllLaws() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> out;
    for (const auto& entry : kLaws) out.push_back(entry.law);
    return out;
  }();
  return laws;
}

const char* LawName(Law law) {
  for (const auto& entry : kLaws) {
    if (entry.law == law) return entry.name;
  }
  return "unknown";
}

std::optional<Law> ParseLaw(std::string_view name) {
  for (const auto& entry : kLaws) {
    if (name == entry.name) return entry.law;
  }
  return std::nullopt;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, int trial)
    : rng_(SplitMix(seed ^ SplitMix(static_cast<std::uint64_t>(trial)))) {}

int InstanceGenerator::Below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

Rational InstanceGenerator::Payoff() { return Rational(Below(19) - 9); }

Rational InstanceGenerator::Parameter() { return kParameters[Below(5)]; }

SpacePtr InstanceGenerator::Space(const GeneratorOptions& options) {
  int players = options.players ? *options.players : 2 + Below(2);
  std::vector<int> sizes;
  for (int i = 0; i < players; ++i) {
    sizes.push_back(options.strategies ? *options.strategies : kMinStrategies + Below(kMaxStrategies - kMinStrategies + 1));
  }
  return StrategySpace::WithSizes(sizes);
}

Game<Rational> InstanceGenerator::RandomGame(const SpacePtr& space) {
  std::vector<Tensor<Rational>> payoffs(space->num_players());
  for (auto& tensor : payoffs) {
    for (std::size_t s = 0; s < space->num_profiles(); ++s) tensor.push_back(Payoff());
  }
  return Game<Rational>(space, std::move(payoffs));
}

MeasureVector<Rational> InstanceGenerator::RandomMeasure(const SpacePtr& space) {
  std::vector<Tensor<Rational>> weights(space->num_players());
  for (int i = 0; i < space->num_players(); ++i) {
    for (int s = 0; s < space->num_strategies(i); ++s) weights[i].push_back(Parameter());
  }
  return MeasureVector<Rational>(space, std::move(weights));
}

CoMeasureVector<Rational> InstanceGenerator::RandomCoMeasure(const SpacePtr& space) {
  std::vector<Tensor<Rational>> values(space->num_players());
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t k = 0; k < space->num_subprofiles(i); ++k) values[i].push_back(Parameter());
  }
  return CoMeasureVector<Rational>(space, std::move(values));
}

CoMeasureVector<Rational> InstanceGenerator::RandomProductCoMeasure(const SpacePtr& space) {
  std::vector<Tensor<Rational>> c(space->num_players());
  for (int i = 0; i < space->num_players(); ++i) {
    for (int s = 0; s < space->num_strategies(i); ++s) c[i].push_back(Parameter());
  }
  return CoMeasureVector<Rational>::FromGenerator(space, std::move(c));
}

namespace {

Rational RandomSplit(InstanceGenerator& gen) {
  int m = 2 + gen.Below(8);
  int k = 1 + gen.Below(m - 1);
  return Ratio(k, m);
}

// Inserts an alpha-mixture of the strategies of `player` at `position`.
Game<Rational> WithMixtureStrategy(const Game<Rational>& g, int player, int position,
                                   const std::vector<Rational>& alpha) {
  const StrategySpace& old_space = g.space();
  auto labels = old_space.labels(player);
  labels.insert(labels.begin() + position, "mix");
  SpacePtr target = old_space.WithLabels(player, labels);
  std::vector<Tensor<Rational>> payoffs(g.num_players(), Tensor<Rational>(target->num_profiles()));
  for (std::size_t u = 0; u < target->num_profiles(); ++u) {
    std::vector<int> tuple = target->Tuple(u);
    int c = tuple[player];
    for (int j = 0; j < g.num_players(); ++j) {
      if (c == position) {
        Rational mix(0);
        for (std::size_t k = 0; k < alpha.size(); ++k) {
          tuple[player] = static_cast<int>(k);
          mix += alpha[k] * g.at(j, old_space.Index(tuple));
        }
        payoffs[j][u] = mix;
      } else {
        tuple[player] = c < position ? c : c - 1;
        payoffs[j][u] = g.at(j, old_space.Index(tuple));
      }
    }
  }
  return Game<Rational>(target, std::move(payoffs));
}

}  // namespace

Instance GenerateInstance(Law law, std::uint64_t seed, int trial, const GeneratorOptions& options) {
  InstanceGenerator gen(seed, trial);
  SpacePtr space = gen.Space(options);
  Instance in;
  in.game = gen.RandomGame(space);
  in.mu = gen.RandomMeasure(space);
  in.gamma = gen.RandomCoMeasure(space);
  const int n = space->num_players();

  switch (law) {
    case Law::kParamEquivalence:
      in.eta = gen.Parameter();
      in.theta = gen.Parameter();
      break;
    case Law::kPermute: {
      in.permutation.player = gen.Below(n);
      int k = space->num_strategies(in.permutation.player);
      for (int s = 0; s < k; ++s) in.permutation.sigma.push_back(s);
      for (int s = k - 1; s > 0; --s) std::swap(in.permutation.sigma[s], in.permutation.sigma[gen.Below(s + 1)]);
      break;
    }
    case Law::kTranslate: {
      std::vector<Tensor<Rational>> payoffs(n, Tensor<Rational>(space->num_profiles()));
      for (int i = 0; i < n; ++i) {
        Tensor<Rational> ell;
        for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) ell.push_back(gen.Payoff());
        for (std::size_t s = 0; s < space->num_profiles(); ++s) {
          payoffs[i][s] = ell[space->SubprofileIndex(s, i)];
        }
      }
      in.translation = Game<Rational>(space, std::move(payoffs));
      break;
    }
    case Law::kScale:
      in.beta = gen.RandomCoMeasure(space);
      break;
    case Law::kExtend: {
      in.duplication.player = gen.Below(n);
      in.duplication.source = gen.Below(space->num_strategies(in.duplication.player));
      in.duplication.label = "dup";
      in.duplication.lambda = RandomSplit(gen);
      break;
    }
    case Law::kReduce: {
      DuplicationSpec dup;
      dup.player = gen.Below(n);
      if (!options.strategies && space->num_strategies(dup.player) == kMaxStrategies) {
        in.game = RemoveStrategy(in.game, dup.player, kMaxStrategies - 1);
        in.gamma = RemoveStrategy(in.gamma, dup.player, kMaxStrategies - 1);
        in.mu = RemoveStrategy(in.mu, dup.player, kMaxStrategies - 1);
      }
      dup.source = gen.Below(in.game.space().num_strategies(dup.player));
      dup.label = "dup";
      dup.lambda = RandomSplit(gen);
      auto extended = ExtendDuplicate(in.game, in.mu, in.gamma, dup);
      in.game = extended.game;
      in.mu = gen.RandomMeasure(in.game.space_ptr());
      in.gamma = extended.gamma;
      in.reduce_player = dup.player;
      in.reduce_removed = dup.source + 1;
      in.reduce_kept = dup.source;
      if (gen.Below(2) == 1) std::swap(in.reduce_removed, in.reduce_kept);
      break;
    }
    case Law::kRedundant: {
      int player = gen.Below(n);
      if (!options.strategies && space->num_strategies(player) == kMaxStrategies) {
        in.game = RemoveStrategy(in.game, player, kMaxStrategies - 1);
      }
      int k = in.game.space().num_strategies(player);
      std::vector<int> weights;
      int total = 0;
      for (int s = 0; s < k; ++s) {
        weights.push_back(gen.Below(4));
        total += weights.back();
      }
      if (total == 0) {
        weights[gen.Below(k)] = 1;
        total = 1;
      }
      std::vector<Rational> alpha;
      for (int w : weights) alpha.push_back(Ratio(w, total));
      int position = gen.Below(k + 1);
      in.game = WithMixtureStrategy(in.game, player, position, alpha);
      in.mu = gen.RandomMeasure(in.game.space_ptr());
      std::vector<Rational> constants;
      for (int i = 0; i < n; ++i) constants.push_back(gen.Parameter());
      in.gamma = CoMeasureVector<Rational>::Constant(in.game.space_ptr(), constants);
      in.redundancy = {player, position, alpha};
      break;
    }
    case Law::kHarmonicEq:
      in.beta = gen.RandomProductCoMeasure(space);
      break;
    default:
      break;
  }
  return in;
}

namespace {

template <typename T>
std::optional<std::string> DiffGames(const Game<T>& a, const Game<T>& b, const std::string& what) {
  if (!SameSpace(a.space_ptr(), b.space_ptr())) return what + ": strategy spaces differ";
  const StrategySpace& space = a.space();
  for (int i = 0; i < a.num_players(); ++i) {
    for (std::size_t s = 0; s < space.num_profiles(); ++s) {
      if (!ScalarTraits<T>::Equal(a.at(i, s), b.at(i, s))) {
        return what + " differs for player '" + space.player_name(i) + "' at " +
               space.DescribeProfile(s) + ": " + FormatScalar(a.at(i, s)) + " vs " +
               FormatScalar(b.at(i, s));
      }
    }
  }
  return std::nullopt;
}

// Compares f(decompose(before).X) against decompose(after).X for each X.
template <typename T, typename F>
CheckOutcome CompareComponents(const Decomposition<T>& before, const Decomposition<T>& after, F f) {
  const std::pair<const char*, Game<T> Decomposition<T>::*> parts[] = {
      {"nonstrategic component", &Decomposition<T>::nonstrategic},
      {"potential component", &Decomposition<T>::potential},
      {"harmonic component", &Decomposition<T>::harmonic},
  };
  for (const auto& [name, member] : parts) {
    if (auto diff = DiffGames(f(before.*member), after.*member, name)) return {false, *diff};
  }
  return {};
}

template <typename T>
CheckOutcome Violation(std::string detail) {
  return {false, std::move(detail)};
}

template <typename T>
CheckOutcome CheckReconstruction(const Game<T>& g, const MeasureVector<T>& mu,
                                 const CoMeasureVector<T>& gamma) {
  auto d = Decompose(g, mu, gamma);
  if (auto diff = DiffGames(d.nonstrategic + d.potential + d.harmonic, g, "reconstruction")) {
    return Violation<T>(*diff);
  }
  if (!IsNonstrategic(d.nonstrategic)) return Violation<T>("nonstrategic component is strategic");
  if (!IsMuNormalized(d.potential, mu)) return Violation<T>("potential component not mu-normalized");
  if (!IsMuNormalized(d.harmonic, mu)) return Violation<T>("harmonic component not mu-normalized");
  if (!IsHarmonic(d.harmonic, mu, gamma)) return Violation<T>("harmonic component not harmonic");
  const StrategySpace& space = g.space();
  for (std::size_t s = 0; s < space.num_profiles(); ++s) {
    T sum(0);
    for (int i = 0; i < space.num_players(); ++i) {
      sum += mu.total(i) * gamma.at(i, s) * d.harmonic.at(i, s);
    }
    if (!ScalarTraits<T>::IsZero(sum)) {
      return Violation<T>("sum_i mu^i(S^i) gamma^i g_har^i nonzero at " + space.DescribeProfile(s));
    }
  }
  ScalarField<T> psi;
  try {
    psi = ExtractPotential(d.potential, gamma);
  } catch (const Error& e) {
    return Violation<T>(std::string("potential component: ") + e.what());
  }
  T offset = psi[0] - d.phi[0];
  for (std::size_t s = 0; s < space.num_profiles(); ++s) {
    if (!ScalarTraits<T>::Equal(T(psi[s] - d.phi[s]), offset)) {
      return Violation<T>("extracted potential and phi differ by a nonconstant at " +
                          space.DescribeProfile(s));
    }
  }
  return {};
}

template <typename T>
CheckOutcome CheckOrthogonality(const Game<T>& g, const MeasureVector<T>& mu,
                                const CoMeasureVector<T>& gamma) {
  auto d = Decompose(g, mu, gamma);
  const std::pair<const char*, T> products[] = {
      {"<nonstrategic, potential>", InnerProductGame(d.nonstrategic, d.potential, mu, gamma)},
      {"<nonstrategic, harmonic>", InnerProductGame(d.nonstrategic, d.harmonic, mu, gamma)},
      {"<potential, harmonic>", InnerProductGame(d.potential, d.harmonic, mu, gamma)},
  };
  for (const auto& [name, value] : products) {
    if (!ScalarTraits<T>::IsZero(value)) {
      return Violation<T>(std::string(name) + " = " + FormatScalar(value));
    }
  }
  return {};
}

template <typename T>
CheckOutcome CheckHarmonicEquilibria(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma,
                                     const CoMeasureVector<T>& product) {
  // Normalized mu is an equilibrium of gamma . g_har for any gamma.
  auto d = Decompose(g, mu, gamma);
  auto x = NormalizedMeasureProfile(mu);
  T eps = BestResponseEpsilon(Scale(d.harmonic, gamma), x);
  if (!ScalarTraits<T>::IsZero(eps)) {
    return Violation<T>("normalized mu is not an equilibrium of the gamma-scaled harmonic component "
                        "(epsilon " + FormatScalar(eps) + ")");
  }
  // Normalized mu c is an equilibrium of g_har itself for product gamma.
  auto dp = Decompose(g, mu, product);
  std::vector<Tensor<T>> weights = mu.weights();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t s = 0; s < weights[i].size(); ++s) weights[i][s] *= (*product.generator())[i][s];
  }
  auto y = MixedProfile<T>::FromWeights(g.space_ptr(), std::move(weights));
  T eps_product = BestResponseEpsilon(dp.harmonic, y);
  if (!ScalarTraits<T>::IsZero(eps_product)) {
    return Violation<T>("normalized mu c is not an equilibrium of the harmonic component "
                        "(epsilon " + FormatScalar(eps_product) + ")");
  }
  return {};
}

template <typename T>
CheckOutcome CheckEpsilonBound(const Game<T>& g, const MeasureVector<T>& mu,
                               const CoMeasureVector<T>& gamma) {
  auto closest = ClosestPotential(g, mu, gamma);
  T bound = EpsilonBoundSquared(g, mu, gamma);
  std::vector<std::size_t> profiles = PureNashEquilibria(closest.closest);
  for (std::size_t s : PureEquilibriumFromPotential(closest.closest, gamma)) {
    bool listed = false;
    for (std::size_t p : profiles) listed = listed || p == s;
    if (!listed) {
      return Violation<T>("potential maximizer " + g.space().DescribeProfile(s) +
                          " missing from the pure equilibria of the closest game");
    }
  }
  if (profiles.empty()) return Violation<T>("closest potential game has no pure equilibrium");
  for (std::size_t s : profiles) {
    T eps = BestResponseEpsilon(g, MixedProfile<T>::Pure(g.space_ptr(), s));
    if (!ScalarTraits<T>::LessOrEqual(T(eps * eps), bound)) {
      return Violation<T>("pure equilibrium " + g.space().DescribeProfile(s) +
                          " of the closest potential game has epsilon^2 = " +
                          FormatScalar(T(eps * eps)) + " > B^2 = " + FormatScalar(bound));
    }
  }
  return {};
}

}  // namespace

template <typename T>
CheckOutcome CheckLaw(Law law, const Instance& in) {
  Game<T> g = ConvertGame<T>(in.game);
  MeasureVector<T> mu = ConvertMeasure<T>(in.mu);
  CoMeasureVector<T> gamma = ConvertCoMeasure<T>(in.gamma);

  switch (law) {
    case Law::kReconstruction:
      return CheckReconstruction(g, mu, gamma);
    case Law::kOrthogonality:
      return CheckOrthogonality(g, mu, gamma);
    case Law::kParamEquivalence: {
      T eta = Convert<T>(in.eta);
      T theta = Convert<T>(in.theta);
      auto weights = mu.weights();
      for (auto& w : weights) {
        for (auto& v : w) v *= eta;
      }
      auto values = gamma.values();
      for (auto& w : values) {
        for (auto& v : w) v *= theta;
      }
      auto base = Decompose(g, mu, gamma);
      auto scaled = Decompose(g, MeasureVector<T>(g.space_ptr(), weights),
                              CoMeasureVector<T>(g.space_ptr(), values));
      return CompareComponents(base, scaled, [](const Game<T>& x) { return x; });
    }
    case Law::kPermute: {
      auto [pmu, pgamma] = PermuteParams(mu, gamma, in.permutation);
      auto before = Decompose(g, mu, gamma);
      auto after = Decompose(Permute(g, in.permutation), pmu, pgamma);
      return CompareComponents(before, after,
                               [&](const Game<T>& x) { return Permute(x, in.permutation); });
    }
    case Law::kTranslate: {
      Game<T> ns = ConvertGame<T>(in.translation);
      auto before = Decompose(g, mu, gamma);
      auto after = Decompose(TranslateNonstrategic(g, ns), mu, gamma);
      if (auto diff = DiffGames(before.nonstrategic + ns, after.nonstrategic, "nonstrategic component")) {
        return Violation<T>(*diff);
      }
      if (auto diff = DiffGames(before.potential, after.potential, "potential component")) {
        return Violation<T>(*diff);
      }
      if (auto diff = DiffGames(before.harmonic, after.harmonic, "harmonic component")) {
        return Violation<T>(*diff);
      }
      return {};
    }
    case Law::kScale: {
      CoMeasureVector<T> beta = ConvertCoMeasure<T>(in.beta);
      auto before = Decompose(g, mu, gamma);
      auto after = Decompose(Scale(g, beta), mu, CoMeasureQuotient(gamma, beta));
      return CompareComponents(before, after, [&](const Game<T>& x) { return Scale(x, beta); });
    }
    case Law::kExtend: {
      auto extended = ExtendDuplicate(g, mu, gamma, in.duplication);
      auto before = Decompose(g, mu, gamma);
      auto after = Decompose(extended.game, extended.mu, extended.gamma);
      return CompareComponents(before, after,
                               [&](const Game<T>& x) { return ExtendGame(x, in.duplication); });
    }
    case Law::kReduce: {
      auto reduced = ReduceDuplicate(g, mu, gamma, in.reduce_player, in.reduce_removed, in.reduce_kept);
      auto before = Decompose(g, mu, gamma);
      auto after = Decompose(reduced.game, reduced.mu, reduced.gamma);
      return CompareComponents(before, after, [&](const Game<T>& x) {
        return RemoveStrategy(x, in.reduce_player, in.reduce_removed);
      });
    }
    case Law::kRedundant: {
      auto reduced = ReduceRedundant(g, mu, gamma, in.redundancy);
      auto before = Decompose(g, mu, gamma);
      auto after = Decompose(reduced.game, reduced.mu, reduced.gamma);
      return CompareComponents(before, after, [&](const Game<T>& x) {
        return RemoveStrategy(x, in.redundancy.player, in.redundancy.removed);
      });
    }
    case Law::kHarmonicEq:
      return CheckHarmonicEquilibria(g, mu, gamma, ConvertCoMeasure<T>(in.beta));
    case Law::kEpsilonBound:
      return CheckEpsilonBound(g, mu, gamma);
  }
  return {};
}

namespace {

bool UsesTranslation(Law law) { return law == Law::kTranslate; }
bool UsesBeta(Law law) { return law == Law::kScale || law == Law::kHarmonicEq; }

CoMeasureVector<Rational> RestrictBeta(Law law, const CoMeasureVector<Rational>& beta, int player,
                                       std::optional<int> strategy) {
  if (strategy) return RemoveStrategy(beta, player, *strategy);
  if (law == Law::kHarmonicEq && beta.generator()) {
    auto c = *beta.generator();
    c.erase(c.begin() + player);
    return CoMeasureVector<Rational>::FromGenerator(beta.space().WithoutPlayer(player), std::move(c));
  }
  return DropPlayer(beta, player, 0);
}

// Candidate with strategy s of player p deleted, or nullopt when the law's
// extra data pins that strategy.
std::optional<Instance> WithoutStrategy(Law law, const Instance& in, int p, int s) {
  if (in.game.space().num_strategies(p) <= 2) return std::nullopt;
  Instance out = in;
  auto shift = [s](int k) { return k > s ? k - 1 : k; };
  switch (law) {
    case Law::kPermute:
      if (p == in.permutation.player) return std::nullopt;
      break;
    case Law::kExtend:
      if (p == in.duplication.player) {
        if (s == in.duplication.source) return std::nullopt;
        out.duplication.source = shift(in.duplication.source);
      }
      break;
    case Law::kReduce:
      if (p == in.reduce_player) {
        if (s == in.reduce_removed || s == in.reduce_kept) return std::nullopt;
        out.reduce_removed = shift(in.reduce_removed);
        out.reduce_kept = shift(in.reduce_kept);
      }
      break;
    case Law::kRedundant:
      if (p == in.redundancy.player) {
        if (s == in.redundancy.removed) return std::nullopt;
        int k = s < in.redundancy.removed ? s : s - 1;
        if (sgn(in.redundancy.alpha[k]) != 0) return std::nullopt;
        out.redundancy.alpha.erase(out.redundancy.alpha.begin() + k);
        out.redundancy.removed = shift(in.redundancy.removed);
      }
      break;
    default:
      break;
  }
  out.game = RemoveStrategy(in.game, p, s);
  out.mu = RemoveStrategy(in.mu, p, s);
  out.gamma = RemoveStrategy(in.gamma, p, s);
  if (UsesTranslation(law)) out.translation = RemoveStrategy(in.translation, p, s);
  if (UsesBeta(law)) out.beta = RestrictBeta(law, in.beta, p, s);
  return out;
}

std::optional<Instance> WithoutPlayer(Law law, const Instance& in, int p) {
  if (in.game.num_players() <= 2) return std::nullopt;
  Instance out = in;
  auto shift = [p](int k) { return k > p ? k - 1 : k; };
  switch (law) {
    case Law::kPermute:
      if (p == in.permutation.player) return std::nullopt;
      out.permutation.player = shift(in.permutation.player);
      break;
    case Law::kExtend:
      if (p == in.duplication.player) return std::nullopt;
      out.duplication.player = shift(in.duplication.player);
      break;
    case Law::kReduce:
      if (p == in.reduce_player) return std::nullopt;
      out.reduce_player = shift(in.reduce_player);
      break;
    case Law::kRedundant:
      if (p == in.redundancy.player) return std::nullopt;
      out.redundancy.player = shift(in.redundancy.player);
      break;
    default:
      break;
  }
  out.game = DropPlayer(in.game, p, 0);
  out.mu = DropPlayer(in.mu, p);
  out.gamma = DropPlayer(in.gamma, p, 0);
  if (UsesTranslation(law)) out.translation = DropPlayer(in.translation, p, 0);
  if (UsesBeta(law)) out.beta = RestrictBeta(law, in.beta, p, std::nullopt);
  return out;
}

}  // namespace

Instance MinimizeCounterexample(Law law, Instance instance, const FailurePredicate& still_fails) {
  for (int i = 0; i < instance.game.num_players(); ++i) {
    for (std::size_t s = 0; s < instance.game.space().num_profiles(); ++s) {
      if (sgn(instance.game.at(i, s)) == 0) continue;
      auto payoffs = instance.game.payoffs();
      payoffs[i][s] = 0;
      Instance candidate = instance;
      candidate.game = Game<Rational>(instance.game.space_ptr(), std::move(payoffs));
      if (still_fails(candidate)) instance = std::move(candidate);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < instance.game.num_players() && !changed; ++p) {
      for (int s = instance.game.space().num_strategies(p) - 1; s >= 0 && !changed; --s) {
        auto candidate = WithoutStrategy(law, instance, p, s);
        if (candidate && still_fails(*candidate)) {
          instance = std::move(*candidate);
          changed = true;
        }
      }
    }
    for (int p = instance.game.num_players() - 1; p >= 0 && !changed; --p) {
      auto candidate = WithoutPlayer(law, instance, p);
      if (candidate && still_fails(*candidate)) {
        instance = std::move(*candidate);
        changed = true;
      }
    }
  }
  return instance;
}

namespace {

std::string Values(const Tensor<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += " " + v.get_str();
  return out;
}

}  // namespace

GameDocument<Rational> InstanceDocument(Law law, const Instance& in) {
  GameDocument<Rational> doc;
  doc.game = in.game;
  doc.mu = in.mu;
  doc.gamma = in.gamma;
  const StrategySpace& space = in.game.space();
  doc.comments.push_back(std::string("law ") + LawName(law));
  switch (law) {
    case Law::kParamEquivalence:
      doc.comments.push_back("eta " + in.eta.get_str() + " theta " + in.theta.get_str());
      break;
    case Law::kPermute: {
      std::string line = "permutation " + space.player_name(in.permutation.player);
      for (int k : in.permutation.sigma) line += " " + std::to_string(k);
      doc.comments.push_back(line);
      break;
    }
    case Law::kTranslate:
      for (int i = 0; i < space.num_players(); ++i) {
        doc.comments.push_back("translation " + space.player_name(i) + Values(in.translation.payoff(i)));
      }
      break;
    case Law::kScale:
    case Law::kHarmonicEq: {
      const char* name = law == Law::kScale ? "beta " : "product-gamma ";
      for (int i = 0; i < space.num_players(); ++i) {
        if (in.beta.generator()) {
          doc.comments.push_back(std::string(name) + "generator " + space.player_name(i) +
                                 Values((*in.beta.generator())[i]));
        } else {
          doc.comments.push_back(std::string(name) + "gamma " + space.player_name(i) +
                                 Values(in.beta.values(i)));
        }
      }
      break;
    }
    case Law::kExtend:
      doc.comments.push_back("duplicate " + space.player_name(in.duplication.player) + " " +
                             space.label(in.duplication.player, in.duplication.source) + " as " +
                             in.duplication.label + " lambda " + in.duplication.lambda.get_str());
      break;
    case Law::kReduce:
      doc.comments.push_back("reduce " + space.player_name(in.reduce_player) + " remove " +
                             space.label(in.reduce_player, in.reduce_removed) + " keep " +
                             space.label(in.reduce_player, in.reduce_kept));
      break;
    case Law::kRedundant:
      doc.comments.push_back("redundant " + space.player_name(in.redundancy.player) + " remove " +
                             space.label(in.redundancy.player, in.redundancy.removed) + " alpha" +
                             Values(in.redundancy.alpha));
      break;
    default:
      break;
  }
  return doc;
}

namespace {

std::vector<std::string> Words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<Rational> Numbers(const std::vector<std::string>& words, std::size_t from) {
  std::vector<Rational> out;
  for (std::size_t k = from; k < words.size(); ++k) out.push_back(ParseRational(words[k]));
  return out;
}

[[noreturn]] void Missing(const char* what) {
  Fail(ErrorKind::kParse, std::string("replay: missing or malformed '") + what + "' comment");
}

}  // namespace

Instance InstanceFromDocument(Law law, const GameDocument<Rational>& doc) {
  Instance in;
  in.game = doc.game;
  in.mu = doc.mu;
  in.gamma = doc.gamma;
  const SpacePtr& space = doc.game.space_ptr();
  const int n = space->num_players();
  std::vector<Tensor<Rational>> translation(n);
  std::vector<Tensor<Rational>> beta(n);
  bool beta_generator = false;
  bool seen = false;
  for (const auto& comment : doc.comments) {
    auto w = Words(comment);
    if (w.empty()) continue;
    if (w[0] == "law" && w.size() == 2) {
      if (w[1] != LawName(law)) {
        Fail(ErrorKind::kValidation, "replay: document records law '" + w[1] + "', not '" +
                                         LawName(law) + "'");
      }
    } else if (w[0] == "eta" && w.size() == 4 && law == Law::kParamEquivalence) {
      in.eta = ParseRational(w[1]);
      in.theta = ParseRational(w[3]);
      seen = true;
    } else if (w[0] == "permutation" && w.size() >= 2 && law == Law::kPermute) {
      in.permutation.player = ResolvePlayer(*space, w[1]);
      for (std::size_t k = 2; k < w.size(); ++k) in.permutation.sigma.push_back(std::stoi(w[k]));
      seen = true;
    } else if (w[0] == "translation" && w.size() >= 2 && law == Law::kTranslate) {
      translation[ResolvePlayer(*space, w[1])] = Numbers(w, 2);
      seen = true;
    } else if ((w[0] == "beta" || w[0] == "product-gamma") && w.size() >= 3 &&
               (law == Law::kScale || law == Law::kHarmonicEq)) {
      beta_generator = w[1] == "generator";
      beta[ResolvePlayer(*space, w[2])] = Numbers(w, 3);
      seen = true;
    } else if (w[0] == "duplicate" && w.size() == 7 && law == Law::kExtend) {
      in.duplication.player = ResolvePlayer(*space, w[1]);
      in.duplication.source = ResolveStrategy(*space, in.duplication.player, w[2]);
      in.duplication.label = w[4];
      in.duplication.lambda = ParseRational(w[6]);
      seen = true;
    } else if (w[0] == "reduce" && w.size() == 6 && law == Law::kReduce) {
      in.reduce_player = ResolvePlayer(*space, w[1]);
      in.reduce_removed = ResolveStrategy(*space, in.reduce_player, w[3]);
      in.reduce_kept = ResolveStrategy(*space, in.reduce_player, w[5]);
      seen = true;
    } else if (w[0] == "redundant" && w.size() >= 5 && law == Law::kRedundant) {
      in.redundancy.player = ResolvePlayer(*space, w[1]);
      in.redundancy.removed = ResolveStrategy(*space, in.redundancy.player, w[3]);
      in.redundancy.alpha = Numbers(w, 5);
      seen = true;
    }
  }
  switch (law) {
    case Law::kParamEquivalence:
      if (!seen) Missing("eta");
      break;
    case Law::kPermute:
      if (!seen) Missing("permutation");
      break;
    case Law::kTranslate:
      if (!seen) Missing("translation");
      in.translation = Game<Rational>(space, std::move(translation));
      break;
    case Law::kScale:
    case Law::kHarmonicEq:
      if (!seen) Missing(law == Law::kScale ? "beta" : "product-gamma");
      in.beta = beta_generator ? CoMeasureVector<Rational>::FromGenerator(space, std::move(beta))
                               : CoMeasureVector<Rational>(space, std::move(beta));
      break;
    case Law::kExtend:
      if (!seen) Missing("duplicate");
      break;
    case Law::kReduce:
      if (!seen) Missing("reduce");
      break;
    case Law::kRedundant:
      if (!seen) Missing("redundant");
      break;
    default:
      break;
  }
  return in;
}

namespace {

struct TrialOutcome {
  bool failed = false;
  bool threw = false;
  std::string detail;
};

TrialOutcome Evaluate(Law law, const Instance& in, bool exact) {
  try {
    CheckOutcome out = exact ? CheckLaw<Rational>(law, in) : CheckLaw<double>(law, in);
    return {!out.ok, false, out.detail};
  } catch (const Error& e) {
    return {true, true, std::string("error: ") + e.what()};
  }
}

}  // namespace

CheckOutcome ReplayInstance(Law law, const Instance& instance, bool exact) {
  TrialOutcome outcome = Evaluate(law, instance, exact);
  return {!outcome.failed, outcome.detail};
}

VerifyResult RunLaw(const VerifyOptions& options) {
  auto start = std::chrono::steady_clock::now();
  VerifyResult result;
  result.law = options.law;
  for (int trial = 0; trial < options.trials; ++trial) {
    Instance in = GenerateInstance(options.law, options.seed, trial, options.generator);
    TrialOutcome outcome = Evaluate(options.law, in, options.exact);
    ++result.trials;
    if (!outcome.failed) {
      ++result.passed;
      continue;
    }
    result.failed_trial = trial;
    if (options.minimize) {
      bool threw = outcome.threw;
      in = MinimizeCounterexample(options.law, std::move(in), [&](const Instance& candidate) {
        TrialOutcome o = Evaluate(options.law, candidate, options.exact);
        return o.failed && o.threw == threw;
      });
      outcome = Evaluate(options.law, in, options.exact);
    }
    result.detail = outcome.detail;
    GameDocument<Rational> doc = InstanceDocument(options.law, in);
    doc.comments.insert(doc.comments.begin() + 1,
                        "seed " + std::to_string(options.seed) + " trial " + std::to_string(trial));
    doc.comments.push_back("violation: " + outcome.detail);
    result.counterexample = std::move(doc);
    break;
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string FormatVerifyResult(const VerifyOptions& options, const VerifyResult& result) {
  std::ostringstream out;
  out << "law " << LawName(result.law) << ": ";
  if (!result.failed_trial) {
    out << "pass (" << result.passed << "/" << options.trials << " trials, seed " << options.seed
        << ", " << (options.exact ? "exact" : "float") << ")\n";
    return out.str();
  }
  out << "FAIL at trial " << *result.failed_trial << " (seed " << options.seed << ", "
      << (options.exact ? "exact" : "float") << "): " << result.detail << "\n";
  out << "# minimized counterexample\n";
  out << SerializeGameDocument(*result.counterexample);
  return out.str();
}

template CheckOutcome CheckLaw<Rational>(Law, const Instance&);
template CheckOutcome CheckLaw<double>(Law, const Instance&);

}  // namespace nfgd
