#include "core/transforms.hpp"

#include <algorithm>

#include "core/decomposition.hpp"
#include "core/inner_product.hpp"

namespace nfgd {
namespace {

void CheckPlayer(const StrategySpace& space, int player) {
  if (player < 0 || player >= space.num_players()) {
    Fail(ErrorKind::kValidation, "player index " + std::to_string(player) + " out of range");
  }
}

void CheckStrategy(const StrategySpace& space, int player, int s) {
  CheckPlayer(space, player);
  if (s < 0 || s >= space.num_strategies(player)) {
    Fail(ErrorKind::kValidation, "strategy index " + std::to_string(s) + " out of range for player '" +
                                     space.player_name(player) + "'");
  }
}

std::size_t SourceProfile(const StrategySpace& old_space, const StrategySpace& target,
                          std::size_t profile, int player, const std::vector<int>& source_of) {
  std::vector<int> tuple = target.Tuple(profile);
  tuple[player] = source_of[tuple[player]];
  return old_space.Index(tuple);
}

template <typename T>
Game<T> ReindexGame(const Game<T>& g, const SpacePtr& target, int player,
                    const std::vector<int>& source_of) {
  std::vector<Tensor<T>> payoffs(g.num_players(), Tensor<T>(target->num_profiles()));
  for (std::size_t u = 0; u < target->num_profiles(); ++u) {
    std::size_t old = SourceProfile(g.space(), *target, u, player, source_of);
    for (int j = 0; j < g.num_players(); ++j) payoffs[j][u] = g.at(j, old);
  }
  return Game<T>(target, std::move(payoffs));
}

template <typename T>
MeasureVector<T> ReindexMeasure(const MeasureVector<T>& mu, const SpacePtr& target, int player,
                                const std::vector<int>& source_of) {
  auto weights = mu.weights();
  Tensor<T> w;
  for (int k : source_of) w.push_back(mu.weight(player, k));
  weights[player] = std::move(w);
  return MeasureVector<T>(target, std::move(weights));
}

template <typename T>
CoMeasureVector<T> ReindexCoMeasure(const CoMeasureVector<T>& gamma, const SpacePtr& target,
                                    int player, const std::vector<int>& source_of) {
  const StrategySpace& old_space = gamma.space();
  std::vector<Tensor<T>> values;
  for (int j = 0; j < target->num_players(); ++j) {
    Tensor<T> tensor(target->num_subprofiles(j));
    for (std::size_t sub = 0; sub < tensor.size(); ++sub) {
      std::vector<int> tuple = target->Tuple(target->ProfileFromSubprofile(j, sub, 0));
      tuple[player] = j == player ? 0 : source_of[tuple[player]];
      tensor[sub] = gamma.value(j, old_space.SubprofileIndex(old_space.Index(tuple), j));
    }
    values.push_back(std::move(tensor));
  }
  std::optional<std::vector<Tensor<T>>> generator;
  if (gamma.generator()) {
    generator = *gamma.generator();
    Tensor<T> c;
    for (int k : source_of) c.push_back((*gamma.generator())[player][k]);
    (*generator)[player] = std::move(c);
  }
  return CoMeasureVector<T>(target, std::move(values), std::move(generator));
}

std::vector<int> WithoutIndex(int n, int removed) {
  std::vector<int> source_of;
  for (int k = 0; k < n; ++k) {
    if (k != removed) source_of.push_back(k);
  }
  return source_of;
}

SpacePtr SpaceWithout(const StrategySpace& space, int player, int s) {
  auto labels = space.labels(player);
  labels.erase(labels.begin() + s);
  return space.WithLabels(player, std::move(labels));
}

template <typename T>
void CheckPositive(const CoMeasureVector<T>& beta, const char* name) {
  for (int i = 0; i < beta.space().num_players(); ++i) {
    for (const auto& v : beta.values(i)) {
      if (!(v > T(0))) {
        Fail(ErrorKind::kValidation, std::string("nonpositive co-measure: ") + name +
                                         " entry for player '" + beta.space().player_name(i) +
                                         "' is " + FormatScalar(v));
      }
    }
  }
}

}  // namespace

void ValidatePermutation(const StrategySpace& space, const PermutationSpec& spec) {
  CheckPlayer(space, spec.player);
  int n = space.num_strategies(spec.player);
  std::vector<int> sorted = spec.sigma;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == n;
  for (int k = 0; ok && k < n; ++k) ok = sorted[k] == k;
  if (!ok) {
    Fail(ErrorKind::kValidation, "invalid permutation for player '" + space.player_name(spec.player) +
                                     "': expected a rearrangement of 0.." + std::to_string(n - 1));
  }
}

template <typename T>
Game<T> Permute(const Game<T>& g, const PermutationSpec& spec) {
  ValidatePermutation(g.space(), spec);
  return ReindexGame(g, g.space_ptr(), spec.player, spec.sigma);
}

template <typename T>
std::pair<MeasureVector<T>, CoMeasureVector<T>> PermuteParams(const MeasureVector<T>& mu,
                                                              const CoMeasureVector<T>& gamma,
                                                              const PermutationSpec& spec) {
  const SpacePtr& space = mu.space_ptr();
  CheckShape(space, mu);
  CheckShape(space, gamma);
  ValidatePermutation(*space, spec);
  return {ReindexMeasure(mu, space, spec.player, spec.sigma),
          ReindexCoMeasure(gamma, space, spec.player, spec.sigma)};
}

template <typename T>
Game<T> TranslateNonstrategic(const Game<T>& g, const Game<T>& ns) {
  CheckSameSpace(g.space_ptr(), ns.space_ptr());
  if (!IsNonstrategic(ns)) Fail(ErrorKind::kPrecondition, "translation not nonstrategic");
  return g + ns;
}

template <typename T>
Game<T> Scale(const Game<T>& g, const CoMeasureVector<T>& beta) {
  const SpacePtr& space = g.space_ptr();
  CheckShape(space, beta);
  CheckPositive(beta, "beta");
  auto payoffs = g.payoffs();
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t s = 0; s < space->num_profiles(); ++s) payoffs[i][s] *= beta.at(i, s);
  }
  return Game<T>(space, std::move(payoffs));
}

template <typename T>
CoMeasureVector<T> CoMeasureQuotient(const CoMeasureVector<T>& gamma, const CoMeasureVector<T>& beta) {
  const SpacePtr& space = gamma.space_ptr();
  CheckShape(space, gamma);
  CheckShape(space, beta);
  CheckPositive(beta, "beta");
  auto values = gamma.values();
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t k = 0; k < values[i].size(); ++k) values[i][k] /= beta.value(i, k);
  }
  std::optional<std::vector<Tensor<T>>> generator;
  if (gamma.generator() && beta.generator()) {
    generator = *gamma.generator();
    for (int i = 0; i < space->num_players(); ++i) {
      for (std::size_t k = 0; k < (*generator)[i].size(); ++k) {
        (*generator)[i][k] /= (*beta.generator())[i][k];
      }
    }
  }
  return CoMeasureVector<T>(space, std::move(values), std::move(generator));
}

template <typename T>
CoMeasureVector<T> CoMeasureProduct(const CoMeasureVector<T>& a, const CoMeasureVector<T>& b) {
  const SpacePtr& space = a.space_ptr();
  CheckShape(space, a);
  CheckShape(space, b);
  auto values = a.values();
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t k = 0; k < values[i].size(); ++k) values[i][k] *= b.value(i, k);
  }
  std::optional<std::vector<Tensor<T>>> generator;
  if (a.generator() && b.generator()) {
    generator = *a.generator();
    for (int i = 0; i < space->num_players(); ++i) {
      for (std::size_t k = 0; k < (*generator)[i].size(); ++k) {
        (*generator)[i][k] *= (*b.generator())[i][k];
      }
    }
  }
  return CoMeasureVector<T>(space, std::move(values), std::move(generator));
}

namespace {

std::pair<SpacePtr, std::vector<int>> ExtendedSpace(const StrategySpace& space,
                                                    const DuplicationSpec& spec) {
  CheckStrategy(space, spec.player, spec.source);
  if (space.FindStrategy(spec.player, spec.label)) {
    Fail(ErrorKind::kValidation, "label collision: player '" + space.player_name(spec.player) +
                                     "' already has a strategy '" + spec.label + "'");
  }
  auto labels = space.labels(spec.player);
  labels.insert(labels.begin() + spec.source + 1, spec.label);
  std::vector<int> source_of;
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
    source_of.push_back(k <= spec.source ? k : k - 1);
  }
  return {space.WithLabels(spec.player, std::move(labels)), std::move(source_of)};
}

}  // namespace

template <typename T>
Game<T> ExtendGame(const Game<T>& g, const DuplicationSpec& spec) {
  auto [target, source_of] = ExtendedSpace(g.space(), spec);
  return ReindexGame(g, target, spec.player, source_of);
}

template <typename T>
ParameterizedGame<T> ExtendDuplicate(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma, const DuplicationSpec& spec) {
  ValidateParameters(g.space_ptr(), mu, gamma);
  if (sgn(spec.lambda) <= 0 || spec.lambda >= 1) {
    Fail(ErrorKind::kValidation, "duplication split lambda must lie in (0,1)");
  }
  auto [target, source_of] = ExtendedSpace(g.space(), spec);
  Game<T> game = ReindexGame(g, target, spec.player, source_of);
  auto weights = ReindexMeasure(mu, target, spec.player, source_of).weights();
  T lambda = Convert<T>(spec.lambda);
  const T& base = mu.weight(spec.player, spec.source);
  weights[spec.player][spec.source] = (T(1) - lambda) * base;
  weights[spec.player][spec.source + 1] = lambda * base;
  return {std::move(game), MeasureVector<T>(target, std::move(weights)),
          ReindexCoMeasure(gamma, target, spec.player, source_of)};
}

template <typename T>
Game<T> RemoveStrategy(const Game<T>& g, int player, int s) {
  CheckStrategy(g.space(), player, s);
  SpacePtr target = SpaceWithout(g.space(), player, s);
  return ReindexGame(g, target, player, WithoutIndex(g.space().num_strategies(player), s));
}

template <typename T>
CoMeasureVector<T> RemoveStrategy(const CoMeasureVector<T>& gamma, int player, int s) {
  CheckStrategy(gamma.space(), player, s);
  SpacePtr target = SpaceWithout(gamma.space(), player, s);
  return ReindexCoMeasure(gamma, target, player,
                          WithoutIndex(gamma.space().num_strategies(player), s));
}

template <typename T>
MeasureVector<T> RemoveStrategy(const MeasureVector<T>& mu, int player, int s) {
  CheckStrategy(mu.space(), player, s);
  SpacePtr target = SpaceWithout(mu.space(), player, s);
  return ReindexMeasure(mu, target, player, WithoutIndex(mu.space().num_strategies(player), s));
}

template <typename T>
ParameterizedGame<T> ReduceDuplicate(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma, int player, int s0, int s1) {
  const SpacePtr& space = g.space_ptr();
  ValidateParameters(space, mu, gamma);
  CheckStrategy(*space, player, s0);
  CheckStrategy(*space, player, s1);
  if (s0 == s1) Fail(ErrorKind::kValidation, "a strategy cannot duplicate itself");
  for (std::size_t sub = 0; sub < space->num_subprofiles(player); ++sub) {
    std::size_t p0 = space->ProfileFromSubprofile(player, sub, s0);
    std::size_t p1 = space->ProfileFromSubprofile(player, sub, s1);
    for (int j = 0; j < space->num_players(); ++j) {
      if (!ScalarTraits<T>::Equal(g.at(j, p0), g.at(j, p1))) {
        Fail(ErrorKind::kPrecondition,
             "not a duplicate: payoff of player '" + space->player_name(j) + "' at " +
                 space->DescribeProfile(p0) + " is " + FormatScalar(g.at(j, p0)) + " but " +
                 FormatScalar(g.at(j, p1)) + " at " + space->DescribeProfile(p1));
      }
    }
  }
  for (int j = 0; j < space->num_players(); ++j) {
    if (j == player) continue;
    for (std::size_t sub = 0; sub < space->num_subprofiles(player); ++sub) {
      std::size_t p0 = space->ProfileFromSubprofile(player, sub, s0);
      std::size_t p1 = space->ProfileFromSubprofile(player, sub, s1);
      if (!ScalarTraits<T>::Equal(gamma.at(j, p0), gamma.at(j, p1))) {
        Fail(ErrorKind::kPrecondition, "gamma not coherent: gamma of player '" +
                                           space->player_name(j) + "' differs between " +
                                           space->DescribeProfile(p0) + " and " +
                                           space->DescribeProfile(p1));
      }
    }
  }
  Game<T> game = RemoveStrategy(g, player, s0);
  auto weights = mu.weights();
  weights[player][s1] += mu.weight(player, s0);
  weights[player].erase(weights[player].begin() + s0);
  return {game, MeasureVector<T>(game.space_ptr(), std::move(weights)),
          RemoveStrategy(gamma, player, s0)};
}

template <typename T>
ParameterizedGame<T> ReduceRedundant(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma, const RedundancySpec& spec) {
  const SpacePtr& space = g.space_ptr();
  ValidateParameters(space, mu, gamma);
  CheckStrategy(*space, spec.player, spec.removed);
  const int i = spec.player;
  const int n = space->num_strategies(i);
  if (static_cast<int>(spec.alpha.size()) != n - 1) {
    Fail(ErrorKind::kShape, "shape mismatch: alpha needs " + std::to_string(n - 1) + " entries");
  }
  Rational alpha_total(0);
  for (const auto& a : spec.alpha) {
    if (sgn(a) < 0) Fail(ErrorKind::kValidation, "alpha entries must be nonnegative");
    alpha_total += a;
  }
  if (alpha_total != 1) Fail(ErrorKind::kValidation, "alpha entries must sum to 1");
  std::vector<int> rest = WithoutIndex(n, spec.removed);
  std::vector<T> alpha;
  for (const auto& a : spec.alpha) alpha.push_back(Convert<T>(a));

  for (int j = 0; j < space->num_players(); ++j) {
    for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) {
      T mix(0);
      for (std::size_t k = 0; k < rest.size(); ++k) {
        mix += alpha[k] * g.at(j, space->ProfileFromSubprofile(i, sub, rest[k]));
      }
      std::size_t p0 = space->ProfileFromSubprofile(i, sub, spec.removed);
      if (!ScalarTraits<T>::Equal(g.at(j, p0), mix)) {
        Fail(ErrorKind::kPrecondition,
             "not alpha-redundant: payoff of player '" + space->player_name(j) + "' at " +
                 space->DescribeProfile(p0) + " is " + FormatScalar(g.at(j, p0)) +
                 ", the alpha-mixture gives " + FormatScalar(mix));
      }
    }
  }
  if (!gamma.IsConstantPerPlayer()) Fail(ErrorKind::kPrecondition, "gamma not uniform");

  Game<T> game = RemoveStrategy(g, i, spec.removed);
  auto weights = mu.weights();
  Tensor<T> reduced;
  for (std::size_t k = 0; k < rest.size(); ++k) {
    reduced.push_back(mu.weight(i, rest[k]) + alpha[k] * mu.weight(i, spec.removed));
  }
  weights[i] = std::move(reduced);
  return {game, MeasureVector<T>(game.space_ptr(), std::move(weights)),
          RemoveStrategy(gamma, i, spec.removed)};
}

template <typename T>
Game<T> DropPlayer(const Game<T>& g, int player, int s) {
  CheckStrategy(g.space(), player, s);
  SpacePtr target = g.space().WithoutPlayer(player);
  std::vector<Tensor<T>> payoffs;
  for (int j = 0; j < g.num_players(); ++j) {
    if (j == player) continue;
    Tensor<T> tensor(target->num_profiles());
    for (std::size_t u = 0; u < tensor.size(); ++u) {
      std::vector<int> tuple = target->Tuple(u);
      tuple.insert(tuple.begin() + player, s);
      tensor[u] = g.at(j, g.space().Index(tuple));
    }
    payoffs.push_back(std::move(tensor));
  }
  return Game<T>(target, std::move(payoffs));
}

template <typename T>
MeasureVector<T> DropPlayer(const MeasureVector<T>& mu, int player) {
  CheckPlayer(mu.space(), player);
  auto weights = mu.weights();
  weights.erase(weights.begin() + player);
  return MeasureVector<T>(mu.space().WithoutPlayer(player), std::move(weights));
}

template <typename T>
CoMeasureVector<T> DropPlayer(const CoMeasureVector<T>& gamma, int player, int s) {
  CheckStrategy(gamma.space(), player, s);
  const StrategySpace& old_space = gamma.space();
  SpacePtr target = old_space.WithoutPlayer(player);
  std::vector<Tensor<T>> values;
  for (int j = 0; j < old_space.num_players(); ++j) {
    if (j == player) continue;
    int jj = j < player ? j : j - 1;
    Tensor<T> tensor(target->num_subprofiles(jj));
    for (std::size_t sub = 0; sub < tensor.size(); ++sub) {
      std::vector<int> tuple = target->Tuple(target->ProfileFromSubprofile(jj, sub, 0));
      tuple.insert(tuple.begin() + player, s);
      tensor[sub] = gamma.value(j, old_space.SubprofileIndex(old_space.Index(tuple), j));
    }
    values.push_back(std::move(tensor));
  }
  return CoMeasureVector<T>(target, std::move(values));
}

#define NFGD_INSTANTIATE(T)                                                                     \
  template Game<T> Permute<T>(const Game<T>&, const PermutationSpec&);                          \
  template std::pair<MeasureVector<T>, CoMeasureVector<T>> PermuteParams<T>(                    \
      const MeasureVector<T>&, const CoMeasureVector<T>&, const PermutationSpec&);              \
  template Game<T> TranslateNonstrategic<T>(const Game<T>&, const Game<T>&);                    \
  template Game<T> Scale<T>(const Game<T>&, const CoMeasureVector<T>&);                         \
  template CoMeasureVector<T> CoMeasureQuotient<T>(const CoMeasureVector<T>&,                   \
                                                   const CoMeasureVector<T>&);                  \
  template CoMeasureVector<T> CoMeasureProduct<T>(const CoMeasureVector<T>&,                    \
                                                  const CoMeasureVector<T>&);                   \
  template Game<T> ExtendGame<T>(const Game<T>&, const DuplicationSpec&);                       \
  template ParameterizedGame<T> ExtendDuplicate<T>(const Game<T>&, const MeasureVector<T>&,     \
                                                   const CoMeasureVector<T>&,                   \
                                                   const DuplicationSpec&);                     \
  template Game<T> RemoveStrategy<T>(const Game<T>&, int, int);                                 \
  template CoMeasureVector<T> RemoveStrategy<T>(const CoMeasureVector<T>&, int, int);           \
  template MeasureVector<T> RemoveStrategy<T>(const MeasureVector<T>&, int, int);               \
  template ParameterizedGame<T> ReduceDuplicate<T>(const Game<T>&, const MeasureVector<T>&,     \
                                                   const CoMeasureVector<T>&, int, int, int);   \
  template ParameterizedGame<T> ReduceRedundant<T>(const Game<T>&, const MeasureVector<T>&,     \
                                                   const CoMeasureVector<T>&,                   \
                                                   const RedundancySpec&);                      \
  template Game<T> DropPlayer<T>(const Game<T>&, int, int);                                     \
  template MeasureVector<T> DropPlayer<T>(const MeasureVector<T>&, int);                        \
  template CoMeasureVector<T> DropPlayer<T>(const CoMeasureVector<T>&, int, int);
NFGD_INSTANTIATE(Rational)
NFGD_INSTANTIATE(double)

}  // namespace nfgd
