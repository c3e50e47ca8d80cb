#include "core/equilibrium.hpp"

#include "core/decomposition.hpp"
#include "core/inner_product.hpp"

namespace nfgd {

template <typename T>
Tensor<T> DeviationPayoffs(const Game<T>& g, const MixedProfile<T>& x, int player) {
  const StrategySpace& space = g.space();
  CheckSameSpace(g.space_ptr(), x.space_ptr());
  x.Validate();
  Tensor<T> out(space.num_strategies(player), T(0));
  for (std::size_t s = 0; s < space.num_profiles(); ++s) {
    T weight(1);
    for (int j = 0; j < space.num_players(); ++j) {
      if (j != player) weight *= x.probability(j, space.Coordinate(s, j));
    }
    if (ScalarTraits<T>::kExact && weight == T(0)) continue;
    out[space.Coordinate(s, player)] += weight * g.at(player, s);
  }
  return out;
}

template <typename T>
T ExpectedPayoff(const Game<T>& g, const MixedProfile<T>& x, int player) {
  Tensor<T> dev = DeviationPayoffs(g, x, player);
  T total(0);
  for (std::size_t t = 0; t < dev.size(); ++t) total += x.probability(player, static_cast<int>(t)) * dev[t];
  return total;
}

template <typename T>
T BestResponseEpsilon(const Game<T>& g, const MixedProfile<T>& x) {
  T epsilon(0);
  for (int i = 0; i < g.num_players(); ++i) {
    Tensor<T> dev = DeviationPayoffs(g, x, i);
    T current(0);
    for (std::size_t t = 0; t < dev.size(); ++t) current += x.probability(i, static_cast<int>(t)) * dev[t];
    for (const auto& v : dev) {
      T gain = v - current;
      if (gain > epsilon) epsilon = gain;
    }
  }
  return epsilon;
}

template <typename T>
MixedProfile<T> NormalizedMeasureProfile(const MeasureVector<T>& mu) {
  return MixedProfile<T>::FromWeights(mu.space_ptr(), mu.weights());
}

template <typename T>
MixedProfile<T> HarmonicEquilibrium(const Game<T>& g, const MeasureVector<T>& mu,
                                    const CoMeasureVector<T>& gamma) {
  ValidateParameters(g.space_ptr(), mu, gamma);
  std::vector<Tensor<T>> weights = mu.weights();
  if (gamma.generator()) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      for (std::size_t s = 0; s < weights[i].size(); ++s) weights[i][s] *= (*gamma.generator())[i][s];
    }
  } else if (!gamma.IsConstantPerPlayer()) {
    Fail(ErrorKind::kPrecondition, "gamma not product");
  }
  if (!IsHarmonic(g, mu, gamma)) Fail(ErrorKind::kPrecondition, "not harmonic");
  auto x = MixedProfile<T>::FromWeights(g.space_ptr(), std::move(weights));
  if (!ScalarTraits<T>::IsZero(BestResponseEpsilon(g, x))) {
    Fail(ErrorKind::kPrecondition, "harmonic equilibrium failed its Nash check");
  }
  return x;
}

template <typename T>
MixedProfile<T> MapEquilibriumUnderScaling(const MixedProfile<T>& x,
                                           const std::vector<Tensor<T>>& generator) {
  const StrategySpace& space = x.space();
  if (static_cast<int>(generator.size()) != space.num_players()) {
    Fail(ErrorKind::kShape, "shape mismatch: generator needs one vector per player");
  }
  std::vector<Tensor<T>> weights = x.probabilities();
  for (int i = 0; i < space.num_players(); ++i) {
    if (static_cast<int>(generator[i].size()) != space.num_strategies(i)) {
      Fail(ErrorKind::kShape, "shape mismatch: generator of player '" + space.player_name(i) + "'");
    }
    for (int s = 0; s < space.num_strategies(i); ++s) {
      if (!(generator[i][s] > T(0))) Fail(ErrorKind::kValidation, "generator entries must be positive");
      weights[i][s] /= generator[i][s];
    }
  }
  return MixedProfile<T>::FromWeights(x.space_ptr(), std::move(weights));
}

template <typename T>
MixedProfile<T> MapEquilibriumUnderScaling(const MixedProfile<T>& x,
                                           const CoMeasureVector<T>& beta) {
  if (!beta.generator()) Fail(ErrorKind::kPrecondition, "beta not product");
  return MapEquilibriumUnderScaling(x, *beta.generator());
}

template <typename T>
std::vector<std::size_t> PureEquilibriumFromPotential(const Game<T>& g,
                                                      const CoMeasureVector<T>& gamma) {
  ScalarField<T> psi = ExtractPotential(g, gamma);
  T best = psi[0];
  for (const auto& v : psi.values()) {
    if (v > best) best = v;
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < psi.size(); ++s) {
    if (ScalarTraits<T>::Equal(psi[s], best)) out.push_back(s);
  }
  for (std::size_t s : out) {
    auto x = MixedProfile<T>::Pure(g.space_ptr(), s);
    if (!ScalarTraits<T>::IsZero(BestResponseEpsilon(g, x))) {
      Fail(ErrorKind::kPrecondition, "potential maximizer failed its Nash check");
    }
  }
  return out;
}

template <typename T>
std::vector<std::size_t> PureNashEquilibria(const Game<T>& g) {
  const StrategySpace& space = g.space();
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < space.num_profiles(); ++s) {
    bool nash = true;
    for (int i = 0; nash && i < space.num_players(); ++i) {
      for (int t = 0; nash && t < space.num_strategies(i); ++t) {
        const T& deviation = g.at(i, space.WithCoordinate(s, i, t));
        nash = ScalarTraits<T>::LessOrEqual(deviation, g.at(i, s));
      }
    }
    if (nash) out.push_back(s);
  }
  return out;
}

#define NFGD_INSTANTIATE(T)                                                                  \
  template T ExpectedPayoff<T>(const Game<T>&, const MixedProfile<T>&, int);                 \
  template Tensor<T> DeviationPayoffs<T>(const Game<T>&, const MixedProfile<T>&, int);       \
  template T BestResponseEpsilon<T>(const Game<T>&, const MixedProfile<T>&);                 \
  template MixedProfile<T> NormalizedMeasureProfile<T>(const MeasureVector<T>&);             \
  template MixedProfile<T> HarmonicEquilibrium<T>(const Game<T>&, const MeasureVector<T>&,   \
                                                  const CoMeasureVector<T>&);                \
  template MixedProfile<T> MapEquilibriumUnderScaling<T>(const MixedProfile<T>&,             \
                                                         const std::vector<Tensor<T>>&);     \
  template MixedProfile<T> MapEquilibriumUnderScaling<T>(const MixedProfile<T>&,             \
                                                         const CoMeasureVector<T>&);         \
  template std::vector<std::size_t> PureEquilibriumFromPotential<T>(                         \
      const Game<T>&, const CoMeasureVector<T>&);                                            \
  template std::vector<std::size_t> PureNashEquilibria<T>(const Game<T>&);
NFGD_INSTANTIATE(Rational)
NFGD_INSTANTIATE(double)

}  // namespace nfgd
