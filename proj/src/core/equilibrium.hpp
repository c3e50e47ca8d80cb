#pragma once

#include <vector>

#include "core/game.hpp"

namespace nfgd {

template <typename T>
T ExpectedPayoff(const Game<T>& g, const MixedProfile<T>& x, int player);

// Expected payoff of each pure strategy of `player` against x^{-i}.
template <typename T>
Tensor<T> DeviationPayoffs(const Game<T>& g, const MixedProfile<T>& x, int player);

// max_i max_t [payoff of t against x^{-i}] - [payoff of x], floored at 0.
template <typename T>
T BestResponseEpsilon(const Game<T>& g, const MixedProfile<T>& x);

template <typename T>
MixedProfile<T> NormalizedMeasureProfile(const MeasureVector<T>& mu);

// x^i = normalized(mu^i c^i) with c the generator of gamma (c = 1 when
// every gamma^i is constant).
template <typename T>
MixedProfile<T> HarmonicEquilibrium(const Game<T>& g, const MeasureVector<T>& mu,
                                    const CoMeasureVector<T>& gamma);

// y^i proportional to x^i / b^i.
template <typename T>
MixedProfile<T> MapEquilibriumUnderScaling(const MixedProfile<T>& x,
                                           const std::vector<Tensor<T>>& generator);
template <typename T>
MixedProfile<T> MapEquilibriumUnderScaling(const MixedProfile<T>& x,
                                           const CoMeasureVector<T>& beta);

// All argmax profiles of the potential, in canonical order.
template <typename T>
std::vector<std::size_t> PureEquilibriumFromPotential(const Game<T>& g,
                                                      const CoMeasureVector<T>& gamma);

// Exhaustive scan for pure Nash equilibria.
template <typename T>
std::vector<std::size_t> PureNashEquilibria(const Game<T>& g);

#define NFGD_DECLARE(T)                                                                      \
  extern template T ExpectedPayoff<T>(const Game<T>&, const MixedProfile<T>&, int);          \
  extern template Tensor<T> DeviationPayoffs<T>(const Game<T>&, const MixedProfile<T>&, int); \
  extern template T BestResponseEpsilon<T>(const Game<T>&, const MixedProfile<T>&);          \
  extern template MixedProfile<T> NormalizedMeasureProfile<T>(const MeasureVector<T>&);      \
  extern template MixedProfile<T> HarmonicEquilibrium<T>(                                    \
      const Game<T>&, const MeasureVector<T>&, const CoMeasureVector<T>&);                   \
  extern template MixedProfile<T> MapEquilibriumUnderScaling<T>(                             \
      const MixedProfile<T>&, const std::vector<Tensor<T>>&);                                \
  extern template MixedProfile<T> MapEquilibriumUnderScaling<T>(const MixedProfile<T>&,      \
                                                                const CoMeasureVector<T>&);  \
  extern template std::vector<std::size_t> PureEquilibriumFromPotential<T>(                  \
      const Game<T>&, const CoMeasureVector<T>&);                                            \
  extern template std::vector<std::size_t> PureNashEquilibria<T>(const Game<T>&);
NFGD_DECLARE(Rational)
NFGD_DECLARE(double)
#undef NFGD_DECLARE

}  // namespace nfgd
