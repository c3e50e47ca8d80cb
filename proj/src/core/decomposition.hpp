#pragma once

#include "core/game.hpp"

namespace nfgd {

template <typename T>
struct Decomposition {
  Game<T> nonstrategic;
  Game<T> potential;
  Game<T> harmonic;
  // Potential function of `potential`, with sum_s mu(s) phi(s) = 0.
  ScalarField<T> phi;
  MeasureVector<T> mu;
  CoMeasureVector<T> gamma;
};

template <typename T>
struct ClosestPotentialResult {
  Game<T> closest;
  T distance_squared;
};

template <typename T>
Decomposition<T> Decompose(const Game<T>& g, const MeasureVector<T>& mu,
                           const CoMeasureVector<T>& gamma);

template <typename T>
bool IsNonstrategic(const Game<T>& g);
template <typename T>
bool IsMuNormalized(const Game<T>& g, const MeasureVector<T>& mu);
template <typename T>
bool IsGammaPotential(const Game<T>& g, const CoMeasureVector<T>& gamma);
template <typename T>
bool IsHarmonic(const Game<T>& g, const MeasureVector<T>& mu, const CoMeasureVector<T>& gamma);

// Path integration over a spanning tree of the game graph, then every
// comparable pair is checked. Result has zero (uniform) mean.
template <typename T>
ScalarField<T> ExtractPotential(const Game<T>& g, const CoMeasureVector<T>& gamma);

template <typename T>
ClosestPotentialResult<T> ClosestPotential(const Game<T>& g, const MeasureVector<T>& mu,
                                           const CoMeasureVector<T>& gamma);

// B^2 = 4 max_j max_{s^{-j}} d^2 / (gamma^j(s^{-j})^2 mu^j(S^j))
template <typename T>
T EpsilonBoundSquared(const Game<T>& g, const MeasureVector<T>& mu,
                      const CoMeasureVector<T>& gamma);
double EpsilonBound(const Game<double>& g, const MeasureVector<double>& mu,
                    const CoMeasureVector<double>& gamma);

#define NFGD_DECLARE(T)                                                                        \
  extern template Decomposition<T> Decompose<T>(const Game<T>&, const MeasureVector<T>&,       \
                                                const CoMeasureVector<T>&);                    \
  extern template bool IsNonstrategic<T>(const Game<T>&);                                      \
  extern template bool IsMuNormalized<T>(const Game<T>&, const MeasureVector<T>&);             \
  extern template bool IsGammaPotential<T>(const Game<T>&, const CoMeasureVector<T>&);         \
  extern template bool IsHarmonic<T>(const Game<T>&, const MeasureVector<T>&,                  \
                                     const CoMeasureVector<T>&);                               \
  extern template ScalarField<T> ExtractPotential<T>(const Game<T>&, const CoMeasureVector<T>&); \
  extern template ClosestPotentialResult<T> ClosestPotential<T>(                               \
      const Game<T>&, const MeasureVector<T>&, const CoMeasureVector<T>&);                     \
  extern template T EpsilonBoundSquared<T>(const Game<T>&, const MeasureVector<T>&,            \
                                           const CoMeasureVector<T>&);
NFGD_DECLARE(Rational)
NFGD_DECLARE(double)
#undef NFGD_DECLARE

}  // namespace nfgd
