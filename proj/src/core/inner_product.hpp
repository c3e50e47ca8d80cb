#pragma once

#include "core/game.hpp"

namespace nfgd {

// Throw kShape with "shape mismatch" unless the argument lives on `space`
// and has correctly sized tensors.
template <typename T>
void CheckShape(const SpacePtr& space, const MeasureVector<T>& mu);
template <typename T>
void CheckShape(const SpacePtr& space, const CoMeasureVector<T>& gamma);
void CheckSameSpace(const SpacePtr& a, const SpacePtr& b);

// Throws on the first offending entry: "shape mismatch", "label mismatch",
// "nonpositive measure" or "nonpositive co-measure".
template <typename T>
void ValidateParameters(const SpacePtr& space, const MeasureVector<T>& mu,
                        const CoMeasureVector<T>& gamma);

// sum_s mu(s) h(s) f(s)
template <typename T>
T InnerProductC0(const ScalarField<T>& h, const ScalarField<T>& f, const MeasureVector<T>& mu);

// sum_i mu^i(S^i) sum_s mu(s) gamma^i(s^{-i})^2 g1^i(s) g2^i(s)
template <typename T>
T InnerProductGame(const Game<T>& g1, const Game<T>& g2, const MeasureVector<T>& mu,
                   const CoMeasureVector<T>& gamma);

// Squared norm.
template <typename T>
T GameNorm(const Game<T>& g, const MeasureVector<T>& mu, const CoMeasureVector<T>& gamma);

#define NFGD_DECLARE(T)                                                                       \
  extern template void CheckShape<T>(const SpacePtr&, const MeasureVector<T>&);               \
  extern template void CheckShape<T>(const SpacePtr&, const CoMeasureVector<T>&);             \
  extern template void ValidateParameters<T>(const SpacePtr&, const MeasureVector<T>&,        \
                                             const CoMeasureVector<T>&);                      \
  extern template T InnerProductC0<T>(const ScalarField<T>&, const ScalarField<T>&,           \
                                      const MeasureVector<T>&);                               \
  extern template T InnerProductGame<T>(const Game<T>&, const Game<T>&,                       \
                                        const MeasureVector<T>&, const CoMeasureVector<T>&);  \
  extern template T GameNorm<T>(const Game<T>&, const MeasureVector<T>&,                      \
                                const CoMeasureVector<T>&);
NFGD_DECLARE(Rational)
NFGD_DECLARE(double)
#undef NFGD_DECLARE

}  // namespace nfgd
