#pragma once

#include <optional>
#include <vector>

#include "core/game.hpp"

namespace nfgd {

// One unordered i-comparable pair, oriented from the lower to the higher
// coordinate of `player`.
struct Edge {
  int player;
  std::size_t from;
  std::size_t to;
};

std::vector<Edge> ComparablePairs(const StrategySpace& space);

// Antisymmetric flow X stored in factored form X(s,t) = W^i(s,t) * Y(s,t)
// with W^i = 1/sqrt(mu^{-i}); Y is always representable exactly.
template <typename T>
class Flow {
 public:
  Flow(MeasureVector<T> mu, std::vector<Edge> edges, std::vector<T> reduced)
      : mu_(std::move(mu)), edges_(std::move(edges)), reduced_(std::move(reduced)) {}

  const SpacePtr& space_ptr() const { return mu_.space_ptr(); }
  const MeasureVector<T>& mu() const { return mu_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const T& reduced(std::size_t e) const { return reduced_[e]; }
  const std::vector<T>& reduced_values() const { return reduced_; }
  // True when every mu^{-i} is a rational square, so X itself is rational.
  bool premultiplied() const;
  // X on edge e; nullopt in exact mode when W^i on that edge is irrational.
  std::optional<T> value(std::size_t e) const;
  bool IsZero() const;

 private:
  MeasureVector<T> mu_;
  std::vector<Edge> edges_;
  std::vector<T> reduced_;
};

template <typename T>
Game<T> LambdaProject(const Game<T>& g, const MeasureVector<T>& mu);
template <typename T>
Game<T> PiProject(const Game<T>& g, const MeasureVector<T>& mu);

template <typename T>
Flow<T> BuildFlow(const Game<T>& g, const CoMeasureVector<T>& gamma, const MeasureVector<T>& mu);
template <typename T>
ScalarField<T> FlowDivergence(const Flow<T>& x, const MeasureVector<T>& mu);

// h(s) = sum_i gamma^i(s^{-i}) sum_t mu^i(t) (g^i(s) - g^i(t, s^{-i}))
template <typename T>
ScalarField<T> DeviationDivergence(const Game<T>& g, const MeasureVector<T>& mu,
                                   const CoMeasureVector<T>& gamma);

// (L phi)(s) = sum_i mu^i(S^i) (phi(s) - sum_t mubar^i(t) phi(t, s^{-i}))
template <typename T>
ScalarField<T> LaplacianApply(const ScalarField<T>& phi, const MeasureVector<T>& mu);

// The solution of L phi = h with sum_s mu(s) phi(s) = 0.
template <typename T>
ScalarField<T> SolvePoisson(const ScalarField<T>& h, const MeasureVector<T>& mu);

#define NFGD_DECLARE(T)                                                                       \
  extern template class Flow<T>;                                                              \
  extern template Game<T> LambdaProject<T>(const Game<T>&, const MeasureVector<T>&);          \
  extern template Game<T> PiProject<T>(const Game<T>&, const MeasureVector<T>&);              \
  extern template Flow<T> BuildFlow<T>(const Game<T>&, const CoMeasureVector<T>&,             \
                                       const MeasureVector<T>&);                              \
  extern template ScalarField<T> FlowDivergence<T>(const Flow<T>&, const MeasureVector<T>&);  \
  extern template ScalarField<T> DeviationDivergence<T>(const Game<T>&,                       \
                                                        const MeasureVector<T>&,              \
                                                        const CoMeasureVector<T>&);           \
  extern template ScalarField<T> LaplacianApply<T>(const ScalarField<T>&,                     \
                                                   const MeasureVector<T>&);                  \
  extern template ScalarField<T> SolvePoisson<T>(const ScalarField<T>&, const MeasureVector<T>&);
NFGD_DECLARE(Rational)
NFGD_DECLARE(double)
#undef NFGD_DECLARE

}  // namespace nfgd
