#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/game.hpp"

namespace nfgd {

struct PermutationSpec {
  int player = 0;
  // New strategy k takes the payoffs of old strategy sigma[k].
  std::vector<int> sigma;
};

struct DuplicationSpec {
  int player = 0;
  int source = 0;
  std::string label;
  // Share of mu^i(source) moved to the new strategy.
  Rational lambda{1, 2};
};

struct RedundancySpec {
  int player = 0;
  int removed = 0;
  // Weights over the remaining strategies of `player`, in order.
  std::vector<Rational> alpha;
};

template <typename T>
struct ParameterizedGame {
  Game<T> game;
  MeasureVector<T> mu;
  CoMeasureVector<T> gamma;
};

void ValidatePermutation(const StrategySpace& space, const PermutationSpec& spec);

template <typename T>
Game<T> Permute(const Game<T>& g, const PermutationSpec& spec);
template <typename T>
std::pair<MeasureVector<T>, CoMeasureVector<T>> PermuteParams(const MeasureVector<T>& mu,
                                                              const CoMeasureVector<T>& gamma,
                                                              const PermutationSpec& spec);

template <typename T>
Game<T> TranslateNonstrategic(const Game<T>& g, const Game<T>& ns);

template <typename T>
Game<T> Scale(const Game<T>& g, const CoMeasureVector<T>& beta);
template <typename T>
CoMeasureVector<T> CoMeasureQuotient(const CoMeasureVector<T>& gamma, const CoMeasureVector<T>& beta);
template <typename T>
CoMeasureVector<T> CoMeasureProduct(const CoMeasureVector<T>& a, const CoMeasureVector<T>& b);

// Game part of the extension alone (used on decomposition components).
template <typename T>
Game<T> ExtendGame(const Game<T>& g, const DuplicationSpec& spec);
template <typename T>
ParameterizedGame<T> ExtendDuplicate(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma, const DuplicationSpec& spec);

// Deletes one strategy of one player from a game; no checks.
template <typename T>
Game<T> RemoveStrategy(const Game<T>& g, int player, int s);
template <typename T>
CoMeasureVector<T> RemoveStrategy(const CoMeasureVector<T>& gamma, int player, int s);
template <typename T>
MeasureVector<T> RemoveStrategy(const MeasureVector<T>& mu, int player, int s);

template <typename T>
ParameterizedGame<T> ReduceDuplicate(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma, int player, int s0, int s1);
template <typename T>
ParameterizedGame<T> ReduceRedundant(const Game<T>& g, const MeasureVector<T>& mu,
                                     const CoMeasureVector<T>& gamma, const RedundancySpec& spec);

// Restriction to the slice where `player` plays strategy `s`, dropping the player.
template <typename T>
Game<T> DropPlayer(const Game<T>& g, int player, int s);
template <typename T>
MeasureVector<T> DropPlayer(const MeasureVector<T>& mu, int player);
template <typename T>
CoMeasureVector<T> DropPlayer(const CoMeasureVector<T>& gamma, int player, int s);

#define NFGD_DECLARE(T)                                                                         \
  extern template Game<T> Permute<T>(const Game<T>&, const PermutationSpec&);                   \
  extern template std::pair<MeasureVector<T>, CoMeasureVector<T>> PermuteParams<T>(             \
      const MeasureVector<T>&, const CoMeasureVector<T>&, const PermutationSpec&);              \
  extern template Game<T> TranslateNonstrategic<T>(const Game<T>&, const Game<T>&);             \
  extern template Game<T> Scale<T>(const Game<T>&, const CoMeasureVector<T>&);                  \
  extern template CoMeasureVector<T> CoMeasureQuotient<T>(const CoMeasureVector<T>&,            \
                                                          const CoMeasureVector<T>&);           \
  extern template CoMeasureVector<T> CoMeasureProduct<T>(const CoMeasureVector<T>&,             \
                                                         const CoMeasureVector<T>&);            \
  extern template Game<T> ExtendGame<T>(const Game<T>&, const DuplicationSpec&);                \
  extern template ParameterizedGame<T> ExtendDuplicate<T>(                                      \
      const Game<T>&, const MeasureVector<T>&, const CoMeasureVector<T>&,                       \
      const DuplicationSpec&);                                                                  \
  extern template Game<T> RemoveStrategy<T>(const Game<T>&, int, int);                          \
  extern template CoMeasureVector<T> RemoveStrategy<T>(const CoMeasureVector<T>&, int, int);    \
  extern template MeasureVector<T> RemoveStrategy<T>(const MeasureVector<T>&, int, int);        \
  extern template ParameterizedGame<T> ReduceDuplicate<T>(                                      \
      const Game<T>&, const MeasureVector<T>&, const CoMeasureVector<T>&, int, int, int);       \
  extern template ParameterizedGame<T> ReduceRedundant<T>(                                      \
      const Game<T>&, const MeasureVector<T>&, const CoMeasureVector<T>&,                       \
      const RedundancySpec&);                                                                   \
  extern template Game<T> DropPlayer<T>(const Game<T>&, int, int);                              \
  extern template MeasureVector<T> DropPlayer<T>(const MeasureVector<T>&, int);                 \
  extern template CoMeasureVector<T> DropPlayer<T>(const CoMeasureVector<T>&, int, int);
NFGD_DECLARE(Rational)
NFGD_DECLARE(double)
#undef NFGD_DECLARE

}  // namespace nfgd
