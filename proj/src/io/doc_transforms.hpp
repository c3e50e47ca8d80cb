#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/transforms.hpp"
#include "io/document.hpp"

namespace nfgd {

// Document-level transformations. Each returns the transformed game with its
// induced mu and gamma; named profiles are carried to the new space.

int ResolvePlayer(const StrategySpace& space, std::string_view name);
int ResolveStrategy(const StrategySpace& space, int player, std::string_view label);

template <typename T>
GameDocument<T> PermuteDocument(const GameDocument<T>& doc, std::string_view player,
                                const std::vector<std::string>& order);
template <typename T>
GameDocument<T> TranslateDocument(const GameDocument<T>& doc, const Game<T>& translation);
// Named profiles are mapped only when beta has a generator.
template <typename T>
GameDocument<T> ScaleDocument(const GameDocument<T>& doc, const CoMeasureVector<T>& beta);
template <typename T>
GameDocument<T> ExtendDocument(const GameDocument<T>& doc, std::string_view player,
                               std::string_view strategy, std::string label, const Rational& lambda);
template <typename T>
GameDocument<T> ReduceDocument(const GameDocument<T>& doc, std::string_view player,
                               std::string_view removed, std::string_view kept);
template <typename T>
GameDocument<T> ReduceRedundantDocument(const GameDocument<T>& doc, std::string_view player,
                                        std::string_view removed, const std::vector<Rational>& alpha);

#define NFGD_DECLARE_DOC_TRANSFORMS(T)                                                              \
  extern template GameDocument<T> PermuteDocument<T>(const GameDocument<T>&, std::string_view,     \
                                                     const std::vector<std::string>&);             \
  extern template GameDocument<T> TranslateDocument<T>(const GameDocument<T>&, const Game<T>&);    \
  extern template GameDocument<T> ScaleDocument<T>(const GameDocument<T>&,                         \
                                                   const CoMeasureVector<T>&);                     \
  extern template GameDocument<T> ExtendDocument<T>(const GameDocument<T>&, std::string_view,      \
                                                    std::string_view, std::string,                 \
                                                    const Rational&);                              \
  extern template GameDocument<T> ReduceDocument<T>(const GameDocument<T>&, std::string_view,      \
                                                    std::string_view, std::string_view);           \
  extern template GameDocument<T> ReduceRedundantDocument<T>(                                      \
      const GameDocument<T>&, std::string_view, std::string_view, const std::vector<Rational>&);
NFGD_DECLARE_DOC_TRANSFORMS(Rational)
NFGD_DECLARE_DOC_TRANSFORMS(double)
#undef NFGD_DECLARE_DOC_TRANSFORMS

}  // namespace nfgd
