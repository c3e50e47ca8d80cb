#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/game.hpp"

namespace nfgd {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kFormatMagic = "nfg-decomp";

template <typename T>
struct GameDocument {
  Game<T> game;
  MeasureVector<T> mu;
  CoMeasureVector<T> gamma;
  std::vector<std::pair<std::string, MixedProfile<T>>> profiles;
  std::vector<std::pair<std::string, ScalarField<T>>> fields;
  // Written as '#' lines after the header.
  std::vector<std::string> comments;
};

// Errors are kParse ("line N, field K: ...") or the usual shape and
// validation errors, prefixed with the offending line.
GameDocument<Rational> ParseGameDocument(std::string_view text);

template <typename T>
std::string SerializeGameDocument(const GameDocument<T>& doc);

// Replaces parameters using statements of the document grammar, e.g.
// "mu row 1 2", "gamma col uniform", "generator row 1 3".
void ApplyParameterOverrides(GameDocument<Rational>& doc, const std::vector<std::string>& lines);

// Parses a co-measure given as gamma/generator statements over `space`;
// players without a statement get weight 1.
CoMeasureVector<Rational> ParseCoMeasureStatements(const SpacePtr& space,
                                                   const std::vector<std::string>& lines);

template <typename T>
GameDocument<T> ConvertDocument(const GameDocument<Rational>& doc);

// Document holding a game with default (uniform) parameters.
template <typename T>
GameDocument<T> MakeDocument(const Game<T>& game);

const MixedProfile<Rational>& FindProfile(const GameDocument<Rational>& doc, std::string_view name);

extern template std::string SerializeGameDocument<Rational>(const GameDocument<Rational>&);
extern template std::string SerializeGameDocument<double>(const GameDocument<double>&);
extern template GameDocument<Rational> ConvertDocument<Rational>(const GameDocument<Rational>&);
extern template GameDocument<double> ConvertDocument<double>(const GameDocument<Rational>&);
extern template GameDocument<Rational> MakeDocument<Rational>(const Game<Rational>&);
extern template GameDocument<double> MakeDocument<double>(const Game<double>&);

}  // namespace nfgd
