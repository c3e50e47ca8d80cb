#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "core/game.hpp"
#include "io/document.hpp"

namespace nfgd::testing {

inline Tensor<Rational> Q(std::initializer_list<const char*> values) {
  Tensor<Rational> out;
  for (const char* v : values) out.push_back(ParseRational(v));
  return out;
}

inline std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(NFGD_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline GameDocument<Rational> Fixture(const std::string& name) {
  return ParseGameDocument(ReadFixture(name));
}

inline Game<Rational> MakeGame(const SpacePtr& space, std::vector<Tensor<Rational>> payoffs) {
  return Game<Rational>(space, std::move(payoffs));
}

inline SpacePtr TwoByTwo() { return StrategySpace::Make({"row", "col"}, {{"s", "t"}, {"s", "t"}}); }

}  // namespace nfgd::testing
