#include "core/strategy_space.hpp"

#include <set>

#include "core/error.hpp"

namespace nfgd {
namespace {

bool ValidToken(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '|' || c == '#' || c == ':') {
      return false;
    }
  }
  return true;
}

}  // namespace

StrategySpace::StrategySpace(std::vector<std::string> player_names,
                             std::vector<std::vector<std::string>> labels)
    : player_names_(std::move(player_names)), labels_(std::move(labels)) {
  if (labels_.size() < 2) Fail(ErrorKind::kValidation, "a game needs at least 2 players");
  if (player_names_.size() != labels_.size()) {
    Fail(ErrorKind::kShape, "player name count does not match strategy list count");
  }
  std::set<std::string> names;
  for (const auto& name : player_names_) {
    if (!ValidToken(name)) Fail(ErrorKind::kValidation, "invalid player name '" + name + "'");
    if (!names.insert(name).second) {
      Fail(ErrorKind::kValidation, "duplicate player name '" + name + "'");
    }
  }
  strides_.assign(labels_.size(), 1);
  num_profiles_ = 1;
  for (int i = num_players() - 1; i >= 0; --i) {
    const auto& list = labels_[i];
    if (list.size() < 2) {
      Fail(ErrorKind::kValidation,
           "player '" + player_names_[i] + "' needs at least 2 strategies");
    }
    std::set<std::string> seen;
    for (const auto& label : list) {
      if (!ValidToken(label)) Fail(ErrorKind::kValidation, "invalid strategy label '" + label + "'");
      if (!seen.insert(label).second) {
        Fail(ErrorKind::kValidation,
             "duplicate strategy label '" + label + "' for player '" + player_names_[i] + "'");
      }
    }
    strides_[i] = num_profiles_;
    num_profiles_ *= list.size();
  }
}

SpacePtr StrategySpace::Make(std::vector<std::string> player_names,
                             std::vector<std::vector<std::string>> labels) {
  return std::make_shared<const StrategySpace>(std::move(player_names), std::move(labels));
}

SpacePtr StrategySpace::WithSizes(const std::vector<int>& sizes) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    names.push_back("p" + std::to_string(i + 1));
    std::vector<std::string> list;
    for (int s = 0; s < sizes[i]; ++s) list.push_back("s" + std::to_string(s));
    labels.push_back(std::move(list));
  }
  return Make(std::move(names), std::move(labels));
}

std::optional<int> StrategySpace::FindPlayer(std::string_view name) const {
  for (int i = 0; i < num_players(); ++i) {
    if (player_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<int> StrategySpace::FindStrategy(int player, std::string_view label) const {
  for (int s = 0; s < num_strategies(player); ++s) {
    if (labels_[player][s] == label) return s;
  }
  return std::nullopt;
}

std::vector<int> StrategySpace::Tuple(std::size_t profile) const {
  std::vector<int> tuple(labels_.size());
  for (int i = 0; i < num_players(); ++i) tuple[i] = Coordinate(profile, i);
  return tuple;
}

std::size_t StrategySpace::Index(const std::vector<int>& tuple) const {
  if (tuple.size() != labels_.size()) Fail(ErrorKind::kShape, "profile tuple has wrong length");
  std::size_t index = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= num_strategies(i)) {
      Fail(ErrorKind::kShape, "profile coordinate out of range");
    }
    index += static_cast<std::size_t>(tuple[i]) * strides_[i];
  }
  return index;
}

std::string StrategySpace::DescribeProfile(std::size_t profile) const {
  std::string out = "(";
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) out += ",";
    out += labels_[i][Coordinate(profile, i)];
  }
  return out + ")";
}

SpacePtr StrategySpace::WithLabels(int player, std::vector<std::string> labels) const {
  auto all = labels_;
  all[player] = std::move(labels);
  return Make(player_names_, std::move(all));
}

SpacePtr StrategySpace::WithoutPlayer(int player) const {
  auto names = player_names_;
  auto all = labels_;
  names.erase(names.begin() + player);
  all.erase(all.begin() + player);
  return Make(std::move(names), std::move(all));
}

}  // namespace nfgd
