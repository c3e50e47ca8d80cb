#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfgd {

// Profiles are enumerated row-major with the first player varying slowest.
// The same convention orders the opponent subprofiles of S^{-i}.
class StrategySpace {
 public:
  StrategySpace(std::vector<std::string> player_names,
                std::vector<std::vector<std::string>> labels);

  static std::shared_ptr<const StrategySpace> Make(
      std::vector<std::string> player_names,
      std::vector<std::vector<std::string>> labels);
  // Players p1..pn with strategies s0..s(k-1).
  static std::shared_ptr<const StrategySpace> WithSizes(const std::vector<int>& sizes);

  int num_players() const { return static_cast<int>(labels_.size()); }
  int num_strategies(int player) const { return static_cast<int>(labels_[player].size()); }
  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t num_subprofiles(int player) const {
    return num_profiles_ / labels_[player].size();
  }
  std::size_t stride(int player) const { return strides_[player]; }

  const std::string& player_name(int player) const { return player_names_[player]; }
  const std::vector<std::string>& labels(int player) const { return labels_[player]; }
  const std::string& label(int player, int s) const { return labels_[player][s]; }
  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<std::vector<std::string>>& all_labels() const { return labels_; }

  std::optional<int> FindPlayer(std::string_view name) const;
  std::optional<int> FindStrategy(int player, std::string_view label) const;

  int Coordinate(std::size_t profile, int player) const {
    return static_cast<int>((profile / strides_[player]) % labels_[player].size());
  }
  std::size_t WithCoordinate(std::size_t profile, int player, int s) const {
    return profile - static_cast<std::size_t>(Coordinate(profile, player)) * strides_[player] +
           static_cast<std::size_t>(s) * strides_[player];
  }
  std::size_t SubprofileIndex(std::size_t profile, int player) const {
    std::size_t block = strides_[player] * labels_[player].size();
    return (profile / block) * strides_[player] + profile % strides_[player];
  }
  std::size_t ProfileFromSubprofile(int player, std::size_t sub, int s) const {
    std::size_t st = strides_[player];
    return (sub / st) * st * labels_[player].size() + static_cast<std::size_t>(s) * st + sub % st;
  }

  std::vector<int> Tuple(std::size_t profile) const;
  std::size_t Index(const std::vector<int>& tuple) const;
  std::string DescribeProfile(std::size_t profile) const;

  // Copy of the space with one player's strategy list replaced.
  std::shared_ptr<const StrategySpace> WithLabels(int player,
                                                  std::vector<std::string> labels) const;
  std::shared_ptr<const StrategySpace> WithoutPlayer(int player) const;

  bool operator==(const StrategySpace& other) const {
    return player_names_ == other.player_names_ && labels_ == other.labels_;
  }

 private:
  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

using SpacePtr = std::shared_ptr<const StrategySpace>;

inline bool SameSpace(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace nfgd
