#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/scalar.hpp"
#include "core/strategy_space.hpp"

namespace nfgd {

template <typename T>
using Tensor = std::vector<T>;

template <typename T>
class Game {
 public:
  using Scalar = T;

  Game() = default;
  explicit Game(SpacePtr space) : space_(std::move(space)) {
    payoffs_.assign(space_->num_players(), Tensor<T>(space_->num_profiles(), T(0)));
  }
  Game(SpacePtr space, std::vector<Tensor<T>> payoffs)
      : space_(std::move(space)), payoffs_(std::move(payoffs)) {
    if (static_cast<int>(payoffs_.size()) != space_->num_players()) {
      Fail(ErrorKind::kShape, "shape mismatch: expected one payoff tensor per player");
    }
    for (int i = 0; i < space_->num_players(); ++i) {
      if (payoffs_[i].size() != space_->num_profiles()) {
        Fail(ErrorKind::kShape, "shape mismatch: payoff tensor of player '" +
                                    space_->player_name(i) + "' must have " +
                                    std::to_string(space_->num_profiles()) + " entries");
      }
    }
  }

  const SpacePtr& space_ptr() const { return space_; }
  const StrategySpace& space() const { return *space_; }
  int num_players() const { return space_->num_players(); }
  const Tensor<T>& payoff(int player) const { return payoffs_[player]; }
  const T& at(int player, std::size_t profile) const { return payoffs_[player][profile]; }
  const std::vector<Tensor<T>>& payoffs() const { return payoffs_; }

  friend Game operator+(const Game& a, const Game& b) { return Combine(a, b, 1); }
  friend Game operator-(const Game& a, const Game& b) { return Combine(a, b, -1); }
  friend Game operator*(const T& k, const Game& g) {
    auto payoffs = g.payoffs_;
    for (auto& tensor : payoffs) {
      for (auto& v : tensor) v = k * v;
    }
    return Game(g.space_, std::move(payoffs));
  }
  friend bool operator==(const Game& a, const Game& b) {
    return SameSpace(a.space_, b.space_) && a.payoffs_ == b.payoffs_;
  }

 private:
  static Game Combine(const Game& a, const Game& b, int sign) {
    if (!SameSpace(a.space_, b.space_)) Fail(ErrorKind::kShape, "shape mismatch: games on different spaces");
    auto payoffs = a.payoffs_;
    for (std::size_t i = 0; i < payoffs.size(); ++i) {
      for (std::size_t s = 0; s < payoffs[i].size(); ++s) {
        if (sign > 0) {
          payoffs[i][s] += b.payoffs_[i][s];
        } else {
          payoffs[i][s] -= b.payoffs_[i][s];
        }
      }
    }
    return Game(a.space_, std::move(payoffs));
  }

  SpacePtr space_;
  std::vector<Tensor<T>> payoffs_;
};

template <typename T>
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(SpacePtr space)
      : space_(std::move(space)), values_(space_->num_profiles(), T(0)) {}
  ScalarField(SpacePtr space, Tensor<T> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_->num_profiles()) {
      Fail(ErrorKind::kShape, "shape mismatch: field must have " +
                                  std::to_string(space_->num_profiles()) + " entries");
    }
  }

  const SpacePtr& space_ptr() const { return space_; }
  const StrategySpace& space() const { return *space_; }
  const Tensor<T>& values() const { return values_; }
  const T& operator[](std::size_t profile) const { return values_[profile]; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const ScalarField& a, const ScalarField& b) {
    return SameSpace(a.space_, b.space_) && a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  Tensor<T> values_;
};

// Constructors store raw data; positivity and shape are checked by
// ValidateParameters and CheckShape.
template <typename T>
class MeasureVector {
 public:
  MeasureVector() = default;
  MeasureVector(SpacePtr space, std::vector<Tensor<T>> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    totals_.reserve(weights_.size());
    for (const auto& w : weights_) {
      T total(0);
      for (const auto& v : w) total += v;
      totals_.push_back(total);
    }
  }
  static MeasureVector Uniform(SpacePtr space) {
    std::vector<Tensor<T>> weights;
    for (int i = 0; i < space->num_players(); ++i) {
      weights.emplace_back(space->num_strategies(i), T(1));
    }
    return MeasureVector(std::move(space), std::move(weights));
  }

  const SpacePtr& space_ptr() const { return space_; }
  const StrategySpace& space() const { return *space_; }
  const std::vector<Tensor<T>>& weights() const { return weights_; }
  const Tensor<T>& weights(int player) const { return weights_[player]; }
  const T& weight(int player, int s) const { return weights_[player][s]; }
  const T& total(int player) const { return totals_[player]; }
  T normalized(int player, int s) const { return T(weights_[player][s] / totals_[player]); }
  Tensor<T> Normalized(int player) const {
    Tensor<T> out(weights_[player].size());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = weights_[player][s] / totals_[player];
    return out;
  }

  T Product(std::size_t profile) const {
    T out(1);
    for (int j = 0; j < space_->num_players(); ++j) out *= weights_[j][space_->Coordinate(profile, j)];
    return out;
  }
  T ProductExcluding(std::size_t profile, int player) const {
    T out(1);
    for (int j = 0; j < space_->num_players(); ++j) {
      if (j != player) out *= weights_[j][space_->Coordinate(profile, j)];
    }
    return out;
  }

  friend bool operator==(const MeasureVector& a, const MeasureVector& b) {
    return SameSpace(a.space_, b.space_) && a.weights_ == b.weights_;
  }

 private:
  SpacePtr space_;
  std::vector<Tensor<T>> weights_;
  std::vector<T> totals_;
};

template <typename T>
class CoMeasureVector {
 public:
  CoMeasureVector() = default;
  CoMeasureVector(SpacePtr space, std::vector<Tensor<T>> values,
                  std::optional<std::vector<Tensor<T>>> generator = std::nullopt)
      : space_(std::move(space)), values_(std::move(values)), generator_(std::move(generator)) {}

  static CoMeasureVector Uniform(SpacePtr space) {
    std::vector<Tensor<T>> values;
    for (int i = 0; i < space->num_players(); ++i) {
      values.emplace_back(space->num_subprofiles(i), T(1));
    }
    return CoMeasureVector(std::move(space), std::move(values));
  }
  static CoMeasureVector Constant(SpacePtr space, const std::vector<T>& per_player) {
    std::vector<Tensor<T>> values;
    for (int i = 0; i < space->num_players(); ++i) {
      values.emplace_back(space->num_subprofiles(i), per_player.at(i));
    }
    return CoMeasureVector(std::move(space), std::move(values));
  }
  // gamma^i(s^{-i}) = prod_{j != i} c^j(s^j)
  static CoMeasureVector FromGenerator(SpacePtr space, std::vector<Tensor<T>> generator) {
    if (static_cast<int>(generator.size()) != space->num_players()) {
      Fail(ErrorKind::kShape, "shape mismatch: generator needs one vector per player");
    }
    for (int j = 0; j < space->num_players(); ++j) {
      if (static_cast<int>(generator[j].size()) != space->num_strategies(j)) {
        Fail(ErrorKind::kShape, "shape mismatch: generator of player '" + space->player_name(j) +
                                    "' must have " + std::to_string(space->num_strategies(j)) +
                                    " entries");
      }
    }
    std::vector<Tensor<T>> values;
    for (int i = 0; i < space->num_players(); ++i) {
      Tensor<T> tensor(space->num_subprofiles(i));
      for (std::size_t sub = 0; sub < tensor.size(); ++sub) {
        std::size_t profile = space->ProfileFromSubprofile(i, sub, 0);
        T v(1);
        for (int j = 0; j < space->num_players(); ++j) {
          if (j != i) v *= generator[j][space->Coordinate(profile, j)];
        }
        tensor[sub] = v;
      }
      values.push_back(std::move(tensor));
    }
    return CoMeasureVector(std::move(space), std::move(values), std::move(generator));
  }

  const SpacePtr& space_ptr() const { return space_; }
  const StrategySpace& space() const { return *space_; }
  const std::vector<Tensor<T>>& values() const { return values_; }
  const Tensor<T>& values(int player) const { return values_[player]; }
  const T& value(int player, std::size_t sub) const { return values_[player][sub]; }
  // Value at the opponent part of a full profile.
  const T& at(int player, std::size_t profile) const {
    return values_[player][space_->SubprofileIndex(profile, player)];
  }
  bool has_generator() const { return generator_.has_value(); }
  const std::optional<std::vector<Tensor<T>>>& generator() const { return generator_; }

  bool IsConstantPerPlayer() const {
    for (const auto& tensor : values_) {
      for (const auto& v : tensor) {
        if (!(v == tensor.front())) return false;
      }
    }
    return true;
  }

  friend bool operator==(const CoMeasureVector& a, const CoMeasureVector& b) {
    return SameSpace(a.space_, b.space_) && a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  std::vector<Tensor<T>> values_;
  std::optional<std::vector<Tensor<T>>> generator_;
};

template <typename T>
class MixedProfile {
 public:
  MixedProfile() = default;
  MixedProfile(SpacePtr space, std::vector<Tensor<T>> probabilities)
      : space_(std::move(space)), probabilities_(std::move(probabilities)) {}

  static MixedProfile Uniform(SpacePtr space) {
    std::vector<Tensor<T>> p;
    for (int i = 0; i < space->num_players(); ++i) {
      int n = space->num_strategies(i);
      p.emplace_back(n, T(1) / T(n));
    }
    return MixedProfile(std::move(space), std::move(p));
  }
  static MixedProfile Pure(SpacePtr space, std::size_t profile) {
    std::vector<Tensor<T>> p;
    for (int i = 0; i < space->num_players(); ++i) {
      Tensor<T> x(space->num_strategies(i), T(0));
      x[space->Coordinate(profile, i)] = T(1);
      p.push_back(std::move(x));
    }
    return MixedProfile(std::move(space), std::move(p));
  }
  // Normalizes each nonnegative weight vector to a probability vector.
  static MixedProfile FromWeights(SpacePtr space, std::vector<Tensor<T>> weights) {
    for (auto& w : weights) {
      T total(0);
      for (const auto& v : w) total += v;
      if (!(total > T(0))) Fail(ErrorKind::kValidation, "profile weights must have positive total");
      for (auto& v : w) v = v / total;
    }
    return MixedProfile(std::move(space), std::move(weights));
  }

  const SpacePtr& space_ptr() const { return space_; }
  const StrategySpace& space() const { return *space_; }
  const std::vector<Tensor<T>>& probabilities() const { return probabilities_; }
  const Tensor<T>& probabilities(int player) const { return probabilities_[player]; }
  const T& probability(int player, int s) const { return probabilities_[player][s]; }

  // Throws unless every vector is nonnegative, correctly sized and sums to 1.
  void Validate() const {
    if (static_cast<int>(probabilities_.size()) != space_->num_players()) {
      Fail(ErrorKind::kShape, "shape mismatch: profile needs one vector per player");
    }
    for (int i = 0; i < space_->num_players(); ++i) {
      const auto& x = probabilities_[i];
      const std::string& name = space_->player_name(i);
      if (static_cast<int>(x.size()) != space_->num_strategies(i)) {
        Fail(ErrorKind::kShape, "shape mismatch: profile of player '" + name + "' must have " +
                                    std::to_string(space_->num_strategies(i)) + " entries");
      }
      T total(0);
      for (const auto& v : x) {
        if (v < T(0) && !ScalarTraits<T>::IsZero(v)) {
          Fail(ErrorKind::kValidation, "negative probability for player '" + name + "'");
        }
        total += v;
      }
      if (!ScalarTraits<T>::Equal(total, T(1))) {
        Fail(ErrorKind::kValidation, "probabilities of player '" + name + "' do not sum to 1");
      }
    }
  }

  friend bool operator==(const MixedProfile& a, const MixedProfile& b) {
    return SameSpace(a.space_, b.space_) && a.probabilities_ == b.probabilities_;
  }

 private:
  SpacePtr space_;
  std::vector<Tensor<T>> probabilities_;
};

template <typename T>
std::vector<Tensor<T>> ConvertTensors(const std::vector<Tensor<Rational>>& in) {
  std::vector<Tensor<T>> out;
  out.reserve(in.size());
  for (const auto& tensor : in) {
    Tensor<T> t;
    t.reserve(tensor.size());
    for (const auto& v : tensor) t.push_back(Convert<T>(v));
    out.push_back(std::move(t));
  }
  return out;
}

template <typename T>
Game<T> ConvertGame(const Game<Rational>& g) {
  return Game<T>(g.space_ptr(), ConvertTensors<T>(g.payoffs()));
}

template <typename T>
MeasureVector<T> ConvertMeasure(const MeasureVector<Rational>& mu) {
  return MeasureVector<T>(mu.space_ptr(), ConvertTensors<T>(mu.weights()));
}

template <typename T>
CoMeasureVector<T> ConvertCoMeasure(const CoMeasureVector<Rational>& gamma) {
  std::optional<std::vector<Tensor<T>>> generator;
  if (gamma.generator()) generator = ConvertTensors<T>(*gamma.generator());
  return CoMeasureVector<T>(gamma.space_ptr(), ConvertTensors<T>(gamma.values()),
                            std::move(generator));
}

template <typename T>
MixedProfile<T> ConvertProfile(const MixedProfile<Rational>& x) {
  return MixedProfile<T>(x.space_ptr(), ConvertTensors<T>(x.probabilities()));
}

template <typename T>
ScalarField<T> ConvertField(const ScalarField<Rational>& f) {
  Tensor<T> values;
  for (const auto& v : f.values()) values.push_back(Convert<T>(v));
  return ScalarField<T>(f.space_ptr(), std::move(values));
}

// Exact equality in rational mode, tolerance-based in float mode.
template <typename T>
bool NearlyEqual(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!ScalarTraits<T>::Equal(a[k], b[k])) return false;
  }
  return true;
}

template <typename T>
bool NearlyEqual(const Game<T>& a, const Game<T>& b) {
  if (!SameSpace(a.space_ptr(), b.space_ptr())) return false;
  for (int i = 0; i < a.num_players(); ++i) {
    if (!NearlyEqual(a.payoff(i), b.payoff(i))) return false;
  }
  return true;
}

template <typename T>
bool NearlyEqual(const ScalarField<T>& a, const ScalarField<T>& b) {
  return SameSpace(a.space_ptr(), b.space_ptr()) && NearlyEqual(a.values(), b.values());
}

template <typename T>
bool IsZeroGame(const Game<T>& g) {
  for (const auto& tensor : g.payoffs()) {
    for (const auto& v : tensor) {
      if (!ScalarTraits<T>::IsZero(v)) return false;
    }
  }
  return true;
}

}  // namespace nfgd
