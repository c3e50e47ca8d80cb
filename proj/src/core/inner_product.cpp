#include "core/inner_product.hpp"

#include <string>

namespace nfgd {
namespace {

std::string Where(const StrategySpace& space, int player) {
  return " (player '" + space.player_name(player) + "')";
}

}  // namespace

void CheckSameSpace(const SpacePtr& a, const SpacePtr& b) {
  if (!a || !b) Fail(ErrorKind::kShape, "shape mismatch: missing strategy space");
  if (a == b) return;
  if (a->player_names() != b->player_names()) {
    Fail(ErrorKind::kShape, "label mismatch: arguments have different players");
  }
  if (!(*a == *b)) Fail(ErrorKind::kShape, "label mismatch: arguments have different strategy labels");
}

template <typename T>
void CheckShape(const SpacePtr& space, const MeasureVector<T>& mu) {
  CheckSameSpace(space, mu.space_ptr());
  if (static_cast<int>(mu.weights().size()) != space->num_players()) {
    Fail(ErrorKind::kShape, "shape mismatch: mu needs one weight vector per player");
  }
  for (int i = 0; i < space->num_players(); ++i) {
    if (static_cast<int>(mu.weights(i).size()) != space->num_strategies(i)) {
      Fail(ErrorKind::kShape, "shape mismatch: mu has " + std::to_string(mu.weights(i).size()) +
                                  " entries, expected " +
                                  std::to_string(space->num_strategies(i)) + Where(*space, i));
    }
  }
}

template <typename T>
void CheckShape(const SpacePtr& space, const CoMeasureVector<T>& gamma) {
  CheckSameSpace(space, gamma.space_ptr());
  if (static_cast<int>(gamma.values().size()) != space->num_players()) {
    Fail(ErrorKind::kShape, "shape mismatch: gamma needs one tensor per player");
  }
  for (int i = 0; i < space->num_players(); ++i) {
    if (gamma.values(i).size() != space->num_subprofiles(i)) {
      Fail(ErrorKind::kShape, "shape mismatch: gamma has " +
                                  std::to_string(gamma.values(i).size()) + " entries, expected " +
                                  std::to_string(space->num_subprofiles(i)) + Where(*space, i));
    }
  }
}

template <typename T>
void ValidateParameters(const SpacePtr& space, const MeasureVector<T>& mu,
                        const CoMeasureVector<T>& gamma) {
  CheckShape(space, mu);
  CheckShape(space, gamma);
  for (int i = 0; i < space->num_players(); ++i) {
    for (int s = 0; s < space->num_strategies(i); ++s) {
      if (!(mu.weight(i, s) > T(0))) {
        Fail(ErrorKind::kValidation, "nonpositive measure: mu(" + space->label(i, s) +
                                         ") = " + FormatScalar(mu.weight(i, s)) + Where(*space, i));
      }
    }
  }
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) {
      if (!(gamma.value(i, sub) > T(0))) {
        Fail(ErrorKind::kValidation,
             "nonpositive co-measure: gamma entry " + std::to_string(sub) + " = " +
                 FormatScalar(gamma.value(i, sub)) + Where(*space, i));
      }
    }
  }
}

template <typename T>
T InnerProductC0(const ScalarField<T>& h, const ScalarField<T>& f, const MeasureVector<T>& mu) {
  CheckSameSpace(h.space_ptr(), f.space_ptr());
  CheckShape(h.space_ptr(), mu);
  T sum(0);
  for (std::size_t s = 0; s < h.size(); ++s) sum += mu.Product(s) * h[s] * f[s];
  return sum;
}

template <typename T>
T InnerProductGame(const Game<T>& g1, const Game<T>& g2, const MeasureVector<T>& mu,
                   const CoMeasureVector<T>& gamma) {
  const SpacePtr& space = g1.space_ptr();
  CheckSameSpace(space, g2.space_ptr());
  CheckShape(space, mu);
  CheckShape(space, gamma);
  std::size_t n = space->num_profiles();
  std::vector<T> weight(n);
  for (std::size_t s = 0; s < n; ++s) weight[s] = mu.Product(s);
  T total(0);
  for (int i = 0; i < space->num_players(); ++i) {
    T sum(0);
    for (std::size_t s = 0; s < n; ++s) {
      const T& c = gamma.at(i, s);
      sum += weight[s] * c * c * g1.at(i, s) * g2.at(i, s);
    }
    total += mu.total(i) * sum;
  }
  return total;
}

template <typename T>
T GameNorm(const Game<T>& g, const MeasureVector<T>& mu, const CoMeasureVector<T>& gamma) {
  return InnerProductGame(g, g, mu, gamma);
}

#define NFGD_INSTANTIATE(T)                                                                  \
  template void CheckShape<T>(const SpacePtr&, const MeasureVector<T>&);                     \
  template void CheckShape<T>(const SpacePtr&, const CoMeasureVector<T>&);                   \
  template void ValidateParameters<T>(const SpacePtr&, const MeasureVector<T>&,              \
                                      const CoMeasureVector<T>&);                            \
  template T InnerProductC0<T>(const ScalarField<T>&, const ScalarField<T>&,                 \
                               const MeasureVector<T>&);                                     \
  template T InnerProductGame<T>(const Game<T>&, const Game<T>&, const MeasureVector<T>&,    \
                                 const CoMeasureVector<T>&);                                 \
  template T GameNorm<T>(const Game<T>&, const MeasureVector<T>&, const CoMeasureVector<T>&);
NFGD_INSTANTIATE(Rational)
NFGD_INSTANTIATE(double)

}  // namespace nfgd
