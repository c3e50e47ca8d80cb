#include "core/decomposition.hpp"

#include <cmath>
#include <deque>

#include "core/inner_product.hpp"
#include "core/operators.hpp"

namespace nfgd {

template <typename T>
Decomposition<T> Decompose(const Game<T>& g, const MeasureVector<T>& mu,
                           const CoMeasureVector<T>& gamma) {
  const SpacePtr& space = g.space_ptr();
  ValidateParameters(space, mu, gamma);
  ScalarField<T> h = DeviationDivergence(g, mu, gamma);
  ScalarField<T> phi = SolvePoisson(h, mu);

  std::vector<Tensor<T>> f(space->num_players(), Tensor<T>(space->num_profiles()));
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t s = 0; s < space->num_profiles(); ++s) f[i][s] = phi[s] / gamma.at(i, s);
  }
  Game<T> fg(space, std::move(f));
  Game<T> potential = PiProject(fg, mu);
  Game<T> nonstrategic = LambdaProject(g, mu);
  Game<T> harmonic = PiProject(g, mu) - potential;
  return {std::move(nonstrategic), std::move(potential), std::move(harmonic), std::move(phi), mu,
          gamma};
}

template <typename T>
bool IsNonstrategic(const Game<T>& g) {
  const StrategySpace& space = g.space();
  for (int i = 0; i < space.num_players(); ++i) {
    for (std::size_t sub = 0; sub < space.num_subprofiles(i); ++sub) {
      const T& first = g.at(i, space.ProfileFromSubprofile(i, sub, 0));
      for (int t = 1; t < space.num_strategies(i); ++t) {
        if (!ScalarTraits<T>::Equal(g.at(i, space.ProfileFromSubprofile(i, sub, t)), first)) {
          return false;
        }
      }
    }
  }
  return true;
}

template <typename T>
bool IsMuNormalized(const Game<T>& g, const MeasureVector<T>& mu) {
  const SpacePtr& space = g.space_ptr();
  CheckShape(space, mu);
  for (int i = 0; i < space->num_players(); ++i) {
    for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) {
      T sum(0);
      for (int t = 0; t < space->num_strategies(i); ++t) {
        sum += mu.weight(i, t) * g.at(i, space->ProfileFromSubprofile(i, sub, t));
      }
      if (!ScalarTraits<T>::IsZero(sum)) return false;
    }
  }
  return true;
}

template <typename T>
bool IsGammaPotential(const Game<T>& g, const CoMeasureVector<T>& gamma) {
  auto d = Decompose(g, MeasureVector<T>::Uniform(g.space_ptr()), gamma);
  return IsZeroGame(d.harmonic);
}

template <typename T>
bool IsHarmonic(const Game<T>& g, const MeasureVector<T>& mu, const CoMeasureVector<T>& gamma) {
  ScalarField<T> h = DeviationDivergence(g, mu, gamma);
  for (const auto& v : h.values()) {
    if (!ScalarTraits<T>::IsZero(v)) return false;
  }
  return true;
}

template <typename T>
ScalarField<T> ExtractPotential(const Game<T>& g, const CoMeasureVector<T>& gamma) {
  const SpacePtr& space = g.space_ptr();
  CheckShape(space, gamma);
  const std::size_t n = space->num_profiles();
  Tensor<T> psi(n, T(0));
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (int i = 0; i < space->num_players(); ++i) {
      for (int t = 0; t < space->num_strategies(i); ++t) {
        std::size_t u = space->WithCoordinate(s, i, t);
        if (seen[u]) continue;
        seen[u] = true;
        psi[u] = psi[s] + gamma.at(i, s) * (g.at(i, u) - g.at(i, s));
        queue.push_back(u);
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (int i = 0; i < space->num_players(); ++i) {
      for (int t = space->Coordinate(s, i) + 1; t < space->num_strategies(i); ++t) {
        std::size_t u = space->WithCoordinate(s, i, t);
        T expected = gamma.at(i, s) * (g.at(i, u) - g.at(i, s));
        if (!ScalarTraits<T>::Equal(T(psi[u] - psi[s]), expected)) {
          Fail(ErrorKind::kPrecondition, "not gamma-potential: inconsistent cycle through " +
                                             space->DescribeProfile(s) + " and " +
                                             space->DescribeProfile(u));
        }
      }
    }
  }
  T mean(0);
  for (const auto& v : psi) mean += v;
  mean /= T(static_cast<long>(n));
  for (auto& v : psi) v -= mean;
  return ScalarField<T>(space, std::move(psi));
}

template <typename T>
ClosestPotentialResult<T> ClosestPotential(const Game<T>& g, const MeasureVector<T>& mu,
                                           const CoMeasureVector<T>& gamma) {
  auto d = Decompose(g, mu, gamma);
  T distance = GameNorm(d.harmonic, mu, gamma);
  return {d.nonstrategic + d.potential, distance};
}

template <typename T>
T EpsilonBoundSquared(const Game<T>& g, const MeasureVector<T>& mu,
                      const CoMeasureVector<T>& gamma) {
  T d2 = ClosestPotential(g, mu, gamma).distance_squared;
  const StrategySpace& space = g.space();
  T worst(0);
  for (int j = 0; j < space.num_players(); ++j) {
    for (std::size_t sub = 0; sub < space.num_subprofiles(j); ++sub) {
      const T& c = gamma.value(j, sub);
      T candidate = d2 / (c * c * mu.total(j));
      if (candidate > worst) worst = candidate;
    }
  }
  return T(4) * worst;
}

double EpsilonBound(const Game<double>& g, const MeasureVector<double>& mu,
                    const CoMeasureVector<double>& gamma) {
  return std::sqrt(EpsilonBoundSquared(g, mu, gamma));
}

#define NFGD_INSTANTIATE(T)                                                                   \
  template Decomposition<T> Decompose<T>(const Game<T>&, const MeasureVector<T>&,             \
                                         const CoMeasureVector<T>&);                          \
  template bool IsNonstrategic<T>(const Game<T>&);                                            \
  template bool IsMuNormalized<T>(const Game<T>&, const MeasureVector<T>&);                   \
  template bool IsGammaPotential<T>(const Game<T>&, const CoMeasureVector<T>&);               \
  template bool IsHarmonic<T>(const Game<T>&, const MeasureVector<T>&,                        \
                              const CoMeasureVector<T>&);                                     \
  template ScalarField<T> ExtractPotential<T>(const Game<T>&, const CoMeasureVector<T>&);     \
  template ClosestPotentialResult<T> ClosestPotential<T>(const Game<T>&,                      \
                                                         const MeasureVector<T>&,             \
                                                         const CoMeasureVector<T>&);          \
  template T EpsilonBoundSquared<T>(const Game<T>&, const MeasureVector<T>&,                  \
                                    const CoMeasureVector<T>&);
NFGD_INSTANTIATE(Rational)
NFGD_INSTANTIATE(double)

}  // namespace nfgd
