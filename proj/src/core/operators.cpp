#include "core/operators.hpp"

#include <cmath>

#include "core/inner_product.hpp"
#include "core/linear_solve.hpp"

namespace nfgd {
namespace {

template <typename T>
bool SqrtOf(const T& x, T* root);

template <>
bool SqrtOf<Rational>(const Rational& x, Rational* root) {
  return ExactSqrt(x, root);
}

template <>
bool SqrtOf<double>(const double& x, double* root) {
  *root = std::sqrt(x);
  return true;
}

}  // namespace

std::vector<Edge> ComparablePairs(const StrategySpace& space) {
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < space.num_profiles(); ++s) {
    for (int i = 0; i < space.num_players(); ++i) {
      int si = space.Coordinate(s, i);
      for (int t = si + 1; t < space.num_strategies(i); ++t) {
        edges.push_back({i, s, space.WithCoordinate(s, i, t)});
      }
    }
  }
  return edges;
}

template <typename T>
bool Flow<T>::premultiplied() const {
  const StrategySpace& space = mu_.space();
  for (std::size_t s = 0; s < space.num_profiles(); ++s) {
    for (int i = 0; i < space.num_players(); ++i) {
      T root;
      if (!SqrtOf(mu_.ProductExcluding(s, i), &root)) return false;
    }
  }
  return true;
}

template <typename T>
std::optional<T> Flow<T>::value(std::size_t e) const {
  const Edge& edge = edges_[e];
  T root;
  if (!SqrtOf(mu_.ProductExcluding(edge.from, edge.player), &root)) return std::nullopt;
  return T(reduced_[e] / root);
}

template <typename T>
bool Flow<T>::IsZero() const {
  for (const auto& v : reduced_) {
    if (!ScalarTraits<T>::IsZero(v)) return false;
  }
  return true;
}

template <typename T>
Game<T> LambdaProject(const Game<T>& g, const MeasureVector<T>& mu) {
  const SpacePtr& space = g.space_ptr();
  CheckShape(space, mu);
  std::vector<Tensor<T>> out(space->num_players(), Tensor<T>(space->num_profiles()));
  for (int i = 0; i < space->num_players(); ++i) {
    Tensor<T> bar = mu.Normalized(i);
    int n = space->num_strategies(i);
    for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) {
      T avg(0);
      for (int t = 0; t < n; ++t) avg += bar[t] * g.at(i, space->ProfileFromSubprofile(i, sub, t));
      for (int t = 0; t < n; ++t) out[i][space->ProfileFromSubprofile(i, sub, t)] = avg;
    }
  }
  return Game<T>(space, std::move(out));
}

template <typename T>
Game<T> PiProject(const Game<T>& g, const MeasureVector<T>& mu) {
  return g - LambdaProject(g, mu);
}

template <typename T>
Flow<T> BuildFlow(const Game<T>& g, const CoMeasureVector<T>& gamma, const MeasureVector<T>& mu) {
  const SpacePtr& space = g.space_ptr();
  CheckShape(space, mu);
  CheckShape(space, gamma);
  std::vector<Edge> edges = ComparablePairs(*space);
  std::vector<T> reduced;
  reduced.reserve(edges.size());
  for (const Edge& e : edges) {
    reduced.push_back(gamma.at(e.player, e.from) * (g.at(e.player, e.to) - g.at(e.player, e.from)));
  }
  return Flow<T>(mu, std::move(edges), std::move(reduced));
}

// With X = W Y and W^2 = 1/mu^{-i}, mu(t) W X(s,t) reduces to mu^i(t^i) Y(s,t).
template <typename T>
ScalarField<T> FlowDivergence(const Flow<T>& x, const MeasureVector<T>& mu) {
  const SpacePtr& space = x.space_ptr();
  CheckShape(space, mu);
  if (!(mu == x.mu())) {
    Fail(ErrorKind::kValidation, "flow was built under a different measure");
  }
  Tensor<T> out(space->num_profiles(), T(0));
  for (std::size_t k = 0; k < x.edges().size(); ++k) {
    const Edge& e = x.edges()[k];
    const T& y = x.reduced(k);
    out[e.from] -= mu.weight(e.player, space->Coordinate(e.to, e.player)) * y;
    out[e.to] += mu.weight(e.player, space->Coordinate(e.from, e.player)) * y;
  }
  return ScalarField<T>(space, std::move(out));
}

template <typename T>
ScalarField<T> DeviationDivergence(const Game<T>& g, const MeasureVector<T>& mu,
                                   const CoMeasureVector<T>& gamma) {
  const SpacePtr& space = g.space_ptr();
  CheckShape(space, mu);
  CheckShape(space, gamma);
  Tensor<T> out(space->num_profiles(), T(0));
  for (int i = 0; i < space->num_players(); ++i) {
    int n = space->num_strategies(i);
    for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) {
      T weighted(0);
      for (int t = 0; t < n; ++t) {
        weighted += mu.weight(i, t) * g.at(i, space->ProfileFromSubprofile(i, sub, t));
      }
      const T& c = gamma.value(i, sub);
      for (int t = 0; t < n; ++t) {
        std::size_t s = space->ProfileFromSubprofile(i, sub, t);
        out[s] += c * (mu.total(i) * g.at(i, s) - weighted);
      }
    }
  }
  return ScalarField<T>(space, std::move(out));
}

template <typename T>
ScalarField<T> LaplacianApply(const ScalarField<T>& phi, const MeasureVector<T>& mu) {
  const SpacePtr& space = phi.space_ptr();
  CheckShape(space, mu);
  Tensor<T> out(space->num_profiles(), T(0));
  for (int i = 0; i < space->num_players(); ++i) {
    int n = space->num_strategies(i);
    for (std::size_t sub = 0; sub < space->num_subprofiles(i); ++sub) {
      T weighted(0);
      for (int t = 0; t < n; ++t) weighted += mu.weight(i, t) * phi[space->ProfileFromSubprofile(i, sub, t)];
      for (int t = 0; t < n; ++t) {
        std::size_t s = space->ProfileFromSubprofile(i, sub, t);
        out[s] += mu.total(i) * phi[s] - weighted;
      }
    }
  }
  return ScalarField<T>(space, std::move(out));
}

template <typename T>
ScalarField<T> SolvePoisson(const ScalarField<T>& h, const MeasureVector<T>& mu) {
  const SpacePtr& space = h.space_ptr();
  CheckShape(space, mu);
  const std::size_t n = space->num_profiles();
  std::vector<T> weight(n);
  T mass(0);
  T scale(0);
  for (std::size_t s = 0; s < n; ++s) {
    weight[s] = mu.Product(s);
    mass += weight[s] * h[s];
    scale += weight[s] * (h[s] < T(0) ? T(-h[s]) : h[s]);
  }
  if constexpr (ScalarTraits<T>::kExact) {
    if (!ScalarTraits<T>::IsZero(mass)) Fail(ErrorKind::kPrecondition, "inconsistent right-hand side");
  } else {
    if (std::abs(mass) > ScalarTraits<T>::kTolerance * std::max(1.0, scale)) {
      Fail(ErrorKind::kPrecondition, "inconsistent right-hand side");
    }
  }

  std::vector<std::vector<T>> a(n + 1, std::vector<T>(n, T(0)));
  std::vector<T> b(n + 1, T(0));
  for (std::size_t s = 0; s < n; ++s) {
    for (int i = 0; i < space->num_players(); ++i) {
      int si = space->Coordinate(s, i);
      a[s][s] += mu.total(i) - mu.weight(i, si);
      for (int t = 0; t < space->num_strategies(i); ++t) {
        if (t != si) a[s][space->WithCoordinate(s, i, t)] -= mu.weight(i, t);
      }
    }
    b[s] = h[s];
    a[n][s] = weight[s];
  }
  return ScalarField<T>(space, SolveFullColumnRank(a, b));
}

#define NFGD_INSTANTIATE(T)                                                                  \
  template class Flow<T>;                                                                    \
  template Game<T> LambdaProject<T>(const Game<T>&, const MeasureVector<T>&);                \
  template Game<T> PiProject<T>(const Game<T>&, const MeasureVector<T>&);                    \
  template Flow<T> BuildFlow<T>(const Game<T>&, const CoMeasureVector<T>&,                   \
                                const MeasureVector<T>&);                                    \
  template ScalarField<T> FlowDivergence<T>(const Flow<T>&, const MeasureVector<T>&);        \
  template ScalarField<T> DeviationDivergence<T>(const Game<T>&, const MeasureVector<T>&,    \
                                                 const CoMeasureVector<T>&);                 \
  template ScalarField<T> LaplacianApply<T>(const ScalarField<T>&, const MeasureVector<T>&); \
  template ScalarField<T> SolvePoisson<T>(const ScalarField<T>&, const MeasureVector<T>&);
NFGD_INSTANTIATE(Rational)
NFGD_INSTANTIATE(double)

}  // namespace nfgd
