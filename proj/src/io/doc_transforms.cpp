#include "io/doc_transforms.hpp"

#include "core/equilibrium.hpp"

namespace nfgd {

int ResolvePlayer(const StrategySpace& space, std::string_view name) {
  auto i = space.FindPlayer(name);
  if (!i) Fail(ErrorKind::kValidation, "unknown player '" + std::string(name) + "'");
  return *i;
}

int ResolveStrategy(const StrategySpace& space, int player, std::string_view label) {
  auto s = space.FindStrategy(player, label);
  if (!s) {
    Fail(ErrorKind::kValidation, "unknown strategy '" + std::string(label) + "' for player '" +
                                     space.player_name(player) + "'");
  }
  return *s;
}

namespace {

template <typename T>
GameDocument<T> Transformed(const GameDocument<T>& doc, ParameterizedGame<T> result,
                            std::string comment) {
  GameDocument<T> out;
  out.game = std::move(result.game);
  out.mu = std::move(result.mu);
  out.gamma = std::move(result.gamma);
  out.comments = doc.comments;
  out.comments.push_back(std::move(comment));
  return out;
}

// Rewrites player `player` of every named profile with `f(old probabilities)`.
template <typename T, typename F>
void MapProfiles(const GameDocument<T>& from, GameDocument<T>& to, int player, F f) {
  for (const auto& [name, x] : from.profiles) {
    auto probabilities = x.probabilities();
    probabilities[player] = f(probabilities[player]);
    to.profiles.emplace_back(name, MixedProfile<T>(to.game.space_ptr(), std::move(probabilities)));
  }
}

}  // namespace

template <typename T>
GameDocument<T> PermuteDocument(const GameDocument<T>& doc, std::string_view player,
                                const std::vector<std::string>& order) {
  const StrategySpace& space = doc.game.space();
  PermutationSpec spec;
  spec.player = ResolvePlayer(space, player);
  for (const auto& label : order) spec.sigma.push_back(ResolveStrategy(space, spec.player, label));
  ValidatePermutation(space, spec);
  auto [mu, gamma] = PermuteParams(doc.mu, doc.gamma, spec);
  auto out = Transformed(doc, {Permute(doc.game, spec), mu, gamma},
                         "permuted strategies of " + space.player_name(spec.player));
  MapProfiles(doc, out, spec.player, [&](const Tensor<T>& p) {
    Tensor<T> q;
    for (int k : spec.sigma) q.push_back(p[k]);
    return q;
  });
  return out;
}

template <typename T>
GameDocument<T> TranslateDocument(const GameDocument<T>& doc, const Game<T>& translation) {
  if (!SameSpace(doc.game.space_ptr(), translation.space_ptr())) {
    Fail(ErrorKind::kShape, "label mismatch: translation is over a different strategy space");
  }
  auto out = Transformed(doc, {TranslateNonstrategic(doc.game, translation), doc.mu, doc.gamma},
                         "translated by a nonstrategic game");
  out.profiles = doc.profiles;
  return out;
}

template <typename T>
GameDocument<T> ScaleDocument(const GameDocument<T>& doc, const CoMeasureVector<T>& beta) {
  auto out = Transformed(doc, {Scale(doc.game, beta), doc.mu, CoMeasureQuotient(doc.gamma, beta)},
                         "scaled by beta");
  if (beta.generator()) {
    for (const auto& [name, x] : doc.profiles) {
      auto y = MapEquilibriumUnderScaling(x, beta);
      out.profiles.emplace_back(name, MixedProfile<T>(out.game.space_ptr(), y.probabilities()));
    }
  }
  return out;
}

template <typename T>
GameDocument<T> ExtendDocument(const GameDocument<T>& doc, std::string_view player,
                               std::string_view strategy, std::string label, const Rational& lambda) {
  const StrategySpace& space = doc.game.space();
  DuplicationSpec spec;
  spec.player = ResolvePlayer(space, player);
  spec.source = ResolveStrategy(space, spec.player, strategy);
  spec.label = std::move(label);
  spec.lambda = lambda;
  auto out = Transformed(doc, ExtendDuplicate(doc.game, doc.mu, doc.gamma, spec),
                         "duplicated " + std::string(strategy) + " of " + space.player_name(spec.player) +
                             " as " + spec.label);
  T l = Convert<T>(lambda);
  MapProfiles(doc, out, spec.player, [&](const Tensor<T>& p) {
    Tensor<T> q = p;
    q[spec.source] = (T(1) - l) * p[spec.source];
    q.insert(q.begin() + spec.source + 1, l * p[spec.source]);
    return q;
  });
  return out;
}

template <typename T>
GameDocument<T> ReduceDocument(const GameDocument<T>& doc, std::string_view player,
                               std::string_view removed, std::string_view kept) {
  const StrategySpace& space = doc.game.space();
  int i = ResolvePlayer(space, player);
  int s0 = ResolveStrategy(space, i, removed);
  int s1 = ResolveStrategy(space, i, kept);
  auto out = Transformed(doc, ReduceDuplicate(doc.game, doc.mu, doc.gamma, i, s0, s1),
                         "removed duplicate " + std::string(removed) + " of " + space.player_name(i));
  MapProfiles(doc, out, i, [&](const Tensor<T>& p) {
    Tensor<T> q = p;
    q[s1] += p[s0];
    q.erase(q.begin() + s0);
    return q;
  });
  return out;
}

template <typename T>
GameDocument<T> ReduceRedundantDocument(const GameDocument<T>& doc, std::string_view player,
                                        std::string_view removed, const std::vector<Rational>& alpha) {
  const StrategySpace& space = doc.game.space();
  RedundancySpec spec;
  spec.player = ResolvePlayer(space, player);
  spec.removed = ResolveStrategy(space, spec.player, removed);
  spec.alpha = alpha;
  auto out = Transformed(doc, ReduceRedundant(doc.game, doc.mu, doc.gamma, spec),
                         "removed redundant " + std::string(removed) + " of " +
                             space.player_name(spec.player));
  MapProfiles(doc, out, spec.player, [&](const Tensor<T>& p) {
    Tensor<T> q = p;
    q.erase(q.begin() + spec.removed);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += Convert<T>(alpha[k]) * p[spec.removed];
    return q;
  });
  return out;
}

#define NFGD_INSTANTIATE_DOC_TRANSFORMS(T)                                                          \
  template GameDocument<T> PermuteDocument<T>(const GameDocument<T>&, std::string_view,            \
                                              const std::vector<std::string>&);                    \
  template GameDocument<T> TranslateDocument<T>(const GameDocument<T>&, const Game<T>&);           \
  template GameDocument<T> ScaleDocument<T>(const GameDocument<T>&, const CoMeasureVector<T>&);    \
  template GameDocument<T> ExtendDocument<T>(const GameDocument<T>&, std::string_view,             \
                                             std::string_view, std::string, const Rational&);      \
  template GameDocument<T> ReduceDocument<T>(const GameDocument<T>&, std::string_view,             \
                                             std::string_view, std::string_view);                  \
  template GameDocument<T> ReduceRedundantDocument<T>(const GameDocument<T>&, std::string_view,    \
                                                      std::string_view, const std::vector<Rational>&);
NFGD_INSTANTIATE_DOC_TRANSFORMS(Rational)
NFGD_INSTANTIATE_DOC_TRANSFORMS(double)

}  // namespace nfgd
