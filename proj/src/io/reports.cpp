#include "io/reports.hpp"

#include <cmath>
#include <sstream>

#include "core/equilibrium.hpp"
#include "core/inner_product.hpp"

namespace nfgd {
namespace {

const char* YesNo(bool b) { return b ? "yes" : "no"; }

template <typename T>
GameDocument<T> WithGame(const GameDocument<T>& doc, const Game<T>& game, std::string comment) {
  GameDocument<T> out;
  out.game = game;
  out.mu = doc.mu;
  out.gamma = doc.gamma;
  out.comments.push_back(std::move(comment));
  return out;
}

template <typename T>
std::string Root(const T& squared) {
  return FormatScalar(std::sqrt(ScalarTraits<T>::ToDouble(squared)));
}

}  // namespace

template <typename T>
DecompositionDocuments<T> DecomposeDocument(const GameDocument<T>& doc) {
  const auto& mu = doc.mu;
  const auto& gamma = doc.gamma;
  Decomposition<T> d = Decompose(doc.game, mu, gamma);
  DecompositionDocuments<T> out;
  out.nonstrategic = WithGame(doc, d.nonstrategic, "nonstrategic component");
  out.potential = WithGame(doc, d.potential, "potential component");
  out.harmonic = WithGame(doc, d.harmonic, "harmonic component");
  out.phi = WithGame(doc, Game<T>(doc.game.space_ptr()), "potential function phi");
  out.phi.fields.emplace_back("phi", d.phi);

  Game<T> residual = doc.game - d.nonstrategic - d.potential - d.harmonic;
  std::ostringstream r;
  r << "# decomposition report (" << ScalarTraits<T>::kName << ")\n";
  r << "norm2 game " << FormatScalar(GameNorm(doc.game, mu, gamma)) << '\n';
  r << "norm2 nonstrategic " << FormatScalar(GameNorm(d.nonstrategic, mu, gamma)) << '\n';
  r << "norm2 potential " << FormatScalar(GameNorm(d.potential, mu, gamma)) << '\n';
  r << "norm2 harmonic " << FormatScalar(GameNorm(d.harmonic, mu, gamma)) << '\n';
  r << "inner nonstrategic potential "
    << FormatScalar(InnerProductGame(d.nonstrategic, d.potential, mu, gamma)) << '\n';
  r << "inner nonstrategic harmonic "
    << FormatScalar(InnerProductGame(d.nonstrategic, d.harmonic, mu, gamma)) << '\n';
  r << "inner potential harmonic "
    << FormatScalar(InnerProductGame(d.potential, d.harmonic, mu, gamma)) << '\n';
  r << "norm2 reconstruction-residual " << FormatScalar(GameNorm(residual, mu, gamma)) << '\n';
  out.report = r.str();
  return out;
}

template <typename T>
std::string ClassificationReport(const GameDocument<T>& doc) {
  ValidateParameters(doc.game.space_ptr(), doc.mu, doc.gamma);
  std::ostringstream r;
  r << "nonstrategic " << YesNo(IsNonstrategic(doc.game)) << '\n';
  r << "mu-normalized " << YesNo(IsMuNormalized(doc.game, doc.mu)) << '\n';
  r << "gamma-potential " << YesNo(IsGammaPotential(doc.game, doc.gamma)) << '\n';
  r << "harmonic " << YesNo(IsHarmonic(doc.game, doc.mu, doc.gamma)) << '\n';
  return r.str();
}

template <typename T>
std::string EquilibriumReport(const GameDocument<T>& doc, const std::string& profile_name) {
  for (const auto& [name, x] : doc.profiles) {
    if (name != profile_name) continue;
    T epsilon = BestResponseEpsilon(doc.game, x);
    std::ostringstream r;
    r << "profile " << name << '\n';
    r << "epsilon " << FormatScalar(epsilon) << '\n';
    r << "nash " << YesNo(ScalarTraits<T>::IsZero(epsilon)) << '\n';
    return r.str();
  }
  Fail(ErrorKind::kValidation, "no profile named '" + profile_name + "'");
}

template <typename T>
GameDocument<T> ClosestPotentialDocument(const GameDocument<T>& doc) {
  auto closest = ClosestPotential(doc.game, doc.mu, doc.gamma);
  T bound = EpsilonBoundSquared(doc.game, doc.mu, doc.gamma);
  GameDocument<T> out = WithGame(doc, closest.closest, "closest potential game");
  out.comments.push_back("d2 " + FormatScalar(closest.distance_squared));
  out.comments.push_back("d " + Root(closest.distance_squared));
  out.comments.push_back("B2 " + FormatScalar(bound));
  out.comments.push_back("B " + Root(bound));
  return out;
}

template DecompositionDocuments<Rational> DecomposeDocument<Rational>(const GameDocument<Rational>&);
template DecompositionDocuments<double> DecomposeDocument<double>(const GameDocument<double>&);
template std::string ClassificationReport<Rational>(const GameDocument<Rational>&);
template std::string ClassificationReport<double>(const GameDocument<double>&);
template std::string EquilibriumReport<Rational>(const GameDocument<Rational>&, const std::string&);
template std::string EquilibriumReport<double>(const GameDocument<double>&, const std::string&);
template GameDocument<Rational> ClosestPotentialDocument<Rational>(const GameDocument<Rational>&);
template GameDocument<double> ClosestPotentialDocument<double>(const GameDocument<double>&);

}  // namespace nfgd
