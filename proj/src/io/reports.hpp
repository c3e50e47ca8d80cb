#pragma once

#include <string>

#include "core/decomposition.hpp"
#include "io/document.hpp"

namespace nfgd {

template <typename T>
struct DecompositionDocuments {
  GameDocument<T> nonstrategic;
  GameDocument<T> potential;
  GameDocument<T> harmonic;
  // Field-only document holding phi.
  GameDocument<T> phi;
  std::string report;
};

template <typename T>
DecompositionDocuments<T> DecomposeDocument(const GameDocument<T>& doc);

template <typename T>
std::string ClassificationReport(const GameDocument<T>& doc);

template <typename T>
std::string EquilibriumReport(const GameDocument<T>& doc, const std::string& profile_name);

// The closest game as a document whose comments carry d^2, d, B^2 and B.
template <typename T>
GameDocument<T> ClosestPotentialDocument(const GameDocument<T>& doc);

extern template DecompositionDocuments<Rational> DecomposeDocument<Rational>(
    const GameDocument<Rational>&);
extern template DecompositionDocuments<double> DecomposeDocument<double>(const GameDocument<double>&);
extern template std::string ClassificationReport<Rational>(const GameDocument<Rational>&);
extern template std::string ClassificationReport<double>(const GameDocument<double>&);
extern template std::string EquilibriumReport<Rational>(const GameDocument<Rational>&,
                                                        const std::string&);
extern template std::string EquilibriumReport<double>(const GameDocument<double>&, const std::string&);
extern template GameDocument<Rational> ClosestPotentialDocument<Rational>(
    const GameDocument<Rational>&);
extern template GameDocument<double> ClosestPotentialDocument<double>(const GameDocument<double>&);

}  // namespace nfgd
