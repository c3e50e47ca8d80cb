#pragma once

#include <vector>

#include "core/scalar.hpp"

namespace nfgd {

// Solves A x = b for a system with full column rank (rows >= columns).
// Exact version: fraction-free elimination over the integers after clearing
// denominators row by row; pivots on the first nonzero entry. Throws
// kPrecondition "inconsistent right-hand side" when no exact solution exists.
std::vector<Rational> SolveFullColumnRank(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<Rational>& b);

// Float version: column-pivoted Householder QR, rank cutoff 1e-12 relative
// to the largest pivot. Returns the least-squares solution.
std::vector<double> SolveFullColumnRank(const std::vector<std::vector<double>>& a,
                                        const std::vector<double>& b);

}  // namespace nfgd
