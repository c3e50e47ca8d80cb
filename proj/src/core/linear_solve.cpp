#include "core/linear_solve.hpp"

#include <Eigen/Dense>

#include <utility>

#include "core/error.hpp"

namespace nfgd {

std::vector<Rational> SolveFullColumnRank(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows || rows < cols) Fail(ErrorKind::kShape, "shape mismatch: linear system");

  // Augmented integer matrix, one row scaled by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) Fail(ErrorKind::kShape, "shape mismatch: ragged linear system");
    mpz_class lcm = b[r].get_den();
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[r][c].get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m[r][c] = a[r][c].get_num() * (lcm / a[r][c].get_den());
    }
    m[r][cols] = b[r].get_num() * (lcm / b[r].get_den());
  }

  mpz_class previous = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t pivot = k;
    while (pivot < rows && m[pivot][k] == 0) ++pivot;
    if (pivot == rows) Fail(ErrorKind::kPrecondition, "linear system is rank deficient");
    if (pivot != k) std::swap(m[pivot], m[k]);
    const mpz_class& pk = m[k][k];
    for (std::size_t r = k + 1; r < rows; ++r) {
      const mpz_class factor = m[r][k];
      for (std::size_t c = k + 1; c <= cols; ++c) {
        tmp = m[r][c] * pk;
        tmp -= factor * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
      m[r][k] = 0;
    }
    previous = pk;
  }
  for (std::size_t r = cols; r < rows; ++r) {
    if (m[r][cols] != 0) Fail(ErrorKind::kPrecondition, "inconsistent right-hand side");
  }

  std::vector<Rational> x(cols);
  for (std::size_t k = cols; k-- > 0;) {
    Rational acc(m[k][cols]);
    for (std::size_t c = k + 1; c < cols; ++c) acc -= Rational(m[k][c]) * x[c];
    x[k] = acc / Rational(m[k][k]);
  }
  return x;
}

std::vector<double> SolveFullColumnRank(const std::vector<std::vector<double>>& a,
                                        const std::vector<double>& b) {
  const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(a[0].size());
  if (static_cast<Eigen::Index>(b.size()) != rows || rows < cols) {
    Fail(ErrorKind::kShape, "shape mismatch: linear system");
  }
  Eigen::MatrixXd m(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = a[r][c];
    rhs(r) = b[r];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-12);
  Eigen::VectorXd x = qr.solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace nfgd
