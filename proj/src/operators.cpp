#include "rydsim/operators.hpp"

#include <stdexcept>

namespace rydsim {

Eigen::MatrixXcd site_operator(const Eigen::Matrix2cd& op, int site,
                               int sites) {
  if (site < 0 || site >= sites) {
    throw std::invalid_argument("site_operator: site out of range");
  }
  const std::uint64_t dim = 1ULL << sites;
  const std::uint64_t bit = 1ULL << site;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(dim),
                                              static_cast<long>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    const int b = static_cast<int>((col >> site) & 1ULL);
    // op column b holds the amplitudes of op|b>.
    const std::uint64_t row0 = col & ~bit;
    const std::uint64_t row1 = col | bit;
    if (op(0, b) != 0.0) m(static_cast<long>(row0), static_cast<long>(col)) += op(0, b);
    if (op(1, b) != 0.0) m(static_cast<long>(row1), static_cast<long>(col)) += op(1, b);
  }
  return m;
}

Eigen::MatrixXcd sum_site_operator(const Eigen::Matrix2cd& op, int sites) {
  const std::uint64_t dim = 1ULL << sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(dim),
                                              static_cast<long>(dim));
  for (int s = 0; s < sites; ++s) m += site_operator(op, s, sites);
  return m;
}

Eigen::VectorXcd basis_state(int sites, std::uint64_t bits) {
  const std::uint64_t dim = 1ULL << sites;
  if (bits >= dim) throw std::invalid_argument("basis_state: bits out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<long>(dim));
  v(static_cast<long>(bits)) = 1.0;
  return v;
}

double z_coefficient(const Eigen::MatrixXcd& h, int site) {
  const long dim = h.rows();
  Complex tr = 0.0;
  for (long n = 0; n < dim; ++n) {
    tr += h(n, n) * z_sign(static_cast<std::uint64_t>(n), site);
  }
  return (tr / static_cast<double>(dim)).real();
}

}  // namespace rydsim
