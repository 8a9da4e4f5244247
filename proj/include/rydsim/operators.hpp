#ifndef RYDSIM_OPERATORS_HPP
#define RYDSIM_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace rydsim {

using Complex = std::complex<double>;

// Basis convention: site i maps to bit i of the computational basis index,
// bit value 0 = ground |0> with Z eigenvalue +1, bit value 1 = Rydberg |1>
// with Z eigenvalue -1.

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

// Z eigenvalue of site `site` in basis state `index`.
inline double z_sign(std::uint64_t index, int site) {
  return ((index >> site) & 1ULL) ? -1.0 : 1.0;
}

// Embeds a single-qubit operator at `site` into the L-qubit space.
Eigen::MatrixXcd site_operator(const Eigen::Matrix2cd& op, int site, int sites);

// Sum over sites of a single-qubit operator (e.g. the global X drive).
Eigen::MatrixXcd sum_site_operator(const Eigen::Matrix2cd& op, int sites);

// Computational basis state |bits> as a dense vector.
Eigen::VectorXcd basis_state(int sites, std::uint64_t bits);

// Coefficient of the single-site Z_i term in a dense operator,
// Tr(H Z_i) / 2^L. Used to verify detuning cancellation.
double z_coefficient(const Eigen::MatrixXcd& h, int site);

}  // namespace rydsim

#endif  // RYDSIM_OPERATORS_HPP
