#ifndef RYDSIM_LATTICE_HPP
#define RYDSIM_LATTICE_HPP

#include <Eigen/Dense>
#include <vector>

#include "rydsim/waveform.hpp"

namespace rydsim {

// Largest qubit count for which dense 2^L x 2^L matrices may be built.
inline constexpr int kDefaultDenseCap = 14;

// Van der Waals coefficient of the Rydberg interaction, rad um^6 / us.
// Hardware documentation value; the model is agnostic to it.
inline constexpr double kDefaultC6 = 5.42e6;

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

struct AtomRegister {
  std::vector<Eigen::Vector2d> positions;  // um
  double spacing = 0.0;                    // chain pitch a, um

  int sites() const { return static_cast<int>(positions.size()); }
  Eigen::Vector2d centroid() const;
};

// L collinear atoms at pitch `spacing` along x.
AtomRegister build_chain_register(int sites, double spacing);

// V(i, j) = |r_i - r_j|^-6 in um^-6.
double vdw_strength(const AtomRegister& reg, int i, int j);

// ---------------------------------------------------------------------------
// Model parameters
// ---------------------------------------------------------------------------

struct TfiParams {
  double coupling = 1.0;  // J > 0, antiferromagnetic
  double field = 1.0;     // dimensionless transverse field g; critical at 1
  int sites = 2;
};

// Static pulse values realizing the transverse-field Ising chain on the
// Rydberg Hamiltonian. `omega` is the coefficient of the sum-of-X term of
// the target model (g * J); the drive slot of the hardware Hamiltonian,
// which enters as Omega/2, must be programmed with twice this value.
struct MappedPulse {
  double omega = 0.0;           // g * J
  double delta_interior = 0.0;  // C6 V(a)
  double delta_endpoint = 0.0;  // C6 V(a) / 2
  double coupling = 0.0;        // J = C6 V(a) / 4
};

MappedPulse map_tfi_to_pulses(int sites, double spacing, double field,
                              double c6);

enum class InteractionRange {
  kFull,             // every pair, 1/r^6
  kNearestNeighbor,  // chain neighbors only
};

// ---------------------------------------------------------------------------
// Pulse program
// ---------------------------------------------------------------------------

// Time-dependent drive and detuning controls. The per-site detuning is
// Delta_i(t) = detuning_global(t) + detuning_local(t) * local_pattern[i]
//            + detuning_offset[i],
// matching hardware where the local pattern is static and only its envelope
// varies in time. amplitude_pattern scales the drive per atom (laser waist,
// fluctuations, missing atoms); it defaults to all ones.
struct PulseProgram {
  Waveform amplitude;        // Omega(t) >= 0, drive slot value
  Waveform phase;            // phi(t)
  Waveform detuning_global;  // rad/us
  Waveform detuning_local;   // envelope of the static pattern
  Eigen::VectorXd local_pattern;      // s_i, empty = zeros
  Eigen::VectorXd amplitude_pattern;  // empty = ones
  Eigen::VectorXd detuning_offset;    // empty = zeros
  double duration = 0.0;

  double delta_at(double t, int site) const;
  double amplitude_at(double t, int site) const;
};

struct RydbergParams {
  double c6 = kDefaultC6;
  PulseProgram pulses;
  InteractionRange range = InteractionRange::kFull;
};

// Constant program realizing the mapped Ising chain: drive slot 2*omega,
// phase 0, local pattern [1/2, 1, ..., 1, 1/2] scaled by delta_interior.
PulseProgram mapped_program(const MappedPulse& mp, int sites, double duration);

// ---------------------------------------------------------------------------
// Dense Hamiltonians (oracle path, capped)
// ---------------------------------------------------------------------------

// Full Rydberg Hamiltonian at time t:
//   1/2 sum_i Delta_i(t) Z_i
// + Omega_i(t)/2 sum_i [X_i cos phi - Y_i sin phi]
// + C6/4 sum_{i<j} (Z_i - 1)(Z_j - 1) V(i, j)
Eigen::MatrixXcd rydberg_hamiltonian_at(const AtomRegister& reg,
                                        const RydbergParams& params, double t,
                                        int dense_cap = kDefaultDenseCap);

// Ideal chain: J (sum_<ij> Z_i Z_j + g sum_i X_i), open boundaries.
Eigen::MatrixXcd tfi_hamiltonian(const TfiParams& params,
                                 int dense_cap = kDefaultDenseCap);

// Diagonal of the interaction term C6/4 sum_{i<j} (Z_i-1)(Z_j-1) V(i,j),
// i.e. C6 sum_{i<j} V(i,j) n_i n_j. Shared by the dense builder and the
// matrix-free propagator.
Eigen::VectorXd interaction_diagonal(const AtomRegister& reg, double c6,
                                     InteractionRange range);

// Diagonal of J sum_<ij> Z_i Z_j for the ideal chain.
Eigen::VectorXd tfi_zz_diagonal(int sites, double coupling);

void check_dense_cap(int sites, int dense_cap);

}  // namespace rydsim

#endif  // RYDSIM_LATTICE_HPP
