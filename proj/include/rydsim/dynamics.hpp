#ifndef RYDSIM_DYNAMICS_HPP
#define RYDSIM_DYNAMICS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <variant>

#include "rydsim/lattice.hpp"
#include "rydsim/operators.hpp"
#include "rydsim/rng.hpp"

namespace rydsim {

// ---------------------------------------------------------------------------
// State
// ---------------------------------------------------------------------------

struct QuantumState {
  Eigen::VectorXcd amplitudes;
  int sites = 0;

  static QuantumState all_ground(int sites);   // |0...0>
  static QuantumState uniform_plus(int sites); // |+>^L

  long dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  void normalize() { amplitudes /= amplitudes.norm(); }
};

double expectation_z(const QuantumState& state, int site);
double fidelity(const QuantumState& a, const QuantumState& b);

enum class PauliAxis { kX, kY, kZ };

// In-place single-site Pauli application.
void apply_pauli(QuantumState& state, PauliAxis axis, int site);

// Draws one computational-basis measurement outcome from |psi|^2.
std::uint64_t sample_bitstring(const QuantumState& state, CounterRng& rng);

// ---------------------------------------------------------------------------
// Hamiltonian sources and schedules
// ---------------------------------------------------------------------------

struct RydbergSource {
  AtomRegister reg;
  RydbergParams params;
};

struct TfiSource {
  TfiParams params;
};

using HamiltonianSource = std::variant<RydbergSource, TfiSource>;

int source_sites(const HamiltonianSource& source);

struct EvolutionSchedule {
  HamiltonianSource source;
  double duration = 0.0;
  double dt = 0.005;
};

// ---------------------------------------------------------------------------
// Propagation
// ---------------------------------------------------------------------------

// Matrix-free unitary stepper. Each step samples the waveforms at the step
// midpoint and applies a 4th-order Suzuki composition of Strang splittings
// between the diagonal part (detuning + interaction) and the single-site
// drive part. Every factor is exactly unitary, so the norm is preserved to
// machine precision regardless of step count.
class Propagator {
 public:
  explicit Propagator(const HamiltonianSource& source);

  int sites() const { return sites_; }

  // Advances by one step of size dt starting at time t0.
  void step(QuantumState& psi, double t0, double dt) const;

  // Advances from t0 by `steps` uniform steps of size dt.
  void advance(QuantumState& psi, double t0, int steps, double dt) const;

 private:
  void apply_diagonal(QuantumState& psi, double tau, double delta_g,
                      double delta_l) const;
  void apply_drive(QuantumState& psi, double tau, double omega,
                   double phi) const;

  int sites_;
  Eigen::VectorXd diag_static_;    // interaction + static detuning offsets
  Eigen::VectorXd zpat_;           // sum_i s_i z_i(n); empty if no pattern
  Eigen::VectorXd drive_factors_;  // per-site amplitude multipliers
  Waveform amplitude_, phase_, detuning_global_, detuning_local_;
};

// Time-ordered evolution over the whole schedule. Throws
// std::invalid_argument on dimension mismatch or a non-integer number of
// steps, NumericalError if the final norm drifted beyond 1e-6.
QuantumState evolve(const QuantumState& state,
                    const EvolutionSchedule& schedule);

// exp(-i H t) |psi> via dense spectral decomposition (oracle path).
QuantumState evolve_exact(const QuantumState& state, const Eigen::MatrixXcd& h,
                          double t);

// Caches the eigendecomposition so repeated times are cheap.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const Eigen::MatrixXcd& h);
  QuantumState apply(const QuantumState& state, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::MatrixXcd eigenvectors_;
  Eigen::VectorXd eigenvalues_;
};

// ---------------------------------------------------------------------------
// Exact diagonalization
// ---------------------------------------------------------------------------

struct GroundStateResult {
  double energy = 0.0;
  QuantumState state;
  bool degenerate = false;  // a second eigenvalue within tolerance of energy
  double gap = 0.0;         // energy distance to the next level found
};

// Lowest eigenpair with a deterministic global phase (largest-magnitude
// amplitude real positive). Dense solve for small dimensions, Lanczos with
// full reorthogonalization above that.
GroundStateResult ground_state_ed(const Eigen::MatrixXcd& h);

}  // namespace rydsim

#endif  // RYDSIM_DYNAMICS_HPP
