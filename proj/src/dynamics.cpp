#include "rydsim/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rydsim/errors.hpp"

namespace rydsim {

namespace {

int sites_from_dim(long dim) {
  int n = 0;
  while ((1L << n) < dim) ++n;
  if ((1L << n) != dim) {
    throw std::invalid_argument("state dimension is not a power of two");
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// State
// ---------------------------------------------------------------------------

QuantumState QuantumState::all_ground(int sites) {
  QuantumState s;
  s.sites = sites;
  s.amplitudes = Eigen::VectorXcd::Zero(1L << sites);
  s.amplitudes(0) = 1.0;
  return s;
}

QuantumState QuantumState::uniform_plus(int sites) {
  QuantumState s;
  s.sites = sites;
  const long dim = 1L << sites;
  s.amplitudes =
      Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return s;
}

double expectation_z(const QuantumState& state, int site) {
  if (site < 0 || site >= state.sites) {
    throw std::invalid_argument("expectation_z: site out of range");
  }
  const std::uint64_t bit = 1ULL << site;
  double acc = 0.0;
  for (long n = 0; n < state.dim(); ++n) {
    const double p = std::norm(state.amplitudes(n));
    acc += (static_cast<std::uint64_t>(n) & bit) ? -p : p;
  }
  return acc;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return std::norm(a.amplitudes.dot(b.amplitudes));
}

void apply_pauli(QuantumState& state, PauliAxis axis, int site) {
  if (site < 0 || site >= state.sites) {
    throw std::invalid_argument("apply_pauli: site out of range");
  }
  const std::uint64_t bit = 1ULL << site;
  auto& a = state.amplitudes;
  switch (axis) {
    case PauliAxis::kZ:
      for (long n = 0; n < a.size(); ++n) {
        if (static_cast<std::uint64_t>(n) & bit) a(n) = -a(n);
      }
      break;
    case PauliAxis::kX:
      for (long n = 0; n < a.size(); ++n) {
        if (!(static_cast<std::uint64_t>(n) & bit)) {
          std::swap(a(n), a(n | static_cast<long>(bit)));
        }
      }
      break;
    case PauliAxis::kY:
      // Y|0> = i|1>, Y|1> = -i|0>
      for (long n = 0; n < a.size(); ++n) {
        if (!(static_cast<std::uint64_t>(n) & bit)) {
          const long m = n | static_cast<long>(bit);
          const Complex lo = a(n), hi = a(m);
          a(n) = Complex(0, -1) * hi;
          a(m) = Complex(0, 1) * lo;
        }
      }
      break;
  }
}

std::uint64_t sample_bitstring(const QuantumState& state, CounterRng& rng) {
  const double u = rng.uniform() * state.amplitudes.squaredNorm();
  double acc = 0.0;
  const long dim = state.dim();
  for (long n = 0; n < dim; ++n) {
    acc += std::norm(state.amplitudes(n));
    if (u < acc) return static_cast<std::uint64_t>(n);
  }
  return static_cast<std::uint64_t>(dim - 1);
}

// ---------------------------------------------------------------------------
// Propagator
// ---------------------------------------------------------------------------

int source_sites(const HamiltonianSource& source) {
  if (const auto* ryd = std::get_if<RydbergSource>(&source)) {
    return ryd->reg.sites();
  }
  return std::get<TfiSource>(source).params.sites;
}

Propagator::Propagator(const HamiltonianSource& source) {
  if (const auto* ryd = std::get_if<RydbergSource>(&source)) {
    sites_ = ryd->reg.sites();
    const long dim = 1L << sites_;
    diag_static_ =
        interaction_diagonal(ryd->reg, ryd->params.c6, ryd->params.range);
    const auto& p = ryd->params.pulses;
    if (p.detuning_offset.size() > 0) {
      for (long n = 0; n < dim; ++n) {
        double z = 0.0;
        for (int i = 0; i < sites_; ++i) {
          z += p.detuning_offset(i) * z_sign(static_cast<std::uint64_t>(n), i);
        }
        diag_static_(n) += 0.5 * z;
      }
    }
    if (p.local_pattern.size() > 0) {
      zpat_.resize(dim);
      for (long n = 0; n < dim; ++n) {
        double z = 0.0;
        for (int i = 0; i < sites_; ++i) {
          z += p.local_pattern(i) * z_sign(static_cast<std::uint64_t>(n), i);
        }
        zpat_(n) = z;
      }
    }
    drive_factors_ = p.amplitude_pattern.size() > 0
                         ? p.amplitude_pattern
                         : Eigen::VectorXd::Ones(sites_);
    amplitude_ = p.amplitude;
    phase_ = p.phase;
    detuning_global_ = p.detuning_global;
    detuning_local_ = p.detuning_local;
  } else {
    const auto& tfi = std::get<TfiSource>(source).params;
    sites_ = tfi.sites;
    diag_static_ = tfi_zz_diagonal(tfi.sites, tfi.coupling);
    drive_factors_ = Eigen::VectorXd::Ones(sites_);
    // Drive slot value 2 J g so the sum-of-X coefficient is J g.
    amplitude_ = Waveform::constant(2.0 * tfi.coupling * tfi.field);
  }
}

void Propagator::apply_diagonal(QuantumState& psi, double tau, double delta_g,
                                double delta_l) const {
  if (tau == 0.0) return;
  auto& a = psi.amplitudes;
  const long dim = a.size();
  const bool has_g = delta_g != 0.0;
  const bool has_l = delta_l != 0.0 && zpat_.size() > 0;
  for (long n = 0; n < dim; ++n) {
    double d = diag_static_(n);
    if (has_g) {
      const int pop = std::popcount(static_cast<std::uint64_t>(n));
      d += 0.5 * delta_g * (sites_ - 2 * pop);
    }
    if (has_l) d += 0.5 * delta_l * zpat_(n);
    const double angle = -tau * d;
    a(n) *= Complex(std::cos(angle), std::sin(angle));
  }
}

void Propagator::apply_drive(QuantumState& psi, double tau, double omega,
                             double phi) const {
  if (tau == 0.0 || omega == 0.0) return;
  auto& a = psi.amplitudes;
  const long dim = a.size();
  const Complex eip(std::cos(phi), std::sin(phi));
  for (int i = 0; i < sites_; ++i) {
    const double w = omega * drive_factors_(i);
    if (w == 0.0) continue;
    const double angle = 0.5 * w * tau;
    const double c = std::cos(angle);
    const Complex s01 = Complex(0, -std::sin(angle)) * eip;
    const Complex s10 = Complex(0, -std::sin(angle)) * std::conj(eip);
    const std::uint64_t bit = 1ULL << i;
    for (long n = 0; n < dim; ++n) {
      if (static_cast<std::uint64_t>(n) & bit) continue;
      const long m = n | static_cast<long>(bit);
      const Complex lo = a(n), hi = a(m);
      a(n) = c * lo + s01 * hi;
      a(m) = s10 * lo + c * hi;
    }
  }
}

void Propagator::step(QuantumState& psi, double t0, double dt) const {
  if (psi.dim() != (1L << sites_)) {
    throw std::invalid_argument("Propagator::step: dimension mismatch");
  }
  const double tm = t0 + 0.5 * dt;
  const double omega = amplitude_(tm);
  const double phi = phase_(tm);
  const double dg = detuning_global_(tm);
  const double dl = detuning_local_(tm);

  // Suzuki 4th-order composition of Strang splittings,
  // p = 1 / (4 - 4^(1/3)); stage weights [p, p, 1-4p, p, p].
  static const double kP = 1.0 / (4.0 - std::cbrt(4.0));
  static const double kQ = 1.0 - 4.0 * kP;
  const double c1 = 0.5 * kP * dt;
  const double c2 = kP * dt;
  const double c3 = 0.5 * (kP + kQ) * dt;

  apply_diagonal(psi, c1, dg, dl);
  apply_drive(psi, kP * dt, omega, phi);
  apply_diagonal(psi, c2, dg, dl);
  apply_drive(psi, kP * dt, omega, phi);
  apply_diagonal(psi, c3, dg, dl);
  apply_drive(psi, kQ * dt, omega, phi);
  apply_diagonal(psi, c3, dg, dl);
  apply_drive(psi, kP * dt, omega, phi);
  apply_diagonal(psi, c2, dg, dl);
  apply_drive(psi, kP * dt, omega, phi);
  apply_diagonal(psi, c1, dg, dl);
}

void Propagator::advance(QuantumState& psi, double t0, int steps,
                         double dt) const {
  for (int k = 0; k < steps; ++k) step(psi, t0 + k * dt, dt);
}

QuantumState evolve(const QuantumState& state,
                    const EvolutionSchedule& schedule) {
  const int n = source_sites(schedule.source);
  if (state.dim() != (1L << n)) {
    throw std::invalid_argument("evolve: state does not match Hamiltonian");
  }
  if (schedule.dt <= 0.0 || schedule.duration < 0.0) {
    throw std::invalid_argument("evolve: dt must be > 0, duration >= 0");
  }
  const double ratio = schedule.duration / schedule.dt;
  const int steps = static_cast<int>(std::llround(ratio));
  if (std::abs(ratio - steps) > 1e-6 * std::max(1.0, ratio)) {
    throw std::invalid_argument(
        "evolve: duration is not a whole number of steps");
  }

  Propagator prop(schedule.source);
  QuantumState psi = state;
  prop.advance(psi, 0.0, steps, schedule.dt);

  const double drift = std::abs(psi.norm() - 1.0);
  if (!std::isfinite(drift) || drift > 1e-6) {
    throw NumericalError(
        "evolve: norm drifted by more than 1e-6; reduce dt below " +
        std::to_string(schedule.dt));
  }
  return psi;
}

// ---------------------------------------------------------------------------
// Dense oracles
// ---------------------------------------------------------------------------

SpectralPropagator::SpectralPropagator(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericalError("SpectralPropagator: eigensolver failed");
  }
  eigenvectors_ = es.eigenvectors();
  eigenvalues_ = es.eigenvalues();
}

QuantumState SpectralPropagator::apply(const QuantumState& state,
                                       double t) const {
  if (state.dim() != eigenvectors_.rows()) {
    throw std::invalid_argument("SpectralPropagator: dimension mismatch");
  }
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * state.amplitudes;
  for (long k = 0; k < coeffs.size(); ++k) {
    const double angle = -eigenvalues_(k) * t;
    coeffs(k) *= Complex(std::cos(angle), std::sin(angle));
  }
  QuantumState out;
  out.sites = state.sites;
  out.amplitudes = eigenvectors_ * coeffs;
  return out;
}

QuantumState evolve_exact(const QuantumState& state, const Eigen::MatrixXcd& h,
                          double t) {
  if (state.dim() != h.rows()) {
    throw std::invalid_argument("evolve_exact: dimension mismatch");
  }
  return SpectralPropagator(h).apply(state, t);
}

namespace {

// Lanczos with full reorthogonalization for the lowest eigenpair of a dense
// Hermitian matrix, optionally deflating against a known vector.
struct LanczosResult {
  double value = 0.0;
  Eigen::VectorXcd vector;
  bool converged = false;
};

LanczosResult lanczos_lowest(const Eigen::MatrixXcd& h,
                             const Eigen::VectorXcd* deflate) {
  const long dim = h.rows();
  const int m_max = static_cast<int>(std::min<long>(dim, 260));
  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(m_max);

  CounterRng rng(0x9d2c5680u + static_cast<std::uint64_t>(dim));
  Eigen::VectorXcd v(dim);
  for (long i = 0; i < dim; ++i) {
    v(i) = Complex(rng.normal(), rng.normal());
  }
  if (deflate) v -= (*deflate) * deflate->dot(v);
  v.normalize();

  std::vector<double> alpha, beta;
  LanczosResult result;
  Eigen::VectorXd ritz_coeffs;

  for (int j = 0; j < m_max; ++j) {
    basis.push_back(v);
    Eigen::VectorXcd w = h * v;
    const double a = std::real(v.dot(w));
    alpha.push_back(a);
    w -= a * v;
    if (j > 0) w -= beta.back() * basis[j - 1];
    // Full reorthogonalization keeps the basis numerically orthogonal.
    for (const auto& u : basis) w -= u * u.dot(w);
    if (deflate) w -= (*deflate) * deflate->dot(w);

    const int m = j + 1;
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    result.value = es.eigenvalues()(0);
    ritz_coeffs = es.eigenvectors().col(0);

    const double b = w.norm();
    const double scale = std::max(1.0, std::abs(result.value));
    if (m >= 2 && b * std::abs(ritz_coeffs(m - 1)) < 1e-13 * scale) {
      result.converged = true;
    }
    if (result.converged || b < 1e-14 * scale || j + 1 == m_max) {
      result.vector = Eigen::VectorXcd::Zero(dim);
      for (int i = 0; i < m; ++i) result.vector += ritz_coeffs(i) * basis[i];
      result.vector.normalize();
      if (j + 1 == m_max && !result.converged) result.converged = true;
      return result;
    }
    beta.push_back(b);
    v = w / b;
  }
  return result;
}

void fix_global_phase(Eigen::VectorXcd& v) {
  // First amplitude within a relative sliver of the maximum; the slack keeps
  // the pick stable when magnitudes tie up to rounding.
  const double best = v.cwiseAbs().maxCoeff();
  if (best <= 0.0) return;
  for (long i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= best * (1.0 - 1e-9)) {
      v *= std::abs(v(i)) / v(i);
      return;
    }
  }
}

}  // namespace

GroundStateResult ground_state_ed(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || h.rows() < 2) {
    throw std::invalid_argument("ground_state_ed: need a square matrix");
  }
  const long dim = h.rows();
  GroundStateResult result;
  result.state.sites = sites_from_dim(dim);

  double e0 = 0.0, e1 = 0.0;
  Eigen::VectorXcd v0;
  if (dim <= 512) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) {
      throw NumericalError("ground_state_ed: eigensolver failed");
    }
    e0 = es.eigenvalues()(0);
    e1 = es.eigenvalues()(1);
    v0 = es.eigenvectors().col(0);
  } else {
    LanczosResult first = lanczos_lowest(h, nullptr);
    LanczosResult second = lanczos_lowest(h, &first.vector);
    e0 = first.value;
    e1 = second.value;
    v0 = first.vector;
    if (second.value < first.value) {
      std::swap(e0, e1);
      v0 = second.vector;
    }
  }

  fix_global_phase(v0);
  result.energy = e0;
  result.gap = e1 - e0;
  result.degenerate = result.gap <= 1e-8 * std::max(1.0, std::abs(e0));
  result.state.amplitudes = v0;
  return result;
}

}  // namespace rydsim
