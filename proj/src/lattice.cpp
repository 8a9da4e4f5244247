#include "rydsim/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rydsim/errors.hpp"
#include "rydsim/operators.hpp"

namespace rydsim {

Eigen::Vector2d AtomRegister::centroid() const {
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& p : positions) c += p;
  return positions.empty() ? c : Eigen::Vector2d(c / positions.size());
}

AtomRegister build_chain_register(int sites, double spacing) {
  if (sites < 2) throw std::invalid_argument("chain register needs L >= 2");
  if (spacing <= 0.0) throw std::invalid_argument("chain pitch must be > 0");
  AtomRegister reg;
  reg.spacing = spacing;
  reg.positions.reserve(static_cast<std::size_t>(sites));
  for (int i = 0; i < sites; ++i) {
    reg.positions.emplace_back(i * spacing, 0.0);
  }
  return reg;
}

double vdw_strength(const AtomRegister& reg, int i, int j) {
  const int n = reg.sites();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("vdw_strength: site index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("vdw_strength: self-interaction undefined");
  }
  const double r2 = (reg.positions[i] - reg.positions[j]).squaredNorm();
  return 1.0 / (r2 * r2 * r2);
}

MappedPulse map_tfi_to_pulses(int sites, double spacing, double field,
                              double c6) {
  if (sites < 2) throw std::invalid_argument("map_tfi_to_pulses: L >= 2");
  if (spacing <= 0.0 || c6 <= 0.0 || field < 0.0) {
    throw std::invalid_argument("map_tfi_to_pulses: inputs must be positive");
  }
  const double v = 1.0 / std::pow(spacing, 6);
  MappedPulse mp;
  mp.delta_interior = c6 * v;
  mp.delta_endpoint = 0.5 * c6 * v;
  mp.coupling = 0.25 * c6 * v;
  mp.omega = field * mp.coupling;
  return mp;
}

double PulseProgram::delta_at(double t, int site) const {
  double d = detuning_global(t);
  if (local_pattern.size() > 0) d += detuning_local(t) * local_pattern(site);
  if (detuning_offset.size() > 0) d += detuning_offset(site);
  return d;
}

double PulseProgram::amplitude_at(double t, int site) const {
  double a = amplitude(t);
  if (amplitude_pattern.size() > 0) a *= amplitude_pattern(site);
  return a;
}

PulseProgram mapped_program(const MappedPulse& mp, int sites,
                            double duration) {
  PulseProgram p;
  p.amplitude = Waveform::constant(2.0 * mp.omega);
  p.detuning_local = Waveform::constant(mp.delta_interior);
  p.local_pattern = Eigen::VectorXd::Ones(sites);
  p.local_pattern(0) = 0.5;
  p.local_pattern(sites - 1) = 0.5;
  p.duration = duration;
  return p;
}

void check_dense_cap(int sites, int dense_cap) {
  if (sites > dense_cap) {
    throw CapacityError("dense representation of " + std::to_string(sites) +
                        " qubits exceeds cap " + std::to_string(dense_cap));
  }
}

Eigen::VectorXd interaction_diagonal(const AtomRegister& reg, double c6,
                                     InteractionRange range) {
  const int n = reg.sites();
  const std::uint64_t dim = 1ULL << n;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<long>(dim));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (range == InteractionRange::kNearestNeighbor && j != i + 1) continue;
      const double w = c6 * vdw_strength(reg, i, j);
      const std::uint64_t mask = (1ULL << i) | (1ULL << j);
      for (std::uint64_t s = 0; s < dim; ++s) {
        if ((s & mask) == mask) diag(static_cast<long>(s)) += w;
      }
    }
  }
  return diag;
}

Eigen::VectorXd tfi_zz_diagonal(int sites, double coupling) {
  const std::uint64_t dim = 1ULL << sites;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<long>(dim));
  for (std::uint64_t s = 0; s < dim; ++s) {
    double zz = 0.0;
    for (int i = 0; i + 1 < sites; ++i) {
      zz += z_sign(s, i) * z_sign(s, i + 1);
    }
    diag(static_cast<long>(s)) = coupling * zz;
  }
  return diag;
}

Eigen::MatrixXcd rydberg_hamiltonian_at(const AtomRegister& reg,
                                        const RydbergParams& params, double t,
                                        int dense_cap) {
  const int n = reg.sites();
  check_dense_cap(n, dense_cap);
  if (t < 0.0 || t > params.pulses.duration) {
    throw std::invalid_argument("rydberg_hamiltonian_at: t outside program");
  }
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<long>(dim),
                                              static_cast<long>(dim));

  const Eigen::VectorXd inter = interaction_diagonal(reg, params.c6,
                                                     params.range);
  for (std::uint64_t s = 0; s < dim; ++s) {
    double z = inter(static_cast<long>(s));
    for (int i = 0; i < n; ++i) {
      z += 0.5 * params.pulses.delta_at(t, i) * z_sign(s, i);
    }
    h(static_cast<long>(s), static_cast<long>(s)) = z;
  }

  const double phi = params.pulses.phase(t);
  const Complex upper(std::cos(phi), std::sin(phi));  // e^{i phi}
  for (int i = 0; i < n; ++i) {
    const double amp = 0.5 * params.pulses.amplitude_at(t, i);
    if (amp == 0.0) continue;
    const std::uint64_t bit = 1ULL << i;
    for (std::uint64_t s = 0; s < dim; ++s) {
      if (s & bit) continue;
      // <s|H|s+bit> couples |0>_i and |1>_i.
      h(static_cast<long>(s), static_cast<long>(s | bit)) += amp * upper;
      h(static_cast<long>(s | bit), static_cast<long>(s)) +=
          amp * std::conj(upper);
    }
  }
  return h;
}

Eigen::MatrixXcd tfi_hamiltonian(const TfiParams& params, int dense_cap) {
  if (params.sites < 2) throw std::invalid_argument("tfi_hamiltonian: L >= 2");
  check_dense_cap(params.sites, dense_cap);
  const std::uint64_t dim = 1ULL << params.sites;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<long>(dim),
                                              static_cast<long>(dim));
  const Eigen::VectorXd zz = tfi_zz_diagonal(params.sites, params.coupling);
  h.diagonal() = zz.cast<Complex>();
  const double x = params.coupling * params.field;
  for (int i = 0; i < params.sites; ++i) {
    const std::uint64_t bit = 1ULL << i;
    for (std::uint64_t s = 0; s < dim; ++s) {
      if (s & bit) continue;
      h(static_cast<long>(s), static_cast<long>(s | bit)) += x;
      h(static_cast<long>(s | bit), static_cast<long>(s)) += x;
    }
  }
  return h;
}

}  // namespace rydsim
