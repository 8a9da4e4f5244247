#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "rydsim/dynamics.hpp"
#include "rydsim/errors.hpp"
#include "rydsim/lattice.hpp"
#include "rydsim/operators.hpp"
#include "rydsim/rng.hpp"

using namespace rydsim;

namespace {

// Independent oracle: dense matrix exponential (Pade, scaling-and-squaring).
Eigen::VectorXcd expm_apply(const Eigen::MatrixXcd& h, double t,
                            const Eigen::VectorXcd& psi) {
  const Eigen::MatrixXcd u = (Complex(0, -1) * t * h).exp();
  return u * psi;
}

QuantumState random_state(int sites, CounterRng& rng) {
  QuantumState s;
  s.sites = sites;
  s.amplitudes.resize(1L << sites);
  for (long n = 0; n < s.amplitudes.size(); ++n) {
    s.amplitudes(n) = Complex(rng.normal(), rng.normal());
  }
  s.normalize();
  return s;
}

double spectral_norm(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

EvolutionSchedule tfi_schedule(double coupling, double field, int sites,
                               double duration, double dt) {
  return EvolutionSchedule{TfiSource{{coupling, field, sites}}, duration, dt};
}

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("state constructors and expectations") {
  const QuantumState g = QuantumState::all_ground(3);
  CHECK(g.norm() == doctest::Approx(1.0));
  for (int i = 0; i < 3; ++i) CHECK(expectation_z(g, i) == doctest::Approx(1.0));

  const QuantumState p = QuantumState::uniform_plus(3);
  CHECK(p.norm() == doctest::Approx(1.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(expectation_z(p, i)) < 1e-14);
  }
  CHECK_THROWS_AS(expectation_z(p, 5), std::invalid_argument);
}

TEST_CASE("fidelity basics") {
  CounterRng rng(7);
  const QuantumState a = random_state(3, rng);
  CHECK(fidelity(a, a) == doctest::Approx(1.0));

  QuantumState e0 = QuantumState::all_ground(2);
  QuantumState e3 = e0;
  e3.amplitudes.setZero();
  e3.amplitudes(3) = 1.0;
  CHECK(fidelity(e0, e3) == doctest::Approx(0.0));

  const QuantumState b = random_state(2, rng);
  CHECK_THROWS_AS(fidelity(a, b), std::invalid_argument);
}

TEST_CASE("apply_pauli matches dense operators") {
  CounterRng rng(11);
  const QuantumState s = random_state(3, rng);
  const Eigen::Matrix2cd ops[3] = {pauli_x(), pauli_y(), pauli_z()};
  const PauliAxis axes[3] = {PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ};
  for (int a = 0; a < 3; ++a) {
    for (int site = 0; site < 3; ++site) {
      QuantumState t = s;
      apply_pauli(t, axes[a], site);
      const Eigen::VectorXcd expected =
          site_operator(ops[a], site, 3) * s.amplitudes;
      CHECK((t.amplitudes - expected).norm() < 1e-14);
    }
  }
}

TEST_CASE("sample_bitstring basics") {
  CounterRng rng(3);
  QuantumState s = QuantumState::all_ground(3);
  s.amplitudes.setZero();
  s.amplitudes(5) = 1.0;
  for (int k = 0; k < 10; ++k) CHECK(sample_bitstring(s, rng) == 5);

  // Uniform superposition visits every outcome.
  const QuantumState p = QuantumState::uniform_plus(2);
  int counts[4] = {0, 0, 0, 0};
  for (int k = 0; k < 4000; ++k) ++counts[sample_bitstring(p, rng)];
  for (int n = 0; n < 4; ++n) CHECK(counts[n] > 800);
}

TEST_CASE("evolve: zero hamiltonian is the identity") {
  CounterRng rng(5);
  const QuantumState s = random_state(3, rng);
  const QuantumState out = evolve(s, tfi_schedule(0.0, 0.0, 3, 2.0, 0.01));
  CHECK((out.amplitudes - s.amplitudes).norm() < 1e-14);
}

TEST_CASE("evolve: Rabi oscillation closed form") {
  // Far-separated pair, drive only on site 0: <Z_0>(t) = cos(Omega t).
  const double omega = 1.7;
  RydbergSource src;
  src.reg = build_chain_register(2, 1e4);
  src.params.c6 = 1.0;
  src.params.pulses.amplitude = Waveform::constant(omega);
  src.params.pulses.amplitude_pattern = Eigen::Vector2d(1.0, 0.0);
  src.params.pulses.duration = 10.0;

  QuantumState psi = QuantumState::all_ground(2);
  const Propagator prop{HamiltonianSource{src}};
  const double dt = 0.0025;
  for (double t : {0.5, 1.0, 2.5}) {
    psi = QuantumState::all_ground(2);
    prop.advance(psi, 0.0, static_cast<int>(std::llround(t / dt)), dt);
    CHECK(expectation_z(psi, 0) == doctest::Approx(std::cos(omega * t)).epsilon(1e-9));
    CHECK(expectation_z(psi, 1) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("evolve matches the matrix-exponential oracle") {
  const Eigen::MatrixXcd h = tfi_hamiltonian({1.0, 1.0, 2});
  const QuantumState psi0 = QuantumState::all_ground(2);
  const Eigen::VectorXcd expected = expm_apply(h, 1.0, psi0.amplitudes);
  const QuantumState out = evolve(psi0, tfi_schedule(1.0, 1.0, 2, 1.0, 0.005));
  CHECK((out.amplitudes - expected).norm() < 1e-8);
}

TEST_CASE("evolve input validation") {
  const QuantumState s = QuantumState::all_ground(3);
  CHECK_THROWS_AS(evolve(s, tfi_schedule(1, 1, 4, 1.0, 0.005)),
                  std::invalid_argument);
  CHECK_THROWS_AS(evolve(s, tfi_schedule(1, 1, 3, 1.0, -0.1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(evolve(s, tfi_schedule(1, 1, 3, 1.0, 0.0003)),
                  std::invalid_argument);  // 3333.33 steps
}

TEST_CASE("evolve_exact: identity at t=0 and stationary eigenstates") {
  const Eigen::MatrixXcd h = tfi_hamiltonian({1.0, 1.0, 3});
  CounterRng rng(9);
  const QuantumState s = random_state(3, rng);
  const QuantumState same = evolve_exact(s, h, 0.0);
  CHECK((same.amplitudes - s.amplitudes).norm() < 1e-12);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  QuantumState eig;
  eig.sites = 3;
  eig.amplitudes = es.eigenvectors().col(2);
  const QuantumState evolved = evolve_exact(eig, h, 1.37);
  for (long n = 0; n < eig.dim(); ++n) {
    CHECK(std::abs(std::abs(evolved.amplitudes(n)) -
                   std::abs(eig.amplitudes(n))) < 1e-12);
  }
  const Complex phase = eig.amplitudes.dot(evolved.amplitudes);
  CHECK(std::abs(phase - std::polar(1.0, -es.eigenvalues()(2) * 1.37)) < 1e-12);
}

TEST_CASE("evolve agrees with evolve_exact at dt=0.005 for L=5, t=20") {
  const Eigen::MatrixXcd h = tfi_hamiltonian({1.0, 1.0, 5});
  const QuantumState psi0 = QuantumState::all_ground(5);
  const QuantumState exact = evolve_exact(psi0, h, 20.0);
  const QuantumState num = evolve(psi0, tfi_schedule(1.0, 1.0, 5, 20.0, 0.005));
  const double infidelity = 1.0 - std::abs(num.amplitudes.dot(exact.amplitudes));
  CHECK(infidelity < 1e-7);
}

TEST_CASE("oracle equivalence across random constant schedules") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int sites = 2 + static_cast<int>(rng.uniform(0, 6));  // up to 7
    RydbergSource src;
    src.reg = build_chain_register(sites, rng.uniform(0.9, 1.6));
    src.params.c6 = rng.uniform(1.0, 4.0);
    src.params.pulses.amplitude = Waveform::constant(rng.uniform(0.0, 2.0));
    src.params.pulses.phase = Waveform::constant(rng.uniform(0.0, 6.28));
    src.params.pulses.detuning_global =
        Waveform::constant(rng.uniform(-2.0, 2.0));
    src.params.pulses.duration = 4.0;

    const double t = rng.uniform(0.5, 4.0 - 0.05);
    const double dt = t / std::ceil(t / 0.005);
    const Eigen::MatrixXcd h =
        rydberg_hamiltonian_at(src.reg, src.params, 0.0);

    QuantumState psi0 = random_state(sites, rng);
    const QuantumState exact = evolve_exact(psi0, h, t);
    const QuantumState num =
        evolve(psi0, EvolutionSchedule{HamiltonianSource{src}, t, dt});
    const double overlap_err =
        1.0 - std::abs(num.amplitudes.dot(exact.amplitudes));
    CAPTURE(trial);
    CHECK(overlap_err < 1e-7);
  }
}

TEST_CASE("unitarity over long runs") {
  const QuantumState psi0 = QuantumState::all_ground(5);
  const QuantumState out = evolve(psi0, tfi_schedule(1.0, 1.0, 5, 20.0, 0.005));
  CHECK(std::abs(out.norm() - 1.0) < 1e-10);
}

TEST_CASE("energy conservation for static hamiltonians") {
  const Eigen::MatrixXcd h = tfi_hamiltonian({1.0, 1.0, 5});
  QuantumState psi = QuantumState::all_ground(5);
  const double e0 = std::real(psi.amplitudes.dot(h * psi.amplitudes));
  const QuantumState out = evolve(psi, tfi_schedule(1.0, 1.0, 5, 20.0, 0.005));
  const double e1 = std::real(out.amplitudes.dot(h * out.amplitudes));
  CHECK(std::abs(e1 - e0) < 1e-6 * spectral_norm(h));
}

TEST_CASE("step-halving shows 4th-order convergence") {
  const Eigen::MatrixXcd h = tfi_hamiltonian({1.0, 1.3, 4});
  const QuantumState psi0 = QuantumState::all_ground(4);
  const QuantumState exact = evolve_exact(psi0, h, 1.0);
  auto error_at = [&](double dt) {
    const QuantumState num = evolve(psi0, tfi_schedule(1.0, 1.3, 4, 1.0, dt));
    return (num.amplitudes - exact.amplitudes).norm();
  };
  const double e_coarse = error_at(0.2);
  const double e_fine = error_at(0.1);
  CHECK(e_coarse / e_fine >= 8.0);
}

TEST_CASE("ground_state_ed known spectra") {
  const GroundStateResult crit = ground_state_ed(tfi_hamiltonian({1.0, 1.0, 2}));
  CHECK(crit.energy == doctest::Approx(-2.2360679774997896));
  CHECK_FALSE(crit.degenerate);

  const GroundStateResult neel = ground_state_ed(tfi_hamiltonian({1.0, 0.0, 3}));
  CHECK(neel.energy == doctest::Approx(-2.0));
  CHECK(neel.degenerate);

  const int sites = 4;
  const GroundStateResult xsum =
      ground_state_ed(sum_site_operator(pauli_x(), sites));
  CHECK(xsum.energy == doctest::Approx(-sites));
  // |->^L has amplitudes (-1)^popcount / sqrt(dim), up to a global phase.
  QuantumState minus;
  minus.sites = sites;
  minus.amplitudes.resize(16);
  const double a0 = 1.0 / std::sqrt(16.0);
  for (long n = 0; n < 16; ++n) {
    const int pop = __builtin_popcountll(static_cast<unsigned long long>(n));
    minus.amplitudes(n) = (pop % 2 == 0) ? a0 : -a0;
    CHECK(std::abs(xsum.state.amplitudes(n)) == doctest::Approx(a0));
  }
  CHECK(fidelity(xsum.state, minus) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ground_state_ed phase convention and parity") {
  const GroundStateResult gs = ground_state_ed(tfi_hamiltonian({1.0, 1.0, 5}));
  // Deterministic global phase: largest amplitude real positive.
  long imax = 0;
  gs.state.amplitudes.cwiseAbs().maxCoeff(&imax);
  CHECK(std::abs(std::imag(gs.state.amplitudes(imax))) < 1e-14);
  CHECK(std::real(gs.state.amplitudes(imax)) > 0.0);
  // Z-parity symmetry: <Z_i> = 0 on every site.
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(expectation_z(gs.state, i)) < 1e-10);
  }
}

TEST_CASE("ground_state_ed lanczos path matches dense solve") {
  // L=10 (dim 1024) exercises the Lanczos branch; compare to dense.
  const Eigen::MatrixXcd h = tfi_hamiltonian({1.0, 1.0, 10});
  const GroundStateResult gs = ground_state_ed(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  CHECK(gs.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-11));
  CHECK_FALSE(gs.degenerate);
  CHECK(std::norm(gs.state.amplitudes.dot(es.eigenvectors().col(0))) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_SUITE_END();
