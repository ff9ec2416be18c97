#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dephasim {

// Stochastic phase-modulation noise
//   beta(t) = alpha * omega0 * sum_{j=1..J} jF(j) cos(omega_j t + psi_j),
// on the harmonic comb omega_j = j*omega0 with modulation F(j) = j^(p/2-1).
// All frequencies are angular [rad/ms], all times [ms].  White noise (p = 0)
// makes every comb weight jF(j) equal to 1.
struct NoiseSpec {
  double alpha = 0.0;   // dimensionless noise strength
  double omega0 = 0.0;  // noise base frequency [rad/ms]
  double omegaJ = 0.0;  // noise cutoff frequency [rad/ms]
  double p = 0.0;       // spectral exponent
  int mode_count = 0;   // J = floor(omegaJ / omega0)

  double mode_frequency(int j) const { return j * omega0; }  // j in 1..J
  double mode_weight(int j) const;                           // jF(j) = j^(p/2)
  std::vector<double> mode_weights() const;
};

// throws std::domain_error unless alpha >= 0, omega0 > 0 and omegaJ >= omega0
NoiseSpec build_spec(double alpha, double omega0, double omegaJ, double p = 0.0);

// one draw of the J random phases; reproducible from (spec, seed)
struct NoiseRealization {
  NoiseSpec spec;
  std::vector<double> phases;  // psi_j in [0, 2pi)
};

// phases are sampled i.i.d. uniform on [0, 2pi) from a counter-based
// generator keyed by (seed, mode index), so draws are order-independent
NoiseRealization sample_realization(const NoiseSpec& spec, std::uint64_t seed);

// the noise amplitude at time t [rad/ms]
double beta(const NoiseRealization& r, double t);

// accumulated phase Phi(t) = int_0^t beta(tau) dtau, by the closed form
//   alpha*omega0 * sum_j jF(j) [sin(omega_j t + psi_j) - sin(psi_j)] / omega_j
double phase_integral(const NoiseRealization& r, double t);

// Phi on the uniform grid t_k = t0 + k*dt, k = 0..n-1, via the rotation
// recurrence kernel (the ensemble simulator's hot path)
std::vector<double> phase_integral_trace(const NoiseRealization& r, double t0, double dt, int n);

namespace detail {
// splitmix64 finalizer; the counter-based generator is u(seed, i) = mix64(seed + GAMMA*(i+1))
std::uint64_t mix64(std::uint64_t x);
double uniform_phase(std::uint64_t seed, std::uint64_t index);
}  // namespace detail

}  // namespace dephasim
