#include "dephasim/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dephasim/kernels.hpp"

namespace dephasim {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

double uniform_phase(std::uint64_t seed, std::uint64_t index) {
  constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  const std::uint64_t z = mix64(seed + kGamma * (index + 1));
  const double u = static_cast<double>(z >> 11) * 0x1.0p-53;  // [0, 1)
  double phase = 2.0 * std::numbers::pi * u;
  if (phase >= 2.0 * std::numbers::pi) phase = 0.0;
  return phase;
}

}  // namespace detail

double NoiseSpec::mode_weight(int j) const {
  if (p == 0.0) return 1.0;
  return std::pow(static_cast<double>(j), p / 2.0);
}

std::vector<double> NoiseSpec::mode_weights() const {
  std::vector<double> w(mode_count);
  for (int j = 1; j <= mode_count; ++j) w[j - 1] = mode_weight(j);
  return w;
}

NoiseSpec build_spec(double alpha, double omega0, double omegaJ, double p) {
  if (!(alpha >= 0.0)) throw std::domain_error("build_spec: alpha must be >= 0");
  if (!(omega0 > 0.0)) throw std::domain_error("build_spec: omega0 must be > 0");
  if (!(omegaJ >= omega0)) throw std::domain_error("build_spec: omegaJ must be >= omega0");
  NoiseSpec s;
  s.alpha = alpha;
  s.omega0 = omega0;
  s.omegaJ = omegaJ;
  s.p = p;
  // the small shift absorbs representation error when the ratio is an integer
  s.mode_count = static_cast<int>(std::floor(omegaJ / omega0 + 1e-9));
  return s;
}

NoiseRealization sample_realization(const NoiseSpec& spec, std::uint64_t seed) {
  NoiseRealization r;
  r.spec = spec;
  r.phases.resize(spec.mode_count);
  for (int j = 0; j < spec.mode_count; ++j)
    r.phases[j] = detail::uniform_phase(seed, static_cast<std::uint64_t>(j));
  return r;
}

double beta(const NoiseRealization& r, double t) {
  const auto w = r.spec.mode_weights();
  return r.spec.alpha * r.spec.omega0 * kernels::comb_cos(w, r.phases, r.spec.omega0 * t);
}

namespace {

// weights jF(j)/omega_j folded to (jF(j)/j)/omega0; the leading alpha*omega0
// prefactor then cancels the 1/omega0
std::vector<double> integral_weights(const NoiseSpec& spec) {
  std::vector<double> w(spec.mode_count);
  for (int j = 1; j <= spec.mode_count; ++j) w[j - 1] = spec.mode_weight(j) / j;
  return w;
}

}  // namespace

double phase_integral(const NoiseRealization& r, double t) {
  const auto w = integral_weights(r.spec);
  const double s_t = kernels::comb_sin(w, r.phases, r.spec.omega0 * t);
  const double s_0 = kernels::comb_sin(w, r.phases, 0.0);
  return r.spec.alpha * (s_t - s_0);
}

std::vector<double> phase_integral_trace(const NoiseRealization& r, double t0, double dt, int n) {
  const auto w = integral_weights(r.spec);
  std::vector<double> out(n);
  kernels::comb_sin_trace(w, r.phases, r.spec.omega0 * t0, r.spec.omega0 * dt, out);
  const double s_0 = (t0 == 0.0) ? out[0] : kernels::comb_sin(w, r.phases, 0.0);
  for (double& v : out) v = r.spec.alpha * (v - s_0);
  return out;
}

}  // namespace dephasim
