#include "dephasim/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dephasim/decoherence.hpp"

namespace dephasim {

double l1_coherence(const DensityMatrix& rho) {
  return std::abs(rho.m(0, 1)) + std::abs(rho.m(1, 0));
}

double coherence_z(const NoiseSpec& spec, double t) {
  return std::exp(-2.0 * gamma_exact(spec, t));
}

CoherenceParts coherence_xy_parts(const NoiseSpec& spec, double omega_k, double t) {
  CoherenceParts p;
  p.oscillation = std::abs(std::cos(omega_k * t));
  p.decay = std::exp(-2.0 * gamma_exact(spec, t));
  p.value = p.oscillation * p.decay;
  return p;
}

double coherence_xy(const NoiseSpec& spec, double omega_k, double t) {
  return coherence_xy_parts(spec, omega_k, t).value;
}

Trace coherence_z_trace(const NoiseSpec& spec, const TimeGrid& grid) {
  const GammaModel g = GammaModel::exact_sum(spec);
  std::vector<double> v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) v[i] = std::exp(-2.0 * g(grid.time(i)));
  return Trace(grid, std::move(v));
}

Trace coherence_xy_trace(const NoiseSpec& spec, double omega_k, const TimeGrid& grid) {
  const GammaModel g = GammaModel::exact_sum(spec);
  std::vector<double> v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const double t = grid.time(i);
    v[i] = std::abs(std::cos(omega_k * t)) * std::exp(-2.0 * g(t));
  }
  return Trace(grid, std::move(v));
}

namespace {

// Gamma is exactly periodic in 2pi/omega0 on the harmonic comb, so the
// integrand only needs Gamma at alpha = 1 on one period; alpha enters as a
// global alpha^2 factor.
struct PeriodTable {
  std::vector<double> g1;  // Gamma(t_i)/alpha^2 for t_i = i * dt, i = 0..M-1
  double dt = 0.0;
};

PeriodTable build_period_table(const NoiseSpec& spec, double omega_k) {
  const double period = 2.0 * std::numbers::pi / spec.omega0;
  const double period_k =
      omega_k > 0.0 ? 2.0 * std::numbers::pi / omega_k : std::numeric_limits<double>::infinity();
  double dt_req = std::min(period, period_k) / 50.0;
  if (spec.alpha > 0.0) {
    const double spike = 1.0 / (std::numbers::pi * spec.alpha * spec.alpha * spec.omega0);
    dt_req = std::min(dt_req, spike / 8.0);
  }
  PeriodTable tab;
  const int m = static_cast<int>(std::ceil(period / dt_req));
  tab.dt = period / m;
  tab.g1.resize(m);
  if (spec.alpha == 0.0) return tab;  // decay factor is identically 1
  NoiseSpec unit = spec;
  unit.alpha = 1.0;
  const GammaModel g = GammaModel::exact_sum(unit);
  for (int i = 0; i < m; ++i) tab.g1[i] = g(i * tab.dt);
  return tab;
}

double trapezoid_avg(const NoiseSpec& spec, double omega_k, const PeriodTable& tab, long n) {
  const double a2 = spec.alpha * spec.alpha;
  const int m = static_cast<int>(tab.g1.size());
  double sum = 0.0;
  for (long i = 0; i <= n; ++i) {
    const double t = i * tab.dt;
    const double decay = a2 == 0.0 ? 1.0 : std::exp(-2.0 * a2 * tab.g1[i % m]);
    double f = std::abs(std::cos(omega_k * t)) * decay;
    if (i == 0 || i == n) f *= 0.5;
    sum += f;
  }
  return sum / static_cast<double>(n);
}

}  // namespace

AvgCoherence time_avg_coherence(const NoiseSpec& spec, double omega_k, double T,
                                double convergence_tol) {
  if (!(T > 0.0)) throw std::domain_error("time_avg_coherence: T must be > 0");
  const PeriodTable tab = build_period_table(spec, omega_k);
  long n = static_cast<long>(std::ceil(T / tab.dt));
  if (n % 2) ++n;
  if (n < 2) n = 2;

  AvgCoherence r;
  r.value = trapezoid_avg(spec, omega_k, tab, n);
  r.value_at_half = trapezoid_avg(spec, omega_k, tab, n / 2);
  r.horizon = n * tab.dt;
  r.converged =
      std::abs(r.value - r.value_at_half) <= convergence_tol * std::max(std::abs(r.value), 1e-300);
  return r;
}

AvgCoherence limit_avg_coherence(const NoiseSpec& spec, double omega_k, double convergence_tol,
                                 double T0, int max_doublings) {
  const double period = 2.0 * std::numbers::pi / spec.omega0;
  const double period_k = omega_k > 0.0 ? 2.0 * std::numbers::pi / omega_k : 0.0;
  double T = T0 > 0.0 ? T0 : 20.0 * std::max(period, period_k);
  AvgCoherence r;
  for (int d = 0; d <= max_doublings; ++d) {
    r = time_avg_coherence(spec, omega_k, T, convergence_tol);
    if (r.converged) return r;
    T *= 2.0;
  }
  r.converged = false;
  return r;
}

AlphaCritScan alpha_crit_scan(double omega0, double omega_k, double omegaJ, double T,
                              double alpha_lo, double alpha_hi, double step) {
  if (!(step > 0.0)) throw std::domain_error("alpha_crit_scan: step must be > 0");
  if (!(alpha_hi >= alpha_lo)) throw std::domain_error("alpha_crit_scan: bad alpha range");

  const auto avg = [&](double alpha) {
    return limit_avg_coherence(build_spec(alpha, omega0, omegaJ), omega_k, 1e-3, T).value;
  };

  AlphaCritScan out;
  double first_dead = -1.0;
  double last_alive = alpha_lo;
  for (double a = alpha_lo; a <= alpha_hi + 1e-12; a += step) {
    const double v = avg(a);
    if (!out.coarse.empty() && v > out.coarse.back().second * (1.0 + 1e-3) + 1e-6)
      out.monotone = false;
    out.coarse.emplace_back(a, v);
    if (v < kCoherenceDeathThreshold) {
      first_dead = a;
      break;
    }
    last_alive = a;
  }
  if (first_dead < 0.0) {
    out.found = false;  // no death in range
    return out;
  }

  double lo = last_alive, hi = first_dead;
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (avg(mid) < kCoherenceDeathThreshold)
      hi = mid;
    else
      lo = mid;
  }
  out.found = true;
  out.alpha_crit = 0.5 * (lo + hi);
  return out;
}

}  // namespace dephasim
