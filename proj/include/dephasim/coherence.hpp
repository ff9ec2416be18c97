#pragma once

#include <utility>
#include <vector>

#include "dephasim/noise.hpp"
#include "dephasim/qubit.hpp"
#include "dephasim/trace.hpp"

namespace dephasim {

// long-time-averaged coherence below this value counts as coherence death
inline constexpr double kCoherenceDeathThreshold = 0.01;

// l1-norm coherence sum_{i != j} |rho_ij|; 2|rho01| for a qubit
double l1_coherence(const DensityMatrix& rho);

// Z-basis coherence of the maximal coherent state: e^{-2 Gamma(t)}
double coherence_z(const NoiseSpec& spec, double t);

// X/Y-basis coherence |cos(omega_k t)| e^{-2 Gamma(t)} of the phi = pi/2
// maximal coherent states, with the oscillation and decay factors exposed
struct CoherenceParts {
  double oscillation = 0.0;
  double decay = 0.0;
  double value = 0.0;
};
CoherenceParts coherence_xy_parts(const NoiseSpec& spec, double omega_k, double t);
double coherence_xy(const NoiseSpec& spec, double omega_k, double t);

Trace coherence_z_trace(const NoiseSpec& spec, const TimeGrid& grid);
Trace coherence_xy_trace(const NoiseSpec& spec, double omega_k, const TimeGrid& grid);

// time-averaged coherence (1/T) int_0^T |cos(omega_k t)| e^{-2 Gamma} dt by
// trapezoid rule.  The grid satisfies dt <= min(2pi/omega_k, 2pi/omega0)/50
// and additionally resolves the e^{-2 Gamma} revival spikes of width
// ~1/(pi alpha^2 omega0), which the period rule alone misses at large alpha.
struct AvgCoherence {
  double value = 0.0;          // <C> over [0, T]
  double value_at_half = 0.0;  // <C> over [0, T/2]
  double horizon = 0.0;        // the T actually used
  bool converged = false;      // relative change from T/2 to T within tol
};
AvgCoherence time_avg_coherence(const NoiseSpec& spec, double omega_k, double T,
                                double convergence_tol);

// T -> infinity limit approximated by doubling T until the convergence
// report triggers; starts from T0 (or 20 max(2pi/omega0, 2pi/omega_k) when
// T0 <= 0) and gives up after max_doublings with converged = false
AvgCoherence limit_avg_coherence(const NoiseSpec& spec, double omega_k,
                                 double convergence_tol = 1e-3, double T0 = 0.0,
                                 int max_doublings = 16);

// smallest alpha in [alpha_lo, alpha_hi] with <C> < 0.01: coarse scan with
// the given step, then bisection to 1e-3.  T is the starting averaging
// horizon handed to limit_avg_coherence.
struct AlphaCritScan {
  bool found = false;
  double alpha_crit = 0.0;
  bool monotone = true;  // <C> non-increasing over the coarse scan
  std::vector<std::pair<double, double>> coarse;  // (alpha, <C>)
};
AlphaCritScan alpha_crit_scan(double omega0, double omega_k, double omegaJ, double T,
                              double alpha_lo, double alpha_hi, double step);

}  // namespace dephasim
