#pragma once

#include <vector>

#include "dephasim/noise.hpp"
#include "dephasim/trace.hpp"

namespace dephasim {

// paper-fit constants used by every user-facing predictor; the closed-form
// limits they approximate are pi/2, 1/4 and 2*pi
inline constexpr double kFitLinear = 1.57;
inline constexpr double kFitQuadratic = 0.2498;
inline constexpr double kFitPeriod = 6.285;

// Decoherence function evaluator.  ExactSum is the finite-mode sum
//   Gamma(t) = 2 alpha^2 omega0^2 sum_j [jF(j)]^2 sin^2(omega_j t/2) / omega_j^2,
// FittedQuadratic the quadratic fit valid on the first oscillation period,
// ClosedFormPeriodic the infinite-mode white-noise limit
//   alpha^2 * y (pi - y) with y = (omega0 t / 2) mod pi,
// kept as an independent algebraic route for cross-checks.
class GammaModel {
 public:
  enum class Kind { exact_sum, fitted_quadratic, closed_form_periodic };

  static GammaModel exact_sum(const NoiseSpec& spec);
  static GammaModel fitted_quadratic(double alpha, double omega0);
  static GammaModel closed_form_periodic(double alpha, double omega0);

  double operator()(double t) const;
  // dGamma/dt; for the exact sum this is the analytic term-wise derivative
  //   alpha^2 omega0^2 sum_j [jF(j)]^2 sin(omega_j t) / omega_j
  double derivative(double t) const;

  Kind kind() const { return kind_; }

 private:
  GammaModel() = default;
  Kind kind_ = Kind::exact_sum;
  double alpha_ = 0.0;
  double omega0_ = 0.0;
  std::vector<double> w_gamma_;  // (jF(j)/j)^2
  std::vector<double> w_dot_;    // [jF(j)]^2 / j
};

// point evaluations (build a fresh evaluator; use GammaModel for loops)
double gamma_exact(const NoiseSpec& spec, double t);
double gamma_dot(const NoiseSpec& spec, double t);

// Gamma' = 1.57 alpha^2 omega0 t - 0.2498 alpha^2 omega0^2 t^2, fitted for
// white noise on the first period.  in_domain (optional) reports whether
// (alpha, omega0 t) lie inside the fitted range 0 <= alpha <= 1,
// 0 <= omega0 t <= 2 pi.
double gamma_fitted(double alpha, double omega0, double t, bool* in_domain = nullptr);

// minimum noise base frequency producing non-Markovian dynamics on
// [0, t_max]:  omega0_c = 1.57 / (0.4996 t_max)
double critical_omega0(double t_max);

// oscillation (and revival) period of the decoherence function: 6.285/omega0
double oscillation_period(double omega0);

Trace gamma_trace(const NoiseSpec& spec, const TimeGrid& grid);

}  // namespace dephasim
