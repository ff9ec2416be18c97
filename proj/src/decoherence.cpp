#include "dephasim/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dephasim/kernels.hpp"

namespace dephasim {

GammaModel GammaModel::exact_sum(const NoiseSpec& spec) {
  GammaModel m;
  m.kind_ = Kind::exact_sum;
  m.alpha_ = spec.alpha;
  m.omega0_ = spec.omega0;
  m.w_gamma_.resize(spec.mode_count);
  m.w_dot_.resize(spec.mode_count);
  for (int j = 1; j <= spec.mode_count; ++j) {
    const double mw = spec.mode_weight(j);
    m.w_gamma_[j - 1] = (mw / j) * (mw / j);
    m.w_dot_[j - 1] = mw * mw / j;
  }
  return m;
}

GammaModel GammaModel::fitted_quadratic(double alpha, double omega0) {
  GammaModel m;
  m.kind_ = Kind::fitted_quadratic;
  m.alpha_ = alpha;
  m.omega0_ = omega0;
  return m;
}

GammaModel GammaModel::closed_form_periodic(double alpha, double omega0) {
  GammaModel m;
  m.kind_ = Kind::closed_form_periodic;
  m.alpha_ = alpha;
  m.omega0_ = omega0;
  return m;
}

double GammaModel::operator()(double t) const {
  const double a2 = alpha_ * alpha_;
  switch (kind_) {
    case Kind::exact_sum:
      // 2 a^2 w0^2 sum [jF]^2 sin^2(j w0 t/2)/(j w0)^2, the w0^2 cancelled
      return 2.0 * a2 * kernels::comb_sin_sq(w_gamma_, 0.5 * omega0_ * t);
    case Kind::fitted_quadratic:
      return kFitLinear * a2 * omega0_ * t - kFitQuadratic * a2 * omega0_ * omega0_ * t * t;
    case Kind::closed_form_periodic: {
      const double y = std::fmod(0.5 * omega0_ * t, std::numbers::pi);
      return a2 * y * (std::numbers::pi - y);
    }
  }
  return 0.0;
}

double GammaModel::derivative(double t) const {
  const double a2 = alpha_ * alpha_;
  switch (kind_) {
    case Kind::exact_sum:
      return a2 * omega0_ * kernels::comb_sin(w_dot_, {}, omega0_ * t);
    case Kind::fitted_quadratic:
      return kFitLinear * a2 * omega0_ - 2.0 * kFitQuadratic * a2 * omega0_ * omega0_ * t;
    case Kind::closed_form_periodic: {
      const double y = std::fmod(0.5 * omega0_ * t, std::numbers::pi);
      return a2 * omega0_ * (0.5 * std::numbers::pi - y);
    }
  }
  return 0.0;
}

double gamma_exact(const NoiseSpec& spec, double t) { return GammaModel::exact_sum(spec)(t); }

double gamma_dot(const NoiseSpec& spec, double t) {
  return GammaModel::exact_sum(spec).derivative(t);
}

double gamma_fitted(double alpha, double omega0, double t, bool* in_domain) {
  if (in_domain)
    *in_domain = t >= 0.0 && omega0 * t <= 2.0 * std::numbers::pi + 1e-12 && alpha >= 0.0 &&
                 alpha <= 1.0;
  const double a2 = alpha * alpha;
  return kFitLinear * a2 * omega0 * t - kFitQuadratic * a2 * omega0 * omega0 * t * t;
}

double critical_omega0(double t_max) {
  if (!(t_max > 0.0)) throw std::domain_error("critical_omega0: t_max must be > 0");
  return kFitLinear / (2.0 * kFitQuadratic * t_max);
}

double oscillation_period(double omega0) {
  if (!(omega0 > 0.0)) throw std::domain_error("oscillation_period: omega0 must be > 0");
  return kFitPeriod / omega0;
}

Trace gamma_trace(const NoiseSpec& spec, const TimeGrid& grid) {
  const GammaModel g = GammaModel::exact_sum(spec);
  std::vector<double> v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) v[i] = g(grid.time(i));
  return Trace(grid, std::move(v));
}

}  // namespace dephasim
