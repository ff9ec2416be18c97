#include "dephasim/kernels.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kernels_detail.hpp"

namespace dephasim::kernels {

namespace detail {

double comb_cos_scalar(std::span<const double> w, std::span<const double> phi, double theta) {
  assert(phi.empty() || phi.size() == w.size());
  double acc = 0.0;
  if (phi.empty()) {
    for (std::size_t j = 0; j < w.size(); ++j)
      acc += w[j] * std::cos(static_cast<double>(j + 1) * theta);
  } else {
    for (std::size_t j = 0; j < w.size(); ++j)
      acc += w[j] * std::cos(static_cast<double>(j + 1) * theta + phi[j]);
  }
  return acc;
}

double comb_sin_scalar(std::span<const double> w, std::span<const double> phi, double theta) {
  assert(phi.empty() || phi.size() == w.size());
  double acc = 0.0;
  if (phi.empty()) {
    for (std::size_t j = 0; j < w.size(); ++j)
      acc += w[j] * std::sin(static_cast<double>(j + 1) * theta);
  } else {
    for (std::size_t j = 0; j < w.size(); ++j)
      acc += w[j] * std::sin(static_cast<double>(j + 1) * theta + phi[j]);
  }
  return acc;
}

double comb_sin_sq_scalar(std::span<const double> w, double theta) {
  double acc = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double s = std::sin(static_cast<double>(j + 1) * theta);
    acc += w[j] * s * s;
  }
  return acc;
}

void comb_sin_trace_scalar(std::span<const double> w, std::span<const double> phi,
                           double theta0, double dtheta, std::span<double> out) {
  assert(phi.empty() || phi.size() == w.size());
  const std::size_t n = w.size();
  std::vector<double> s(n), c(n), sd(n), cd(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a0 = static_cast<double>(j + 1) * theta0 + (phi.empty() ? 0.0 : phi[j]);
    const double st = static_cast<double>(j + 1) * dtheta;
    s[j] = std::sin(a0);
    c[j] = std::cos(a0);
    sd[j] = std::sin(st);
    cd[j] = std::cos(st);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += w[j] * s[j];
    out[k] = acc;
    for (std::size_t j = 0; j < n; ++j) {
      const double sn = s[j] * cd[j] + c[j] * sd[j];
      const double cn = c[j] * cd[j] - s[j] * sd[j];
      s[j] = sn;
      c[j] = cn;
    }
  }
}

}  // namespace detail

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {
Backend g_backend = avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() { return g_backend; }

void force_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported())
    throw std::runtime_error("kernels: AVX2 backend not supported on this CPU");
  g_backend = b;
}

void reset_backend() { g_backend = avx2_supported() ? Backend::avx2 : Backend::scalar; }

double comb_cos(std::span<const double> w, std::span<const double> phi, double theta) {
  return g_backend == Backend::avx2 ? detail::comb_cos_avx2(w, phi, theta)
                                    : detail::comb_cos_scalar(w, phi, theta);
}

double comb_sin(std::span<const double> w, std::span<const double> phi, double theta) {
  return g_backend == Backend::avx2 ? detail::comb_sin_avx2(w, phi, theta)
                                    : detail::comb_sin_scalar(w, phi, theta);
}

double comb_sin_sq(std::span<const double> w, double theta) {
  return g_backend == Backend::avx2 ? detail::comb_sin_sq_avx2(w, theta)
                                    : detail::comb_sin_sq_scalar(w, theta);
}

void comb_sin_trace(std::span<const double> w, std::span<const double> phi,
                    double theta0, double dtheta, std::span<double> out) {
  if (g_backend == Backend::avx2)
    detail::comb_sin_trace_avx2(w, phi, theta0, dtheta, out);
  else
    detail::comb_sin_trace_scalar(w, phi, theta0, dtheta, out);
}

}  // namespace dephasim::kernels
