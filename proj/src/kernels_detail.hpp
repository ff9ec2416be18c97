#pragma once

#include <span>

// internal: per-backend kernel entry points, see kernels.cpp for dispatch
namespace dephasim::kernels::detail {

double comb_cos_scalar(std::span<const double> w, std::span<const double> phi, double theta);
double comb_sin_scalar(std::span<const double> w, std::span<const double> phi, double theta);
double comb_sin_sq_scalar(std::span<const double> w, double theta);
void comb_sin_trace_scalar(std::span<const double> w, std::span<const double> phi,
                           double theta0, double dtheta, std::span<double> out);

double comb_cos_avx2(std::span<const double> w, std::span<const double> phi, double theta);
double comb_sin_avx2(std::span<const double> w, std::span<const double> phi, double theta);
double comb_sin_sq_avx2(std::span<const double> w, double theta);
void comb_sin_trace_avx2(std::span<const double> w, std::span<const double> phi,
                         double theta0, double dtheta, std::span<double> out);

}  // namespace dephasim::kernels::detail
