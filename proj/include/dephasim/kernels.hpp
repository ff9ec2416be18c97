#pragma once

#include <cstddef>
#include <span>

// Trigonometric comb kernels. Every hot loop in the library reduces to a
// weighted sum over the harmonic comb j = 1..J of sin/cos(j*theta + phi_j),
// so these are the only routines with SIMD variants. Scalar versions are the
// reference; the AVX2 versions are equivalence-tested against them and
// selected at runtime on x86-64 hardware that supports AVX2+FMA.
namespace dephasim::kernels {

enum class Backend { scalar, avx2 };

bool avx2_supported();

// backend used by the comb_* entry points; defaults to the best supported
Backend active_backend();

// override the dispatch (tests use this; throws std::runtime_error if the
// requested backend is not supported on this machine)
void force_backend(Backend b);
void reset_backend();

// sum_{j=1..n} w[j-1] * cos(j*theta + phi[j-1]); empty phi means all zero
double comb_cos(std::span<const double> w, std::span<const double> phi, double theta);

// sum_{j=1..n} w[j-1] * sin(j*theta + phi[j-1])
double comb_sin(std::span<const double> w, std::span<const double> phi, double theta);

// sum_{j=1..n} w[j-1] * sin^2(j*theta); kept in squared form so the result
// is non-negative term by term
double comb_sin_sq(std::span<const double> w, double theta);

// out[k] = sum_{j=1..n} w[j-1] * sin(j*(theta0 + k*dtheta) + phi[j-1])
// for k = 0..out.size()-1, computed with a per-mode rotation recurrence:
// one sincos per mode for the initial angle and the step, then two
// multiply-adds per mode per time step.  Drift of the recurrence is
// O(steps * eps) per mode, orders of magnitude below the Monte Carlo
// tolerances it is used for; comb_sin is the drift-free reference.
void comb_sin_trace(std::span<const double> w, std::span<const double> phi,
                    double theta0, double dtheta, std::span<double> out);

}  // namespace dephasim::kernels
