#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dephasim/noise.hpp"
#include "dephasim/qubit.hpp"
#include "dephasim/trace.hpp"

namespace dephasim {

// trace distance D = 1/2 ||rho1 - rho2||_1 (half the sum of the absolute
// eigenvalues of the Hermitian difference)
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

// BLP non-Markovianity over [0, window.t_max] for the canonical antipodal
// state pairs, whose trace distance is D(t) = e^{-2 Gamma(t)}:
//   N = -2 int_{dGamma/dt < 0} dGamma/dt e^{-2 Gamma} dt.
// Sign changes of dGamma/dt are bracketed on the grid and bisected to 1e-6
// ms; each interval contributes through the exact antiderivative, as the
// D(t) increase e^{-2 Gamma(end)} - e^{-2 Gamma(start)}.
struct BlpReport {
  TimeGrid window;
  double measure = 0.0;  // N >= 0
  std::vector<std::pair<double, double>> increasing_intervals;  // D increasing
  std::optional<double> t_s;  // earliest time with N > 0, if any
};
BlpReport blp_measure(const NoiseSpec& spec, const TimeGrid& window);

// earliest non-Markovian time for white noise at base frequency omega0:
// the fitted closed form 1.57/(0.4996 omega0) and the first zero of
// dGamma/dt located numerically (they agree within 1% for omegaJ >= 50)
struct NonMarkovOnset {
  double analytic = 0.0;
  double numeric = 0.0;
};
NonMarkovOnset earliest_nonmarkov_time(double omega0, double omegaJ = 50.0);

}  // namespace dephasim
