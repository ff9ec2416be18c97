#include "dephasim/channel.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "dephasim/decoherence.hpp"

namespace dephasim {

namespace {
const complexd kI(0.0, 1.0);
}

DensityMatrix analytic_state(const NoiseSpec& spec, double omega_k, const DensityMatrix& rho0,
                             double t) {
  const double g = gamma_exact(spec, t);
  const complexd factor = std::exp(-kI * (omega_k * t)) * std::exp(-2.0 * g);
  DensityMatrix rho;
  rho.m(0, 0) = rho0.m(0, 0);
  rho.m(1, 1) = rho0.m(1, 1);
  rho.m(0, 1) = rho0.m(0, 1) * factor;
  rho.m(1, 0) = std::conj(rho.m(0, 1));
  return rho;
}

std::vector<DensityMatrix> evolve_ensemble(const NoiseSpec& spec, double omega_k,
                                           const DensityMatrix& rho0, const TimeGrid& grid,
                                           int n_members, std::uint64_t seed) {
  if (n_members < 1) throw std::domain_error("evolve_ensemble: need at least one member");
  const int n = grid.n_points;
  std::vector<complexd> mean(n, complexd(0.0, 0.0));

  for (int m = 0; m < n_members; ++m) {
    const NoiseRealization r =
        sample_realization(spec, seed ^ static_cast<std::uint64_t>(m));
    const std::vector<double> phi = phase_integral_trace(r, 0.0, grid.dt(), n);
    for (int i = 0; i < n; ++i) {
      const double a = 2.0 * phi[i];
      mean[i] += complexd(std::cos(a), -std::sin(a));  // e^{-2i Phi_m}
    }
  }

  std::vector<DensityMatrix> out(n);
  for (int i = 0; i < n; ++i) {
    const double t = grid.time(i);
    const complexd od = rho0.m(0, 1) * std::exp(-kI * (omega_k * t)) *
                        (mean[i] / static_cast<double>(n_members));
    out[i].m(0, 0) = rho0.m(0, 0);
    out[i].m(1, 1) = rho0.m(1, 1);
    out[i].m(0, 1) = od;
    out[i].m(1, 0) = std::conj(od);
    assert(std::abs(out[i].m.trace().real() - 1.0) < 1e-12);
  }
  return out;
}

DensityMatrix transform_basis(const DensityMatrix& rho, Basis b) {
  if (b == Basis::Z) return rho;
  const Eigen::Matrix2cd& v = basis_vectors(b);
  DensityMatrix out;
  out.m = v.adjoint() * rho.m * v;  // entries <b_i| rho |b_j>
  return out;
}

BlochVector kraus_dephase(const BlochVector& r, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("kraus_dephase: p must be in [0, 1]");
  return BlochVector{(1.0 - p) * r.x, (1.0 - p) * r.y, r.z};
}

}  // namespace dephasim
