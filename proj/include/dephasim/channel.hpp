#pragma once

#include <cstdint>
#include <vector>

#include "dephasim/noise.hpp"
#include "dephasim/qubit.hpp"
#include "dephasim/trace.hpp"

namespace dephasim {

// Zeeman term of the control Hamiltonian H = (omega_k/2) sigma_z + beta(t) sigma_z
struct DephasingParams {
  double omega_k = 0.0;  // Zeeman angular frequency [rad/ms]
};

// closed-form dephasing channel: diagonals unchanged,
// rho01(t) = rho01(0) e^{-i omega_k t} e^{-2 Gamma(t)}
DensityMatrix analytic_state(const NoiseSpec& spec, double omega_k, const DensityMatrix& rho0,
                             double t);

// Monte Carlo ensemble of N members; member m evolves under the exact unitary
// exp(-i(omega_k t/2 + Phi_m(t)) sigma_z) with phases from
// sample_realization(spec, seed ^ m), and the density matrices are averaged
// in fixed member order.  Identical (spec, seed, grid, N) give bitwise
// identical results.
std::vector<DensityMatrix> evolve_ensemble(const NoiseSpec& spec, double omega_k,
                                           const DensityMatrix& rho0, const TimeGrid& grid,
                                           int n_members, std::uint64_t seed);

// express rho in the eigenbasis of sigma_b (identity for Z)
DensityMatrix transform_basis(const DensityMatrix& rho, Basis b);

// Kraus dephasing channel on the Bloch sphere: (rx, ry, rz) ->
// ((1-p) rx, (1-p) ry, rz); throws std::domain_error unless p in [0, 1]
BlochVector kraus_dephase(const BlochVector& r, double p);

}  // namespace dephasim
