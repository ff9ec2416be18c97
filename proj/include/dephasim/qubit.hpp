#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dephasim {

using complexd = std::complex<double>;

enum class Basis { Z, X, Y };

// 2x2 qubit density matrix.  Construction through the factories keeps the
// matrix Hermitian; is_physical checks trace and positivity on top.
struct DensityMatrix {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();

  complexd rho00() const { return m(0, 0); }
  complexd rho01() const { return m(0, 1); }
  complexd rho10() const { return m(1, 0); }
  complexd rho11() const { return m(1, 1); }

  static DensityMatrix pure(const Eigen::Vector2cd& psi);
  static DensityMatrix maximally_mixed();
  // throws std::invalid_argument if the matrix is not Hermitian/unit-trace
  // within tolerance
  static DensityMatrix from_matrix(const Eigen::Matrix2cd& m, double tol = 1e-9);

  bool is_physical(double trace_tol = 1e-12, double eig_tol = 1e-10) const;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const;
};

BlochVector to_bloch(const DensityMatrix& rho);
DensityMatrix from_bloch(const BlochVector& r);

const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();

// eigenbasis column matrices V_b with sigma_b V_b = V_b diag(1,-1); V_z = I
const Eigen::Matrix2cd& basis_vectors(Basis b);

// maximal coherent state of basis b with relative phase phi:
// (|b+> + e^{i phi} |b->)/sqrt(2), expressed in the computational basis
Eigen::Vector2cd max_coherent_state(Basis b, double phi);

}  // namespace dephasim
