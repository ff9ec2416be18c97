#include "dephasim/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace dephasim {

namespace {
const complexd kI(0.0, 1.0);
}

DensityMatrix DensityMatrix::pure(const Eigen::Vector2cd& psi) {
  const Eigen::Vector2cd n = psi.normalized();
  DensityMatrix rho;
  rho.m = n * n.adjoint();
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed() {
  DensityMatrix rho;
  rho.m = 0.5 * Eigen::Matrix2cd::Identity();
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(const Eigen::Matrix2cd& m, double tol) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  DensityMatrix rho;
  rho.m = 0.5 * (m + m.adjoint());  // symmetrize away roundoff
  return rho;
}

bool DensityMatrix::is_physical(double trace_tol, double eig_tol) const {
  if (std::abs(m.trace().real() - 1.0) > trace_tol) return false;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > trace_tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m);
  return es.eigenvalues().minCoeff() >= -eig_tol;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector to_bloch(const DensityMatrix& rho) {
  BlochVector r;
  r.x = 2.0 * rho.m(0, 1).real();
  r.y = -2.0 * rho.m(0, 1).imag();
  r.z = (rho.m(0, 0) - rho.m(1, 1)).real();
  return r;
}

DensityMatrix from_bloch(const BlochVector& r) {
  DensityMatrix rho;
  rho.m << 0.5 * (1.0 + r.z), 0.5 * complexd(r.x, -r.y),
      0.5 * complexd(r.x, r.y), 0.5 * (1.0 - r.z);
  return rho;
}

const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return s;
}

const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 0, -kI, kI, 0).finished();
  return s;
}

const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return s;
}

const Eigen::Matrix2cd& basis_vectors(Basis b) {
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  static const Eigen::Matrix2cd vz = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd vx =
      (Eigen::Matrix2cd() << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2).finished();
  static const Eigen::Matrix2cd vy =
      (Eigen::Matrix2cd() << inv_sqrt2, inv_sqrt2, kI * inv_sqrt2, -kI * inv_sqrt2).finished();
  switch (b) {
    case Basis::Z: return vz;
    case Basis::X: return vx;
    case Basis::Y: return vy;
  }
  return vz;
}

Eigen::Vector2cd max_coherent_state(Basis b, double phi) {
  const Eigen::Matrix2cd& v = basis_vectors(b);
  const Eigen::Vector2cd plus = v.col(0);
  const Eigen::Vector2cd minus = v.col(1);
  return (plus + std::exp(kI * phi) * minus) / std::sqrt(2.0);
}

}  // namespace dephasim
