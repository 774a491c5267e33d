// linalg.hpp — dense complex linear algebra and spin-basis primitives

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinstarlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense storage cap: 12 spins, dimension 4096.
inline constexpr int kMaxDenseSpins = 12;

// Basis convention for a register of num_spins spin-1/2 sites: the integer
// basis index addresses spin k through bit k (LSB = spin 0), with bit
// value 0 = |+1> (up) and 1 = |-1> (down). Index 0 is the all-up state,
// so the index order of a two-spin register is the standard pair basis
// {|1,1>, |1,-1>, |-1,1>, |-1,-1>}.
inline int spin_bit(int basis_index, int site) { return (basis_index >> site) & 1; }
inline int spin_sigma_z(int basis_index, int site) { return 1 - 2 * spin_bit(basis_index, site); }

enum class PauliAxis { x, y, z };

// 2x2 sigma_axis in the basis (|+1>, |-1>); sigma_z = diag(1, -1).
Matrix pauli(PauliAxis axis);

// I (x) ... (x) op (x) ... (x) I with the 2x2 op acting on `site`.
Matrix embed_single_site(const Matrix& op2x2, int site, int num_spins);

bool is_hermitian(const Matrix& m, double tol = 1e-12);
double max_abs(const Matrix& m);

struct HermitianEigen {
    Eigen::VectorXd eigenvalues;  // ascending
    Matrix eigenvectors;          // orthonormal columns
};

// Throws std::invalid_argument unless ||H - H^dag||_max <= herm_tol.
HermitianEigen hermitian_eigen(const Matrix& h, double herm_tol = 1e-12);

// exp(-i H t) |psi0>, spectrally exact for time-independent H. The cached
// overload avoids re-diagonalizing along a trajectory.
Vector evolve(const Matrix& h, const Vector& psi0, double t);
Vector evolve(const HermitianEigen& eig, const Vector& psi0, double t);

// |psi><psi|; rejects kets whose norm deviates from 1 by more than norm_tol.
Matrix density_from_ket(const Vector& psi, double norm_tol = 1e-8);

// 4x4 reduced density matrix of the pair (site_i, site_j), rows/cols in
// the standard pair order {|1,1>, |1,-1>, |-1,1>, |-1,-1>}.
Matrix partial_trace_to_pair(const Matrix& rho, int site_i, int site_j, int num_spins);

}  // namespace spinstarlab
