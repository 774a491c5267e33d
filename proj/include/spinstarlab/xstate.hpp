// xstate.hpp — two-qubit X states: concurrence, separability, covariances

#pragma once

#include <stdexcept>

#include "spinstarlab/linalg.hpp"

namespace spinstarlab {

// Density matrix of the form
//   [[a, 0,       0, 0],
//    [0, b,       c, 0],
//    [0, conj(c), d, 0],
//    [0, 0,       0, e]]
// in the standard pair basis. Populations sum to 1 and |c| <= sqrt(b d)
// (positivity), with equality allowed.
struct XState {
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
    double e = 0.0;
    Complex c{0.0, 0.0};
};

struct NotXFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument if populations are negative, do not sum to
// one, or |c| exceeds sqrt(b d), all beyond tol.
void validate_x_state(const XState& x, double tol = 1e-10);

// Hermitian, unit trace, positive semidefinite (all within tol).
void validate_two_qubit_density(const Eigen::Matrix4cd& rho, double tol = 1e-10);

Eigen::Matrix4cd x_state_to_matrix(const XState& x, double tol = 1e-10);

// Extracts (a, b, c, d, e); throws NotXFormError if any entry outside the
// X pattern has magnitude above off_x_tol.
XState matrix_to_x_state(const Eigen::Matrix4cd& rho, double off_x_tol = 1e-9);

// Transpose with respect to the second qubit:
// out[(i,j),(k,l)] = rho[(i,l),(k,j)]. Trace- and hermiticity-preserving
// involution; negative eigenvalues of the output witness entanglement.
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho);

// Positive-partial-transpose verdict, closed form: |c| <= sqrt(a e) (+1e-12).
bool is_separable(const XState& x);

// max{0, 2(|c| - sqrt(a e))}.
double concurrence_x(const XState& x);

// General two-qubit concurrence: descending square roots l1..l4 of the
// eigenvalues of rho (sy x sy) rho* (sy x sy), C = max{0, l1-l2-l3-l4}.
double concurrence_wootters(const Eigen::Matrix4cd& rho);

// <A x B> - <A><B> for Hermitian single-qubit observables; the imaginary
// residue must stay below 1e-10 and is discarded.
double covariance(const Eigen::Matrix4cd& rho, const Matrix& op_a, const Matrix& op_b);

// Single-qubit marginal; which = 0 for the first qubit, 1 for the second.
Eigen::Matrix2cd pair_marginal(const Eigen::Matrix4cd& rho, int which);

struct CovariancePair {
    double cov_xx = 0.0;
    double cov_yy = 0.0;
};

// Closed forms for an X state: cov_xx = 2 Re c (the sigma_x/sigma_x
// covariance, which also equals the sigma_y/sigma_y one) and
// cov_yy = 2 Im c (realized as the sigma_x/sigma_y cross covariance).
// Their quadrature sum is 2|c|.
CovariancePair covariance_pair_x(const XState& x);

// max{0, sqrt(cov_xx^2 + cov_yy^2) - 2 sqrt(a e)}; identical to
// concurrence_x since the quadrature sum equals 2|c|.
double concurrence_from_covariances(const XState& x);

double purity(const Eigen::Matrix4cd& rho);  // Re Tr rho^2

}  // namespace spinstarlab
