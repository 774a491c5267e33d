#include "spinstarlab/xstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace spinstarlab {

namespace {

double sqrt_clamped(double v) { return std::sqrt(std::max(v, 0.0)); }

}  // namespace

void validate_x_state(const XState& x, double tol) {
    const std::array<double, 4> pops{x.a, x.b, x.d, x.e};
    for (double p : pops) {
        if (!(p >= -tol)) {
            throw std::invalid_argument("x state: negative population");
        }
    }
    const double sum = x.a + x.b + x.d + x.e;
    if (std::abs(sum - 1.0) > tol) {
        throw std::invalid_argument("x state: populations do not sum to 1");
    }
    if (std::abs(x.c) > sqrt_clamped(x.b * x.d) + tol) {
        throw std::invalid_argument("x state: coherence exceeds sqrt(b d)");
    }
}

void validate_two_qubit_density(const Eigen::Matrix4cd& rho, double tol) {
    if (max_abs(rho - rho.adjoint()) > tol) {
        throw std::invalid_argument("two-qubit density: not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol) {
        throw std::invalid_argument("two-qubit density: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("two-qubit density: negative eigenvalue");
    }
}

Eigen::Matrix4cd x_state_to_matrix(const XState& x, double tol) {
    validate_x_state(x, tol);
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = x.a;
    rho(1, 1) = x.b;
    rho(2, 2) = x.d;
    rho(3, 3) = x.e;
    rho(1, 2) = x.c;
    rho(2, 1) = std::conj(x.c);
    return rho;
}

XState matrix_to_x_state(const Eigen::Matrix4cd& rho, double off_x_tol) {
    validate_two_qubit_density(rho);
    double off_x = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            if ((i == 1 && j == 2) || (i == 2 && j == 1)) continue;
            off_x = std::max(off_x, std::abs(rho(i, j)));
        }
    }
    if (off_x > off_x_tol) {
        throw NotXFormError("matrix_to_x_state: coherence outside the X pattern");
    }
    XState x;
    x.a = rho(0, 0).real();
    x.b = rho(1, 1).real();
    x.d = rho(2, 2).real();
    x.e = rho(3, 3).real();
    x.c = rho(1, 2);
    validate_x_state(x);
    return x;
}

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
                }
            }
        }
    }
    return out;
}

bool is_separable(const XState& x) {
    return std::abs(x.c) <= sqrt_clamped(x.a * x.e) + 1e-12;
}

double concurrence_x(const XState& x) {
    return std::max(0.0, 2.0 * (std::abs(x.c) - sqrt_clamped(x.a * x.e)));
}

double concurrence_wootters(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd syy = Eigen::Matrix4cd::Zero();
    syy(0, 3) = -1.0;
    syy(1, 2) = 1.0;
    syy(2, 1) = 1.0;
    syy(3, 0) = -1.0;
    const Eigen::Matrix4cd r = rho * syy * rho.conjugate() * syy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
    std::array<double, 4> roots{};
    for (int k = 0; k < 4; ++k) {
        double v = es.eigenvalues()(k).real();
        if (v < 0.0 && v >= -1e-12) v = 0.0;  // rank-deficiency noise
        roots[k] = sqrt_clamped(v);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

Eigen::Matrix2cd pair_marginal(const Eigen::Matrix4cd& rho, int which) {
    if (which != 0 && which != 1) {
        throw std::invalid_argument("pair_marginal: which must be 0 or 1");
    }
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            for (int s = 0; s < 2; ++s) {
                // s runs over the traced qubit
                if (which == 0) {
                    out(u, v) += rho(2 * u + s, 2 * v + s);
                } else {
                    out(u, v) += rho(2 * s + u, 2 * s + v);
                }
            }
        }
    }
    return out;
}

double covariance(const Eigen::Matrix4cd& rho, const Matrix& op_a, const Matrix& op_b) {
    if (op_a.rows() != 2 || op_a.cols() != 2 || op_b.rows() != 2 || op_b.cols() != 2) {
        throw std::invalid_argument("covariance: observables must be 2x2");
    }
    if (!is_hermitian(op_a) || !is_hermitian(op_b)) {
        throw std::invalid_argument("covariance: observables must be Hermitian");
    }
    Eigen::Matrix4cd ab;
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            for (int s = 0; s < 2; ++s) {
                for (int w = 0; w < 2; ++w) {
                    ab(2 * u + v, 2 * s + w) = op_a(u, s) * op_b(v, w);
                }
            }
        }
    }
    const Complex joint = (rho * ab).trace();
    const Complex mean_a = (pair_marginal(rho, 0) * op_a).trace();
    const Complex mean_b = (pair_marginal(rho, 1) * op_b).trace();
    const Complex cov = joint - mean_a * mean_b;
    if (std::abs(cov.imag()) > 1e-10) {
        throw std::runtime_error("covariance: imaginary residue above tolerance");
    }
    return cov.real();
}

CovariancePair covariance_pair_x(const XState& x) {
    return CovariancePair{2.0 * x.c.real(), 2.0 * x.c.imag()};
}

double concurrence_from_covariances(const XState& x) {
    const CovariancePair cov = covariance_pair_x(x);
    const double quad = std::hypot(cov.cov_xx, cov.cov_yy);
    return std::max(0.0, quad - 2.0 * sqrt_clamped(x.a * x.e));
}

double purity(const Eigen::Matrix4cd& rho) { return (rho * rho).trace().real(); }

}  // namespace spinstarlab
