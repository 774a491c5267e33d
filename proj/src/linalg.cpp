#include "spinstarlab/linalg.hpp"

#include <stdexcept>
#include <string>

namespace spinstarlab {

namespace {

const Complex kI{0.0, 1.0};

void check_dense_cap(int num_spins) {
    if (num_spins < 1 || num_spins > kMaxDenseSpins) {
        throw std::invalid_argument("dense spin register limited to 1.." +
                                    std::to_string(kMaxDenseSpins) + " spins, got " +
                                    std::to_string(num_spins));
    }
}

}  // namespace

Matrix pauli(PauliAxis axis) {
    Matrix m = Matrix::Zero(2, 2);
    switch (axis) {
        case PauliAxis::x:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliAxis::y:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case PauliAxis::z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

Matrix embed_single_site(const Matrix& op2x2, int site, int num_spins) {
    if (op2x2.rows() != 2 || op2x2.cols() != 2) {
        throw std::invalid_argument("embed_single_site: operator must be 2x2");
    }
    check_dense_cap(num_spins);
    if (site < 0 || site >= num_spins) {
        throw std::invalid_argument("embed_single_site: site out of range");
    }
    const int dim = 1 << num_spins;
    const int mask = 1 << site;
    Matrix out = Matrix::Zero(dim, dim);
    for (int row = 0; row < dim; ++row) {
        const int rb = spin_bit(row, site);
        for (int cb = 0; cb < 2; ++cb) {
            const int col = (row & ~mask) | (cb << site);
            out(row, col) = op2x2(rb, cb);
        }
    }
    return out;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const Matrix& h, double herm_tol) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eigen: matrix must be square");
    }
    if (!is_hermitian(h, herm_tol)) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
    }
    return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

Vector evolve(const Matrix& h, const Vector& psi0, double t) {
    if (h.rows() != psi0.size()) {
        throw std::invalid_argument("evolve: dimension mismatch between H and psi0");
    }
    return evolve(hermitian_eigen(h), psi0, t);
}

Vector evolve(const HermitianEigen& eig, const Vector& psi0, double t) {
    if (eig.eigenvectors.rows() != psi0.size()) {
        throw std::invalid_argument("evolve: dimension mismatch between H and psi0");
    }
    Vector coeffs = eig.eigenvectors.adjoint() * psi0;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::exp(-kI * eig.eigenvalues(k) * t);
    }
    return eig.eigenvectors * coeffs;
}

Matrix density_from_ket(const Vector& psi, double norm_tol) {
    if (std::abs(psi.norm() - 1.0) > norm_tol) {
        throw std::invalid_argument("density_from_ket: ket is not normalized");
    }
    return psi * psi.adjoint();
}

Matrix partial_trace_to_pair(const Matrix& rho, int site_i, int site_j, int num_spins) {
    check_dense_cap(num_spins);
    if (num_spins < 2) {
        throw std::invalid_argument("partial_trace_to_pair: need at least two spins");
    }
    if (site_i == site_j) {
        throw std::invalid_argument("partial_trace_to_pair: sites must differ");
    }
    if (site_i < 0 || site_i >= num_spins || site_j < 0 || site_j >= num_spins) {
        throw std::invalid_argument("partial_trace_to_pair: site out of range");
    }
    const int dim = 1 << num_spins;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("partial_trace_to_pair: dimension mismatch");
    }

    // Positions of the traced-out spins, ascending, for bit re-insertion.
    int rest_sites[kMaxDenseSpins];
    int num_rest = 0;
    for (int s = 0; s < num_spins; ++s) {
        if (s != site_i && s != site_j) rest_sites[num_rest++] = s;
    }

    const auto compose = [&](int pair_bits_i, int pair_bits_j, int rest) {
        int n = (pair_bits_i << site_i) | (pair_bits_j << site_j);
        for (int k = 0; k < num_rest; ++k) {
            n |= ((rest >> k) & 1) << rest_sites[k];
        }
        return n;
    };

    Matrix out = Matrix::Zero(4, 4);
    const int rest_dim = 1 << num_rest;
    for (int p = 0; p < 4; ++p) {
        const int pi = (p >> 1) & 1, pj = p & 1;  // row order {++, +-, -+, --}
        for (int q = 0; q < 4; ++q) {
            const int qi = (q >> 1) & 1, qj = q & 1;
            Complex acc = 0.0;
            for (int rest = 0; rest < rest_dim; ++rest) {
                acc += rho(compose(pi, pj, rest), compose(qi, qj, rest));
            }
            out(p, q) = acc;
        }
    }
    return out;
}

}  // namespace spinstarlab
