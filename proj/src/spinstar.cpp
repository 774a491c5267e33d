#include "spinstarlab/spinstar.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace spinstarlab {

namespace {

const Complex kI{0.0, 1.0};

// sigma_x sigma_x + sigma_y sigma_y between sites p and q: element 2 between
// basis states with opposite (p, q) bits related by the double flip.
void add_xy_exchange(Matrix& h, int p, int q, double coeff) {
    const int dim = static_cast<int>(h.rows());
    const int mask = (1 << p) | (1 << q);
    for (int n = 0; n < dim; ++n) {
        if (spin_bit(n, p) != spin_bit(n, q)) {
            h(n, n ^ mask) += 2.0 * coeff;
        }
    }
}

void add_zz(Matrix& h, int p, int q, double coeff) {
    const int dim = static_cast<int>(h.rows());
    for (int n = 0; n < dim; ++n) {
        h(n, n) += coeff * spin_sigma_z(n, p) * spin_sigma_z(n, q);
    }
}

void check_sigma(int sigma, const char* what) {
    if (sigma != 1 && sigma != -1) {
        throw std::invalid_argument(std::string(what) + " must be +1 or -1");
    }
}

double l_plus(double j, double m) { return std::sqrt(j * (j + 1.0) - m * (m + 1.0)); }

// 2 alpha L(J, M -> M') between labels differing by exactly one central
// flip with the matching bath compensation; 0 otherwise.
double sector_coupling(const SpinStarConfig& cfg, const CoupledBasisLabel& u,
                       const CoupledBasisLabel& v) {
    const bool flip_a = u.sigma_a != v.sigma_a;
    const bool flip_b = u.sigma_b != v.sigma_b;
    if (flip_a == flip_b) return 0.0;
    const int source_sigma = flip_a ? u.sigma_a : u.sigma_b;
    if (std::abs((v.m - u.m) - source_sigma) > 1e-9) return 0.0;
    const double alpha = flip_a ? cfg.alpha_a : cfg.alpha_b;
    return 2.0 * alpha * l_plus(u.j, std::min(u.m, v.m));
}

class SectorPropagator {
  public:
    SectorPropagator(const SpinStarConfig& cfg, const CoupledBasisLabel& start)
        : system_(sector_hamiltonian(cfg, start)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(system_.hamiltonian);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("sector propagator: eigensolver failed");
        }
        basis_ = solver.eigenvectors();
        frequencies_ = solver.eigenvalues();
        start_coeffs_ = basis_.row(0).transpose();  // V^T e_start, start is label 0
    }

    SectorState state_at(double t) const {
        const Eigen::Index n = frequencies_.size();
        Vector amps = Vector::Zero(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            amps += std::exp(-kI * frequencies_(k) * t) * start_coeffs_(k) * basis_.col(k);
        }
        return SectorState{system_.labels, amps};
    }

  private:
    SectorSystem system_;
    Eigen::MatrixXd basis_;
    Eigen::VectorXd frequencies_;
    Eigen::VectorXd start_coeffs_;
};

}  // namespace

double SpinStarConfig::ratio() const {
    if (alpha_a == 0.0) {
        throw std::invalid_argument("spin-star config: alpha_a must be nonzero");
    }
    return alpha_b / alpha_a;
}

void validate_config(const SpinStarConfig& cfg) {
    if (cfg.bath_size < 1) {
        throw std::invalid_argument("spin-star config: bath size must be >= 1");
    }
    if (cfg.alpha_a == 0.0) {
        throw std::invalid_argument("spin-star config: alpha_a must be nonzero");
    }
}

Matrix build_spin_star_hamiltonian(const SpinStarConfig& cfg) {
    validate_config(cfg);
    if (cfg.bath_size > kMaxDenseSpins - 2) {
        throw std::invalid_argument("spin-star Hamiltonian: dense cap is N <= 10");
    }
    const int num_spins = cfg.bath_size + 2;
    const int dim = 1 << num_spins;
    Matrix h = Matrix::Zero(dim, dim);
    for (int i = 0; i < cfg.bath_size; ++i) {
        add_xy_exchange(h, 0, 2 + i, cfg.alpha_a);
        add_xy_exchange(h, 1, 2 + i, cfg.alpha_b);
    }
    return h;
}

Matrix build_general_heisenberg(const Eigen::MatrixXd& couplings) {
    if (couplings.rows() != couplings.cols()) {
        throw std::invalid_argument("heisenberg: coupling matrix must be square");
    }
    const int num_spins = static_cast<int>(couplings.rows());
    if (num_spins < 2 || num_spins > 10) {
        throw std::invalid_argument("heisenberg: dense cap is 2 <= M <= 10 spins");
    }
    const int dim = 1 << num_spins;
    Matrix h = Matrix::Zero(dim, dim);
    for (int i = 0; i < num_spins; ++i) {
        for (int j = i + 1; j < num_spins; ++j) {
            add_xy_exchange(h, i, j, couplings(i, j));
            add_zz(h, i, j, couplings(i, j));
        }
    }
    return h;
}

Matrix total_sz_matrix(int num_spins) {
    if (num_spins < 1 || num_spins > kMaxDenseSpins) {
        throw std::invalid_argument("total_sz_matrix: spin count out of range");
    }
    const int dim = 1 << num_spins;
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        double sz = 0.0;
        for (int k = 0; k < num_spins; ++k) sz += spin_sigma_z(n, k);
        m(n, n) = sz;
    }
    return m;
}

Matrix collective_spin_squared(int num_spins, const std::vector<int>& sites) {
    if (num_spins < 1 || num_spins > kMaxDenseSpins) {
        throw std::invalid_argument("collective_spin_squared: spin count out of range");
    }
    for (int s : sites) {
        if (s < 0 || s >= num_spins) {
            throw std::invalid_argument("collective_spin_squared: site out of range");
        }
    }
    const int dim = 1 << num_spins;
    // J^2 = 3 n/4 + (1/2) Sum_{p<q} sigma_p . sigma_q
    Matrix m = 0.75 * static_cast<double>(sites.size()) * Matrix::Identity(dim, dim);
    for (std::size_t a = 0; a < sites.size(); ++a) {
        for (std::size_t b = a + 1; b < sites.size(); ++b) {
            add_xy_exchange(m, sites[a], sites[b], 0.5);
            add_zz(m, sites[a], sites[b], 0.5);
        }
    }
    return m;
}

SectorSystem sector_hamiltonian(const SpinStarConfig& cfg, const CoupledBasisLabel& start) {
    validate_config(cfg);
    check_sigma(start.sigma_a, "sector label: sigma_a");
    check_sigma(start.sigma_b, "sector label: sigma_b");
    if (start.nu != 1) {
        throw std::invalid_argument("sector label: only the non-degenerate nu = 1 tower");
    }
    const double j = 0.5 * cfg.bath_size;
    if (std::abs(start.j - j) > 1e-9) {
        throw std::invalid_argument("sector label: j must equal N/2");
    }
    if (std::abs(start.m) > j + 1e-9) {
        throw std::invalid_argument("sector label: |m| exceeds j");
    }
    const double steps_from_top = j - start.m;
    if (std::abs(steps_from_top - std::round(steps_from_top)) > 1e-9) {
        throw std::invalid_argument("sector label: j - m must be an integer");
    }

    SectorSystem sys;
    sys.labels.push_back(start);
    const CoupledBasisLabel candidates[] = {
        {j, start.m + start.sigma_a + start.sigma_b, 1, -start.sigma_a, -start.sigma_b},
        {j, start.m + start.sigma_b, 1, start.sigma_a, -start.sigma_b},
        {j, start.m + start.sigma_a, 1, -start.sigma_a, start.sigma_b},
    };
    for (const auto& cand : candidates) {
        if (std::abs(cand.m) <= j + 1e-9) sys.labels.push_back(cand);
    }

    const int n = static_cast<int>(sys.labels.size());
    sys.hamiltonian = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double g = sector_coupling(cfg, sys.labels[u], sys.labels[v]);
            sys.hamiltonian(u, v) = g;
            sys.hamiltonian(v, u) = g;
        }
    }
    return sys;
}

SectorState sector_evolve(const SpinStarConfig& cfg, const CoupledBasisLabel& start, double t) {
    return SectorPropagator(cfg, start).state_at(t);
}

XState reduce_sector_to_pair(const SectorState& state) {
    XState x;
    const auto n = state.labels.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& label = state.labels[k];
        const double p = std::norm(state.amplitudes(static_cast<Eigen::Index>(k)));
        if (label.sigma_a > 0 && label.sigma_b > 0) {
            x.a += p;
        } else if (label.sigma_a > 0) {
            x.b += p;
        } else if (label.sigma_b > 0) {
            x.d += p;
        } else {
            x.e += p;
        }
    }
    // Coherence survives the bath trace only between states with identical
    // bath labels.
    for (std::size_t u = 0; u < n; ++u) {
        const auto& lu = state.labels[u];
        if (!(lu.sigma_a > 0 && lu.sigma_b < 0)) continue;
        for (std::size_t v = 0; v < n; ++v) {
            const auto& lv = state.labels[v];
            if (!(lv.sigma_a < 0 && lv.sigma_b > 0)) continue;
            if (lu.nu != lv.nu || std::abs(lu.j - lv.j) > 1e-9 || std::abs(lu.m - lv.m) > 1e-9)
                continue;
            x.c += state.amplitudes(static_cast<Eigen::Index>(u)) *
                   std::conj(state.amplitudes(static_cast<Eigen::Index>(v)));
        }
    }
    return x;
}

CoupledBasisLabel ground_start_label(const SpinStarConfig& cfg, CentralPair initial) {
    validate_config(cfg);
    check_sigma(initial.sigma_a, "initial pair: sigma_a");
    check_sigma(initial.sigma_b, "initial pair: sigma_b");
    const double j = 0.5 * cfg.bath_size;
    return CoupledBasisLabel{j, -j, 1, initial.sigma_a, initial.sigma_b};
}

double case1_frequency(const SpinStarConfig& cfg) {
    const double r = cfg.ratio();
    return 2.0 * std::sqrt(cfg.bath_size * (1.0 + r * r)) * cfg.alpha_a;
}

double case2_frequency(int bath_size, double alpha) {
    if (bath_size < 1) {
        throw std::invalid_argument("case2_frequency: bath size must be >= 1");
    }
    return 2.0 * std::sqrt(6.0 * bath_size - 4.0) * alpha;
}

ClosedFormPoint closed_form_case1(const SpinStarConfig& cfg, double t) {
    validate_config(cfg);
    const double r = cfg.ratio();
    const double lambda = case1_frequency(cfg);
    const double x = std::cos(lambda * t);
    const double s = std::sin(lambda * t);
    const double denom = 1.0 + r * r;

    ClosedFormPoint p;
    p.tau_a = cfg.alpha_a * t;
    p.b = (x + r * r) * (x + r * r) / (denom * denom);
    p.c = -r * (x + r * r) * (1.0 - x) / (denom * denom);
    p.d = r * r * (1.0 - x) * (1.0 - x) / (denom * denom);
    p.e = s * s / denom;
    return p;
}

double closed_form_case2_cov_xx(int bath_size, double alpha, double t) {
    const double s = std::sin(case2_frequency(bath_size, alpha) * t);
    return bath_size / (3.0 * bath_size - 2.0) * s * s;
}

double f_n(int bath_size, double x) {
    if (bath_size < 2) {
        throw std::invalid_argument("f_n: bath size must be >= 2");
    }
    if (std::abs(x) > 1.0 + 1e-12) {
        throw std::invalid_argument("f_n: x must lie in [-1, 1]");
    }
    const double n = bath_size;
    const double k = std::sqrt(2.0 * n * (n - 1.0));
    const double denom = (3.0 * n - 2.0) * (3.0 * n - 2.0);
    const double c2 = 2.0 * n * k - n * (3.0 * n - 2.0);
    const double c1 = 2.0 * (n - 2.0) * k;
    const double c0 = n * (3.0 * n - 2.0) - 4.0 * (n - 1.0) * k;
    return (c2 * x * x + c1 * x + c0) / denom;
}

double concurrence_case2(int bath_size, double alpha, double t) {
    const double x = std::cos(case2_frequency(bath_size, alpha) * t);
    return std::max(0.0, f_n(bath_size, x));
}

FullSpaceOracle::FullSpaceOracle(const SpinStarConfig& cfg) : cfg_(cfg) {
    validate_config(cfg);
    if (cfg.bath_size > 8) {
        throw std::invalid_argument("full-space oracle: dense cap is N <= 8");
    }
    h_ = build_spin_star_hamiltonian(cfg);
    eig_ = hermitian_eigen(h_);
}

Vector FullSpaceOracle::initial_ket(CentralPair initial) const {
    check_sigma(initial.sigma_a, "initial pair: sigma_a");
    check_sigma(initial.sigma_b, "initial pair: sigma_b");
    const int num_spins = cfg_.bath_size + 2;
    const int dim = 1 << num_spins;
    int index = 0;
    if (initial.sigma_a < 0) index |= 1;
    if (initial.sigma_b < 0) index |= 2;
    for (int i = 0; i < cfg_.bath_size; ++i) index |= 1 << (2 + i);  // bath all down
    Vector psi = Vector::Zero(dim);
    psi(index) = 1.0;
    return psi;
}

Vector FullSpaceOracle::state_at(CentralPair initial, double t) const {
    return evolve(eig_, initial_ket(initial), t);
}

XState FullSpaceOracle::x_state_at(CentralPair initial, double t) const {
    const Matrix rho = density_from_ket(state_at(initial, t));
    return matrix_to_x_state(partial_trace_to_pair(rho, 0, 1, cfg_.bath_size + 2));
}

double FullSpaceOracle::expectation(const Matrix& op, CentralPair initial, double t) const {
    const Vector psi = state_at(initial, t);
    const Complex value = psi.dot(op * psi);
    return value.real();
}

Matrix FullSpaceOracle::total_sz() const { return total_sz_matrix(cfg_.bath_size + 2); }

Matrix FullSpaceOracle::bath_j_squared() const {
    std::vector<int> bath_sites;
    for (int i = 0; i < cfg_.bath_size; ++i) bath_sites.push_back(2 + i);
    return collective_spin_squared(cfg_.bath_size + 2, bath_sites);
}

XState oracle_evolve(const SpinStarConfig& cfg, CentralPair initial, double t) {
    return FullSpaceOracle(cfg).x_state_at(initial, t);
}

TimeSeries trajectory(const SpinStarConfig& cfg, CentralPair initial, double t_max_tau,
                      int steps, Engine engine) {
    validate_config(cfg);
    if (steps < 2) {
        throw std::invalid_argument("trajectory: need at least 2 grid points");
    }
    if (!(t_max_tau > 0.0)) {
        throw std::invalid_argument("trajectory: t_max_tau must be positive");
    }
    if (engine == Engine::closed_form && !(initial == kPairUpDown)) {
        throw std::invalid_argument(
            "trajectory: the closed-form engine supports the up/down initial pair only");
    }

    TimeSeries ts;
    ts.grid.reserve(steps);
    ts.points.reserve(steps);

    std::unique_ptr<SectorPropagator> sector;
    std::unique_ptr<FullSpaceOracle> oracle;
    if (engine == Engine::sector) {
        sector = std::make_unique<SectorPropagator>(cfg, ground_start_label(cfg, initial));
    } else if (engine == Engine::oracle) {
        oracle = std::make_unique<FullSpaceOracle>(cfg);
    }

    for (int k = 0; k < steps; ++k) {
        const double tau = t_max_tau * k / (steps - 1);
        const double t = tau / cfg.alpha_a;

        XState x;
        switch (engine) {
            case Engine::closed_form: {
                const ClosedFormPoint p = closed_form_case1(cfg, t);
                x = XState{0.0, p.b, p.d, p.e, Complex{p.c, 0.0}};
                break;
            }
            case Engine::sector:
                x = reduce_sector_to_pair(sector->state_at(t));
                break;
            case Engine::oracle:
                x = oracle->x_state_at(initial, t);
                break;
        }

        const CovariancePair cov = covariance_pair_x(x);
        ts.grid.push_back(tau);
        ts.points.push_back(TimeSeriesPoint{x.b, x.d, x.e, x.c.real(), x.c.imag(), cov.cov_xx,
                                            cov.cov_yy, concurrence_x(x)});
    }
    return ts;
}

}  // namespace spinstarlab
