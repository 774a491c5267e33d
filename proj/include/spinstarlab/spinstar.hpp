// spinstar.hpp — generalized spin-star model: two central spins XY-coupled
// to a common bath. Hamiltonian builders, the invariant-subspace (sector)
// engine, closed-form solutions, and the brute-force full-space oracle.

#pragma once

#include <vector>

#include "spinstarlab/linalg.hpp"
#include "spinstarlab/xstate.hpp"

namespace spinstarlab {

struct SpinStarConfig {
    int bath_size = 1;     // N
    double alpha_a = 1.0;  // A/bath coupling (inverse time)
    double alpha_b = 1.0;  // B/bath coupling

    double ratio() const;  // r = alpha_b / alpha_a
};

// Throws std::invalid_argument unless N >= 1 and alpha_a != 0.
void validate_config(const SpinStarConfig& cfg);

// z-orientation of the two central spins at t = 0; the bath always starts
// in the all-down Dicke state |J = N/2, M = -N/2>.
struct CentralPair {
    int sigma_a = +1;
    int sigma_b = -1;

    bool operator==(const CentralPair&) const = default;
};

inline constexpr CentralPair kPairUpDown{+1, -1};  // |1_A, -1_B>
inline constexpr CentralPair kPairUpUp{+1, +1};    // |1_A, 1_B>

// ---------------------------------------------------------------------------
// Full-space operators (sites ordered A = 0, B = 1, bath 2..N+1)
// ---------------------------------------------------------------------------

// H = alpha_A (sx_A Sum_i sx_i + sy_A Sum_i sy_i)
//   + alpha_B (sx_B Sum_i sx_i + sy_B Sum_i sy_i), dimension 2^(N+2), N <= 10.
Matrix build_spin_star_hamiltonian(const SpinStarConfig& cfg);

// Sum_{j>i} couplings(i,j) (sx_i sx_j + sy_i sy_j + sz_i sz_j) on M spins,
// M = couplings.rows() <= 10; the diagonal and lower triangle are ignored.
Matrix build_general_heisenberg(const Eigen::MatrixXd& couplings);

// Sum_k sigma_z^(k) over all spins (diagonal).
Matrix total_sz_matrix(int num_spins);

// J^2 with J = Sum_{k in sites} sigma^(k)/2, embedded on num_spins sites.
Matrix collective_spin_squared(int num_spins, const std::vector<int>& sites);

// ---------------------------------------------------------------------------
// Sector engine: dynamics restricted to the <= 4 states reachable from a
// coupled-basis state under the conservation of total S_z and bath J^2.
// ---------------------------------------------------------------------------

struct CoupledBasisLabel {
    double j = 0.5;    // bath collective spin (N/2 in the symmetric tower)
    double m = -0.5;   // bath projection
    int nu = 1;        // degeneracy index; only the non-degenerate tower here
    int sigma_a = +1;
    int sigma_b = -1;

    bool operator==(const CoupledBasisLabel&) const = default;
};

struct SectorSystem {
    std::vector<CoupledBasisLabel> labels;  // start first, <= 4 entries
    Eigen::MatrixXd hamiltonian;            // real symmetric
};

// Matrix elements 2 alpha sqrt(J(J+1) - M(M+-1)) between states that differ
// by one central flip compensated in the bath. Requires j = N/2, nu = 1.
SectorSystem sector_hamiltonian(const SpinStarConfig& cfg, const CoupledBasisLabel& start);

struct SectorState {
    std::vector<CoupledBasisLabel> labels;
    Vector amplitudes;  // unit norm
};

// Amplitude 1 on `start` at t = 0, then exact exponentiation of the sector
// Hamiltonian.
SectorState sector_evolve(const SpinStarConfig& cfg, const CoupledBasisLabel& start, double t);

// Populations grouped by the central configuration; the |1,-1>/<-1,1|
// coherence collects products of amplitudes that share the same bath label.
XState reduce_sector_to_pair(const SectorState& state);

CoupledBasisLabel ground_start_label(const SpinStarConfig& cfg, CentralPair initial);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

// lambda = 2 sqrt(N (1 + r^2)) alpha_A, the oscillation frequency of the
// up/down initial condition.
double case1_frequency(const SpinStarConfig& cfg);

// omega = 2 sqrt(6N - 4) alpha, the oscillation frequency of the up/up
// initial condition at equal couplings.
double case2_frequency(int bath_size, double alpha);

struct ClosedFormPoint {
    double tau_a = 0.0;  // alpha_A * t
    double b = 0.0;
    double d = 0.0;
    double e = 0.0;
    double c = 0.0;  // coherence, real in this scenario (a = 0 throughout)
};

// Exact solution from |1_A, -1_B> with the bath all down; with
// x = cos(lambda t):
//   b = (x + r^2)^2 / (1 + r^2)^2
//   c = -r (x + r^2)(1 - x) / (1 + r^2)^2
//   d = r^2 (1 - x)^2 / (1 + r^2)^2
//   e = sin^2(lambda t) / (1 + r^2)
ClosedFormPoint closed_form_case1(const SpinStarConfig& cfg, double t);

// sigma_x/sigma_x covariance from |1_A, 1_B> at equal couplings:
// N/(3N - 2) sin^2(omega t). Valid for N >= 1.
double closed_form_case2_cov_xx(int bath_size, double alpha, double t);

// Concurrence branch for the up/up initial condition at equal couplings,
// as a polynomial in x = cos(omega t):
//   f_N(x) = [ (2N K - N(3N-2)) x^2 + 2(N-2) K x + (N(3N-2) - 4(N-1) K) ]
//            / (3N-2)^2,  K = sqrt(2N(N-1)).
// f_N(1) = 0 (the t = 0 product state) and f_N <= 0 on [-1, 1]. N >= 2.
double f_n(int bath_size, double x);

// max{0, f_N(cos omega t)} = 0 at all times: the up/up initial condition
// at equal couplings never entangles the central pair (N >= 2).
double concurrence_case2(int bath_size, double alpha, double t);

// ---------------------------------------------------------------------------
// Full-space oracle (independent ground truth, N <= 8)
// ---------------------------------------------------------------------------

class FullSpaceOracle {
  public:
    explicit FullSpaceOracle(const SpinStarConfig& cfg);

    const SpinStarConfig& config() const { return cfg_; }
    const Matrix& hamiltonian() const { return h_; }
    const HermitianEigen& eigensystem() const { return eig_; }

    Vector initial_ket(CentralPair initial) const;
    Vector state_at(CentralPair initial, double t) const;
    XState x_state_at(CentralPair initial, double t) const;
    double expectation(const Matrix& op, CentralPair initial, double t) const;

    Matrix total_sz() const;
    Matrix bath_j_squared() const;

  private:
    SpinStarConfig cfg_;
    Matrix h_;
    HermitianEigen eig_;
};

// build_spin_star_hamiltonian + evolve + partial_trace_to_pair +
// matrix_to_x_state in one call; prefer FullSpaceOracle when sampling many
// times from the same configuration.
XState oracle_evolve(const SpinStarConfig& cfg, CentralPair initial, double t);

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

enum class Engine { closed_form, sector, oracle };

struct TimeSeriesPoint {
    double b = 0.0;
    double d = 0.0;
    double e = 0.0;
    double re_c = 0.0;
    double im_c = 0.0;
    double cov_xx = 0.0;
    double cov_yy = 0.0;
    double concurrence = 0.0;
};

struct TimeSeries {
    std::vector<double> grid;  // tau = alpha_A t, strictly increasing
    std::vector<TimeSeriesPoint> points;
};

// Uniform grid of `steps` points on [0, t_max_tau] in tau = alpha_A t.
// The closed-form engine requires the up/down initial pair; the oracle
// engine requires N <= 8.
TimeSeries trajectory(const SpinStarConfig& cfg, CentralPair initial, double t_max_tau,
                      int steps, Engine engine);

}  // namespace spinstarlab
