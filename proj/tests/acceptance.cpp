// acceptance.cpp — end-to-end acceptance suite. Every criterion is checked
// at a pinned tolerance against the brute-force full-space oracle and prints
// one PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <spinstarlab/sampling.hpp>
#include <spinstarlab/spinstar.hpp>
#include <spinstarlab/xstate.hpp>

using namespace spinstarlab;

namespace {

constexpr int kBathSizes[] = {2, 4, 6, 8};
constexpr double kRatios[] = {0.1, 1.0, 10.0};

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

class OracleCache {
  public:
    FullSpaceOracle& get(int bath_size, double ratio) {
        const auto key = std::make_pair(bath_size, ratio);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_
                     .emplace(key, std::make_unique<FullSpaceOracle>(
                                       SpinStarConfig{bath_size, 1.0, ratio}))
                     .first;
        }
        return *it->second;
    }

  private:
    std::map<std::pair<int, double>, std::unique_ptr<FullSpaceOracle>> cache_;
};

double x_distance(const XState& u, const XState& v) {
    return std::max({std::abs(u.b - v.b), std::abs(u.d - v.d), std::abs(u.e - v.e),
                     std::abs(u.c - v.c)});
}

double signed_branch(const XState& x) {
    return 2.0 * (std::abs(x.c) - std::sqrt(std::max(x.a * x.e, 0.0)));
}

// The branch polynomial with the linear coefficient negated (the misprinted
// variant being arbitrated against the oracle).
double f_n_misprinted(int bath_size, double x) {
    const double n = bath_size;
    const double k = std::sqrt(2.0 * n * (n - 1.0));
    const double denom = (3.0 * n - 2.0) * (3.0 * n - 2.0);
    return ((2.0 * n * k - n * (3.0 * n - 2.0)) * x * x - 2.0 * (n - 2.0) * k * x +
            (n * (3.0 * n - 2.0) - 4.0 * (n - 1.0) * k)) /
           denom;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

Criterion criterion_1(OracleCache& oracles) {
    const double t0 = now_seconds();
    double dev = 0.0;
    for (int n : kBathSizes) {
        for (double r : kRatios) {
            FullSpaceOracle& oracle = oracles.get(n, r);
            for (int k = 0; k < 50; ++k) {
                const double tau = 2.0 * k / 49.0;
                const ClosedFormPoint p = closed_form_case1(oracle.config(), tau);
                const XState cf{0.0, p.b, p.d, p.e, Complex{p.c, 0.0}};
                dev = std::max(dev, x_distance(cf, oracle.x_state_at(kPairUpDown, tau)));
            }
        }
    }
    const double elapsed = now_seconds() - t0;
    Criterion c;
    c.id = 1;
    c.name = "closed form vs oracle, up/down start (N=2..8, r=0.1..10)";
    c.pass = dev <= 1e-9 && elapsed <= 60.0;
    c.detail = fmt("max dev %.2e (tol 1e-9), %.1f s (limit 60 s)", dev, elapsed);
    return c;
}

Criterion criterion_2(OracleCache& oracles) {
    double dev_cov = 0.0;
    double conc_max = 0.0;
    for (int n : kBathSizes) {
        FullSpaceOracle& oracle = oracles.get(n, 1.0);
        for (int k = 0; k < 50; ++k) {
            const double tau = 2.0 * k / 49.0;
            const XState x = oracle.x_state_at(kPairUpUp, tau);
            dev_cov = std::max(dev_cov, std::abs(covariance_pair_x(x).cov_xx -
                                                 closed_form_case2_cov_xx(n, 1.0, tau)));
            conc_max = std::max(conc_max, concurrence_x(x));
        }
    }
    Criterion c;
    c.id = 2;
    c.name = "cov_xx closed form vs oracle, up/up start at r=1; concurrence zero";
    c.pass = dev_cov <= 1e-9 && conc_max <= 1e-9;
    c.detail = fmt("cov dev %.2e, concurrence max %.2e (tol 1e-9)", dev_cov, conc_max);
    return c;
}

Criterion criterion_3(OracleCache& oracles) {
    double dev = 0.0;
    for (int n : kBathSizes) {
        for (double r : kRatios) {
            FullSpaceOracle& oracle = oracles.get(n, r);
            const SpinStarConfig& cfg = oracle.config();
            for (CentralPair pair : {kPairUpDown, kPairUpUp}) {
                const CoupledBasisLabel start = ground_start_label(cfg, pair);
                for (int k = 0; k < 25; ++k) {
                    const double tau = 2.0 * k / 24.0;
                    const XState sec = reduce_sector_to_pair(sector_evolve(cfg, start, tau));
                    const XState ref = oracle.x_state_at(pair, tau);
                    dev = std::max(dev, std::max(x_distance(sec, ref), std::abs(sec.a - ref.a)));
                }
            }
        }
    }

    const double t0 = now_seconds();
    const TimeSeries ts =
        trajectory(SpinStarConfig{100, 1.0, 10.0}, kPairUpUp, 1.0, 2000, Engine::sector);
    const double elapsed = now_seconds() - t0;

    Criterion c;
    c.id = 3;
    c.name = "sector engine vs oracle (both starts); N=100 trajectory under 1 s";
    c.pass = dev <= 1e-9 && elapsed <= 1.0 && ts.points.size() == 2000;
    c.detail = fmt("max dev %.2e (tol 1e-9), 2000-point N=100 run %.1f ms (limit 1 s)", dev,
                   elapsed * 1e3);
    return c;
}

Criterion criterion_4(OracleCache& oracles) {
    double dev_conc = 0.0;
    double dev_branch = 0.0;
    double misprint_margin = 0.0;
    for (int n : {4, 6, 8}) {
        FullSpaceOracle& oracle = oracles.get(n, 1.0);
        const double omega = case2_frequency(n, 1.0);
        for (int k = 0; k < 50; ++k) {
            const double t = 2.0 * std::numbers::pi * k / (49.0 * omega);
            const double arg = std::cos(omega * t);
            const XState x = oracle.x_state_at(kPairUpUp, t);
            dev_conc = std::max(dev_conc,
                                std::abs(concurrence_x(x) - std::max(0.0, f_n(n, arg))));
            dev_branch = std::max(dev_branch, std::abs(f_n(n, arg) - signed_branch(x)));
            if (n >= 6) {
                misprint_margin = std::max(
                    misprint_margin, std::abs(f_n_misprinted(n, arg) - signed_branch(x)));
            }
        }
    }
    Criterion c;
    c.id = 4;
    c.name = "branch polynomial sign arbitration against the oracle (N=4,6,8)";
    c.pass = dev_conc <= 1e-9 && dev_branch <= 1e-9 && misprint_margin > 1e-3;
    c.detail = fmt("concurrence dev %.2e, branch dev %.2e, misprinted-sign margin %.2f",
                   dev_conc, dev_branch, misprint_margin);
    return c;
}

Criterion criterion_5() {
    Criterion c;
    c.id = 5;
    c.name = "figure data: peaks, purity at nodes, classical/quantum intervals";

    // figure 1: concurrence peaks on period-aligned grids
    double peak_r1 = 0.0, peak_r10 = 0.0;
    for (double r : {1.0, 10.0}) {
        const SpinStarConfig cfg{100, 1.0, r};
        const double period = 2.0 * std::numbers::pi / case1_frequency(cfg);
        const TimeSeries ts = trajectory(cfg, kPairUpDown, period, 401, Engine::closed_form);
        double peak = 0.0;
        for (const auto& p : ts.points) peak = std::max(peak, p.concurrence);
        (r == 1.0 ? peak_r1 : peak_r10) = peak;
    }
    const double expected_r10 = 3960.0 / 10201.0;
    const bool fig1_ok =
        std::abs(peak_r1 - 0.5) <= 1e-9 && std::abs(peak_r10 - expected_r10) <= 1e-9;

    // figure 2: zero concurrence implies a vanished |-1,-1> population and a
    // pure pair state at r = 1
    const SpinStarConfig cfg2{100, 1.0, 1.0};
    const double period2 = 2.0 * std::numbers::pi / case1_frequency(cfg2);
    int nodes = 0;
    bool fig2_ok = true;
    for (int k = 0; k < 401; ++k) {
        const double tau = period2 * k / 400.0;
        const ClosedFormPoint p = closed_form_case1(cfg2, tau);
        const XState x{0.0, p.b, p.d, p.e, Complex{p.c, 0.0}};
        if (concurrence_x(x) <= 1e-12) {
            ++nodes;
            if (x.e > 1e-12 || purity(x_state_to_matrix(x)) < 1.0 - 1e-9) fig2_ok = false;
        }
    }
    fig2_ok = fig2_ok && nodes >= 3;

    // figure 3: intervals with classical-only correlations and intervals with
    // entanglement, up/up start at r = 10
    const TimeSeries fig3 =
        trajectory(SpinStarConfig{100, 1.0, 10.0}, kPairUpUp, 1.0, 2000, Engine::sector);
    int classical_rows = 0, entangled_rows = 0;
    for (const auto& p : fig3.points) {
        if (p.cov_xx > 0.05 && p.concurrence <= 1e-12) ++classical_rows;
        if (p.concurrence > 0.05) ++entangled_rows;
    }
    const bool fig3_ok = classical_rows > 0 && entangled_rows > 0;

    c.pass = fig1_ok && fig2_ok && fig3_ok;
    c.detail = fmt("peaks %.9f / %.9f", peak_r1, peak_r10) +
               fmt(", nodes %.0f, classical rows %.0f, entangled rows %.0f",
                   static_cast<double>(nodes), static_cast<double>(classical_rows),
                   static_cast<double>(entangled_rows));
    return c;
}

Criterion criterion_6() {
    std::mt19937 rng(987654321);
    double dev_wootters = 0.0;
    double dev_conc_cov = 0.0;
    int verdict_mismatches = 0;
    for (int k = 0; k < 10000; ++k) {
        const XState x = random_x_state(rng);
        const double conc = concurrence_x(x);
        dev_wootters = std::max(
            dev_wootters, std::abs(concurrence_wootters(x_state_to_matrix(x)) - conc));
        dev_conc_cov = std::max(dev_conc_cov, std::abs(concurrence_from_covariances(x) - conc));
        if (is_separable(x) != (conc == 0.0)) ++verdict_mismatches;
    }
    Criterion c;
    c.id = 6;
    c.name = "measure consistency on 10^4 random X states";
    c.pass = dev_wootters <= 1e-9 && dev_conc_cov <= 1e-12 && verdict_mismatches == 0;
    c.detail = fmt("Wootters dev %.2e, covariance-identity dev %.2e, verdict mismatches %.0f",
                   dev_wootters, dev_conc_cov, static_cast<double>(verdict_mismatches));
    return c;
}

Criterion criterion_7() {
    std::mt19937 rng(24681357);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst_residue = 0.0;
    bool all_extracted = true;
    for (int rep = 0; rep < 20; ++rep) {
        Eigen::MatrixXd couplings = Eigen::MatrixXd::Zero(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) couplings(i, j) = unit(rng);
        const HermitianEigen eig = hermitian_eigen(build_general_heisenberg(couplings));
        Vector psi0 = Vector::Zero(16);
        psi0(0b1010) = 1.0;  // |1,-1,1,-1>
        for (int step = 0; step < 20; ++step) {
            const double t = 2.0 * (step + 1) / 20.0;
            const Matrix rho = density_from_ket(evolve(eig, psi0, t));
            for (int i = 0; i < 4; ++i) {
                for (int j = i + 1; j < 4; ++j) {
                    const Matrix pair = partial_trace_to_pair(rho, i, j, 4);
                    double residue = 0.0;
                    for (int row = 0; row < 4; ++row) {
                        for (int col = 0; col < 4; ++col) {
                            if (row == col) continue;
                            if ((row == 1 && col == 2) || (row == 2 && col == 1)) continue;
                            residue = std::max(residue, std::abs(pair(row, col)));
                        }
                    }
                    worst_residue = std::max(worst_residue, residue);
                    try {
                        matrix_to_x_state(pair, 1e-10);
                    } catch (const std::exception&) {
                        all_extracted = false;
                    }
                }
            }
        }
    }
    Criterion c;
    c.id = 7;
    c.name = "X form preserved under random pairwise exchange (M=4, 20 systems)";
    c.pass = all_extracted && worst_residue <= 1e-10;
    c.detail = fmt("worst off-X residue %.2e (tol 1e-10)", worst_residue);
    return c;
}

Criterion criterion_8(OracleCache& oracles) {
    double drift = 0.0;
    for (int n : kBathSizes) {
        for (double r : kRatios) {
            FullSpaceOracle& oracle = oracles.get(n, r);
            const Matrix sz = oracle.total_sz();
            const Matrix j2 = oracle.bath_j_squared();
            const Matrix& h = oracle.hamiltonian();
            for (CentralPair pair : {kPairUpDown, kPairUpUp}) {
                double sz0 = 0.0, j20 = 0.0, h0 = 0.0;
                for (int k = 0; k < 50; ++k) {
                    const double tau = 2.0 * k / 49.0;
                    const double vs = oracle.expectation(sz, pair, tau);
                    const double vj = oracle.expectation(j2, pair, tau);
                    const double vh = oracle.expectation(h, pair, tau);
                    if (k == 0) {
                        sz0 = vs;
                        j20 = vj;
                        h0 = vh;
                    } else {
                        drift = std::max(
                            {drift, std::abs(vs - sz0), std::abs(vj - j20), std::abs(vh - h0)});
                    }
                }
            }
        }
    }
    Criterion c;
    c.id = 8;
    c.name = "conservation of <Sz>, <J^2>, <H> under oracle evolution";
    c.pass = drift <= 1e-9;
    c.detail = fmt("max drift %.2e (tol 1e-9)", drift);
    return c;
}

}  // namespace

int main() {
    std::printf("acceptance suite: generalized spin-star simulator\n");
    OracleCache oracles;

    std::vector<Criterion> results;
    results.push_back(criterion_1(oracles));
    results.push_back(criterion_2(oracles));
    results.push_back(criterion_3(oracles));
    results.push_back(criterion_4(oracles));
    results.push_back(criterion_5());
    results.push_back(criterion_6());
    results.push_back(criterion_7());
    results.push_back(criterion_8(oracles));

    int failures = 0;
    for (const auto& c : results) {
        if (!c.pass) ++failures;
        std::printf("[%s] %d. %s — %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    c.detail.c_str());
    }
    std::printf("%d/%zu criteria passed (%.1f s total)\n",
                static_cast<int>(results.size()) - failures, results.size(), now_seconds());
    return failures == 0 ? 0 : 1;
}
