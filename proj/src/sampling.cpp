#include "spinstarlab/sampling.hpp"

#include <cmath>
#include <numbers>

namespace spinstarlab {

XState random_x_state(std::mt19937& rng) {
    std::exponential_distribution<double> exp_draw(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double pops[4];
    double sum = 0.0;
    for (double& p : pops) {
        p = exp_draw(rng);
        sum += p;
    }
    XState x;
    x.a = pops[0] / sum;
    x.b = pops[1] / sum;
    x.d = pops[2] / sum;
    x.e = pops[3] / sum;
    const double mag = unit(rng) * std::sqrt(x.b * x.d);
    const double phase = unit(rng) * 2.0 * std::numbers::pi;
    x.c = std::polar(mag, phase);
    return x;
}

Vector random_ket(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector psi(dim);
    for (int k = 0; k < dim; ++k) {
        psi(k) = Complex{gauss(rng), gauss(rng)};
    }
    psi.normalize();
    return psi;
}

Matrix random_hermitian(std::mt19937& rng, int dim, double scale) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = Complex{gauss(rng), gauss(rng)};
        }
    }
    Matrix h = (a + a.adjoint()) / 2.0;
    const double norm = max_abs(h);
    if (norm > 0.0) h *= scale / norm;
    return h;
}

}  // namespace spinstarlab
