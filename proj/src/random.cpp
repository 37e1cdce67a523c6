#include "loowit/random.hpp"

#include <cmath>

namespace loowit {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

RMatrix gaussian_real(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    RMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) g(i, j) = normal(rng);
    return g;
}

CMatrix gaussian_complex(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    return g;
}

RMatrix random_orthogonal(int n, Rng& rng) {
    Eigen::HouseholderQR<RMatrix> qr(gaussian_real(n, n, rng));
    RMatrix q = qr.householderQ();
    const RMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        if (r(j, j) < 0) q.col(j) *= -1.0;
    }
    return q;
}

CMatrix random_unitary(int n, Rng& rng) {
    Eigen::HouseholderQR<CMatrix> qr(gaussian_complex(n, n, rng));
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

CMatrix random_pure_density(int d, Rng& rng) {
    CVector psi = gaussian_complex(d, 1, rng).col(0);
    psi.normalize();
    return psi * psi.adjoint();
}

CMatrix random_mixed_density(int d, Rng& rng) {
    const CMatrix g = gaussian_complex(d, d, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

RVector random_simplex(int n, Rng& rng) {
    std::exponential_distribution<double> expo(1.0);
    RVector w(n);
    for (int i = 0; i < n; ++i) w(i) = expo(rng);
    return w / w.sum();
}

}  // namespace loowit
