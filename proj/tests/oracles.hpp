#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: index-loop definitions, closed forms, and Gram-matrix
// eigenvalue routes stand in for the library's implementations.

#include <algorithm>
#include <cmath>
#include <vector>

#include "loowit/matcore.hpp"
#include "loowit/random.hpp"

namespace oracle {

using loowit::CMatrix;
using loowit::cplx;
using loowit::RMatrix;
using loowit::RVector;

inline CMatrix random_hermitian(int n, loowit::Rng& rng) {
    const CMatrix g = loowit::gaussian_complex(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

inline double trace_real(const CMatrix& m) { return m.trace().real(); }

/// Tr(rho * W) by double loop.
inline cplx trace_product(const CMatrix& a, const CMatrix& b) {
    cplx acc = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
    return acc;
}

/// Eigenvalues of a Hermitian matrix via Eigen's ComplexEigenSolver (a
/// general, non-symmetric route), sorted ascending.
inline std::vector<double> general_eigenvalues(const CMatrix& h) {
    Eigen::ComplexEigenSolver<CMatrix> es(h);
    std::vector<double> out;
    for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i).real());
    std::sort(out.begin(), out.end());
    return out;
}

inline double general_min_eigenvalue(const CMatrix& h) { return general_eigenvalues(h).front(); }

/// Sum of sqrt(eig(M M^dagger)) through the general eigensolver.
inline double gram_trace_norm(const CMatrix& m) {
    const CMatrix g = m * m.adjoint();
    double s = 0.0;
    for (double e : general_eigenvalues(0.5 * (g + g.adjoint()))) s += std::sqrt(std::max(0.0, e));
    return s;
}

/// Expectation <A (x) B^T> by the literal Kronecker definition.
inline cplx kron_expectation(const CMatrix& rho, const CMatrix& a, const CMatrix& b) {
    const int d = static_cast<int>(a.rows());
    CMatrix k(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) k(i * d + p, j * d + q) = a(i, j) * b(p, q);
    return trace_product(rho, k);
}

/// The 2x2 Pauli-based LOO basis {|1><1|, |2><2|, sx/sqrt2, sy/sqrt2}.
inline std::vector<CMatrix> qubit_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix p1 = CMatrix::Zero(2, 2), p2 = CMatrix::Zero(2, 2), sx(2, 2), sy(2, 2);
    p1(0, 0) = 1.0;
    p2(1, 1) = 1.0;
    sx << 0.0, s, s, 0.0;
    sy << 0.0, cplx(0.0, -s), cplx(0.0, s), 0.0;
    return {p1, p2, sx, sy};
}

/// SWAP on C^d (x) C^d.
inline CMatrix swap_operator(int d) {
    CMatrix s = CMatrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) s(a * d + b, b * d + a) = 1.0;
    return s;
}

/// Min eigenvalue of the partial transpose of the family state: the 2x2
/// blocks [[a_{i+1}, a1], [a1, a_{d-i+1}]]/d and the isolated a1/d entries.
inline double family_ppt_min(const std::vector<double>& a) {
    const int d = static_cast<int>(a.size());
    auto at = [&](int i) { return a[((i - 1) % d + d) % d]; };
    double lo = a[0] / d;
    for (int i = 1; i <= d - 1; ++i) {
        const double x = at(i + 1), y = at(d - i + 1), c = a[0];
        const double e = 0.5 * ((x + y) - std::sqrt((x - y) * (x - y) + 4 * c * c));
        lo = std::min(lo, e / d);
    }
    return lo;
}

/// Min eigenvalue of I (x) rho_B - rho^{sigma^l} for the family state with
/// the cyclic diagonal shift: min_j (1 - a_{1+l} - (d-1) a1)/d against the
/// off-Phi diagonal entries (1 - a_i)/d.
inline double family_perm_reduction_min(const std::vector<double>& a, int l) {
    const int d = static_cast<int>(a.size());
    const double shifted = a[l % d];
    double lo = (1.0 - shifted - (d - 1) * a[0]) / d;
    lo = std::min(lo, (1.0 - shifted + a[0]) / d);
    for (int i = 1; i < d; ++i) lo = std::min(lo, (1.0 - a[(i + l) % d]) / d);
    return lo;
}

}  // namespace oracle
