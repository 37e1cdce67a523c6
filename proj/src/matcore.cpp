#include "loowit/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace loowit {

DimPair::DimPair(int da, int db) : a(da), b(db) {
    if (da < 2 || db < 2) {
        throw Error("subsystem dimensions must be >= 2");
    }
}

double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return max_abs(m - m.adjoint());
}

bool is_hermitian(const CMatrix& m, double tol) {
    return hermiticity_defect(m) <= tol * std::max(1.0, max_abs(m));
}

void check_square(const CMatrix& m, int n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        std::ostringstream os;
        os << what << ": expected " << n << "x" << n << " matrix, got " << m.rows() << "x"
           << m.cols();
        throw Error(os.str());
    }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, DimPair dims, Subsystem which) {
    check_square(rho, dims.total(), "partial_transpose");
    const int da = dims.a, db = dims.b;
    CMatrix out(rho.rows(), rho.cols());
    for (int m = 0; m < da; ++m)
        for (int n = 0; n < db; ++n)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) {
                    const cplx v = rho(m * db + n, k * db + l);
                    if (which == Subsystem::B) {
                        out(m * db + l, k * db + n) = v;
                    } else {
                        out(k * db + n, m * db + l) = v;
                    }
                }
    return out;
}

CMatrix partial_trace(const CMatrix& rho, DimPair dims, Subsystem which) {
    check_square(rho, dims.total(), "partial_trace");
    const int da = dims.a, db = dims.b;
    if (which == Subsystem::B) {
        CMatrix out = CMatrix::Zero(da, da);
        for (int m = 0; m < da; ++m)
            for (int k = 0; k < da; ++k)
                for (int n = 0; n < db; ++n) out(m, k) += rho(m * db + n, k * db + n);
        return out;
    }
    CMatrix out = CMatrix::Zero(db, db);
    for (int n = 0; n < db; ++n)
        for (int l = 0; l < db; ++l)
            for (int m = 0; m < da; ++m) out(n, l) += rho(m * db + n, m * db + l);
    return out;
}

CMatrix realign(const CMatrix& rho, DimPair dims) {
    check_square(rho, dims.total(), "realign");
    const int da = dims.a, db = dims.b;
    CMatrix out(da * da, db * db);
    for (int m = 0; m < da; ++m)
        for (int n = 0; n < da; ++n)
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out(m * da + n, k * db + l) = rho(m * db + k, n * db + l);
    return out;
}

Spectrum herm_eig(const CMatrix& h) {
    if (h.rows() != h.cols()) {
        throw Error("herm_eig: matrix is not square");
    }
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTol * std::max(1.0, max_abs(h))) {
        std::ostringstream os;
        os << "herm_eig: hermiticity defect " << defect << " exceeds tolerance";
        throw Error(os.str());
    }
    const CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error("herm_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RVector herm_eigenvalues(const CMatrix& h) {
    if (h.rows() != h.cols()) {
        throw Error("herm_eigenvalues: matrix is not square");
    }
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTol * std::max(1.0, max_abs(h))) {
        std::ostringstream os;
        os << "herm_eigenvalues: hermiticity defect " << defect << " exceeds tolerance";
        throw Error(os.str());
    }
    const CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double min_eigenvalue(const CMatrix& h) { return herm_eigenvalues(h)(0); }

RVector singular_values(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues();
}

double trace_norm(const CMatrix& m) { return singular_values(m).sum(); }

PsdResult is_psd(const CMatrix& h, double tol) {
    const double lo = min_eigenvalue(h);
    return {lo >= -tol * std::max(1.0, max_abs(h)), lo};
}

CVector basis_ket(int d, int i) {
    CVector v = CVector::Zero(d);
    v(i) = 1.0;
    return v;
}

}  // namespace loowit
