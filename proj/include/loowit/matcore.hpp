#pragma once

// Dense complex linear algebra on small bipartite operators.
//
// Composite indices follow the Kronecker convention: the basis vector
// |m,n> of a (dA x dB) system sits at row m*dB + n (0-based). In 1-based
// labels this is dB*(m-1)+n.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace loowit {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DimPair {
    int a = 2;
    int b = 2;

    DimPair() = default;
    DimPair(int da, int db);

    int total() const { return a * b; }
    bool square() const { return a == b; }
    bool operator==(const DimPair&) const = default;
};

enum class Subsystem { A, B };

struct Spectrum {
    RVector values;   // ascending
    CMatrix vectors;  // columns, orthonormal
};

struct PsdResult {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

double max_abs(const CMatrix& m);
double hermiticity_defect(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);

CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix partial_transpose(const CMatrix& rho, DimPair dims, Subsystem which);

/// Traces out `which`, returning the reduced operator on the other factor.
CMatrix partial_trace(const CMatrix& rho, DimPair dims, Subsystem which);

/// <m,n|R|k,l> = <m,k|rho|n,l>; result is dA^2 x dB^2.
CMatrix realign(const CMatrix& rho, DimPair dims);

/// Symmetrizes, then diagonalizes. Throws if `h` is not Hermitian to
/// kHermitianTol relative to max(1, |h|_max).
Spectrum herm_eig(const CMatrix& h);
RVector herm_eigenvalues(const CMatrix& h);
double min_eigenvalue(const CMatrix& h);

RVector singular_values(const CMatrix& m);
double trace_norm(const CMatrix& m);

/// psd iff min eigenvalue >= -tol * max(1, |h|_max).
PsdResult is_psd(const CMatrix& h, double tol = kPsdTol);

/// Basis ket |i> of dimension d.
CVector basis_ket(int d, int i);

void check_square(const CMatrix& m, int n, const char* what);

}  // namespace loowit
