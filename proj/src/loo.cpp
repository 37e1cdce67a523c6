#include "loowit/loo.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace loowit {

namespace {

constexpr double kOrthTol = 1e-10;

}  // namespace

LooBasis::LooBasis(int dim, std::vector<CMatrix> observables, BasisTag tag)
    : dim_(dim), obs_(std::move(observables)), tag_(tag) {
    if (dim_ < 2) throw Error("LOO basis dimension must be >= 2");
    if (static_cast<int>(obs_.size()) != dim_ * dim_) {
        throw Error("LOO basis must hold d^2 observables");
    }
    for (const auto& o : obs_) check_square(o, dim_, "LOO observable");
}

CMatrix LooBasis::gram() const {
    const int n = size();
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = (obs_[i] * obs_[j]).trace();
    return g;
}

double LooBasis::gram_deviation() const {
    return max_abs(gram() - CMatrix::Identity(size(), size()));
}

CVector LooBasis::coefficients(const CMatrix& x) const {
    CVector c(size());
    for (int mu = 0; mu < size(); ++mu) c(mu) = (x * obs_[mu]).trace();
    return c;
}

CMatrix LooBasis::synthesize(const CVector& c) const {
    CMatrix out = CMatrix::Zero(dim_, dim_);
    for (int mu = 0; mu < size(); ++mu) out += c(mu) * obs_[mu];
    return out;
}

double LooBasis::completeness_deviation(const CMatrix& x) const {
    return max_abs(synthesize(coefficients(x)) - x);
}

int dim_from_slots(int slots) {
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(slots))));
    if (d * d != slots || d < 2) {
        std::ostringstream os;
        os << "slot count " << slots << " is not d^2 for some d >= 2";
        throw Error(os.str());
    }
    return d;
}

OrthTransform OrthTransform::from_matrix(RMatrix m) {
    if (m.rows() != m.cols()) throw Error("transform matrix must be square");
    const int d = dim_from_slots(static_cast<int>(m.rows()));
    const RMatrix gram = m * m.transpose();
    const double dev = (gram - RMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
    if (dev <= kOrthTol) return OrthTransform(std::move(m), TransformKind::Orthogonal, d);
    Eigen::SelfAdjointEigenSolver<RMatrix> es(gram, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    if (top > 1.0 + kOrthTol) {
        std::ostringstream os;
        os.precision(12);
        os << "transform is not a contraction: max eigenvalue of O O^T = " << top;
        throw Error(os.str());
    }
    return OrthTransform(std::move(m), TransformKind::Contraction, d);
}

OrthTransform OrthTransform::orthogonal(RMatrix m) {
    OrthTransform t = from_matrix(std::move(m));
    if (!t.is_orthogonal()) throw Error("transform is a contraction, orthogonal required");
    return t;
}

OrthTransform OrthTransform::identity(int d) {
    return OrthTransform(RMatrix::Identity(d * d, d * d), TransformKind::Orthogonal, d);
}

OrthTransform OrthTransform::transposed() const {
    return OrthTransform(m_.transpose(), kind_, dim_);
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]) {
            throw Error("permutation is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv));
}

int pair_count(int d) { return d * (d - 1) / 2; }

int pair_index(int d, int m, int n) { return m * d - m * (m + 1) / 2 + (n - m - 1); }

int slot_plus(int d, int m, int n) { return d + pair_index(d, m, n); }

int slot_minus(int d, int m, int n) { return d + pair_count(d) + pair_index(d, m, n); }

LooBasis standard_basis(int d) {
    if (d < 2) throw Error("standard_basis: d must be >= 2");
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<CMatrix> obs(d * d, CMatrix::Zero(d, d));
    for (int m = 0; m < d; ++m) obs[m](m, m) = 1.0;
    for (int m = 0; m < d; ++m)
        for (int n = m + 1; n < d; ++n) {
            CMatrix& p = obs[slot_plus(d, m, n)];
            p(m, n) = s;
            p(n, m) = s;
            // (|m><n| - |n><m|)/(i sqrt2) = -i s |m><n| + i s |n><m|
            CMatrix& q = obs[slot_minus(d, m, n)];
            q(m, n) = cplx(0.0, -s);
            q(n, m) = cplx(0.0, s);
        }
    return LooBasis(d, std::move(obs), BasisTag::Standard);
}

LooBasis apply_orthogonal(const LooBasis& basis, const OrthTransform& o) {
    const int n = basis.size();
    if (o.slots() != n) throw Error("apply_orthogonal: transform dimension mismatch");
    std::vector<CMatrix> out;
    out.reserve(n);
    for (int mu = 0; mu < n; ++mu) {
        CMatrix acc = CMatrix::Zero(basis.dim(), basis.dim());
        for (int nu = 0; nu < n; ++nu) {
            const double c = o.matrix()(mu, nu);
            if (c != 0.0) acc += c * basis[nu];
        }
        out.push_back(std::move(acc));
    }
    return LooBasis(basis.dim(), std::move(out),
                    o.is_orthogonal() ? BasisTag::Transformed : BasisTag::Contracted);
}

bool is_unitary(const CMatrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    return max_abs(u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols())) <= tol;
}

LooBasis conjugate_basis(const LooBasis& basis, const CMatrix& u) {
    check_square(u, basis.dim(), "conjugate_basis");
    if (!is_unitary(u)) throw Error("conjugate_basis: u is not unitary");
    std::vector<CMatrix> out;
    out.reserve(basis.size());
    for (const auto& l : basis.observables()) out.push_back(u * l * u.adjoint());
    const BasisTag tag =
        basis.tag() == BasisTag::Contracted ? BasisTag::Contracted : BasisTag::Transformed;
    return LooBasis(basis.dim(), std::move(out), tag);
}

LooBasis transpose_basis(const LooBasis& basis) {
    std::vector<CMatrix> out;
    out.reserve(basis.size());
    for (const auto& l : basis.observables()) out.push_back(l.transpose());
    const BasisTag tag =
        basis.tag() == BasisTag::Contracted ? BasisTag::Contracted : BasisTag::Transformed;
    return LooBasis(basis.dim(), std::move(out), tag);
}

OrthTransform transpose_transform(int d) {
    if (d < 2) throw Error("transpose_transform: d must be >= 2");
    RMatrix m = RMatrix::Identity(d * d, d * d);
    for (int k = 0; k < pair_count(d); ++k) {
        const int slot = d + pair_count(d) + k;
        m(slot, slot) = -1.0;
    }
    return OrthTransform::orthogonal(std::move(m));
}

OrthTransform permutation_transform(const Permutation& sigma) {
    const int n = sigma.size();
    dim_from_slots(n);
    RMatrix m = RMatrix::Zero(n, n);
    for (int mu = 0; mu < n; ++mu) m(mu, sigma(mu)) = 1.0;
    return OrthTransform::orthogonal(std::move(m));
}

OrthTransform unitary_transform(const CMatrix& u) {
    if (u.rows() != u.cols() || u.rows() < 2) {
        throw Error("unitary_transform: invalid dimension");
    }
    if (!is_unitary(u)) throw Error("unitary_transform: u is not unitary");
    const int d = static_cast<int>(u.rows());
    const LooBasis std_basis = standard_basis(d);
    const LooBasis conj = conjugate_basis(std_basis, u);
    const int n = d * d;
    RMatrix m(n, n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) m(mu, nu) = (conj[mu] * std_basis[nu]).trace().real();
    return OrthTransform::orthogonal(std::move(m));
}

Permutation diag_cycle(int d, int l) {
    if (d < 2) throw Error("diag_cycle: d must be >= 2");
    if (l < 1 || l > d - 1) {
        std::ostringstream os;
        os << "diag_cycle: shift l=" << l << " outside [1, " << d - 1 << "]";
        throw Error(os.str());
    }
    std::vector<int> map(d * d);
    std::iota(map.begin(), map.end(), 0);
    for (int m = 0; m < d; ++m) map[m] = (m + l) % d;
    return Permutation(std::move(map));
}

int fixed_points(const Permutation& sigma) {
    int count = 0;
    for (int mu = 0; mu < sigma.size(); ++mu) count += sigma(mu) == mu ? 1 : 0;
    return count;
}

}  // namespace loowit
