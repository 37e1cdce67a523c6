#pragma once

// Complete sets of local orthogonal observables (LOOs): d^2 Hermitian d x d
// matrices with Tr(L_mu L_nu) = delta_mu,nu.
//
// Standard slot ordering (0-based):
//   [0, d)                 |m><m|
//   [d, d + P)             (|m><n| + |n><m|)/sqrt2,      m < n lexicographic
//   [d + P, d^2)           (|m><n| - |n><m|)/(i sqrt2),  m < n lexicographic
// with P = d(d-1)/2.

#include <span>
#include <vector>

#include "loowit/matcore.hpp"

namespace loowit {

enum class BasisTag { Standard, Transformed, Contracted };

class LooBasis {
public:
    LooBasis(int dim, std::vector<CMatrix> observables, BasisTag tag);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(obs_.size()); }
    BasisTag tag() const { return tag_; }
    const CMatrix& operator[](int mu) const { return obs_[mu]; }
    std::span<const CMatrix> observables() const { return obs_; }

    /// Gram matrix G_{mu,nu} = Tr(L_mu L_nu).
    CMatrix gram() const;
    double gram_deviation() const;

    /// max |sum_mu Tr(X L_mu) L_mu - X| for the supplied X.
    double completeness_deviation(const CMatrix& x) const;

    /// Expansion coefficients Tr(X L_mu).
    CVector coefficients(const CMatrix& x) const;

    /// sum_mu c_mu L_mu.
    CMatrix synthesize(const CVector& c) const;

private:
    int dim_;
    std::vector<CMatrix> obs_;
    BasisTag tag_;
};

enum class TransformKind { Orthogonal, Contraction };

/// Real d^2 x d^2 mixing matrix acting on the standard slots.
class OrthTransform {
public:
    /// Classifies `m` as orthogonal or contraction (O O^T <= 1). Throws,
    /// naming the largest eigenvalue of O O^T, when neither holds.
    static OrthTransform from_matrix(RMatrix m);
    /// Like from_matrix but rejects contractions.
    static OrthTransform orthogonal(RMatrix m);
    static OrthTransform identity(int d);

    const RMatrix& matrix() const { return m_; }
    TransformKind kind() const { return kind_; }
    bool is_orthogonal() const { return kind_ == TransformKind::Orthogonal; }
    int slots() const { return static_cast<int>(m_.rows()); }
    int dim() const { return dim_; }
    OrthTransform transposed() const;

private:
    OrthTransform(RMatrix m, TransformKind kind, int dim)
        : m_(std::move(m)), kind_(kind), dim_(dim) {}

    RMatrix m_;
    TransformKind kind_;
    int dim_;
};

/// Bijection on slot indices {0, ..., n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> map);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int mu) const { return map_[mu]; }
    const std::vector<int>& map() const { return map_; }
    Permutation inverse() const;

private:
    std::vector<int> map_;
};

int pair_count(int d);
int pair_index(int d, int m, int n);
int slot_plus(int d, int m, int n);
int slot_minus(int d, int m, int n);

LooBasis standard_basis(int d);

/// L^o_mu = sum_nu O_{mu,nu} L_nu.
LooBasis apply_orthogonal(const LooBasis& basis, const OrthTransform& o);

/// u L_mu u^dagger; u must be unitary within 1e-10.
LooBasis conjugate_basis(const LooBasis& basis, const CMatrix& u);

LooBasis transpose_basis(const LooBasis& basis);

OrthTransform transpose_transform(int d);
/// O_{mu, sigma(mu)} = 1, i.e. L^o_mu = L_{sigma(mu)}.
OrthTransform permutation_transform(const Permutation& sigma);
/// O_{mu,nu} = Tr(u L_mu u^dagger L_nu), so that L^o_mu = u L_mu u^dagger.
OrthTransform unitary_transform(const CMatrix& u);

/// Cyclic shift m -> m + l (mod d) on the diagonal slots, identity elsewhere.
Permutation diag_cycle(int d, int l);

int fixed_points(const Permutation& sigma);

bool is_unitary(const CMatrix& u, double tol = 1e-10);

/// Integer d with d*d == slots, or throws.
int dim_from_slots(int slots);

}  // namespace loowit
