#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "loowit/loo.hpp"
#include "loowit/matcore.hpp"
#include "loowit/states.hpp"

namespace loowit {

enum class WitnessKind { Generic, Horodecki, Permutation };

std::string to_string(WitnessKind kind);

/// Hermitian operator with nonnegative expectation on every separable state.
/// `candidate_only` stays true until an eigensolve confirms a negative
/// eigenvalue (below -kPsdTol).
struct Witness {
    DimPair dims;
    CMatrix op;
    WitnessKind kind = WitnessKind::Generic;
    nlohmann::json params;
    bool candidate_only = true;
    double min_eigenvalue = 0.0;
};

struct HorodeckiWitnessData {
    double a = 0.0;
    LooBasis a_basis;
    LooBasis b_basis;
    RMatrix coeffs;  // rho_{mu,nu} = Tr(rho_a A_mu (x) B_nu^T)
    RVector n;       // n_nu = rho_{1 nu} - rho_{nu 1}, nu = 2..9
    double n2 = 0.0;
    RMatrix m;       // contraction with M^T M <= 1
    bool degenerate = false;
};

struct HorodeckiWitness {
    Witness witness;
    HorodeckiWitnessData data;
};

/// I (x) I - sum_{mu,nu} M_{mu,nu} A_mu (x) B_nu^T.
CMatrix correlation_witness_operator(const LooBasis& a, const LooBasis& b, const RMatrix& m);

/// E_O = I (x) I - sum_mu L^o_mu (x) L_mu^T over the standard basis.
Witness ew_from_transform(const OrthTransform& o);

/// The A/B observable sets tailored to rho_a.
LooBasis horodecki_a_basis(double a);
LooBasis horodecki_b_basis();

/// Closed form (1-a) a^2 / ((2+a)(1+8a)^2).
double horodecki_n2(double a);

HorodeckiWitness horodecki_ew(double a);

/// E_sigma = I (x) I - sum_mu L_sigma(mu) (x) L_mu^T. params records the
/// fixed-point count, <Phi|E|Phi> = d - f, and whether f >= d+1 certifies a
/// negative eigenvalue on its own.
Witness perm_ew(const Permutation& sigma);

/// Tr(rho W); throws when the imaginary residue exceeds 1e-9.
double expectation(const Witness& w, const BipartiteState& rho);
double expectation(const CMatrix& w, const CMatrix& rho);

nlohmann::json witness_to_json(const Witness& w);

}  // namespace loowit
