#pragma once

// Separability criteria built on local orthogonal observables.
//
// Conventions shared by every function here:
//   T_{mu,nu} = <L_mu (x) L_nu^T>      (standard basis on both sides)
//   O-reduction:  I_A (x) rho_B - rho^{o_A},
//   rho^{o_A}  = sum_{mu,nu} T_{mu,nu} L^o_mu (x) L_nu^T.
// "Tr_A rho" in the O-reduction map is read as the operator I_A (x) rho_B.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loowit/loo.hpp"
#include "loowit/matcore.hpp"
#include "loowit/states.hpp"
#include "loowit/witness.hpp"

namespace loowit {

enum class Verdict { Pass, Violated, Inconclusive };

std::string to_string(Verdict v);

struct CriterionReport {
    std::string criterion;
    Verdict verdict = Verdict::Inconclusive;
    double scalar = 0.0;
    nlohmann::json params = nlohmann::json::object();
};

nlohmann::json report_to_json(const CriterionReport& r);

inline constexpr double kSearchTol = 1e-6;

CriterionReport ppt_check(const BipartiteState& rho, double tol = kPsdTol);

/// Real d^2 x d^2 correlation matrix; throws if any entry has an imaginary
/// part above 1e-9.
RMatrix correlation_T(const BipartiteState& rho);

/// Same matrix but paired with the untransposed B-side basis.
RMatrix correlation_T_untransposed(const BipartiteState& rho);

struct RealignmentResult {
    double value = 0.0;           // Tr sqrt(T T^T)
    double realigned_norm = 0.0;  // trace norm of the realigned density matrix
    CriterionReport report;
};

RealignmentResult realignment_value(const BipartiteState& rho, double tol = kPsdTol);

/// Orthogonal O* maximizing Tr(T O). With T = U S V^T, O* = V U^T.
OrthTransform best_orthogonal(const RMatrix& t);

/// (Tr rho) I - sum_mu Tr(rho L_mu) L^o_mu.
CMatrix local_map(const CMatrix& rho, const OrthTransform& o);

struct OReductionResult {
    CMatrix reduced;  // I_A (x) rho_B - rho^{o_A}
    CriterionReport report;
};

OReductionResult o_reduction_apply(const BipartiteState& rho, const OrthTransform& o,
                                   double tol = kPsdTol);

/// rho^{o_A} alone.
CMatrix transformed_state(const CMatrix& rho, int d, const OrthTransform& o);

struct PermReductionResult {
    CMatrix reduced;
    CMatrix permuted_generic;
    CMatrix permuted_closed;
    double deviation = 0.0;
    CriterionReport report;
};

/// Cyclic diagonal shift sigma^l applied to the first subsystem of the
/// family state, computed generically and through the closed form
/// rho + (1/d) sum_{k,i} (a_{i+l} - a_i) |k><k| (x) |k+i-1><k+i-1|.
/// Throws if the two routes differ by more than 1e-9.
PermReductionResult perm_reduction_family(const FamilyParams& p, int l, double tol = kPsdTol);

struct PhiPairing {
    double lhs = 0.0;  // <Phi| (O (x) I)(rho) |Phi>
    double rhs = 0.0;  // 1 - Tr(T O^T)
};

PhiPairing phi_pairing(const BipartiteState& rho, const OrthTransform& o);

struct HermCorrX {
    CMatrix x;
    RVector components;  // Tr(X L_mu) in standard slot order
    RMatrix o;
    CMatrix u;
};

/// Hermitian correlation matrix of the LOO pairs (L^o, u L u^dagger).
HermCorrX x_matrix(const BipartiteState& rho, const OrthTransform& o, const CMatrix& u);

/// Literal three-system contraction Tr_AB[(Y (x) I_C) |Phi><Phi|_ABC] with
/// Y = (O^T (x) U)(rho), U(s) = u^dagger s u. Equals x_matrix(...).x
/// transposed.
CMatrix x_matrix_ancilla(const BipartiteState& rho, const OrthTransform& o, const CMatrix& u);

struct UniformPairing {
    double s_x_s = 0.0;          // sum_{m,n} X_{m,n}
    double transposed = 0.0;     // 1 - sum_mu <L^o_mu (x) u L_mu^T u^dagger>
    double untransposed = 0.0;   // 1 - sum_mu <L^o_mu (x) u L_mu u^dagger>
};

UniformPairing uniform_pairing(const BipartiteState& rho, const OrthTransform& o,
                               const CMatrix& u);

struct XSearchOptions {
    int budget = 200;
    std::uint64_t seed = 0;
    int rounds = 40;
    double initial_step = 0.5;
    double decay = 0.7;
    double tol = kSearchTol;
    bool stop_on_violation = true;
};

struct XSearchResult {
    CMatrix u;
    RMatrix o;
    double min_eigenvalue = 0.0;
    int restarts_used = 0;
    CriterionReport report;
};

/// Heuristic minimization of lambda_min(X) over (u, O): random restarts and
/// Givens-rotation coordinate descent. Never certifies separability.
XSearchResult x_search(const BipartiteState& rho, const XSearchOptions& opts);

enum class Region { Separable, Bound, Free, Invalid };

std::string to_string(Region r);

Region classify_family_point(int d, double a1, double a2);

struct FamilyScalars {
    double ppt_min = 0.0;
    double oreduction_min = 0.0;  // best (lowest) over l = 1..d-1
    double realignment = 0.0;
};

FamilyScalars family_scalars(const FamilyParams& p);
Region numeric_region(const FamilyScalars& s, double tol = kPsdTol);

struct ReportConfig {
    double tol = kPsdTol;
    double tol_search = kSearchTol;
    int budget = 200;
    std::uint64_t seed = 0;
    bool run_search = true;
    std::vector<std::pair<std::string, OrthTransform>> extra_transforms;
    std::vector<Witness> witnesses;
};

struct FullReport {
    std::vector<CriterionReport> criteria;
    bool entangled = false;
};

FullReport full_report(const BipartiteState& rho, const ReportConfig& config);

nlohmann::json full_report_to_json(const FullReport& r);

}  // namespace loowit
