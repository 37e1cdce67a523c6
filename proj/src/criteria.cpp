#include "loowit/criteria.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "loowit/random.hpp"

namespace loowit {

namespace {

constexpr double kImagTol = 1e-9;
constexpr double kClosedFormTol = 1e-9;

int require_square_dims(const BipartiteState& rho, const char* what) {
    if (!rho.dims().square()) {
        std::ostringstream os;
        os << what << ": requires d_A == d_B";
        throw Error(os.str());
    }
    return rho.dims().a;
}

// Tr(rho (A (x) B)) for d x d factors.
cplx pair_expectation(const CMatrix& rho, int d, const CMatrix& a, const CMatrix& b) {
    cplx acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const cplx aji = a(j, i);
            if (aji == cplx(0.0)) continue;
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const cplx blk = b(l, k);
                    if (blk == cplx(0.0)) continue;
                    acc += rho(i * d + k, j * d + l) * aji * blk;
                }
        }
    return acc;
}

double real_expectation(const CMatrix& rho, int d, const CMatrix& a, const CMatrix& b) {
    const cplx v = pair_expectation(rho, d, a, b);
    if (std::abs(v.imag()) > kImagTol) {
        std::ostringstream os;
        os << "correlation has imaginary residue " << v.imag();
        throw Error(os.str());
    }
    return v.real();
}

CriterionReport psd_report(std::string name, const CMatrix& m, double tol) {
    const PsdResult r = is_psd(m, tol);
    CriterionReport rep;
    rep.criterion = std::move(name);
    rep.scalar = r.min_eigenvalue;
    rep.verdict = r.psd ? Verdict::Pass : Verdict::Violated;
    rep.params["tol"] = tol;
    return rep;
}

// X assembled from its standard-basis components, no input validation.
class XEvaluator {
public:
    XEvaluator(const CMatrix& rho, int d) : rho_(rho), d_(d), basis_(standard_basis(d)) {}

    HermCorrX evaluate(const RMatrix& o, const CMatrix& u) const {
        const int n = d_ * d_;
        std::vector<CMatrix> lo(n, CMatrix::Zero(d_, d_));
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) {
                const double c = o(mu, nu);
                if (c != 0.0) lo[mu] += c * basis_[nu];
            }
        std::vector<CMatrix> lu(n);
        for (int mu = 0; mu < n; ++mu) lu[mu] = u * basis_[mu] * u.adjoint();

        const CMatrix id = CMatrix::Identity(d_, d_);
        const double inv_r2 = 1.0 / std::sqrt(2.0);
        RVector c(n);
        for (int m = 0; m < d_; ++m) c(m) = ev(id - lo[m], lu[m]);
        for (int m = 0; m < d_; ++m)
            for (int k = m + 1; k < d_; ++k) {
                const int p = slot_plus(d_, m, k);
                const int q = slot_minus(d_, m, k);
                c(p) = -inv_r2 * (ev(lo[p], lu[p]) - ev(lo[q], lu[q]));
                c(q) = -inv_r2 * (ev(lo[p], lu[q]) + ev(lo[q], lu[p]));
            }
        CMatrix x = CMatrix::Zero(d_, d_);
        for (int mu = 0; mu < n; ++mu) x += c(mu) * basis_[mu];
        return {0.5 * (x + x.adjoint()), c, o, u};
    }

    double min_eig(const RMatrix& o, const CMatrix& u) const {
        const CMatrix x = evaluate(o, u).x;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(x, Eigen::EigenvaluesOnly);
        return es.eigenvalues()(0);
    }

private:
    double ev(const CMatrix& a, const CMatrix& b) const {
        return pair_expectation(rho_, d_, a, b).real();
    }

    const CMatrix& rho_;
    int d_;
    LooBasis basis_;
};

void rotate_rows(RMatrix& o, int i, int j, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const RVector ri = o.row(i), rj = o.row(j);
    o.row(i) = c * ri - s * rj;
    o.row(j) = s * ri + c * rj;
}

// kind 0: real rotation, kind 1: complex rotation, kind 2: phase on row i.
void rotate_rows(CMatrix& u, int i, int j, double theta, int kind) {
    if (kind == 2) {
        u.row(i) *= std::polar(1.0, theta);
        return;
    }
    const double c = std::cos(theta), s = std::sin(theta);
    const CVector ri = u.row(i).transpose(), rj = u.row(j).transpose();
    if (kind == 0) {
        u.row(i) = (c * ri - s * rj).transpose();
        u.row(j) = (s * ri + c * rj).transpose();
    } else {
        const cplx is(0.0, s);
        u.row(i) = (c * ri + is * rj).transpose();
        u.row(j) = (is * ri + c * rj).transpose();
    }
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Violated:
            return "violated";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

std::string to_string(Region r) {
    switch (r) {
        case Region::Separable:
            return "separable";
        case Region::Bound:
            return "bound";
        case Region::Free:
            return "free";
        case Region::Invalid:
            return "invalid";
    }
    return "unknown";
}

nlohmann::json report_to_json(const CriterionReport& r) {
    return {{"criterion", r.criterion},
            {"verdict", to_string(r.verdict)},
            {"scalar", r.scalar},
            {"params", r.params}};
}

CriterionReport ppt_check(const BipartiteState& rho, double tol) {
    return psd_report("ppt", partial_transpose(rho.rho(), rho.dims(), Subsystem::B), tol);
}

RMatrix correlation_T(const BipartiteState& rho) {
    const int d = require_square_dims(rho, "correlation_T");
    const LooBasis s = standard_basis(d);
    const LooBasis st = transpose_basis(s);
    RMatrix t(d * d, d * d);
    for (int mu = 0; mu < d * d; ++mu)
        for (int nu = 0; nu < d * d; ++nu) t(mu, nu) = real_expectation(rho.rho(), d, s[mu], st[nu]);
    return t;
}

RMatrix correlation_T_untransposed(const BipartiteState& rho) {
    const int d = require_square_dims(rho, "correlation_T_untransposed");
    const LooBasis s = standard_basis(d);
    RMatrix t(d * d, d * d);
    for (int mu = 0; mu < d * d; ++mu)
        for (int nu = 0; nu < d * d; ++nu) t(mu, nu) = real_expectation(rho.rho(), d, s[mu], s[nu]);
    return t;
}

RealignmentResult realignment_value(const BipartiteState& rho, double tol) {
    RealignmentResult out;
    out.value = trace_norm(correlation_T(rho).cast<cplx>());
    out.realigned_norm = trace_norm(realign(rho.rho(), rho.dims()));
    out.report.criterion = "realignment";
    out.report.scalar = out.value;
    out.report.verdict = out.value <= 1.0 + tol ? Verdict::Pass : Verdict::Violated;
    out.report.params = {{"tol", tol}, {"realigned_trace_norm", out.realigned_norm}};
    return out;
}

OrthTransform best_orthogonal(const RMatrix& t) {
    if (t.rows() != t.cols()) throw Error("best_orthogonal: T must be square");
    Eigen::JacobiSVD<RMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RMatrix o = svd.matrixV() * svd.matrixU().transpose();
    return OrthTransform::orthogonal(std::move(o));
}

CMatrix local_map(const CMatrix& rho, const OrthTransform& o) {
    const int d = o.dim();
    check_square(rho, d, "local_map");
    const LooBasis s = standard_basis(d);
    const LooBasis mixed = apply_orthogonal(s, o);
    CMatrix out = rho.trace() * CMatrix::Identity(d, d);
    for (int mu = 0; mu < d * d; ++mu) out -= (rho * s[mu]).trace() * mixed[mu];
    return out;
}

CMatrix transformed_state(const CMatrix& rho, int d, const OrthTransform& o) {
    if (o.dim() != d) throw Error("transformed_state: transform dimension mismatch");
    check_square(rho, d * d, "transformed_state");
    const LooBasis s = standard_basis(d);
    const LooBasis mixed = apply_orthogonal(s, o);
    // Image of each matrix unit |a><c| under X -> sum_mu Tr(X L_mu) L^o_mu.
    std::vector<CMatrix> unit_image(d * d, CMatrix::Zero(d, d));
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            for (int mu = 0; mu < d * d; ++mu) {
                const cplx coeff = s[mu](c, a);
                if (coeff != cplx(0.0)) unit_image[a * d + c] += coeff * mixed[mu];
            }
    CMatrix out = CMatrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c) {
            const CMatrix& img = unit_image[a * d + c];
            const CMatrix block = rho.block(a * d, c * d, d, d);
            out += kron(img, block);
        }
    return out;
}

OReductionResult o_reduction_apply(const BipartiteState& rho, const OrthTransform& o,
                                   double tol) {
    const int d = require_square_dims(rho, "o_reduction_apply");
    if (o.dim() != d) throw Error("o_reduction_apply: transform dimension mismatch");
    const CMatrix rho_b = partial_trace(rho.rho(), rho.dims(), Subsystem::A);
    CMatrix reduced = kron(CMatrix::Identity(d, d), rho_b) - transformed_state(rho.rho(), d, o);
    reduced = 0.5 * (reduced + reduced.adjoint());
    CriterionReport rep = psd_report("o-reduction", reduced, tol);
    rep.params["transform"] = o.is_orthogonal() ? "orthogonal" : "contraction";
    return {std::move(reduced), std::move(rep)};
}

PermReductionResult perm_reduction_family(const FamilyParams& p, int l, double tol) {
    const int d = p.d;
    if (l < 1 || l > d - 1) {
        std::ostringstream os;
        os << "perm_reduction_family: l=" << l << " outside [1, " << d - 1 << "]";
        throw Error(os.str());
    }
    const BipartiteState rho = family_rho(p);
    const OrthTransform o = permutation_transform(diag_cycle(d, l));
    OReductionResult generic = o_reduction_apply(rho, o, tol);

    const CMatrix rho_b = partial_trace(rho.rho(), rho.dims(), Subsystem::A);
    CMatrix permuted_generic = kron(CMatrix::Identity(d, d), rho_b) - generic.reduced;

    CMatrix closed = rho.rho();
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= d; ++i) {
            const int partner = ((k + i - 2) % d) + 1;
            const int idx = (k - 1) * d + (partner - 1);
            closed(idx, idx) += (p.at(i + l) - p.at(i)) / d;
        }

    const double dev = max_abs(permuted_generic - closed);
    if (dev > kClosedFormTol) {
        std::ostringstream os;
        os << "perm_reduction_family: generic and closed-form routes differ by " << dev;
        throw Error(os.str());
    }
    PermReductionResult out;
    out.reduced = std::move(generic.reduced);
    out.permuted_generic = std::move(permuted_generic);
    out.permuted_closed = std::move(closed);
    out.deviation = dev;
    out.report = std::move(generic.report);
    out.report.criterion = "perm-reduction";
    out.report.params["l"] = l;
    out.report.params["closed_form_deviation"] = dev;
    return out;
}

PhiPairing phi_pairing(const BipartiteState& rho, const OrthTransform& o) {
    const int d = require_square_dims(rho, "phi_pairing");
    const CMatrix reduced = o_reduction_apply(rho, o).reduced;
    const CVector ph = phi(d);
    const cplx lhs = ph.adjoint() * reduced * ph;
    const RMatrix t = correlation_T(rho);
    const double rhs = 1.0 - t.cwiseProduct(o.matrix()).sum();
    return {lhs.real(), rhs};
}

HermCorrX x_matrix(const BipartiteState& rho, const OrthTransform& o, const CMatrix& u) {
    const int d = require_square_dims(rho, "x_matrix");
    if (o.dim() != d) throw Error("x_matrix: transform dimension mismatch");
    if (!o.is_orthogonal()) throw Error("x_matrix: orthogonal transform required");
    check_square(u, d, "x_matrix");
    if (!is_unitary(u)) throw Error("x_matrix: u is not unitary");
    return XEvaluator(rho.rho(), d).evaluate(o.matrix(), u);
}

CMatrix x_matrix_ancilla(const BipartiteState& rho, const OrthTransform& o, const CMatrix& u) {
    const int d = require_square_dims(rho, "x_matrix_ancilla");
    if (!is_unitary(u)) throw Error("x_matrix_ancilla: u is not unitary");
    const CMatrix y0 = o_reduction_apply(rho, o.transposed()).reduced;
    const CMatrix lift = kron(CMatrix::Identity(d, d), u);
    const CMatrix y = lift.adjoint() * y0 * lift;

    CVector phi3 = CVector::Zero(d * d * d);
    for (int m = 0; m < d; ++m) phi3(m * d * d + m * d + m) = 1.0;
    const CMatrix joint = kron(y, CMatrix::Identity(d, d)) * (phi3 * phi3.adjoint());
    return partial_trace(joint, DimPair(d * d, d), Subsystem::A);
}

UniformPairing uniform_pairing(const BipartiteState& rho, const OrthTransform& o,
                               const CMatrix& u) {
    const int d = require_square_dims(rho, "uniform_pairing");
    const HermCorrX x = x_matrix(rho, o, u);
    const LooBasis s = standard_basis(d);
    const LooBasis mixed = apply_orthogonal(s, o);
    UniformPairing out;
    out.s_x_s = x.x.sum().real();
    double tr = 0.0, untr = 0.0;
    for (int mu = 0; mu < d * d; ++mu) {
        tr += real_expectation(rho.rho(), d, mixed[mu], u * s[mu].transpose() * u.adjoint());
        untr += real_expectation(rho.rho(), d, mixed[mu], u * s[mu] * u.adjoint());
    }
    out.transposed = 1.0 - tr;
    out.untransposed = 1.0 - untr;
    return out;
}

XSearchResult x_search(const BipartiteState& rho, const XSearchOptions& opts) {
    const int d = require_square_dims(rho, "x_search");
    if (opts.budget < 1) throw Error("x_search: budget must be >= 1");
    const int n = d * d;
    const XEvaluator eval(rho.rho(), d);

    XSearchResult best;
    best.min_eigenvalue = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int r = 0; r < opts.budget; ++r) {
        ++used;
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
        CMatrix u = random_unitary(d, rng);
        RMatrix o = random_orthogonal(n, rng);
        double f = eval.min_eig(o, u);
        double step = opts.initial_step;
        for (int round = 0; round < opts.rounds; ++round) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (double sign : {1.0, -1.0}) {
                        RMatrix trial = o;
                        rotate_rows(trial, i, j, sign * step);
                        const double ft = eval.min_eig(trial, u);
                        if (ft < f) {
                            f = ft;
                            o = std::move(trial);
                        }
                    }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int kind = 0; kind < 3; ++kind) {
                        if ((kind == 2) != (i == j)) continue;
                        if (kind != 2 && j <= i) continue;
                        for (double sign : {1.0, -1.0}) {
                            CMatrix trial = u;
                            rotate_rows(trial, i, j, sign * step, kind);
                            const double ft = eval.min_eig(o, trial);
                            if (ft < f) {
                                f = ft;
                                u = std::move(trial);
                            }
                        }
                    }
            step *= opts.decay;
        }
        if (f < best.min_eigenvalue) {
            best.min_eigenvalue = f;
            best.u = u;
            best.o = o;
        }
        if (opts.stop_on_violation && best.min_eigenvalue < -opts.tol) break;
    }
    best.restarts_used = used;
    best.report.criterion = "hermitian-correlation";
    best.report.scalar = best.min_eigenvalue;
    best.report.verdict =
        best.min_eigenvalue < -opts.tol ? Verdict::Violated : Verdict::Inconclusive;
    best.report.params = {{"budget", opts.budget},
                          {"restarts_used", used},
                          {"seed", opts.seed},
                          {"rounds", opts.rounds},
                          {"decay", opts.decay},
                          {"tol", opts.tol}};
    return best;
}

Region classify_family_point(int d, double a1, double a2) {
    FamilyParams p;
    try {
        p = family_special(d, a1, a2);
    } catch (const Error&) {
        return Region::Invalid;
    }
    const double ad = p.a[d - 1];
    const bool separable = a2 >= a1 && ad >= a1;
    const bool ppt = a2 * ad >= a1 * a1;
    if (!ppt) return Region::Free;
    return separable ? Region::Separable : Region::Bound;
}

FamilyScalars family_scalars(const FamilyParams& p) {
    const BipartiteState rho = family_rho(p);
    FamilyScalars s;
    s.ppt_min = ppt_check(rho).scalar;
    s.oreduction_min = std::numeric_limits<double>::infinity();
    for (int l = 1; l <= p.d - 1; ++l) {
        const OrthTransform o = permutation_transform(diag_cycle(p.d, l));
        s.oreduction_min = std::min(s.oreduction_min, o_reduction_apply(rho, o).report.scalar);
    }
    s.realignment = realignment_value(rho).value;
    return s;
}

Region numeric_region(const FamilyScalars& s, double tol) {
    if (s.ppt_min < -tol) return Region::Free;
    if (s.oreduction_min < -tol) return Region::Bound;
    return Region::Separable;
}

FullReport full_report(const BipartiteState& rho, const ReportConfig& config) {
    FullReport out;
    out.criteria.push_back(ppt_check(rho, config.tol));
    if (rho.dims().square()) {
        const int d = rho.dims().a;
        out.criteria.push_back(realignment_value(rho, config.tol).report);

        std::vector<std::pair<std::string, OrthTransform>> transforms;
        transforms.emplace_back("unitary-identity",
                                unitary_transform(CMatrix::Identity(d, d)));
        transforms.emplace_back("transpose", transpose_transform(d));
        for (int l = 1; l <= d - 1; ++l) {
            transforms.emplace_back("diag-cycle:l=" + std::to_string(l),
                                    permutation_transform(diag_cycle(d, l)));
        }
        for (const auto& extra : config.extra_transforms) transforms.push_back(extra);
        for (const auto& [name, o] : transforms) {
            if (o.dim() != d) throw Error("full_report: transform '" + name + "' has wrong dimension");
            CriterionReport rep = o_reduction_apply(rho, o, config.tol).report;
            rep.params["name"] = name;
            out.criteria.push_back(std::move(rep));
        }
        for (const auto& w : config.witnesses) {
            CriterionReport rep;
            rep.criterion = "witness:" + to_string(w.kind);
            rep.scalar = expectation(w, rho);
            rep.verdict = rep.scalar < -config.tol ? Verdict::Violated : Verdict::Pass;
            rep.params = w.params;
            rep.params["tol"] = config.tol;
            out.criteria.push_back(std::move(rep));
        }
        if (config.run_search) {
            XSearchOptions opts;
            opts.budget = config.budget;
            opts.seed = config.seed;
            opts.tol = config.tol_search;
            out.criteria.push_back(x_search(rho, opts).report);
        }
    }
    for (const auto& c : out.criteria) out.entangled = out.entangled || c.verdict == Verdict::Violated;
    return out;
}

nlohmann::json full_report_to_json(const FullReport& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : r.criteria) arr.push_back(report_to_json(c));
    return {{"verdict", r.entangled ? "entangled" : "no entanglement detected"},
            {"criteria", std::move(arr)}};
}

}  // namespace loowit
