#include "loowit/witness.hpp"

#include <cmath>
#include <sstream>

namespace loowit {

namespace {

void resolve_candidate(Witness& w) {
    w.min_eigenvalue = min_eigenvalue(w.op);
    w.candidate_only = !(w.min_eigenvalue < -kPsdTol);
}

CMatrix hermitize(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

std::string to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Generic:
            return "generic";
        case WitnessKind::Horodecki:
            return "horodecki";
        case WitnessKind::Permutation:
            return "permutation";
    }
    return "unknown";
}

CMatrix correlation_witness_operator(const LooBasis& a, const LooBasis& b, const RMatrix& m) {
    if (a.dim() != b.dim() || m.rows() != a.size() || m.cols() != b.size()) {
        throw Error("correlation_witness_operator: dimension mismatch");
    }
    const int d = a.dim();
    CMatrix sum = CMatrix::Zero(d * d, d * d);
    for (int mu = 0; mu < a.size(); ++mu)
        for (int nu = 0; nu < b.size(); ++nu) {
            const double c = m(mu, nu);
            if (c != 0.0) sum += c * kron(a[mu], b[nu].transpose());
        }
    return hermitize(CMatrix::Identity(d * d, d * d) - sum);
}

Witness ew_from_transform(const OrthTransform& o) {
    const int d = o.dim();
    const LooBasis std_basis = standard_basis(d);
    const LooBasis mixed = apply_orthogonal(std_basis, o);
    const LooBasis transposed = transpose_basis(std_basis);
    CMatrix sum = CMatrix::Zero(d * d, d * d);
    for (int mu = 0; mu < d * d; ++mu) sum += kron(mixed[mu], transposed[mu]);
    Witness w;
    w.dims = DimPair(d, d);
    w.op = hermitize(CMatrix::Identity(d * d, d * d) - sum);
    w.kind = WitnessKind::Generic;
    w.params = {{"d", d}, {"transform", o.is_orthogonal() ? "orthogonal" : "contraction"}};
    resolve_candidate(w);
    return w;
}

LooBasis horodecki_a_basis(double a) {
    const LooBasis s = standard_basis(3);
    const CMatrix& l1 = s[0];
    const CMatrix& l2 = s[1];
    const CMatrix& l3 = s[2];
    const CMatrix& p12 = s[slot_plus(3, 0, 1)];
    const CMatrix& p13 = s[slot_plus(3, 0, 2)];
    const CMatrix& p23 = s[slot_plus(3, 1, 2)];
    const CMatrix& m12 = s[slot_minus(3, 0, 1)];
    const CMatrix& m13 = s[slot_minus(3, 0, 2)];
    const CMatrix& m23 = s[slot_minus(3, 1, 2)];
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    const double root = std::sqrt(1.0 - a * a);
    const CMatrix tilt = 2.0 * l3 - l1 - l2;
    std::vector<CMatrix> obs{
        (l1 + l2 + l3) / r3,
        (l1 - l2) / r2,
        (1.0 + 2.0 * a) / (r6 * (2.0 + a)) * tilt - std::sqrt(3.0 * (1.0 - a * a)) / (2.0 + a) * p13,
        (1.0 + 2.0 * a) / (2.0 + a) * p13 + root / (r2 * (2.0 + a)) * tilt,
        m13,
        p12,
        m12,
        p23,
        m23,
    };
    return LooBasis(3, std::move(obs), BasisTag::Transformed);
}

LooBasis horodecki_b_basis() {
    const LooBasis s = standard_basis(3);
    const CMatrix& l1 = s[0];
    const CMatrix& l2 = s[1];
    const CMatrix& l3 = s[2];
    std::vector<CMatrix> obs{
        (l1 + l2 + l3) / std::sqrt(3.0),
        (l3 - l1) / std::sqrt(2.0),
        (l1 + l3 - 2.0 * l2) / std::sqrt(6.0),
        s[slot_plus(3, 0, 2)],
        s[slot_minus(3, 0, 2)],
        s[slot_plus(3, 0, 1)],
        s[slot_minus(3, 0, 1)],
        s[slot_plus(3, 1, 2)],
        s[slot_minus(3, 1, 2)],
    };
    return LooBasis(3, std::move(obs), BasisTag::Transformed);
}

double horodecki_n2(double a) {
    const double den = 1.0 + 8.0 * a;
    return (1.0 - a) * a * a / ((2.0 + a) * den * den);
}

HorodeckiWitness horodecki_ew(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("horodecki_ew: a must lie in [0, 1]");
    const BipartiteState rho = horodecki_rho(a);
    LooBasis ab = horodecki_a_basis(a);
    LooBasis bb = horodecki_b_basis();

    RMatrix coeffs(9, 9);
    for (int mu = 0; mu < 9; ++mu)
        for (int nu = 0; nu < 9; ++nu)
            coeffs(mu, nu) = expectation(kron(ab[mu], bb[nu].transpose()), rho.rho());

    RVector n(8);
    for (int nu = 1; nu < 9; ++nu) n(nu - 1) = coeffs(0, nu) - coeffs(nu, 0);
    const double n2 = n.squaredNorm();
    const double scale = 1.0 / std::sqrt(1.0 + n2);

    RMatrix m = RMatrix::Identity(9, 9) * scale;
    for (int nu = 1; nu < 9; ++nu) {
        m(0, nu) = n(nu - 1) * scale;
        m(nu, 0) = -n(nu - 1) * scale;
    }

    Witness w;
    w.dims = DimPair(3, 3);
    w.op = correlation_witness_operator(ab, bb, m);
    w.kind = WitnessKind::Horodecki;
    w.params = {{"a", a}, {"n2", n2}};
    resolve_candidate(w);

    HorodeckiWitnessData data{a,  std::move(ab), std::move(bb), std::move(coeffs),
                              std::move(n), n2, std::move(m), a <= 0.0 || a >= 1.0};
    return {std::move(w), std::move(data)};
}

Witness perm_ew(const Permutation& sigma) {
    const int d = dim_from_slots(sigma.size());
    const LooBasis s = standard_basis(d);
    CMatrix sum = CMatrix::Zero(d * d, d * d);
    for (int mu = 0; mu < d * d; ++mu) sum += kron(s[sigma(mu)], s[mu].transpose());
    const int f = fixed_points(sigma);
    Witness w;
    w.dims = DimPair(d, d);
    w.op = hermitize(CMatrix::Identity(d * d, d * d) - sum);
    w.kind = WitnessKind::Permutation;
    std::vector<int> one_based;
    for (int v : sigma.map()) one_based.push_back(v + 1);
    w.params = {{"d", d},
                {"sigma", one_based},
                {"fixed_points", f},
                {"phi_expectation", d - f},
                {"phi_certified", f >= d + 1}};
    resolve_candidate(w);
    return w;
}

double expectation(const CMatrix& w, const CMatrix& rho) {
    if (w.rows() != rho.rows() || w.cols() != rho.cols()) {
        throw Error("expectation: dimension mismatch");
    }
    const cplx v = rho.cwiseProduct(w.transpose()).sum();
    if (std::abs(v.imag()) > 1e-9) {
        std::ostringstream os;
        os << "expectation: imaginary residue " << v.imag();
        throw Error(os.str());
    }
    return v.real();
}

double expectation(const Witness& w, const BipartiteState& rho) {
    if (!(w.dims == rho.dims())) throw Error("expectation: witness/state dimension mismatch");
    return expectation(w.op, rho.rho());
}

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j = matrix_to_json(w.op);
    j["dim_a"] = w.dims.a;
    j["dim_b"] = w.dims.b;
    j["provenance"] = {{"kind", to_string(w.kind)}, {"params", w.params}};
    j["candidate_only"] = w.candidate_only;
    j["min_eigenvalue"] = w.min_eigenvalue;
    return j;
}

}  // namespace loowit
