#include "loowit/states.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "loowit/random.hpp"

namespace loowit {

namespace {

constexpr double kTraceTol = 1e-9;
constexpr double kSimplexTol = 1e-12;

}  // namespace

void validate_density(const CMatrix& rho, DimPair dims) {
    if (rho.rows() != dims.total() || rho.cols() != dims.total()) {
        std::ostringstream os;
        os << "dimension: matrix is " << rho.rows() << "x" << rho.cols() << ", expected "
           << dims.total() << "x" << dims.total();
        throw Error(os.str());
    }
    const double herm = hermiticity_defect(rho);
    if (herm > kHermitianTol * std::max(1.0, max_abs(rho))) {
        std::ostringstream os;
        os << "hermiticity: max |rho - rho^dagger| = " << herm;
        throw Error(os.str());
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os.precision(12);
        os << "trace: Tr(rho) = " << tr << ", expected 1";
        throw Error(os.str());
    }
    const double lo = min_eigenvalue(rho);
    if (lo < -kPsdTol) {
        std::ostringstream os;
        os << "positivity: min eigenvalue " << lo;
        throw Error(os.str());
    }
}

BipartiteState::BipartiteState(DimPair dims, CMatrix rho, std::string label)
    : dims_(dims), rho_(std::move(rho)), label_(std::move(label)) {
    validate_density(rho_, dims_);
}

FamilyParams::FamilyParams(int d_, std::vector<double> a_) : d(d_), a(std::move(a_)) {
    if (d < 2) throw Error("family: d must be >= 2");
    if (static_cast<int>(a.size()) != d) throw Error("family: need exactly d weights");
    double sum = 0.0;
    for (double v : a) {
        if (v < 0.0) throw Error("family: weights must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSimplexTol) {
        std::ostringstream os;
        os.precision(15);
        os << "family: weights sum to " << sum << ", expected 1";
        throw Error(os.str());
    }
}

double FamilyParams::at(int i) const {
    const int idx = (((i - 1) % d) + d) % d;
    return a[idx];
}

CVector phi(int d) {
    if (d < 2) throw Error("phi: d must be >= 2");
    CVector v = CVector::Zero(d * d);
    for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
    return v;
}

BipartiteState horodecki_rho(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("horodecki_rho: a must lie in [0, 1]");
    CMatrix r = CMatrix::Zero(9, 9);
    for (int i : {0, 4, 8})
        for (int j : {0, 4, 8}) r(i, j) = a;
    for (int i : {1, 2, 3, 5, 7}) r(i, i) = a;
    r(6, 6) = (1.0 + a) / 2.0;
    r(8, 8) = (1.0 + a) / 2.0;
    const double off = std::sqrt(1.0 - a * a) / 2.0;
    r(6, 8) = off;
    r(8, 6) = off;
    r /= 1.0 + 8.0 * a;
    std::ostringstream label;
    label << "horodecki:a=" << a;
    return BipartiteState(DimPair(3, 3), std::move(r), label.str());
}

BipartiteState family_rho(const FamilyParams& p) {
    const int d = p.d;
    const CVector ph = phi(d);
    CMatrix r = (p.a[0] / d) * (ph * ph.adjoint());
    for (int k = 1; k <= d; ++k)
        for (int i = 2; i <= d; ++i) {
            const int partner = ((k + i - 2) % d) + 1;
            const int idx = (k - 1) * d + (partner - 1);
            r(idx, idx) += p.a[i - 1] / d;
        }
    std::ostringstream label;
    label << "family:d=" << d;
    return BipartiteState(DimPair(d, d), std::move(r), label.str());
}

FamilyParams family_special(int d, double a1, double a2) {
    if (d < 3) throw Error("family_special: d must be >= 3");
    if (a1 < 0.0 || a2 < 0.0) throw Error("family_special: a1 and a2 must be nonnegative");
    double ad = 1.0 - (d - 2) * a1 - a2;
    if (ad < 0.0) {
        if (ad > -kSimplexTol) {
            ad = 0.0;
        } else {
            std::ostringstream os;
            os << "family_special: a_d = " << ad << " is negative";
            throw Error(os.str());
        }
    }
    std::vector<double> a(d, a1);
    a[1] = a2;
    a[d - 1] = ad;
    return FamilyParams(d, std::move(a));
}

bool family_separable_sufficient(const FamilyParams& p) {
    for (int i = 2; i <= p.d; ++i)
        if (p.at(i) < p.at(1)) return false;
    return true;
}

bool family_ppt_sufficient(const FamilyParams& p) {
    const double a1sq = p.at(1) * p.at(1);
    for (int i = 1; i <= p.d - 1; ++i)
        if (p.at(i + 1) * p.at(p.d - i + 1) < a1sq) return false;
    return true;
}

namespace {

CMatrix random_factor(int d, Rng& rng, ProductMode mode) {
    return mode == ProductMode::Pure ? random_pure_density(d, rng) : random_mixed_density(d, rng);
}

CMatrix product_matrix(DimPair dims, std::uint64_t seed, ProductMode mode) {
    Rng rng(seed);
    const CMatrix a = random_factor(dims.a, rng, mode);
    const CMatrix b = random_factor(dims.b, rng, mode);
    CMatrix r = kron(a, b);
    return 0.5 * (r + r.adjoint());
}

}  // namespace

BipartiteState random_product_state(DimPair dims, std::uint64_t seed, ProductMode mode) {
    return BipartiteState(dims, product_matrix(dims, seed, mode), "random-product");
}

BipartiteState random_separable_state(DimPair dims, int k, std::uint64_t seed,
                                      ProductMode mode) {
    if (k < 1) throw Error("random_separable_state: k must be >= 1");
    Rng weight_rng(derive_seed(seed, std::numeric_limits<std::uint64_t>::max()));
    const RVector w = k == 1 ? RVector::Ones(1) : random_simplex(k, weight_rng);
    CMatrix r = CMatrix::Zero(dims.total(), dims.total());
    for (int i = 0; i < k; ++i) {
        const std::uint64_t s = i == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(i));
        r += w(i) * product_matrix(dims, s, mode);
    }
    return BipartiteState(dims, std::move(r), "random-separable");
}

BipartiteState werner2(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("werner2: p must lie in [0, 1]");
    CVector psi = CVector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    CMatrix r = p * (psi * psi.adjoint()) + (1.0 - p) / 4.0 * CMatrix::Identity(4, 4);
    std::ostringstream label;
    label << "werner2:p=" << p;
    return BipartiteState(DimPair(2, 2), std::move(r), label.str());
}

nlohmann::json matrix_to_json(const CMatrix& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json rrow = nlohmann::json::array();
        nlohmann::json irow = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("re")) throw Error("matrix JSON: missing \"re\"");
    const auto& re = j.at("re");
    if (!re.is_array() || re.empty() || !re[0].is_array() || re[0].empty()) {
        throw Error("matrix JSON: \"re\" must be a non-empty 2-D array");
    }
    const auto rows = static_cast<Eigen::Index>(re.size());
    const auto cols = static_cast<Eigen::Index>(re[0].size());
    const bool has_im = j.contains("im");
    if (has_im && (!j.at("im").is_array() || j.at("im").size() != re.size())) {
        throw Error("matrix JSON: \"im\" shape differs from \"re\"");
    }
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& rrow = re[r];
        if (!rrow.is_array() || static_cast<Eigen::Index>(rrow.size()) != cols) {
            throw Error("matrix JSON: ragged \"re\" rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            double imv = 0.0;
            if (has_im) {
                const auto& irow = j.at("im")[r];
                if (!irow.is_array() || static_cast<Eigen::Index>(irow.size()) != cols) {
                    throw Error("matrix JSON: ragged \"im\" rows");
                }
                imv = irow[c].get<double>();
            }
            m(r, c) = cplx(rrow[c].get<double>(), imv);
        }
    }
    return m;
}

nlohmann::json state_to_json(const BipartiteState& s) {
    nlohmann::json j = matrix_to_json(s.rho());
    j["dim_a"] = s.dims().a;
    j["dim_b"] = s.dims().b;
    if (!s.label().empty()) j["label"] = s.label();
    return j;
}

BipartiteState state_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("dim_a") || !j.contains("dim_b")) {
            throw Error("state JSON: missing dim_a/dim_b");
        }
        const DimPair dims(j.at("dim_a").get<int>(), j.at("dim_b").get<int>());
        CMatrix rho = matrix_from_json(j);
        std::string label = j.value("label", std::string{});
        return BipartiteState(dims, std::move(rho), std::move(label));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("state JSON: ") + e.what());
    }
}

BipartiteState load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open state file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("malformed state file " + path.string() + ": " + e.what());
    }
    return state_from_json(j);
}

void save_state(const BipartiteState& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write state file " + path.string());
    out << state_to_json(s).dump(1) << '\n';
}

}  // namespace loowit
