#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loowit/matcore.hpp"

namespace loowit {

/// Density matrix on a dA x dB system. Construction validates
/// Hermiticity, unit trace and positivity.
class BipartiteState {
public:
    BipartiteState(DimPair dims, CMatrix rho, std::string label = {});

    DimPair dims() const { return dims_; }
    int dim() const { return dims_.a; }
    const CMatrix& rho() const { return rho_; }
    const std::string& label() const { return label_; }

private:
    DimPair dims_;
    CMatrix rho_;
    std::string label_;
};

/// Throws Error naming the violated quantity ("hermiticity", "trace",
/// "positivity", "dimension").
void validate_density(const CMatrix& rho, DimPair dims);

struct FamilyParams {
    int d = 3;
    std::vector<double> a;

    FamilyParams() = default;
    FamilyParams(int d, std::vector<double> a);

    /// a_i with 1-based i wrapped cyclically into 1..d.
    double at(int i) const;
};

/// Unnormalized sum_i |i,i>.
CVector phi(int d);

/// 3x3 PPT entangled state rho_a, 0 <= a <= 1.
BipartiteState horodecki_rho(double a);

/// (a1/d)|Phi><Phi| + sum_{k, i>=2} (a_i/d) |k><k| (x) |k+i-1><k+i-1|.
BipartiteState family_rho(const FamilyParams& p);

/// a = (a1, a2, a1, ..., a1, a_d) with a_d = 1 - (d-2) a1 - a2.
FamilyParams family_special(int d, double a1, double a2);

bool family_separable_sufficient(const FamilyParams& p);
bool family_ppt_sufficient(const FamilyParams& p);

enum class ProductMode { Pure, Mixed };

BipartiteState random_product_state(DimPair dims, std::uint64_t seed,
                                    ProductMode mode = ProductMode::Mixed);

/// Dirichlet-weighted mixture of k random product states. Component 0 uses
/// `seed` directly, so k == 1 reproduces random_product_state(dims, seed).
BipartiteState random_separable_state(DimPair dims, int k, std::uint64_t seed,
                                      ProductMode mode = ProductMode::Mixed);

/// p |psi-><psi-| + (1-p) I/4.
BipartiteState werner2(double p);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const nlohmann::json& j);

BipartiteState load_state(const std::filesystem::path& path);
void save_state(const BipartiteState& s, const std::filesystem::path& path);

}  // namespace loowit
