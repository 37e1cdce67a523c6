#include "doctest.h"
#include "loowit/random.hpp"
#include "loowit/witness.hpp"
#include "oracles.hpp"

using namespace loowit;

TEST_CASE("ew_from_transform with identity gives I - |Phi><Phi|") {
    for (int d = 2; d <= 4; ++d) {
        const Witness w = ew_from_transform(OrthTransform::identity(d));
        const CVector ph = phi(d);
        CHECK(max_abs(w.op - (CMatrix::Identity(d * d, d * d) - ph * ph.adjoint())) <= 1e-12);
        CHECK(w.min_eigenvalue == doctest::Approx(1.0 - d).epsilon(1e-12));
        CHECK_FALSE(w.candidate_only);
    }
}

TEST_CASE("ew_from_transform with the transpose transform gives I - SWAP") {
    const Witness w = ew_from_transform(transpose_transform(3));
    CHECK(max_abs(w.op - (CMatrix::Identity(9, 9) - oracle::swap_operator(3))) <= 1e-12);
    // I - SWAP = 2 P_antisym is PSD: a valid but never-violated operator.
    CHECK(w.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w.candidate_only);
}

TEST_CASE("correlation witnesses are nonnegative on product states") {
    Rng rng(31);
    const LooBasis s = standard_basis(3);
    const DimPair dims(3, 3);
    for (int t = 0; t < 30; ++t) {
        const RMatrix o = random_orthogonal(9, rng);
        const CMatrix w = correlation_witness_operator(s, s, o);
        CHECK(is_hermitian(w));
        for (std::uint64_t k = 0; k < 10; ++k) {
            const BipartiteState p = random_product_state(dims, derive_seed(t, k));
            CHECK(expectation(w, p.rho()) >= -1e-9);
            CHECK(expectation(w, p.rho()) ==
                  doctest::Approx(oracle::trace_product(p.rho(), w).real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("horodecki bases are orthonormal and n^2 matches the closed form") {
    for (int k = 1; k <= 9; ++k) {
        const double a = 0.1 * k;
        const HorodeckiWitness hw = horodecki_ew(a);
        CHECK(hw.data.a_basis.gram_deviation() <= 1e-12);
        CHECK(hw.data.b_basis.gram_deviation() <= 1e-12);
        CHECK(hw.data.n2 == doctest::Approx(horodecki_n2(a)).epsilon(1e-10));
        CHECK(hw.data.coeffs.trace() == doctest::Approx(1.0).epsilon(1e-10));
        // M^T M has spectrum {1, 1, 1/(1+n^2) x7}: a contraction touching norm one.
        const RMatrix mtm = hw.data.m.transpose() * hw.data.m;
        const auto ev = oracle::general_eigenvalues(mtm.cast<cplx>());
        CHECK(ev.back() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ev[7] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ev.front() == doctest::Approx(1.0 / (1.0 + hw.data.n2)).epsilon(1e-12));
        CHECK_FALSE(hw.data.degenerate);
    }
    CHECK(horodecki_n2(0.0) == 0.0);
    CHECK(horodecki_n2(1.0) == 0.0);
    CHECK(horodecki_ew(0.0).data.degenerate);
}

TEST_CASE("horodecki witness detects rho_a") {
    for (int k = 1; k <= 19; ++k) {
        const double a = 0.05 * k;
        const HorodeckiWitness hw = horodecki_ew(a);
        const double v = expectation(hw.witness, horodecki_rho(a));
        CHECK(v == doctest::Approx(1.0 - std::sqrt(1.0 + horodecki_n2(a))).epsilon(1e-9));
        CHECK(v < 0.0);
        CHECK_FALSE(hw.witness.candidate_only);
    }
}

TEST_CASE("perm_ew") {
    SUBCASE("identity permutation is the Phi witness") {
        const Witness w = perm_ew(Permutation::identity(9));
        CHECK(w.params["fixed_points"] == 9);
        CHECK(w.params["phi_expectation"] == -6);
        CHECK(w.params["phi_certified"] == true);
        const CVector ph = phi(3);
        CHECK((ph.adjoint() * w.op * ph)(0).real() == doctest::Approx(-6.0));
    }
    SUBCASE("diagonal cycle") {
        const Witness w = perm_ew(diag_cycle(3, 1));
        CHECK(w.params["fixed_points"] == 6);
        CHECK(w.params["phi_certified"] == true);
        CHECK_FALSE(w.candidate_only);
        CHECK(w.min_eigenvalue == doctest::Approx(oracle::general_min_eigenvalue(w.op)).epsilon(1e-10));
    }
    SUBCASE("few fixed points still resolved by eigensolve") {
        const Witness w = perm_ew(Permutation({1, 0, 3, 2}));
        CHECK(w.params["fixed_points"] == 0);
        CHECK(w.params["phi_certified"] == false);
        CHECK(w.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK_FALSE(w.candidate_only);
    }
    SUBCASE("nonnegative on product states") {
        const Witness w = perm_ew(diag_cycle(3, 2));
        for (std::uint64_t s = 0; s < 50; ++s)
            CHECK(expectation(w, random_product_state(DimPair(3, 3), s)) >= -1e-9);
    }
}

TEST_CASE("expectation guards") {
    CMatrix anti = CMatrix::Zero(4, 4);
    anti(0, 1) = cplx(0.0, 1.0);
    CMatrix rho = CMatrix::Identity(4, 4) / 4.0;
    rho(1, 0) = 0.1;
    CHECK_THROWS_WITH_AS(expectation(anti, rho), doctest::Contains("imaginary"), Error);
    CHECK_THROWS_AS(expectation(CMatrix::Identity(4, 4), CMatrix::Identity(9, 9)), Error);
    CHECK_THROWS_AS(expectation(perm_ew(diag_cycle(3, 1)), werner2(0.3)), Error);
}

TEST_CASE("witness json") {
    const nlohmann::json j = witness_to_json(perm_ew(diag_cycle(3, 1)));
    CHECK(j["provenance"]["kind"] == "permutation");
    CHECK(j["dim_a"] == 3);
    CHECK(j["candidate_only"] == false);
    CHECK(max_abs(matrix_from_json(j) - perm_ew(diag_cycle(3, 1)).op) <= 1e-15);
}
