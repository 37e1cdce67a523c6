#include <filesystem>

#include "doctest.h"
#include "loowit/states.hpp"
#include "oracles.hpp"

using namespace loowit;

TEST_CASE("phi vector") {
    const CVector v = phi(3);
    CHECK(v.size() == 9);
    CHECK(v.squaredNorm() == doctest::Approx(3.0));
    CHECK(v(0) == cplx(1.0));
    CHECK(v(4) == cplx(1.0));
    CHECK(v(8) == cplx(1.0));
    CHECK(v(1) == cplx(0.0));
}

TEST_CASE("horodecki state") {
    for (double a : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        const BipartiteState s = horodecki_rho(a);
        CHECK(s.rho().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(is_psd(s.rho()).psd);
        CHECK(is_hermitian(s.rho()));
    }
    // Explicit entries at a = 0.5: N = 8a + 1 = 5.
    const CMatrix r = horodecki_rho(0.5).rho();
    CHECK(r(0, 0).real() == doctest::Approx(0.1));
    CHECK(r(0, 4).real() == doctest::Approx(0.1));
    CHECK(r(6, 6).real() == doctest::Approx(0.15));
    CHECK(r(6, 8).real() == doctest::Approx(std::sqrt(0.75) / 10.0));
    CHECK(r(8, 8).real() == doctest::Approx(0.15));
    CHECK(r(8, 0).real() == doctest::Approx(0.1));
    CHECK_THROWS_AS(horodecki_rho(-0.1), Error);
    CHECK_THROWS_AS(horodecki_rho(1.1), Error);
}

TEST_CASE("family state") {
    const FamilyParams p(3, {0.25, 0.65, 0.10});
    CHECK(p.at(1) == 0.25);
    CHECK(p.at(4) == 0.25);
    CHECK(p.at(0) == 0.10);
    const BipartiteState s = family_rho(p);
    CHECK(s.rho().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.rho()(0, 4).real() == doctest::Approx(0.25 / 3.0));
    // |1,2> carries a_2/d, |1,3> carries a_3/d.
    CHECK(s.rho()(1, 1).real() == doctest::Approx(0.65 / 3.0));
    CHECK(s.rho()(2, 2).real() == doctest::Approx(0.10 / 3.0));
    CHECK(s.rho()(5, 5).real() == doctest::Approx(0.65 / 3.0));

    const FamilyParams q = family_special(4, 0.2, 0.3);
    CHECK(q.a.size() == 4u);
    CHECK(q.a[2] == doctest::Approx(0.2));
    CHECK(q.a[3] == doctest::Approx(0.3));
    CHECK_THROWS_AS(family_special(3, 0.6, 0.6), Error);
    CHECK_THROWS_AS(FamilyParams(3, {0.5, 0.5, 0.5}), Error);
    CHECK_THROWS_AS(FamilyParams(3, {1.2, -0.1, -0.1}), Error);
}

TEST_CASE("family sufficient conditions") {
    CHECK(family_separable_sufficient(FamilyParams(3, {0.3, 0.35, 0.35})));
    CHECK_FALSE(family_separable_sufficient(FamilyParams(3, {0.5, 0.25, 0.25})));
    CHECK(family_ppt_sufficient(FamilyParams(3, {0.25, 0.65, 0.10})));
    CHECK_FALSE(family_ppt_sufficient(FamilyParams(3, {0.3, 0.65, 0.05})));
    // PPT closed form agrees with a direct partial transpose.
    for (const auto& a : std::vector<std::vector<double>>{
             {0.25, 0.65, 0.10}, {0.2, 0.5, 0.3}, {0.3, 0.65, 0.05}, {0.1, 0.2, 0.3, 0.4}}) {
        const int d = static_cast<int>(a.size());
        const BipartiteState s = family_rho(FamilyParams(d, a));
        const double direct = oracle::general_min_eigenvalue(
            partial_transpose(s.rho(), s.dims(), Subsystem::B));
        CHECK(direct == doctest::Approx(oracle::family_ppt_min(a)).epsilon(1e-12));
        CHECK(family_ppt_sufficient(FamilyParams(d, a)) == (direct >= -1e-12));
    }
}

TEST_CASE("random product and separable states") {
    const DimPair dims(3, 3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BipartiteState p = random_product_state(dims, seed);
        CHECK(p.rho().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(is_psd(p.rho()).psd);
        CHECK(is_psd(partial_transpose(p.rho(), dims, Subsystem::B)).psd);
        const BipartiteState pure = random_product_state(dims, seed, ProductMode::Pure);
        CHECK((pure.rho() * pure.rho()).trace().real() == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(max_abs(random_product_state(dims, 4).rho() - random_separable_state(dims, 1, 4).rho()) <
          1e-15);
    CHECK(max_abs(random_separable_state(dims, 5, 1).rho() - random_separable_state(dims, 5, 1).rho()) ==
          0.0);
    CHECK(max_abs(random_separable_state(dims, 5, 1).rho() - random_separable_state(dims, 5, 2).rho()) >
          1e-6);
}

TEST_CASE("werner state") {
    const BipartiteState w = werner2(1.0);
    CHECK(w.rho()(1, 1).real() == doctest::Approx(0.5));
    CHECK(w.rho()(1, 2).real() == doctest::Approx(-0.5));
    CHECK(min_eigenvalue(partial_transpose(werner2(0.5).rho(), w.dims(), Subsystem::B)) ==
          doctest::Approx(-0.125));
    CHECK(is_psd(partial_transpose(werner2(1.0 / 3.0).rho(), w.dims(), Subsystem::B)).psd);
}

TEST_CASE("validation errors name the violated quantity") {
    const DimPair dims(2, 2);
    CMatrix m = CMatrix::Identity(4, 4) / 4.0;
    CHECK_NOTHROW(BipartiteState(dims, m));

    CMatrix bad_trace = CMatrix::Identity(4, 4) / 2.0;
    CHECK_THROWS_WITH_AS(BipartiteState(dims, bad_trace), doctest::Contains("trace"), Error);

    CMatrix nonherm = m;
    nonherm(0, 1) = 0.1;
    CHECK_THROWS_WITH_AS(BipartiteState(dims, nonherm), doctest::Contains("hermiticity"), Error);

    CMatrix neg = CMatrix::Zero(4, 4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(BipartiteState(dims, neg), doctest::Contains("positivity"), Error);

    CHECK_THROWS_WITH_AS(BipartiteState(dims, CMatrix::Identity(9, 9) / 9.0),
                         doctest::Contains("dimension"), Error);
    CHECK_THROWS_AS(DimPair(1, 3), Error);
}

TEST_CASE("json round trip") {
    const BipartiteState s = random_separable_state(DimPair(3, 3), 4, 77);
    const BipartiteState back = state_from_json(state_to_json(s));
    CHECK(max_abs(back.rho() - s.rho()) <= 1e-15);
    CHECK(back.dims().a == 3);
    CHECK(back.label() == s.label());

    const auto path = std::filesystem::temp_directory_path() / "loowit_state_rt.json";
    save_state(horodecki_rho(0.3), path);
    CHECK(max_abs(load_state(path).rho() - horodecki_rho(0.3).rho()) <= 1e-15);
    std::filesystem::remove(path);

    nlohmann::json j = state_to_json(werner2(0.2));
    j["re"][0][0] = 0.9;
    CHECK_THROWS_WITH_AS(state_from_json(j), doctest::Contains("trace"), Error);
    j = state_to_json(werner2(0.2));
    j["im"][0][1] = 0.3;
    CHECK_THROWS_WITH_AS(state_from_json(j), doctest::Contains("hermiticity"), Error);
    CHECK_THROWS_AS(load_state("/nonexistent/state.json"), Error);
}
