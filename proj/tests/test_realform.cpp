#include "dseries/oracles.hpp"
#include "dseries/realform.hpp"
#include "support.hpp"

#include <random>

using namespace dseries;
using testing::form;
using testing::thrown_kind;

TEST_CASE("A1 noncompact") {
    EqualRankForm f = form("A1", {false});
    CHECK(f.grading.q() == 1);
    CHECK(f.weyl.order() == 2);
    CHECK(f.k_weyl.order() == 1);
    CHECK(f.k_weyl.dim_q() == 0);
    CHECK(f.grading.rho_c() == Weight{0});
    CHECK(f.grading.rho_n() == Weight{1});
}

TEST_CASE("A2 with one compact simple root") {
    EqualRankForm f = form("A2", {true, false});
    // a1 compact, a2 noncompact, so a1 + a2 is noncompact.
    CHECK(f.grading.sign_of(0) == 1);
    CHECK(f.grading.sign_of(1) == -1);
    CHECK(f.grading.sign_of(2) == -1);
    CHECK(f.grading.q() == 2);
    CHECK(f.k_weyl.order() == 2);
    CHECK(f.k_weyl.dim_q() == 1);
    // rho_c = a1 / 2 = (1, -1/2); rho_n = (a2 + a1 + a2) / 2 = (0, 3/2).
    CHECK(f.grading.rho_c() == Weight::parse("1,-1/2"));
    CHECK(f.grading.rho_n() == Weight::parse("0,3/2"));
    CHECK(f.k_weyl.simple_k() == std::vector<std::size_t>{0});
    CHECK(f.k_weyl.length_k(f.weyl.simple_reflection(0)) == 1);
    CHECK_FALSE(f.k_weyl.contains(f.weyl.simple_reflection(1)));
    CHECK(thrown_kind([&] { f.k_weyl.length_k(f.weyl.simple_reflection(1)); }) == "InternalInvariant");
}

TEST_CASE("B2 with both simple roots noncompact") {
    EqualRankForm f = form("B2", {false, false});
    // With both simple roots noncompact the sign of n1 a1 + n2 a2 is (-1)^(n1 + n2).
    int compact = 0;
    for (std::size_t k = 0; k < f.roots.num_positive_roots(); ++k) {
        const auto& c = f.roots.positive_roots()[k].root_coords;
        const int expected = ((c[0] + c[1]) % 2 == 0) ? 1 : -1;
        CHECK(f.grading.sign_of(k) == expected);
        compact += expected > 0;
    }
    // Only a1 + a2 has an even coefficient sum.
    CHECK(compact == 1);
    CHECK(f.k_weyl.order() == 2);
}

TEST_CASE("validate_grading") {
    RootSystem rs = RootSystem::build(cartan_matrix("A2"));
    // Order of roots: a1, a2, a1 + a2.
    CHECK(validate_grading(rs, std::vector<int>{1, -1, -1}));
    CHECK(validate_grading(rs, std::vector<int>{-1, -1, 1}));
    CHECK_FALSE(validate_grading(rs, std::vector<int>{1, 1, -1}));
    CHECK_FALSE(validate_grading(rs, std::vector<int>{-1, -1, -1}));
    CHECK(thrown_kind([&] { validate_grading(rs, std::vector<int>{1, 1}); }) == "IncompleteAssignment");
    CHECK(thrown_kind([&] { validate_grading(rs, std::vector<int>{1, 0, 1}); }) == "IncompleteAssignment");
}

TEST_CASE("validate_grading agrees with the restriction oracle on random assignments") {
    std::mt19937 rng(7);
    for (const char* type : {"A3", "B3", "G2", "C3"}) {
        RootSystem rs = RootSystem::build(cartan_matrix(type));
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> a(rs.num_positive_roots());
            for (int& x : a) x = rng() % 2 ? 1 : -1;
            CHECK(validate_grading(rs, a) == oracle::is_multiplicative_by_restriction(rs, a));
        }
    }
}

TEST_CASE("compact flags must cover every simple root") {
    CHECK(thrown_kind([] { form("A2", {true}); }) == "DimensionMismatch");
}
