#include "dseries/oracles.hpp"
#include "dseries/weylgroup.hpp"
#include "support.hpp"

#include <map>

using namespace dseries;
using testing::thrown_kind;

TEST_CASE("Weyl group orders") {
    // |W(A_n)| = (n+1)!, |W(B_n)| = |W(C_n)| = 2^n n!, |W(D4)| = 192, |W(G2)| = 12, |W(F4)| = 1152.
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48},
        {"G2", 12}, {"D4", 192}, {"F4", 1152}, {"A1xB2", 16}};
    for (const auto& [type, order] : cases) {
        CAPTURE(type);
        RootSystem rs = RootSystem::build(cartan_matrix(type));
        WeylGroup W = WeylGroup::generate(rs);
        CHECK(W.order() == order);
        CHECK(oracle::weyl_order_by_left_closure(rs.cartan()) == order);
        CHECK(W.max_length() == static_cast<int>(rs.num_positive_roots()));
    }
}

TEST_CASE("A2 lengths, words and signs") {
    RootSystem rs = RootSystem::build(cartan_matrix("A2"));
    WeylGroup W = WeylGroup::generate(rs);
    std::map<int, int> fiber;
    for (const WeylElement& w : W.elements()) {
        ++fiber[w.length()];
        CHECK(w.length() == inversion_count(rs, w));
        CHECK(w.determinant() == w.sign());
    }
    CHECK(fiber == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
    CHECK(W.identity().word_string() == "e");
    CHECK(W.simple_reflection(0).word_string() == "s1");
    CHECK(W.simple_reflection(0).act(rs.rho()) == Weight{-1, 2});
    // w0 = -1 on the weight lattice composed with the diagram flip for A2: w0 rho = -rho.
    CHECK(W.longest().act(rs.rho()) == -rs.rho());
    CHECK(W.longest().length() == 3);
}

TEST_CASE("composition, inverses and reflections") {
    RootSystem rs = RootSystem::build(cartan_matrix("B3"));
    WeylGroup W = WeylGroup::generate(rs);
    const Weight mu{-1, 2, -3};
    for (const WeylElement& w : W.elements()) {
        CHECK(W.compose(w, W.inverse(w)) == W.identity());
        CHECK(W.compose(w, W.simple_reflection(1)).act(mu) == w.act(W.simple_reflection(1).act(mu)));
    }
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const WeylElement& s = W.reflection(rs, k);
        CHECK(W.compose(s, s) == W.identity());
        CHECK(s.sign() == -1);
        SignedRoot image = apply_to_root(rs, s, k);
        CHECK(image.index == k);
        CHECK(image.sign == -1);
    }
}

TEST_CASE("group size guard") {
    RootSystem rs = RootSystem::build(cartan_matrix("B3"));
    CHECK(thrown_kind([&] { WeylGroup::generate(rs, 10); }) == "GroupTooLarge");
}
