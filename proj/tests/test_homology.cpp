#include "dseries/homology.hpp"
#include "support.hpp"

using namespace dseries;
using testing::form;
using testing::thrown_kind;

namespace {
HomologyTable table(std::initializer_list<std::pair<int, Weight>> entries) {
    HomologyTable t;
    for (const auto& [p, mu] : entries) t.add(p, mu);
    return t;
}
}  // namespace

TEST_CASE("Kostant tables") {
    EqualRankForm a1 = form("A1", {true});
    // Trivial module: e gives 0 in degree 0, s gives s(-rho) + rho = 2 in degree 1.
    CHECK(kostant_table(a1.roots, a1.weyl, Weight{0}) == table({{0, Weight{0}}, {1, Weight{2}}}));
    EqualRankForm a2 = form("A2", {true, true});
    HomologyTable t = kostant_table(a2.roots, a2.weyl, Weight{-1, 0});
    std::vector<std::size_t> sizes;
    for (const auto& [p, row] : t.rows()) sizes.push_back(row.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(t.rows().at(0) == std::vector<Weight>{Weight{-1, 0}});
    CHECK(kostant_via_bgg(a2.roots, a2.weyl, Weight{-1, 0}) == t);
    CHECK(thrown_kind([&] { kostant_table(a2.roots, a2.weyl, Weight{1, -3}); }) == "NotAntidominant");
}

TEST_CASE("Schmid tables for sl(2,R)") {
    EqualRankForm f = form("A1", {false});
    auto orbits = enumerate_closed_orbits(f);
    // u = e: degree q - 0 = 1, weight lam + rho = -1. u = s: degree 1 - 1 = 0, weight 2 + 1 = 3.
    CHECK(schmid_table(f, orbits[0], Weight{-2}) == table({{1, Weight{-1}}}));
    CHECK(schmid_table(f, orbits[1], Weight{-2}) == table({{0, Weight{3}}}));
    for (const auto& o : orbits) CHECK(schmid_via_trauber(f, o, Weight{-2}) == schmid_table(f, o, Weight{-2}));
    CHECK(thrown_kind([&] { schmid_table(f, orbits[0], Weight{0}); }) == "NotStronglyAntidominant");
    CHECK(thrown_kind([&] { schmid_table(f, orbits[0], Weight::parse("-3/2")); }) == "NotCompatible");
}

TEST_CASE("Schmid tables for A2 with a1 compact") {
    EqualRankForm f = form("A2", {true, false});
    auto orbits = enumerate_closed_orbits(f);
    const Weight lam{-1, -1};
    // u = e, q = 2: w = e gives degree 2 weight 0; w = s1 gives 2 - 1 + 2 = 3 weight (2,-1).
    CHECK(schmid_table(f, orbits[0], lam) == table({{2, Weight{0, 0}}, {3, Weight{2, -1}}}));
    for (const auto& o : orbits) {
        CHECK(schmid_via_trauber(f, o, lam) == schmid_table(f, o, lam));
        CHECK(schmid_table(f, o, lam).total() == 2);
    }
}

TEST_CASE("resolution term indexing") {
    EqualRankForm f = form("A2", {true, false});
    auto orbits = enumerate_closed_orbits(f);
    ResolutionIndex bgg = bgg_terms(f.roots, f.weyl, Weight{0, 0});
    CHECK(bgg.terms.at(3).size() == 1);
    CHECK(bgg.terms.at(0).front().label == f.weyl.longest());
    ResolutionIndex tr = trauber_terms(f, orbits[0], Weight{-1, -1});
    // dim Q = 1: w = e at position 1 and w = s1 at position 0.
    CHECK(tr.terms.at(1).front().label == f.weyl.identity());
    CHECK(tr.terms.at(0).front().label == f.weyl.simple_reflection(0));
    const ResolutionGeometry geom{f.dim_x(), f.k_weyl.dim_q(), f.grading.q()};
    TermHomology h = term_homology_degree(ResolutionKind::trauber, f.weyl, f.k_weyl, f.weyl.simple_reflection(0),
                                          f.weyl.identity(), geom);
    // dim X - l(s1) + l_K(s1) = 3 - 1 + 1.
    CHECK(h.degree == 3);
    CHECK(h.rule == WeightRule::linear);
    h = term_homology_degree(ResolutionKind::bgg, f.weyl, f.k_weyl, f.weyl.simple_reflection(1), f.weyl.identity(),
                             geom);
    CHECK(h.degree == 3);
    CHECK(h.weight(f.roots, Weight{0, 0}) == f.weyl.simple_reflection(1).act(-f.roots.rho()) + f.roots.rho());
}

TEST_CASE("collapse shifts by the surviving position") {
    std::vector<ComponentTerms> comps(2);
    comps[0][0] = std::nullopt;
    comps[0][1] = TermClass{3, Weight{1}};
    comps[1][0] = TermClass{3, Weight{5}};
    CHECK(collapse(comps) == table({{2, Weight{1}}, {3, Weight{5}}}));
    comps[1][2] = TermClass{4, Weight{5}};
    CHECK(thrown_kind([&] { collapse(comps); }) == "CollapseAmbiguous");
}

TEST_CASE("all-compact Schmid tables are Kostant tables") {
    for (const char* type : {"A2", "B2", "G2"}) {
        EqualRankForm f = form(type, {true, true});
        auto orbits = enumerate_closed_orbits(f);
        REQUIRE(orbits.size() == 1);
        for (const Weight& lam : {Weight{-1, -1}, Weight{-2, -1}, Weight{-1, -3}}) {
            CHECK(schmid_table(f, orbits[0], lam) == kostant_table(f.roots, f.weyl, lam + f.roots.rho()));
        }
    }
}
