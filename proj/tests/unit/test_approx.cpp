#include "ramsey/approx.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/error.hpp"

#include <gtest/gtest.h>

using namespace ramsey;

TEST(LinearScheme, PhiCutsAtTop) {
    LinearOrderScheme s(4, 8);
    auto x = s.phi(linear_order(2), OmegaEmbedding({1, 4, 7}));
    EXPECT_EQ(x.codomain.size(), 7);
    EXPECT_EQ(x.map.map(), (std::vector<int>{1, 4}));
}

TEST(LinearScheme, LiftSendsTopToTop) {
    LinearOrderScheme s(4, 8);
    for (const auto& f : enumerate_embeddings(linear_order(2), linear_order(4))) {
        auto fp = s.lift(f);
        EXPECT_EQ(fp(2), 4);
        EXPECT_EQ(fp(0), f(0));
        EXPECT_EQ(fp(1), f(1));
    }
}

TEST(LinearScheme, StarOfShift) {
    // h = shift by one, A = 1, B = 2, f = the embedding onto the top point
    LinearOrderScheme s(3, 8);
    Embedding f(linear_order(1), linear_order(2), {1});
    auto x = s.star(OmegaEmbedding({1, 2, 3, 4}), f);
    // iota(F(B)) = 0,1,2; h moves it to 1,2,3; Phi_B cuts at 3 and keeps 1,2; then f picks 2
    EXPECT_EQ(x.codomain.size(), 3);
    EXPECT_EQ(x.map.map(), (std::vector<int>{2}));
    EXPECT_THROW(s.star(OmegaEmbedding({0, 1}), f), CapExceeded);
}

TEST(LinearScheme, VerifiesExhaustively) {
    LinearOrderScheme s(4, 8);
    auto r = verify_scheme(s);
    EXPECT_GT(r.checked, 0u);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(verify_lift_functoriality(s).ok());
}

TEST(DualScheme, PhiAndStarMatchRigidSurjections) {
    DualOrderScheme s(3, 7);
    auto x = s.phi({2}, RigidSurjection(3, {0, 1, 0, 2, 1}));
    EXPECT_EQ(x.codomain.size, 3);
    EXPECT_EQ(x.map.surjection(), RigidSurjection(2, {0, 1, 0}));
    for (const auto& f : enumerate_rigid_surjections(3, 2))
        for (const auto& h : enumerate_rigid_surjections(6, 4))
            EXPECT_EQ(s.star(h, DualMorphism(f)).map.surjection(), star_finite(h, f));
}

TEST(DualScheme, PhiAfterLiftIsIdentity) {
    DualOrderScheme s(3, 7);
    for (int n = 1; n <= 3; ++n)
        for (const auto& f : enumerate_rigid_surjections(n, n)) {
            auto fp = s.lift(DualMorphism(f));
            EXPECT_EQ(phi_restrict(fp.surjection()), f);
        }
}

TEST(DualScheme, VerifiesExhaustively) {
    DualOrderScheme s(3, 7);
    auto r = verify_scheme(s, 2);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checked, verify_scheme(s, 1).checked);
}

TEST(EnumeratedScheme, PhiOnHandBuiltStage) {
    EnumeratedStructure st;
    st.age = AgeKind::graph;
    st.structure = std::make_shared<const Structure>(graph_from_edges(6, {{0, 2}, {1, 3}, {1, 4}}).with_identity_order());
    st.meta = {0, 6, {6}};
    EnumeratedScheme s(st, 3);
    const auto a = complete_graph(2).with_identity_order();
    const auto fa = s.extend(a);
    Embedding u(fa, *st.structure, {0, 2, 5});
    auto x = s.phi(a, u);
    EXPECT_EQ(x.codomain.size(), 5);
    EXPECT_TRUE(is_isomorphic(x.codomain.without_order(), induced_substructure(*st.structure, {0, 1, 2, 3, 4}).without_order()));
    EXPECT_EQ(x.map.map(), (std::vector<int>{0, 2}));
}

TEST(EnumeratedScheme, InitialSegmentGivesInclusion) {
    auto st = saturate_stage(AgeKind::graph, 2, 2);
    EnumeratedScheme s(st, 3);
    for (const auto& a : s.objects()) {
        auto fa = s.extend(a);
        auto u = s.iota(fa);
        bool initial = true;
        for (int i = 0; i < fa.size(); ++i) initial = initial && u(i) == i;
        if (!initial) continue;
        auto x = s.phi(a, u);
        for (int i = 0; i < a.size(); ++i) EXPECT_EQ(x.map(i), i);
    }
}

TEST(EnumeratedScheme, GraphAndTournamentStagesVerify) {
    auto graph = saturate_stage(AgeKind::graph, 2, 2);
    EXPECT_GE(graph.size(), 12);
    EXPECT_TRUE(verify_scheme(EnumeratedScheme(graph, 3)).ok());
    auto tour = saturate_stage(AgeKind::tournament, 2, 1);
    EnumeratedScheme ts(tour, 3);
    EXPECT_TRUE(verify_scheme(ts).ok());
    EXPECT_TRUE(verify_lift_functoriality(ts).ok());
}

TEST(Schemes, FindLiftPrefersOwnLift) {
    LinearOrderScheme s(3, 6);
    const auto a = linear_order(1), b = linear_order(3);
    for (const auto& f : enumerate_embeddings(a, b))
        for (const auto& u : s.probes(s.extend(b))) {
            auto lift = find_lift(s, a, b, f, u);
            ASSERT_TRUE(lift);
            EXPECT_EQ(lift->map(), s.lift(f).map());
        }
}
