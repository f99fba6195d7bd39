#include "ramsey/catalog.hpp"
#include "ramsey/error.hpp"
#include "ramsey/fraisse.hpp"

#include <gtest/gtest.h>

using namespace ramsey;

namespace {

bool adjacent(const Structure& s, int x, int y) {
    const int t[2] = {x, y};
    return s.holds(0, t);
}

Structure chain(int n) {
    std::vector<Tuple> lt;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lt.push_back({i, j});
    return Structure(binary_signature(), n, {lt});
}

std::vector<Structure> graphs_up_to(int n) {
    std::vector<Structure> out;
    for (int i = 1; i <= n; ++i)
        for (auto& g : graphs_up_to_isomorphism(i)) out.push_back(g);
    return out;
}

}  // namespace

TEST(Ages, Membership) {
    EXPECT_TRUE(Age(AgeKind::graph).contains(path_graph(4)));
    EXPECT_FALSE(Age(AgeKind::graph).contains(Structure(binary_signature(), 2, {{{0, 1}}})));
    EXPECT_TRUE(Age(AgeKind::digraph).contains(Structure(binary_signature(), 2, {{{0, 1}}})));
    EXPECT_TRUE(Age(AgeKind::tournament).contains(chain(3)));
    EXPECT_FALSE(Age(AgeKind::tournament).contains(Structure(binary_signature(), 3, {{{0, 1}}})));
    EXPECT_TRUE(Age(AgeKind::poset).contains(chain(3)));
    EXPECT_FALSE(Age(AgeKind::poset).contains(Structure(binary_signature(), 3, {{{0, 1}, {1, 2}}})));
}

TEST(Stages, RoundZeroIsTheSeed) {
    auto st = saturate_stage(AgeKind::graph, 0, 3);
    EXPECT_EQ(st.size(), 3);
    EXPECT_TRUE(st.structure->tuples(0).empty());
}

TEST(Stages, GraphRoundOneGivesNeighbourAndNonNeighbour) {
    auto st = saturate_stage(AgeKind::graph, 1, 2);
    const auto& s = *st.structure;
    for (int v = 0; v < 2; ++v) {
        bool nb = false, non = false;
        for (int p = 2; p < s.size(); ++p) (adjacent(s, v, p) ? nb : non) = true;
        EXPECT_TRUE(nb && non) << v;
    }
}

TEST(Stages, TournamentRoundOneBeatsAndLoses) {
    auto st = saturate_stage(AgeKind::tournament, 1, 2);
    const auto& s = *st.structure;
    for (int v = 0; v < 2; ++v) {
        bool beats = false, loses = false;
        for (int p = 2; p < s.size(); ++p) {
            beats = beats || adjacent(s, v, p);
            loses = loses || adjacent(s, p, v);
        }
        EXPECT_TRUE(beats && loses);
    }
}

TEST(Stages, ExtensionAxioms) {
    for (auto kind : {AgeKind::graph, AgeKind::tournament, AgeKind::poset}) {
        auto st = saturate_stage(kind, 2, 1);
        EXPECT_TRUE(Age(kind).contains(*st.structure));
        EXPECT_TRUE(check_extension_axioms(st, 2, st.meta.round_ends[1])) << to_string(kind);
    }
    EXPECT_FALSE(check_extension_axioms(AgeKind::graph, edgeless_graph(2), 1));
    EXPECT_TRUE(check_extension_axioms(AgeKind::graph, edgeless_graph(2), 0));
}

TEST(Stages, CapAndBadArguments) {
    EXPECT_THROW(saturate_stage(AgeKind::digraph, 3, 1, 4096), CapExceeded);
    EXPECT_THROW(saturate_stage(AgeKind::graph, 1, 0), Error);
    EXPECT_THROW(saturate_stage(AgeKind::metric, 1, 1), Error);
}

TEST(OnePoint, Examples) {
    OnePointExtension jg(Age(AgeKind::graph));
    auto j = jg.apply(complete_graph(2));
    EXPECT_TRUE(is_isomorphic(j, graph_from_edges(3, {{0, 1}})));
    OnePointExtension jp(Age(AgeKind::poset));
    EXPECT_TRUE(is_isomorphic(jp.apply(chain(2)), chain(3)));
    OnePointExtension jt(Age(AgeKind::tournament));
    auto t = jt.apply(chain(2));
    EXPECT_TRUE(adjacent(t, 2, 0) && adjacent(t, 2, 1));
}

TEST(OnePoint, FunctorialOnSmallGraphs) {
    OnePointExtension jg(Age(AgeKind::graph));
    const auto gs = graphs_up_to(3);
    int checked = 0;
    for (const auto& a : gs)
        for (const auto& b : gs)
            for (const auto& c : gs)
                for (const auto& f : enumerate_embeddings(a, b))
                    for (const auto& g : enumerate_embeddings(b, c)) {
                        EXPECT_EQ(jg.apply(compose_embeddings(g, f)).map(),
                                  compose_embeddings(jg.apply(g), jg.apply(f)).map());
                        ++checked;
                    }
    EXPECT_GT(checked, 0);
}

TEST(Amalgams, FreeGraphAmalgamIsAPath) {
    Age age(AgeKind::graph);
    const auto a = edgeless_graph(1), k2 = complete_graph(2);
    auto am = strong_amalgam(age, a, k2, k2, {0}, {0});
    EXPECT_TRUE(is_isomorphic(am.d, path_graph(3)));
    EXPECT_TRUE(verify_amalgam(age, a, k2, k2, {0}, {0}, am));
}

TEST(Amalgams, TrivialAndPosetFence) {
    Age graphs(AgeKind::graph);
    auto same = strong_amalgam(graphs, path_graph(3), path_graph(3), path_graph(3), {0, 1, 2}, {0, 1, 2});
    EXPECT_TRUE(is_isomorphic(same.d, path_graph(3)));

    Age posets(AgeKind::poset);
    auto fence = strong_amalgam(posets, chain(1), chain(2), chain(2), {0}, {0});
    EXPECT_EQ(fence.d.size(), 3);
    EXPECT_TRUE(posets.contains(fence.d));
    EXPECT_TRUE(verify_amalgam(posets, chain(1), chain(2), chain(2), {0}, {0}, fence));
}

TEST(Amalgams, AllSmallGraphSpans) {
    Age age(AgeKind::graph);
    const auto gs = graphs_up_to(3);
    for (const auto& a : gs)
        for (const auto& b : gs)
            for (const auto& c : gs)
                for (const auto& f : enumerate_embeddings(a, b))
                    for (const auto& g : enumerate_embeddings(a, c)) {
                        auto am = strong_amalgam(age, a, b, c, f.map(), g.map());
                        EXPECT_TRUE(verify_amalgam(age, a, b, c, f.map(), g.map(), am));
                    }
}
