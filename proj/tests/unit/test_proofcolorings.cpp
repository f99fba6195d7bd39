#include "ramsey/catalog.hpp"
#include "ramsey/error.hpp"
#include "ramsey/proofcolorings.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ramsey;

namespace {

using Direct = DirectCategory;

ArrowInstance<Direct> k2_k3(const GroupFamily& fam) {
    return build_arrow_instance<Direct>(complete_graph(2), complete_graph(3), complete_graph(3), fam);
}

}  // namespace

TEST(ProofColorings, QuotientLookup) {
    auto inst = k2_k3(GroupFamily::full_automorphism());
    std::vector<int> chi = {0, 1, 2};
    auto lifted = quotient_coloring(inst, chi);
    ASSERT_EQ(lifted.size(), 6u);
    for (std::size_t i = 0; i < lifted.size(); ++i) EXPECT_EQ(lifted[i], chi[static_cast<std::size_t>(inst.class_of[i])]);
    EXPECT_TRUE(verify_quotient(inst, chi, lifted));
    auto constant = quotient_coloring(inst, std::vector<int>{1, 1, 1});
    EXPECT_EQ(std::set<int>(constant.begin(), constant.end()).size(), 1u);
}

TEST(ProofColorings, PowersetTokens) {
    auto inst = k2_k3(GroupFamily::full_automorphism());
    std::vector<int> chi(inst.hom_ac.size(), 0);
    for (const auto& t : powerset_coloring(inst, chi)) EXPECT_EQ(t.color_set, 1u);
    // injective on every class: each token has two elements
    for (std::size_t i = 0; i < chi.size(); ++i) chi[i] = inst.alpha_of[i];
    auto tokens = powerset_coloring(inst, chi);
    for (const auto& t : tokens) EXPECT_EQ(std::popcount(t.color_set), 2);
    EXPECT_TRUE(verify_powerset(inst, chi, tokens));
}

TEST(ProofColorings, FactorTokens) {
    auto inst = k2_k3(GroupFamily::full_automorphism());
    auto xi = factor_coloring(inst, std::vector<int>{0, 1, 2});
    EXPECT_EQ(std::set<ColorToken>(xi.begin(), xi.end()).size(), 6u);

    auto plain = k2_k3(GroupFamily::identity_only());
    std::vector<int> chi(plain.classes_ac.size());
    for (std::size_t i = 0; i < chi.size(); ++i) chi[i] = static_cast<int>(i % 2);
    auto same = factor_coloring(plain, chi);
    for (std::size_t i = 0; i < chi.size(); ++i) {
        EXPECT_EQ(same[i].group_element, 0);
        EXPECT_EQ(same[i].color_set, std::uint64_t{1} << chi[i]);
    }
}

TEST(ProofColorings, FactorRoundTripOnPentagonGraph) {
    // K5 edge classes with the pentagon coloring is a lower bound of 2; the
    // factor coloring on embeddings must be a lower bound of 2 * |Aut(K2)|.
    auto inst = build_arrow_instance<Direct>(complete_graph(2), complete_graph(3), complete_graph(5),
                                             GroupFamily::full_automorphism());
    std::vector<int> chi;
    for (const auto& cls : inst.classes_ac) {
        const int d = std::abs(cls.representative(1) - cls.representative(0));
        chi.push_back(d == 1 || d == 4 ? 0 : 1);
    }
    ASSERT_TRUE(verify_lower_bound(inst, chi, 2));
    auto xi = factor_coloring(inst, chi);
    EXPECT_TRUE(verify_factor(inst, chi, xi));
    EXPECT_GE((min_colors_on_homs<Direct, ColorToken>(inst, xi)), 4);
}

TEST(ProofColorings, OrbitColoringSeesBothColors) {
    const auto k2 = complete_graph(2), k3 = complete_graph(3);
    auto chi = orbit_two_coloring(k2, k3, GroupFamily::identity_only(), {1, 0});
    auto inst = build_arrow_instance<Direct>(k2, k2, k3, GroupFamily::identity_only());
    EXPECT_TRUE(verify_orbit_coloring(inst, chi));
}

TEST(ProofColorings, OrbitColoringNeedsAdmissibleAlpha) {
    const auto ordered = complete_graph(2).with_identity_order();
    EXPECT_THROW(orbit_two_coloring(ordered, complete_graph(3).with_identity_order(), GroupFamily::identity_only(), {1, 0}),
                 Error);
    EXPECT_THROW(orbit_two_coloring(complete_graph(2), complete_graph(3), GroupFamily::full_automorphism(), {1, 0}), Error);
}

TEST(ProofColorings, TokenSpelling) {
    EXPECT_EQ(to_string(ColorToken::plain(1)), "{1}");
    EXPECT_EQ(to_string(ColorToken{0b11, -1}), "{0,1}");
    EXPECT_EQ(to_string(ColorToken{0b1, 2}), "({0},2)");
    std::vector<ColorToken> ts = {ColorToken::plain(3), ColorToken::plain(1), ColorToken::plain(3)};
    EXPECT_EQ(normalize_tokens(ts), (std::vector<int>{0, 1, 0}));
}
