#include "ramsey/error.hpp"
#include "ramsey/paramwords.hpp"
#include "ramsey/rigidsurj.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ramsey;

namespace {

// S(n, m) by the recurrence S(n, m) = m S(n-1, m) + S(n-1, m-1).
long long stirling2(int n, int m) {
    std::vector<std::vector<long long>> s(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return m <= n ? s[n][m] : 0;
}

ParameterWord word(int k, const std::string& spelled) {
    // "x0" for variables, single lowercase letters a.. for alphabet letters
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < spelled.size(); ++i) {
        if (spelled[i] == 'x') {
            out.push_back(Symbol::var(spelled[i + 1] - '0'));
            ++i;
        } else {
            out.push_back(Symbol::letter(spelled[i] - 'a'));
        }
    }
    return ParameterWord(k, out);
}

}  // namespace

TEST(RigidSurjections, CountsMatchStirling) {
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m)
            EXPECT_EQ(static_cast<long long>(enumerate_rigid_surjections(n, m).size()), stirling2(n, m)) << n << "," << m;
}

TEST(RigidSurjections, Examples) {
    auto fs = enumerate_rigid_surjections(3, 2);
    ASSERT_EQ(fs.size(), 3u);
    EXPECT_EQ(fs[0].values(), (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(fs[1].values(), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(fs[2].values(), (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(enumerate_rigid_surjections(4, 2).size(), 7u);
    EXPECT_EQ(enumerate_rigid_surjections(5, 1).size(), 1u);

    EXPECT_EQ(compose_rsurj(RigidSurjection(2, {0, 1, 0}), RigidSurjection(3, {0, 1, 2, 1})).values(),
              (std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(canonical_pi(3, 5).values(), (std::vector<int>{0, 1, 2, 2, 2}));
    EXPECT_EQ(canonical_pi(1, 4).values(), (std::vector<int>{0, 0, 0, 0}));
    EXPECT_EQ(extend_prime(RigidSurjection(2, {0, 1, 0})).values(), (std::vector<int>{0, 1, 0, 2}));
    EXPECT_EQ(extend_prime(RigidSurjection(1, {0, 0})).values(), (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(phi_restrict(RigidSurjection(3, {0, 1, 0, 2, 1})), RigidSurjection(2, {0, 1, 0}));
    EXPECT_EQ(phi_restrict(RigidSurjection(2, {0, 0, 1})), RigidSurjection(1, {0, 0}));
    EXPECT_EQ(star_finite(RigidSurjection(4, {0, 1, 2, 1, 3}), RigidSurjection(1, {0, 0})), RigidSurjection(1, {0, 0}));
}

TEST(RigidSurjections, RejectsNonRigid) {
    EXPECT_THROW(RigidSurjection(2, {1, 0}), Error);
    EXPECT_THROW(RigidSurjection(3, {0, 1, 1}), Error);
}

TEST(RigidSurjections, StarIdentityExhaustive) {
    // f o phi_s(u) == phi_r(f' o u) for r <= 2, s <= 3, n <= 7
    int checked = 0;
    for (int r = 1; r <= 2; ++r)
        for (int s = r; s <= 3; ++s)
            for (const auto& f : enumerate_rigid_surjections(s, r))
                for (int n = s + 1; n <= 7; ++n)
                    for (const auto& u : enumerate_rigid_surjections(n, s + 1)) {
                        auto lhs = compose_rsurj(f, phi_restrict(u));
                        auto rhs = phi_restrict(compose_rsurj(extend_prime(f), u));
                        ASSERT_EQ(lhs, rhs);
                        ++checked;
                    }
    EXPECT_GT(checked, 0);
}

TEST(ParameterWords, CountsMatchStirlingOverEmptyAlphabet) {
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m)
            EXPECT_EQ(static_cast<long long>(enumerate_parameter_words(0, n, m).size()), stirling2(n, m));
}

TEST(ParameterWords, Examples) {
    auto ws = enumerate_parameter_words(0, 3, 2);
    std::set<std::string> got;
    for (const auto& w : ws) got.insert(to_string(w));
    EXPECT_EQ(ws.size(), 3u);
    EXPECT_EQ(enumerate_parameter_words(1, 2, 1).size(), 3u);
    EXPECT_EQ(enumerate_parameter_words(3, 3, 0).size(), 27u);

    auto u = word(2, "x0ax1x0");
    EXPECT_EQ(substitute(u, word(2, "bx0")), word(2, "bax0b"));
    EXPECT_EQ(substitute(u, ParameterWord::identity(2, 2)), u);
    EXPECT_EQ(partial_substitute(u, word(2, "b")), word(2, "ba"));
    EXPECT_EQ(partial_substitute(word(1, "x0x0"), word(1, "a")), word(1, "aa"));
    EXPECT_EQ(partial_substitute(u, word(2, "bx0")), substitute(u, word(2, "bx0")));

    EXPECT_EQ(to_rigid_surjection(word(0, "x0x1x0")), RigidSurjection(2, {0, 1, 0}));
    EXPECT_EQ(to_rigid_surjection(word(1, "x0ax1x0")).values(), (std::vector<int>{0, 1, 0, 2, 1}));
    EXPECT_EQ(to_rigid_surjection(ParameterWord::identity(0, 4)), RigidSurjection::identity(4));
}

TEST(ParameterWords, PartialSubstituteEmptyCutIsAnError) {
    EXPECT_THROW(partial_substitute(word(1, "x0x1"), ParameterWord(1, {})), Error);
}

TEST(ParameterWords, SubstitutionIsComposition) {
    int checked = 0;
    for (int k = 0; k <= 2; ++k)
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= std::min(n, 3); ++m)
                for (int l = 0; l <= std::min(m, 2); ++l)
                    for (const auto& u : enumerate_parameter_words(k, n, m))
                        for (const auto& v : enumerate_parameter_words(k, m, l)) {
                            if (k + l == 0) continue;
                            ASSERT_EQ(to_rigid_surjection(substitute(u, v)),
                                      compose_rsurj(to_rigid_surjection(v), to_rigid_surjection(u)));
                            ++checked;
                        }
    EXPECT_GT(checked, 1000);
}

TEST(ParameterWords, BijectionWithRigidSurjections) {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n; ++m) {
            std::set<std::vector<int>> images;
            for (const auto& w : enumerate_parameter_words(0, n, m)) images.insert(to_rigid_surjection(w).values());
            std::set<std::vector<int>> all;
            for (const auto& f : enumerate_rigid_surjections(n, m)) all.insert(f.values());
            EXPECT_EQ(images, all);
        }
}
