#include <leetile/profiles.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace leetile;

namespace {

TilingCandidate n1() {
    const auto G = AbelianGroup::cyclic(5);
    return TilingCandidate::make(G, 1, parse_elements(G, "0;1;4"));
}

TilingCandidate n2() {
    const auto G = AbelianGroup::cyclic(13);
    return TilingCandidate::make(G, 2, parse_elements(G, "0;1;12;5;8"));
}

// |X_i| from explicit triple counting: (a, b) in T x T with 2a + b = g.
std::map<std::int64_t, BigInt> oracle_histogram(std::int64_t m, const std::vector<std::int64_t> &T, int k) {
    const oracle::Group G{{m}};
    std::vector<oracle::Tuple> scaled;
    std::vector<oracle::Tuple> plain;
    for (auto t : T) {
        scaled.push_back(oracle::times(G, {t}, k));
        plain.push_back({t});
    }
    const auto sums = oracle::pair_sums(G, scaled, plain);
    std::map<std::int64_t, BigInt> hist{{0, 0}};
    for (std::int64_t g = 0; g < m; ++g) {
        const auto it = sums.find({g});
        hist[it == sums.end() ? 0 : it->second] += 1;
    }
    return hist;
}

std::map<std::int64_t, BigInt> nonzero(const std::map<std::int64_t, BigInt> &h) {
    std::map<std::int64_t, BigInt> out;
    for (const auto &[i, s] : h) {
        if (s != 0 || i == 0) {
            out[i] = s;
        }
    }
    return out;
}

} // namespace

TEST(Profile, MatchesTripleCounting) {
    EXPECT_EQ(nonzero(profile(n1(), 2).histogram), oracle_histogram(5, {0, 1, 4}, 2));
    EXPECT_EQ(nonzero(profile(n2(), 2).histogram), oracle_histogram(13, {0, 1, 12, 5, 8}, 2));
    EXPECT_EQ(nonzero(profile(n1(), 4).histogram), oracle_histogram(5, {0, 1, 4}, 4));
    EXPECT_EQ(nonzero(profile(n2(), 4).histogram), oracle_histogram(13, {0, 1, 12, 5, 8}, 4));
}

TEST(Profile, SmallestCase) {
    const auto p = profile(n1(), 2);
    EXPECT_EQ(p.class_size(0), 0);
    EXPECT_EQ(p.class_size(1), 1);
    EXPECT_EQ(p.class_size(2), 4);
    EXPECT_EQ(p.max_index, 2);
}

TEST(Profile, RejectsBadInput) {
    EXPECT_THROW(profile(n2(), 3), DomainError);
    const auto G = AbelianGroup::cyclic(13);
    EXPECT_THROW(profile(TilingCandidate::make(G, 2, parse_elements(G, "0;1;12;2;11")), 2), DomainError);
}

TEST(Identities, HoldForKnownTilings) {
    for (const auto &c : {n1(), n2()}) {
        const auto r2 = check_identities_k2(profile(c, 2));
        EXPECT_TRUE(r2.all_hold());
        EXPECT_EQ(r2.at("class_count").rhs, tiling_order(c.n));
        EXPECT_EQ(r2.at("weighted_count").rhs, (2 * c.n + 1) * (2 * c.n + 1));
        const auto r4 = check_identities_k4(profile(c, 4));
        EXPECT_TRUE(r4.all_hold());
        EXPECT_GE(r4.delta.delta, -2 * c.n);
        EXPECT_LE(r4.delta.delta, 0);
        EXPECT_EQ(r4.delta.delta_raw, delta_by_pair_count(c));
    }
}

TEST(Identities, WeightedLowerBoundRightHandSide) {
    EXPECT_EQ(check_identities_k4(profile(n1(), 4)).identities.at("weighted_lower_bound").rhs, 12);
    EXPECT_EQ(check_identities_k4(profile(n2(), 4)).identities.at("weighted_lower_bound").rhs, 30);
}

TEST(Identities, SyntheticViolationFlagsOneIdentity) {
    auto p = profile(n2(), 2);
    // Move one element from X_1 to X_2: only the weighted count breaks.
    p.histogram[1] -= 1;
    p.histogram[2] += 1;
    const auto report = check_identities_k2(p);
    int failing = 0;
    for (const auto &c : report.checks) {
        failing += c.holds ? 0 : 1;
    }
    EXPECT_EQ(failing, 1);
    EXPECT_FALSE(report.at("weighted_count").holds);
}

TEST(Identities, DeltaFromSingleClass) {
    for (std::int64_t n = 1; n <= 6; ++n) {
        const BigInt size = (2 * n + 1) * (2 * n + 1);
        MultiplicityProfile p{4, n, {{0, 0}, {1, size}}, 1};
        EXPECT_EQ(check_identities_k4(p).delta.delta, size - 4 * n - 1);
    }
}

TEST(Identities, WrongExponentRejected) {
    EXPECT_THROW(check_identities_k2(profile(n2(), 4)), DomainError);
    EXPECT_THROW(check_identities_k4(profile(n2(), 2)), DomainError);
}

TEST(Predicted, OneModThree) {
    const auto p = predicted_profile_mod3(4);
    ASSERT_TRUE(p.exact());
    EXPECT_EQ(p.classes.at(3), 16);
    EXPECT_EQ(p.classes.at(0), 8);
    EXPECT_EQ(p.classes.at(2), 16);
    EXPECT_EQ(p.classes.at(1), 1);
    const auto ids = check_identities_k2(p.as_profile());
    EXPECT_EQ(ids.at("class_count").lhs, 41);
    EXPECT_EQ(ids.at("weighted_count").lhs, 81);
}

TEST(Predicted, TwoModThree) {
    const auto p = predicted_profile_mod3(5);
    EXPECT_EQ(p.classes.at(1), 31);
    EXPECT_EQ(p.classes.at(2), 10);
    EXPECT_EQ(p.classes.at(3), 10);
    EXPECT_EQ(p.classes.at(4), 10);
    EXPECT_EQ(p.classes.at(0), 0);
}

TEST(Predicted, ZeroModThree) {
    const auto p = predicted_profile_mod3(6);
    EXPECT_FALSE(p.exact());
    EXPECT_EQ(p.residue_sums.at(0), 0);
    EXPECT_EQ(p.residue_sums.at(1), 13);
    EXPECT_EQ(p.residue_sums.at(2), 72);
    EXPECT_THROW(p.as_profile(), DomainError);
    EXPECT_THROW(predicted_profile_mod3(1), DomainError);
}

TEST(Predicted, MatchesTheOnlyRealProfile) {
    EXPECT_EQ(nonzero(profile(n2(), 2).histogram), nonzero(predicted_profile_mod3(2).as_profile().histogram));
}

TEST(Predicted, SatisfiesIdentitiesForAllN) {
    for (std::int64_t n = 2; n <= 3000; ++n) {
        const auto p = predicted_profile_mod3(n);
        if (p.exact()) {
            ASSERT_TRUE(check_identities_k2(p.as_profile()).all_hold()) << n;
        } else {
            BigInt total = 0;
            for (const auto &[j, s] : p.residue_sums) {
                total += s;
            }
            ASSERT_EQ(total, tiling_order(n)) << n;
        }
    }
}

TEST(Structure, TopClassClosedUnderNegation) {
    for (const auto &c : {n1(), n2()}) {
        const auto T = c.as_ring_element();
        const auto product = gr_mul(power_map(T, 2), T);
        const auto top = profile(c, 2).max_index;
        for (const auto &g : c.group.elements()) {
            EXPECT_EQ(product.coefficient(g) == top, product.coefficient(c.group.neg(g)) == top);
        }
    }
}

TEST(Structure, TranslateIntersections) {
    // |T cap gT| equals the coefficient of g in T^2 since T = T^-1.
    for (const auto &c : {n1(), n2()}) {
        const auto &G = c.group;
        const auto T = c.as_ring_element();
        const auto sq = gr_mul(T, T);
        for (const auto &g : G.elements()) {
            int common = 0;
            for (const auto &t : c.T) {
                common += T.coefficient(G.add(g, t)) != 0 ? 1 : 0;
            }
            EXPECT_EQ(common, sq.coefficient(g));
        }
        for (const auto &a : c.T) {
            if (a == G.identity()) {
                continue;
            }
            EXPECT_EQ(sq.coefficient(a), 2);
            EXPECT_EQ(sq.coefficient(G.add(a, a)), 1);
        }
    }
}
