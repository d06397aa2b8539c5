#include <leetile/json_io.hpp>
#include <leetile/search.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace leetile;

namespace {

using Key = std::set<std::vector<std::int64_t>>;

Key solution_key(const SearchOutcome &o) {
    Key out;
    for (const auto &T : o.solutions) {
        std::set<std::vector<std::int64_t>> s;
        for (const auto &g : T) {
            s.insert(g.residues);
        }
        std::vector<std::int64_t> flat;
        for (const auto &v : s) {
            flat.insert(flat.end(), v.begin(), v.end());
        }
        out.insert(flat);
    }
    return out;
}

Key oracle_key(const AbelianGroup &G, int n) {
    Key out;
    for (const auto &T : oracle::brute_force_tilings(oracle::Group{G.factors()}, n)) {
        std::set<std::vector<std::int64_t>> s(T.begin(), T.end());
        std::vector<std::int64_t> flat;
        for (const auto &v : s) {
            flat.insert(flat.end(), v.begin(), v.end());
        }
        out.insert(flat);
    }
    return out;
}

} // namespace

TEST(Search, UnreducedMatchesBruteForce) {
    SearchOptions opts;
    opts.use_automorphism_reduction = false;
    for (int n = 1; n <= 3; ++n) {
        for (const auto &G : enumerate_groups(2 * n * n + 2 * n + 1)) {
            const auto outcome = search_group(G, n, opts);
            EXPECT_TRUE(outcome.exhausted);
            EXPECT_FALSE(outcome.reduced);
            EXPECT_EQ(solution_key(outcome), oracle_key(G, n)) << G.name();
        }
    }
}

TEST(Search, KnownCounts) {
    SearchOptions plain;
    plain.use_automorphism_reduction = false;
    EXPECT_EQ(search_group(AbelianGroup::cyclic(5), 1, plain).solutions.size(), 2U);
    EXPECT_EQ(search_group(AbelianGroup::cyclic(13), 2, plain).solutions.size(), 3U);
    const auto reduced = search_group(AbelianGroup::cyclic(13), 2);
    EXPECT_TRUE(reduced.reduced);
    ASSERT_EQ(reduced.solutions.size(), 1U);
    EXPECT_EQ(reduced.solutions[0], parse_elements(AbelianGroup::cyclic(13), "0;1;5;8;12"));
}

TEST(Search, ReducedSolutionsAreOrbitRepresentatives) {
    // Every unreduced solution is a unit multiple of exactly one reduced one.
    for (int n = 1; n <= 2; ++n) {
        const auto G = AbelianGroup::cyclic(2 * n * n + 2 * n + 1);
        SearchOptions plain;
        plain.use_automorphism_reduction = false;
        const auto all = search_group(G, n, plain);
        const auto reps = search_group(G, n);
        for (const auto &T : all.solutions) {
            int hits = 0;
            for (const auto &R : reps.solutions) {
                for (std::int64_t u = 1; u < G.order(); ++u) {
                    if (std::gcd(u, G.order()) != 1) {
                        continue;
                    }
                    std::vector<GroupElement> scaled;
                    for (const auto &g : R) {
                        scaled.push_back(G.scale(g, u));
                    }
                    std::sort(scaled.begin(), scaled.end());
                    if (scaled == T) {
                        ++hits;
                        break;
                    }
                }
            }
            EXPECT_EQ(hits, 1);
        }
    }
}

TEST(Search, NoTilingsForSmallDimensions) {
    for (int n = 3; n <= 6; ++n) {
        for (const auto &outcome : search_all(n)) {
            EXPECT_TRUE(outcome.exhausted) << outcome.group.name();
            EXPECT_TRUE(outcome.solutions.empty()) << outcome.group.name();
        }
    }
}

TEST(Search, DeterministicAcrossPartitions) {
    for (bool reduce : {true, false}) {
        SearchOptions base;
        base.use_automorphism_reduction = reduce;
        const auto reference = search_group(AbelianGroup::cyclic(41), 4, base);
        for (int parts : {2, 3}) {
            auto opts = base;
            opts.worker_partitions = parts;
            EXPECT_EQ(search_group(AbelianGroup::cyclic(41), 4, opts), reference);
        }
        auto budgeted = base;
        budgeted.node_budget = 50;
        const auto truncated = search_group(AbelianGroup::cyclic(41), 4, budgeted);
        for (int parts : {2, 3}) {
            auto opts = budgeted;
            opts.worker_partitions = parts;
            EXPECT_EQ(search_group(AbelianGroup::cyclic(41), 4, opts), truncated);
        }
    }
}

TEST(Search, BudgetTruncates) {
    SearchOptions opts;
    opts.node_budget = 10;
    const auto outcome = search_group(AbelianGroup::cyclic(85), 6, opts);
    EXPECT_FALSE(outcome.exhausted);
    EXPECT_LE(outcome.nodes_explored, 10U);
    opts.node_budget = 1'000'000;
    EXPECT_TRUE(search_group(AbelianGroup::cyclic(61), 5, opts).exhausted);
}

TEST(Search, Errors) {
    EXPECT_THROW(search_group(AbelianGroup::cyclic(12), 2), DomainError);
    EXPECT_THROW(search_group(AbelianGroup::cyclic(113), 7), DomainError);
    SearchOptions opts;
    opts.node_budget = 100;
    EXPECT_NO_THROW(search_group(AbelianGroup::cyclic(113), 7, opts));
    opts.worker_partitions = 0;
    EXPECT_THROW(search_group(AbelianGroup::cyclic(13), 2, opts), DomainError);
}

TEST(Search, JsonRoundTrip) {
    for (const auto &outcome : search_all(2)) {
        const json j = outcome;
        EXPECT_EQ(j.get<SearchOutcome>(), outcome);
    }
    for (const auto &outcome : search_all(3)) {
        const json j = outcome;
        EXPECT_EQ(j.get<SearchOutcome>(), outcome);
    }
}
