#include <leetile/tiling.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace leetile;

namespace {

TilingCandidate cyclic_candidate(std::int64_t m, int n, const char *elements) {
    const auto G = AbelianGroup::cyclic(m);
    return TilingCandidate::make(G, n, parse_elements(G, elements));
}

GroupElement z(std::int64_t r) { return GroupElement{{r}}; }

LatticeBasis basis2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return LatticeBasis{IntMatrix::from_rows({{a, b}, {c, d}})};
}

// Kernel lattice of phi: Z^n -> Z_{2n+1}, phi(e_i) = i. Columns: (2n+1) e_1
// and e_i - i e_1.
LatticeBasis radius_one_basis(int n) {
    IntMatrix M(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    M(0, 0) = 2 * n + 1;
    for (int i = 1; i < n; ++i) {
        M(0, static_cast<std::size_t>(i)) = -(i + 1);
        M(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    }
    return LatticeBasis{M};
}

} // namespace

TEST(CheckConditions, KnownTilings) {
    EXPECT_TRUE(check_conditions(cyclic_candidate(5, 1, "0;1;4")).accepted());
    EXPECT_TRUE(check_conditions(cyclic_candidate(13, 2, "0;1;12;5;8")).accepted());
}

TEST(CheckConditions, AgreesWithCountingOracle) {
    const oracle::Group Z13{{13}};
    for (int a = 1; a <= 6; ++a) {
        for (int b = a + 1; b <= 6; ++b) {
            const std::vector<oracle::Tuple> T{{0}, {a}, {13 - a}, {b}, {13 - b}};
            const auto text = "0;" + std::to_string(a) + ";" + std::to_string(13 - a) + ";" + std::to_string(b) +
                              ";" + std::to_string(13 - b);
            EXPECT_EQ(check_conditions(cyclic_candidate(13, 2, text.c_str())).accepted(), oracle::tiles(Z13, T, 2))
                << text;
        }
    }
}

TEST(CheckConditions, QuadraticIdentityWitness) {
    const auto c = cyclic_candidate(13, 2, "0;1;12;2;11");
    const auto report = check_conditions(c);
    EXPECT_FALSE(report.accepted());
    ASSERT_EQ(report.failed_condition, Condition::quadratic_identity);
    ASSERT_TRUE(report.witness);
    // First mismatch in element order is 1: (0,1),(1,0),(2,12),(12,2).
    EXPECT_EQ(report.witness->element, z(1));
    EXPECT_EQ(report.witness->expected, 2);
    EXPECT_EQ(report.witness->actual, 4);
    const auto T = c.as_ring_element();
    EXPECT_EQ(gr_mul(T, T).coefficient(z(2)), 3);
}

TEST(CheckConditions, EachConditionReported) {
    EXPECT_EQ(check_conditions(cyclic_candidate(13, 1, "0;1;12")).failed_condition, Condition::order);
    EXPECT_EQ(check_conditions(cyclic_candidate(13, 2, "0;1;12")).failed_condition, Condition::size);
    EXPECT_EQ(check_conditions(cyclic_candidate(13, 2, "3;1;12;5;8")).failed_condition,
              Condition::identity_membership);
    const auto sym = check_conditions(cyclic_candidate(13, 2, "0;1;12;5;7"));
    EXPECT_EQ(sym.failed_condition, Condition::symmetry);
    ASSERT_TRUE(sym.witness);
    // 5 is the first member whose inverse (8) is missing.
    EXPECT_EQ(sym.witness->element, z(8));
}

TEST(CheckConditions, NonCyclicGroupRejects) {
    const auto G = parse_group_spec("Z5xZ5");
    const auto c = TilingCandidate::make(G, 3, parse_elements(G, "0,0;1,0;4,0;0,1;0,4;1,1;4,4"));
    const auto report = check_conditions(c);
    EXPECT_FALSE(report.accepted());
    EXPECT_EQ(report.failed_condition, Condition::quadratic_identity);
}

TEST(PairMultiplicity, Values) {
    const auto n2 = cyclic_candidate(13, 2, "0;1;12;5;8");
    EXPECT_EQ(pair_multiplicity(n2, z(2)), 1);
    EXPECT_EQ(pair_multiplicity(n2, z(6)), 2);
    const auto n1 = cyclic_candidate(5, 1, "0;1;4");
    EXPECT_EQ(pair_multiplicity(n1, z(3)), 1);
    EXPECT_THROW(pair_multiplicity(n1, z(0)), DomainError);
    EXPECT_THROW(pair_multiplicity(cyclic_candidate(13, 2, "0;1;12;2;11"), z(3)), DomainError);
}

TEST(PairMultiplicity, OneOnDoublesTwoElsewhere) {
    for (const auto &c : {cyclic_candidate(5, 1, "0;1;4"), cyclic_candidate(13, 2, "0;1;12;5;8")}) {
        const auto doubled = power_map(c.as_ring_element(), 2);
        for (const auto &g : c.group.elements()) {
            if (g == c.group.identity()) {
                continue;
            }
            EXPECT_EQ(pair_multiplicity(c, g), doubled.coefficient(g) != 0 ? 1 : 2);
        }
    }
}

TEST(PairMultiplicity, SquareOfMemberOnlyFromDiagonal) {
    for (const auto &c : {cyclic_candidate(5, 1, "0;1;4"), cyclic_candidate(13, 2, "0;1;12;5;8")}) {
        const auto &G = c.group;
        for (const auto &t : c.T) {
            if (t == G.identity()) {
                continue;
            }
            const auto sq = G.add(t, t);
            for (const auto &a : c.T) {
                for (const auto &b : c.T) {
                    if (G.add(a, b) == sq) {
                        EXPECT_TRUE(a == t && b == t);
                    }
                }
            }
        }
        // T meets T^(2) only in the identity.
        const auto doubled = power_map(c.as_ring_element(), 2);
        int shared = 0;
        for (const auto &t : c.T) {
            shared += doubled.coefficient(t) != 0 ? 1 : 0;
        }
        EXPECT_EQ(shared, 1);
    }
}

TEST(VerifyLattice, ThirteenAccepts) {
    EXPECT_TRUE(verify_lattice(basis2(13, -5, 0, 1), 2).accepted());
}

TEST(VerifyLattice, CollisionRejects) {
    const auto B = basis2(13, -1, 0, 1);
    const auto report = verify_lattice(B, 2);
    EXPECT_FALSE(report.accepted());
    EXPECT_EQ(report.failed_condition, Condition::coset_collision);
    ASSERT_TRUE(report.collision);
    const auto q = quotient_map(B);
    EXPECT_EQ(q.project(LeeVector{1, 0}), q.project(LeeVector{0, 1}));
    EXPECT_EQ(q.project(report.collision->first), q.project(report.collision->second));
}

TEST(VerifyLattice, DeterminantMismatch) {
    const auto report = verify_lattice(basis2(12, 0, 0, 1), 2);
    EXPECT_EQ(report.failed_condition, Condition::order);
    EXPECT_THROW(verify_lattice(basis2(1, 2, 2, 4), 2), SingularMatrixError);
}

TEST(VerifyLattice, RadiusOneTilingsInEveryDimension) {
    for (int n = 1; n <= 7; ++n) {
        EXPECT_TRUE(verify_lattice(radius_one_basis(n), 1).accepted()) << n;
    }
}

TEST(VerifyLattice, OneAndTwoDimensionsTileAtAnyRadius) {
    for (int r = 0; r <= 6; ++r) {
        const std::int64_t size = 2 * r + 1;
        EXPECT_TRUE(verify_lattice(LatticeBasis{IntMatrix::from_rows({{size}})}, r).accepted());
        // Z^2 / <(2r^2+2r+1, 0), (-(2r+1), 1)>: x + (2r+1) y separates S(2, r).
        const std::int64_t m = 2 * r * r + 2 * r + 1;
        EXPECT_TRUE(verify_lattice(basis2(m, -(2 * r + 1), 0, 1), r).accepted()) << r;
    }
}

TEST(ToGroupModel, Examples) {
    const auto c = to_group_model(basis2(13, -5, 0, 1));
    EXPECT_EQ(c.group.name(), "Z13");
    EXPECT_EQ(c.T, (std::vector<GroupElement>{z(0), z(1), z(5), z(8), z(12)}));
    const auto one = to_group_model(LatticeBasis{IntMatrix::from_rows({{5}})});
    EXPECT_EQ(one.T, (std::vector<GroupElement>{z(0), z(1), z(4)}));
    EXPECT_TRUE(check_conditions(to_group_model(basis2(2, 3, 3, -2))).accepted());
}

TEST(ToGroupModel, Errors) {
    EXPECT_THROW(to_group_model(basis2(13, -1, 0, -1)), ArmCollisionError);
    EXPECT_THROW(to_group_model(basis2(12, 0, 0, 1)), DomainError);
}

TEST(Equivalence, AllTwoByTwoBasesOfDeterminant13) {
    int accepted = 0;
    for (int a = -6; a <= 6; ++a) {
        for (int b = -6; b <= 6; ++b) {
            for (int c = -6; c <= 6; ++c) {
                for (int d = -6; d <= 6; ++d) {
                    if (std::abs(a * d - b * c) != 13) {
                        continue;
                    }
                    const auto B = basis2(a, b, c, d);
                    const bool geometric = verify_lattice(B, 2).accepted();
                    bool algebraic = false;
                    try {
                        algebraic = check_conditions(to_group_model(B)).accepted();
                    } catch (const ArmCollisionError &) {
                        algebraic = false;
                    }
                    ASSERT_EQ(geometric, algebraic) << a << ' ' << b << ' ' << c << ' ' << d;
                    accepted += geometric ? 1 : 0;
                }
            }
        }
    }
    EXPECT_GT(accepted, 0);
}

TEST(Equivalence, Random3x3BasesOfDeterminant25) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    int tested = 0;
    for (int attempt = 0; attempt < 2'000'000 && tested < 200; ++attempt) {
        IntMatrix M(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                M(i, j) = entry(rng);
            }
        }
        if (abs(determinant(M)) != 25) {
            continue;
        }
        const LatticeBasis B{M};
        const bool geometric = verify_lattice(B, 2).accepted();
        bool algebraic = false;
        try {
            algebraic = check_conditions(to_group_model(B)).accepted();
        } catch (const ArmCollisionError &) {
        }
        ASSERT_EQ(geometric, algebraic);
        // No tiling exists in dimension 3.
        EXPECT_FALSE(geometric);
        ++tested;
    }
    EXPECT_EQ(tested, 200);
}
