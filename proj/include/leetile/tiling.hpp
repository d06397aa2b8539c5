#pragma once

// Geometric and algebraic verification of lattice tilings of Z^n by Lee
// spheres, and the bridge from a lattice basis to its group model (G, T).

#include <leetile/abelian_group.hpp>
#include <leetile/bigint.hpp>
#include <leetile/errors.hpp>
#include <leetile/group_ring.hpp>
#include <leetile/lee_geometry.hpp>
#include <leetile/smith.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leetile {

inline BigInt tiling_order(std::int64_t n) { return BigInt(2) * n * n + BigInt(2) * n + 1; }

struct TilingCandidate {
    AbelianGroup group;
    int n = 0;
    std::vector<GroupElement> T; // sorted, distinct

    static TilingCandidate make(AbelianGroup group, int n, std::vector<GroupElement> elements) {
        for (const auto &g : elements) {
            group.require(g);
        }
        std::sort(elements.begin(), elements.end());
        if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
            throw DomainError("candidate T contains a repeated element");
        }
        return TilingCandidate{std::move(group), n, std::move(elements)};
    }

    GroupRingElement as_ring_element() const { return from_set(group, T); }
};

enum class Verdict { accept, reject };

enum class Condition { size, identity_membership, symmetry, quadratic_identity, order, coset_collision };

inline std::string to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

inline std::string to_string(Condition c) {
    switch (c) {
    case Condition::size:
        return "size";
    case Condition::identity_membership:
        return "identity-membership";
    case Condition::symmetry:
        return "symmetry";
    case Condition::quadratic_identity:
        return "quadratic-identity";
    case Condition::order:
        return "order";
    case Condition::coset_collision:
        return "coset-collision";
    }
    return "unknown";
}

struct CoefficientWitness {
    GroupElement element;
    std::int64_t expected = 0;
    std::int64_t actual = 0;

    friend bool operator==(const CoefficientWitness &, const CoefficientWitness &) = default;
};

struct CollisionWitness {
    LeeVector first;
    LeeVector second;
    GroupElement coset;

    friend bool operator==(const CollisionWitness &, const CollisionWitness &) = default;
};

struct VerificationReport {
    Verdict verdict = Verdict::accept;
    std::optional<Condition> failed_condition;
    std::optional<CoefficientWitness> witness;
    std::optional<CollisionWitness> collision;
    std::string message;

    bool accepted() const noexcept { return verdict == Verdict::accept; }

    static VerificationReport reject(Condition c, std::string message) {
        return VerificationReport{Verdict::reject, c, std::nullopt, std::nullopt, std::move(message)};
    }

    friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

// Checks |T| = 2n+1, e in T, T = T^(-1) and T^2 = 2G - T^(2) + 2n e.
// Condition (c) is compared coefficientwise over G in index order; the first
// mismatch is the witness.
inline VerificationReport check_conditions(const TilingCandidate &c) {
    const auto &G = c.group;
    const auto n = static_cast<std::int64_t>(c.n);
    if (n < 1 || BigInt(G.order()) != tiling_order(n)) {
        return VerificationReport::reject(Condition::order, "group order " + std::to_string(G.order()) +
                                                                " != 2n^2+2n+1 = " + to_string(tiling_order(n)));
    }
    if (static_cast<std::int64_t>(c.T.size()) != 2 * n + 1) {
        return VerificationReport::reject(Condition::size, "|T| = " + std::to_string(c.T.size()) +
                                                               ", expected " + std::to_string(2 * n + 1));
    }
    const auto T = c.as_ring_element();
    const auto e = G.identity();
    if (T.coefficient(e) == 0) {
        auto report = VerificationReport::reject(Condition::identity_membership, "identity not in T");
        report.witness = CoefficientWitness{e, 1, 0};
        return report;
    }
    for (const auto &t : c.T) {
        const auto inv = G.neg(t);
        if (T.coefficient(inv) == 0) {
            auto report = VerificationReport::reject(Condition::symmetry, "(" + to_string(t) +
                                                                              ") in T but its inverse is not");
            report.witness = CoefficientWitness{inv, 1, 0};
            return report;
        }
    }
    const auto square = gr_mul(T, T);
    const auto doubled = power_map(T, 2);
    const auto e_index = G.index_of(e);
    for (std::int64_t idx = 0; idx < G.order(); ++idx) {
        const auto expected = 2 - doubled.coefficient_at(idx) + (idx == e_index ? 2 * n : 0);
        const auto actual = square.coefficient_at(idx);
        if (actual != expected) {
            auto report = VerificationReport::reject(Condition::quadratic_identity,
                                                     "T^2 coefficient mismatch at (" + to_string(G.element_at(idx)) +
                                                         ")");
            report.witness = CoefficientWitness{G.element_at(idx), expected, actual};
            return report;
        }
    }
    return VerificationReport{Verdict::accept, std::nullopt, std::nullopt, std::nullopt, "conditions (a)-(c) hold"};
}

// Number of ordered pairs (t1, t2) in T x T with t1 t2 = g, for g != e on an
// accepted candidate.
inline std::int64_t pair_multiplicity(const TilingCandidate &c, const GroupElement &g) {
    const auto &G = c.group;
    G.require(g);
    if (g == G.identity()) {
        throw DomainError("pair_multiplicity is defined only for non-identity elements");
    }
    if (!check_conditions(c).accepted()) {
        throw DomainError("pair_multiplicity requires a candidate satisfying the tiling conditions");
    }
    std::int64_t count = 0;
    for (const auto &a : c.T) {
        for (const auto &b : c.T) {
            count += G.add(a, b) == g ? 1 : 0;
        }
    }
    return count;
}

// A lattice tiles Z^n by S(n, r) iff |det| = |S(n, r)| and the projection
// Z^n -> Z^n / lattice is injective on S(n, r).
inline VerificationReport verify_lattice(const LatticeBasis &basis, int r) {
    const auto n = static_cast<int>(basis.dimension());
    if (!basis.entries.square() || n == 0) {
        throw DimensionError("lattice basis must be a non-empty square matrix");
    }
    const auto det = determinant(basis.entries);
    if (det == 0) {
        throw SingularMatrixError("lattice basis is singular");
    }
    const auto target = sphere_size(n, r);
    if (abs(det) != target) {
        return VerificationReport::reject(Condition::order, "|det| = " + to_string(BigInt(abs(det))) +
                                                                " but |S(n,r)| = " + to_string(target));
    }
    const auto q = quotient_map(basis);
    std::unordered_map<std::int64_t, std::size_t> seen;
    const auto points = sphere_points({n, r});
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto image = q.project(points[i]);
        const auto [it, inserted] = seen.emplace(q.group.index_of(image), i);
        if (!inserted) {
            auto report = VerificationReport::reject(Condition::coset_collision,
                                                     "two sphere points lie in the same coset");
            report.collision = CollisionWitness{points[it->second], points[i], image};
            return report;
        }
    }
    return VerificationReport{Verdict::accept, std::nullopt, std::nullopt, std::nullopt,
                              "sphere points map bijectively onto " + q.group.name()};
}

// (G, T) with T = {e} U {+-phi(e_i)} for a basis of determinant 2n^2+2n+1.
inline TilingCandidate to_group_model(const LatticeBasis &basis) {
    const auto n = static_cast<std::int64_t>(basis.dimension());
    if (!basis.entries.square() || n == 0) {
        throw DimensionError("lattice basis must be a non-empty square matrix");
    }
    const auto det = determinant(basis.entries);
    if (det == 0) {
        throw SingularMatrixError("lattice basis is singular");
    }
    if (abs(det) != tiling_order(n)) {
        throw DomainError("determinant mismatch: |det| = " + to_string(BigInt(abs(det))) +
                          ", expected 2n^2+2n+1 = " + to_string(tiling_order(n)));
    }
    const auto q = quotient_map(basis);
    std::vector<GroupElement> arms{q.group.identity()};
    for (const auto &img : q.images) {
        arms.push_back(img);
        arms.push_back(q.group.neg(img));
    }
    std::sort(arms.begin(), arms.end());
    if (std::adjacent_find(arms.begin(), arms.end()) != arms.end()) {
        throw ArmCollisionError("arm images collide; |T| < 2n+1");
    }
    return TilingCandidate{q.group, static_cast<int>(n), std::move(arms)};
}

} // namespace leetile
