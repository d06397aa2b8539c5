#pragma once

// Multiplicity profiles of T^(2) T and T^(4) T and the counting identities
// they must satisfy on any tiling candidate.

#include <leetile/bigint.hpp>
#include <leetile/errors.hpp>
#include <leetile/group_ring.hpp>
#include <leetile/tiling.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leetile {

// histogram[i] = number of group elements whose coefficient in T^(k) T is i.
// The 0-class is always present.
struct MultiplicityProfile {
    int k = 2;
    std::int64_t n = 0;
    std::map<std::int64_t, BigInt> histogram;
    std::int64_t max_index = 0;

    BigInt class_size(std::int64_t i) const {
        const auto it = histogram.find(i);
        return it == histogram.end() ? BigInt(0) : it->second;
    }

    void refresh_max_index() {
        max_index = 0;
        for (const auto &[i, size] : histogram) {
            if (size != 0) {
                max_index = std::max(max_index, i);
            }
        }
    }

    friend bool operator==(const MultiplicityProfile &, const MultiplicityProfile &) = default;
};

inline MultiplicityProfile profile(const TilingCandidate &c, int k) {
    if (k != 2 && k != 4) {
        throw DomainError("profile exponent must be 2 or 4, got " + std::to_string(k));
    }
    const auto report = check_conditions(c);
    if (!report.accepted()) {
        throw DomainError("profile requires an accepted candidate: " + report.message);
    }
    const auto T = c.as_ring_element();
    const auto product = gr_mul(power_map(T, k), T);
    MultiplicityProfile p{k, c.n, {}, 0};
    p.histogram[0] = 0;
    for (std::int64_t idx = 0; idx < c.group.order(); ++idx) {
        p.histogram[product.coefficient_at(idx)] += 1;
    }
    p.refresh_max_index();
    return p;
}

struct IdentityCheck {
    std::string name;
    std::string relation; // "=", ">=" or "<="
    BigInt lhs;
    BigInt rhs;
    bool holds = false;

    friend bool operator==(const IdentityCheck &, const IdentityCheck &) = default;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_hold() const {
        for (const auto &c : checks) {
            if (!c.holds) {
                return false;
            }
        }
        return true;
    }

    const IdentityCheck &at(const std::string &name) const {
        for (const auto &c : checks) {
            if (c.name == name) {
                return c;
            }
        }
        throw std::out_of_range("no identity named " + name);
    }

    friend bool operator==(const IdentityReport &, const IdentityReport &) = default;
};

namespace detail {

inline IdentityCheck compare(std::string name, std::string relation, BigInt lhs, BigInt rhs) {
    bool holds = false;
    if (relation == "=") {
        holds = lhs == rhs;
    } else if (relation == ">=") {
        holds = lhs >= rhs;
    } else {
        holds = lhs <= rhs;
    }
    return IdentityCheck{std::move(name), std::move(relation), std::move(lhs), std::move(rhs), holds};
}

struct ProfileSums {
    BigInt total;      // sum_{i>=0} |X_i|
    BigInt positive;   // sum_{i>=1} |X_i|
    BigInt weighted;   // sum_{i>=1} i |X_i|
    BigInt overlap;    // sum_{s>=3} (s-1)(s-2)/2 |X_s|
};

inline ProfileSums sums(const MultiplicityProfile &p) {
    ProfileSums s;
    for (const auto &[i, size] : p.histogram) {
        s.total += size;
        if (i >= 1) {
            s.positive += size;
            s.weighted += size * i;
        }
        if (i >= 3) {
            s.overlap += size * ((i - 1) * (i - 2) / 2);
        }
    }
    return s;
}

} // namespace detail

// Class count, weighted count and the inclusion-exclusion identity for T^(2) T.
inline IdentityReport check_identities_k2(const MultiplicityProfile &p) {
    if (p.k != 2) {
        throw DomainError("check_identities_k2 expects a k = 2 profile");
    }
    const BigInt n = p.n;
    const auto s = detail::sums(p);
    IdentityReport report;
    report.checks.push_back(detail::compare("class_count", "=", s.total, 2 * n * n + 2 * n + 1));
    report.checks.push_back(detail::compare("weighted_count", "=", s.weighted, (2 * n + 1) * (2 * n + 1)));
    report.checks.push_back(detail::compare("inclusion_exclusion", "=", s.positive, 4 * n + 1 + s.overlap));
    return report;
}

// delta = delta_raw - 2n, with delta_raw counting pairs of translates that
// overlap in one point instead of two.
struct DeltaReport {
    BigInt delta;
    BigInt delta_raw;

    friend bool operator==(const DeltaReport &, const DeltaReport &) = default;
};

struct K4Report {
    DeltaReport delta;
    IdentityReport identities;

    bool all_hold() const { return identities.all_hold(); }
};

// Solves the T^(4) T inclusion-exclusion identity for delta, then checks
// delta in [-2n, 0] and the weighted lower bound on |Y_1|..|Y_4|.
inline K4Report check_identities_k4(const MultiplicityProfile &p) {
    if (p.k != 4) {
        throw DomainError("check_identities_k4 expects a k = 4 profile");
    }
    const BigInt n = p.n;
    const auto s = detail::sums(p);
    K4Report out;
    out.delta.delta = s.positive - 4 * n - 1 - s.overlap;
    out.delta.delta_raw = out.delta.delta + 2 * n;
    auto &checks = out.identities.checks;
    checks.push_back(detail::compare("class_count", "=", s.total, 2 * n * n + 2 * n + 1));
    checks.push_back(detail::compare("weighted_count", "=", s.weighted, (2 * n + 1) * (2 * n + 1)));
    checks.push_back(detail::compare("delta_lower", ">=", out.delta.delta, -2 * n));
    checks.push_back(detail::compare("delta_upper", "<=", out.delta.delta, 0));
    const BigInt weighted_low =
        2 * p.class_size(1) + 3 * p.class_size(2) + 3 * p.class_size(3) + 2 * p.class_size(4);
    checks.push_back(detail::compare("weighted_lower_bound", ">=", weighted_low, 4 * n * n + 6 * n + 2));
    return out;
}

// delta_raw by direct counting: unordered pairs {a, b} of distinct non-identity
// elements of T^(2) with a^-2 b^2 in T^(2).
inline std::int64_t delta_by_pair_count(const TilingCandidate &c) {
    const auto &G = c.group;
    const auto doubled = power_map(c.as_ring_element(), 2);
    const auto e = G.index_of(G.identity());
    std::vector<std::int64_t> a;
    for (const auto &[idx, coef] : doubled.terms()) {
        if (idx != e) {
            a.push_back(idx);
        }
    }
    std::int64_t count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const auto diff = G.add_index(a[j], G.neg_index(a[i]));
            const auto twice = G.add_index(diff, diff);
            count += doubled.coefficient_at(twice) != 0 ? 1 : 0;
        }
    }
    return count;
}

// Closed-form consequences of reducing T^(2) T = 2(2n+1)G - T^3 + 2nT mod 3.
// n = 1 mod 3 and n = 2 mod 3 give full class sizes; n = 0 mod 3 gives the
// class sums over each residue of the multiplicity mod 3.
struct PredictedProfile {
    std::int64_t n = 0;
    int n_mod3 = 0;
    std::map<std::int64_t, BigInt> classes;  // exact |X_i| (n = 1, 2 mod 3)
    std::map<int, BigInt> residue_sums;      // sum_i |X_{3i+j}| keyed by j (n = 0 mod 3)

    bool exact() const noexcept { return n_mod3 != 0; }

    MultiplicityProfile as_profile() const {
        if (!exact()) {
            throw DomainError("n = 0 mod 3 predictions are residue constraints, not a profile");
        }
        MultiplicityProfile p{2, n, classes, 0};
        p.histogram.try_emplace(0, 0);
        p.refresh_max_index();
        return p;
    }
};

namespace detail {

inline BigInt exact_div(const BigInt &num, std::int64_t den) {
    if (num % den != 0) {
        throw std::logic_error("predicted class size " + num.str() + "/" + std::to_string(den) + " is not integral");
    }
    return num / den;
}

} // namespace detail

inline PredictedProfile predicted_profile_mod3(std::int64_t n) {
    if (n < 2) {
        throw DomainError("predicted profiles are defined for n >= 2");
    }
    const BigInt N = n;
    PredictedProfile p{n, static_cast<int>(n % 3), {}, {}};
    switch (p.n_mod3) {
    case 0:
        p.residue_sums[0] = 0;
        p.residue_sums[1] = 2 * N + 1;
        p.residue_sums[2] = 2 * N * N;
        break;
    case 1:
        p.classes[0] = detail::exact_div(2 * N * (N - 1), 3);
        p.classes[1] = 1;
        p.classes[2] = 4 * N;
        p.classes[3] = detail::exact_div(4 * N * (N - 1), 3);
        break;
    default:
        p.classes[0] = 0;
        p.classes[1] = detail::exact_div(4 * N * N - 2 * N + 3, 3);
        p.classes[2] = 2 * N;
        p.classes[3] = 2 * N;
        p.classes[4] = detail::exact_div(2 * N * N - 4 * N, 3);
        break;
    }
    for (const auto &[i, size] : p.classes) {
        if (size < 0) {
            throw std::logic_error("negative predicted class size");
        }
    }
    return p;
}

} // namespace leetile
