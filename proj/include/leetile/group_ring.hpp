#pragma once

// Integer group ring Z[G] over a finite abelian group, sparse representation.
// The group is written additively here: the product g h is g + h and
// g^t is t * g.

#include <leetile/abelian_group.hpp>
#include <leetile/errors.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace leetile {

class GroupRingElement {
  public:
    using Coefficients = std::map<std::int64_t, std::int64_t>; // element index -> coefficient

    explicit GroupRingElement(AbelianGroup group) : group_(std::move(group)) {}

    const AbelianGroup &group() const noexcept { return group_; }
    const Coefficients &terms() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t support_size() const noexcept { return coeffs_.size(); }

    std::int64_t coefficient(const GroupElement &g) const { return coefficient_at(group_.index_of(g)); }

    std::int64_t coefficient_at(std::int64_t index) const {
        const auto it = coeffs_.find(index);
        return it == coeffs_.end() ? 0 : it->second;
    }

    // Adds delta to the coefficient of the element with the given index.
    void accumulate(std::int64_t index, std::int64_t delta) {
        if (delta == 0) {
            return;
        }
        auto [it, inserted] = coeffs_.try_emplace(index, 0);
        if (__builtin_add_overflow(it->second, delta, &it->second)) {
            throw DomainError("group ring coefficient overflow");
        }
        if (it->second == 0) {
            coeffs_.erase(it);
        }
    }

    void accumulate(const GroupElement &g, std::int64_t delta) { accumulate(group_.index_of(g), delta); }

    std::int64_t coefficient_sum() const {
        std::int64_t total = 0;
        for (const auto &[idx, c] : coeffs_) {
            total += c;
        }
        return total;
    }

    friend bool operator==(const GroupRingElement &a, const GroupRingElement &b) {
        return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
    }

  private:
    AbelianGroup group_;
    Coefficients coeffs_;
};

namespace detail {

inline void require_same_group(const GroupRingElement &a, const GroupRingElement &b) {
    if (!(a.group() == b.group())) {
        throw GroupMismatchError("group ring operands live over " + a.group().name() + " and " + b.group().name());
    }
}

} // namespace detail

inline GroupRingElement gr_zero(const AbelianGroup &G) { return GroupRingElement(G); }

inline GroupRingElement gr_singleton(const AbelianGroup &G, const GroupElement &g, std::int64_t coefficient = 1) {
    GroupRingElement out(G);
    out.accumulate(g, coefficient);
    return out;
}

// The element sum_{g in G} g, written G in the group-ring identities.
inline GroupRingElement all_ones(const AbelianGroup &G) {
    GroupRingElement out(G);
    for (std::int64_t i = 0; i < G.order(); ++i) {
        out.accumulate(i, 1);
    }
    return out;
}

// Identifies a set with its indicator element. Duplicates are rejected.
inline GroupRingElement from_set(const AbelianGroup &G, std::span<const GroupElement> elements) {
    GroupRingElement out(G);
    for (const auto &g : elements) {
        const auto idx = G.index_of(g);
        if (out.coefficient_at(idx) != 0) {
            throw DomainError("from_set: duplicate element (" + to_string(g) + ")");
        }
        out.accumulate(idx, 1);
    }
    return out;
}

inline std::vector<GroupElement> support(const GroupRingElement &A) {
    std::vector<GroupElement> out;
    out.reserve(A.support_size());
    for (const auto &[idx, c] : A.terms()) {
        out.push_back(A.group().element_at(idx));
    }
    return out;
}

inline std::int64_t coefficient(const GroupRingElement &A, const GroupElement &g) { return A.coefficient(g); }

inline GroupRingElement gr_add(const GroupRingElement &A, const GroupRingElement &B) {
    detail::require_same_group(A, B);
    GroupRingElement out = A;
    for (const auto &[idx, c] : B.terms()) {
        out.accumulate(idx, c);
    }
    return out;
}

inline GroupRingElement gr_scale(const GroupRingElement &A, std::int64_t lambda) {
    GroupRingElement out(A.group());
    if (lambda == 0) {
        return out;
    }
    for (const auto &[idx, c] : A.terms()) {
        std::int64_t v = 0;
        if (__builtin_mul_overflow(c, lambda, &v)) {
            throw DomainError("group ring coefficient overflow");
        }
        out.accumulate(idx, v);
    }
    return out;
}

inline GroupRingElement gr_sub(const GroupRingElement &A, const GroupRingElement &B) {
    detail::require_same_group(A, B);
    GroupRingElement out = A;
    for (const auto &[idx, c] : B.terms()) {
        out.accumulate(idx, -c);
    }
    return out;
}

// Convolution: coefficient of g is sum_h a_h b_{g-h}.
inline GroupRingElement gr_mul(const GroupRingElement &A, const GroupRingElement &B) {
    detail::require_same_group(A, B);
    const auto &G = A.group();
    const auto &small = A.support_size() <= B.support_size() ? A : B;
    const auto &large = A.support_size() <= B.support_size() ? B : A;
    GroupRingElement out(G);
    for (const auto &[i, a] : small.terms()) {
        for (const auto &[j, b] : large.terms()) {
            std::int64_t v = 0;
            if (__builtin_mul_overflow(a, b, &v)) {
                throw DomainError("group ring coefficient overflow");
            }
            out.accumulate(G.add_index(i, j), v);
        }
    }
    return out;
}

// A^(t) = sum_g a_g g^t.
inline GroupRingElement power_map(const GroupRingElement &A, std::int64_t t) {
    const auto &G = A.group();
    GroupRingElement out(G);
    for (const auto &[idx, c] : A.terms()) {
        out.accumulate(G.scale(G.element_at(idx), t), c);
    }
    return out;
}

inline GroupRingElement operator+(const GroupRingElement &a, const GroupRingElement &b) { return gr_add(a, b); }
inline GroupRingElement operator-(const GroupRingElement &a, const GroupRingElement &b) { return gr_sub(a, b); }
inline GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) { return gr_mul(a, b); }
inline GroupRingElement operator*(std::int64_t lambda, const GroupRingElement &a) { return gr_scale(a, lambda); }

// Coefficientwise reduction into [0, m).
inline GroupRingElement reduce_mod(const GroupRingElement &A, std::int64_t m) {
    if (m < 1) {
        throw DomainError("reduce_mod: modulus must be positive");
    }
    GroupRingElement out(A.group());
    for (const auto &[idx, c] : A.terms()) {
        out.accumulate(idx, ((c % m) + m) % m);
    }
    return out;
}

} // namespace leetile
