#pragma once

// Finite abelian groups in invariant-factor form d_1 | d_2 | ... | d_k.
// Elements are residue tuples; the group also fixes a lexicographic linear
// index so dense tables can be keyed by element.

#include <leetile/errors.hpp>
#include <leetile/factorize.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leetile {

struct GroupElement {
    std::vector<std::int64_t> residues;

    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
    friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

inline std::string to_string(const GroupElement &g) {
    std::string out;
    for (std::size_t i = 0; i < g.residues.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(g.residues[i]);
    }
    return out.empty() ? std::string("()") : out;
}

class AbelianGroup {
  public:
    AbelianGroup() = default;

    // Factors equal to 1 are dropped; the remainder must form a divisibility chain.
    explicit AbelianGroup(std::vector<std::int64_t> factors) {
        for (auto d : factors) {
            if (d < 1) {
                throw DomainError("invariant factors must be positive, got " + std::to_string(d));
            }
            if (d > 1) {
                factors_.push_back(d);
            }
        }
        for (std::size_t i = 1; i < factors_.size(); ++i) {
            if (factors_[i] % factors_[i - 1] != 0) {
                throw DomainError("invariant factors must form a divisibility chain: " +
                                  std::to_string(factors_[i - 1]) + " does not divide " +
                                  std::to_string(factors_[i]));
            }
        }
        order_ = 1;
        for (auto d : factors_) {
            if (__builtin_mul_overflow(order_, d, &order_)) {
                throw DomainError("group order overflows 64 bits");
            }
        }
        strides_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size(); i-- > 1;) {
            strides_[i - 1] = strides_[i] * factors_[i];
        }
    }

    static AbelianGroup cyclic(std::int64_t m) { return AbelianGroup({m}); }

    const std::vector<std::int64_t> &factors() const noexcept { return factors_; }
    std::int64_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    bool is_cyclic() const noexcept { return factors_.size() <= 1; }
    // Largest invariant factor: the exponent of the group.
    std::int64_t exponent() const noexcept { return factors_.empty() ? 1 : factors_.back(); }

    std::string name() const {
        if (factors_.empty()) {
            return "Z1";
        }
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            out += (i > 0 ? "xZ" : "Z") + std::to_string(factors_[i]);
        }
        return out;
    }

    GroupElement identity() const { return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)}; }

    bool contains(const GroupElement &g) const noexcept {
        if (g.residues.size() != factors_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) {
                return false;
            }
        }
        return true;
    }

    void require(const GroupElement &g) const {
        if (!contains(g)) {
            throw GroupMismatchError("element (" + to_string(g) + ") does not belong to " + name());
        }
    }

    // Reduces arbitrary integer residues into canonical range.
    GroupElement reduce(std::span<const std::int64_t> raw) const {
        if (raw.size() != factors_.size()) {
            throw GroupMismatchError("element has " + std::to_string(raw.size()) + " components, " +
                                     name() + " expects " + std::to_string(factors_.size()));
        }
        GroupElement g;
        g.residues.resize(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto r = raw[i] % factors_[i];
            g.residues[i] = r < 0 ? r + factors_[i] : r;
        }
        return g;
    }

    std::int64_t index_of(const GroupElement &g) const {
        require(g);
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            idx += g.residues[i] * strides_[i];
        }
        return idx;
    }

    GroupElement element_at(std::int64_t index) const {
        if (index < 0 || index >= order_) {
            throw DomainError("element index out of range for " + name());
        }
        GroupElement g;
        g.residues.resize(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            g.residues[i] = index / strides_[i];
            index %= strides_[i];
        }
        return g;
    }

    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::int64_t i = 0; i < order_; ++i) {
            out.push_back(element_at(i));
        }
        return out;
    }

    GroupElement add(const GroupElement &a, const GroupElement &b) const {
        require(a);
        require(b);
        GroupElement out = a;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            out.residues[i] += b.residues[i];
            if (out.residues[i] >= factors_[i]) {
                out.residues[i] -= factors_[i];
            }
        }
        return out;
    }

    GroupElement neg(const GroupElement &a) const {
        require(a);
        GroupElement out = a;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            out.residues[i] = out.residues[i] == 0 ? 0 : factors_[i] - out.residues[i];
        }
        return out;
    }

    // t-fold sum g^t in multiplicative notation; t may be negative.
    GroupElement scale(const GroupElement &a, std::int64_t t) const {
        require(a);
        GroupElement out = a;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const auto d = factors_[i];
            const auto k = static_cast<std::int64_t>(((static_cast<__int128>(t) % d) + d) % d);
            out.residues[i] = static_cast<std::int64_t>(static_cast<__int128>(a.residues[i]) * k % d);
        }
        return out;
    }

    // Index-level arithmetic for hot loops; callers guarantee valid indices.
    std::int64_t add_index(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            auto s = (a / strides_[i]) % factors_[i] + (b / strides_[i]) % factors_[i];
            if (s >= factors_[i]) {
                s -= factors_[i];
            }
            out += s * strides_[i];
        }
        return out;
    }

    std::int64_t neg_index(std::int64_t a) const noexcept {
        std::int64_t out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const auto r = (a / strides_[i]) % factors_[i];
            out += (r == 0 ? 0 : factors_[i] - r) * strides_[i];
        }
        return out;
    }

    friend bool operator==(const AbelianGroup &a, const AbelianGroup &b) { return a.factors_ == b.factors_; }

  private:
    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_ = 1;
};

inline GroupElement element_add(const AbelianGroup &G, const GroupElement &a, const GroupElement &b) {
    return G.add(a, b);
}

inline GroupElement element_neg(const AbelianGroup &G, const GroupElement &a) { return G.neg(a); }

inline GroupElement element_scale(const AbelianGroup &G, const GroupElement &a, std::int64_t t) {
    return G.scale(a, t);
}

namespace detail {

// Partitions of e, largest first part first ([e], [e-1,1], ...).
inline void partitions_desc(int remaining, int max_part, std::vector<int> &current,
                            std::vector<std::vector<int>> &out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_desc(remaining - part, part, current, out);
        current.pop_back();
    }
}

inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    while (exp-- > 0) {
        out *= base;
    }
    return out;
}

} // namespace detail

// One representative per isomorphism class of abelian groups of the given
// order. Cyclic group first; primes vary slowest in ascending order.
inline std::vector<AbelianGroup> enumerate_groups(std::int64_t order,
                                                  std::uint64_t bound = default_factor_bound()) {
    if (order < 1) {
        throw DomainError("group order must be >= 1, got " + std::to_string(order));
    }
    const auto primes = factorize(static_cast<std::uint64_t>(order), bound);
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (const auto &[p, e] : primes) {
        std::vector<std::vector<int>> parts;
        std::vector<int> current;
        detail::partitions_desc(e, e, current, parts);
        per_prime.push_back(std::move(parts));
    }
    std::vector<AbelianGroup> groups;
    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
        std::size_t rank = 0;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            rank = std::max(rank, per_prime[i][choice[i]].size());
        }
        // factors_desc[j] is the j-th largest invariant factor.
        std::vector<std::int64_t> factors_desc(rank, 1);
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const auto &lambda = per_prime[i][choice[i]];
            for (std::size_t j = 0; j < lambda.size(); ++j) {
                factors_desc[j] *= detail::ipow(static_cast<std::int64_t>(primes[i].first), lambda[j]);
            }
        }
        std::reverse(factors_desc.begin(), factors_desc.end());
        groups.emplace_back(std::move(factors_desc));

        std::size_t pos = per_prime.size();
        while (pos > 0) {
            --pos;
            if (++choice[pos] < per_prime[pos].size()) {
                break;
            }
            choice[pos] = 0;
            if (pos == 0) {
                return groups;
            }
        }
        if (per_prime.empty()) {
            return groups;
        }
    }
}

namespace detail {

inline std::string_view trim(std::string_view text) {
    const auto ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(ws);
    return text.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

inline std::int64_t parse_int(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw ParseError("expected an integer, got empty text");
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    std::int64_t value = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
        }
        if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, text[i] - '0', &value)) {
            throw ParseError("integer out of range: '" + std::string(text) + "'");
        }
    }
    return negative ? -value : value;
}

} // namespace detail

// Accepts "Z13", "Z5xZ5" or "5,5". The factors must already be in
// invariant-factor form.
inline AbelianGroup parse_group_spec(std::string_view spec) {
    spec = detail::trim(spec);
    if (spec.empty()) {
        throw ParseError("empty group spec");
    }
    std::vector<std::int64_t> factors;
    if (spec.front() == 'Z' || spec.front() == 'z') {
        for (auto part : detail::split(spec, 'x')) {
            part = detail::trim(part);
            if (part.size() < 2 || (part.front() != 'Z' && part.front() != 'z')) {
                throw ParseError("malformed group spec '" + std::string(spec) + "'");
            }
            factors.push_back(detail::parse_int(part.substr(1)));
        }
    } else {
        for (auto part : detail::split(spec, ',')) {
            factors.push_back(detail::parse_int(part));
        }
    }
    try {
        return AbelianGroup(std::move(factors));
    } catch (const DomainError &e) {
        throw ParseError("group spec '" + std::string(spec) + "': " + e.what());
    }
}

// "0,0;1,2;4,3" -> residue tuples, reduced into the group.
inline std::vector<GroupElement> parse_elements(const AbelianGroup &G, std::string_view text) {
    std::vector<GroupElement> out;
    text = detail::trim(text);
    if (text.empty()) {
        return out;
    }
    for (auto item : detail::split(text, ';')) {
        std::vector<std::int64_t> raw;
        for (auto comp : detail::split(item, ',')) {
            raw.push_back(detail::parse_int(comp));
        }
        if (raw.size() != G.rank()) {
            throw ParseError("element '" + std::string(detail::trim(item)) + "' has " + std::to_string(raw.size()) +
                             " components; " + G.name() + " needs " + std::to_string(G.rank()));
        }
        out.push_back(G.reduce(raw));
    }
    return out;
}

} // namespace leetile
