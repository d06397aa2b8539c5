#pragma once

// Lee metric on Z^n and exact enumeration of Lee spheres S(n, r).

#include <leetile/bigint.hpp>
#include <leetile/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

namespace leetile {

using LeeVector = std::vector<std::int64_t>;

struct LeeSphereSpec {
    int n = 1;
    int r = 0;

    void validate() const {
        if (n < 1) {
            throw DomainError("Lee sphere dimension must be >= 1, got " + std::to_string(n));
        }
        if (r < 0) {
            throw DomainError("Lee sphere radius must be >= 0, got " + std::to_string(r));
        }
    }
};

inline BigInt lee_distance(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
    if (x.size() != y.size()) {
        throw DimensionError("lee_distance: vectors of length " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigInt diff = BigInt(x[i]) - y[i];
        total += abs(diff);
    }
    return total;
}

namespace detail {

inline void enumerate_sphere(int dim, int budget, LeeVector &current, std::vector<LeeVector> &out) {
    const auto pos = current.size();
    if (static_cast<int>(pos) == dim) {
        out.push_back(current);
        return;
    }
    for (int v = -budget; v <= budget; ++v) {
        current.push_back(v);
        enumerate_sphere(dim, budget - std::abs(v), current, out);
        current.pop_back();
    }
}

} // namespace detail

// All integer points with sum |x_i| <= r, in lexicographic order.
inline std::vector<LeeVector> sphere_points(const LeeSphereSpec &spec) {
    spec.validate();
    std::vector<LeeVector> points;
    LeeVector current;
    current.reserve(static_cast<std::size_t>(spec.n));
    detail::enumerate_sphere(spec.n, spec.r, current, points);
    return points;
}

// |S(n,r)| = sum_{i=0}^{min(n,r)} 2^i C(n,i) C(r,i); also the abelian Cayley
// Moore bound for degree 2n and diameter r.
inline BigInt sphere_size(std::int64_t n, std::int64_t r) {
    if (n < 1 || r < 0) {
        throw DomainError("sphere_size requires n >= 1 and r >= 0");
    }
    BigInt total = 0;
    BigInt power = 1;
    for (std::int64_t i = 0; i <= std::min(n, r); ++i) {
        total += power * binomial(n, i) * binomial(r, i);
        power *= 2;
    }
    return total;
}

inline BigInt sphere_size(const LeeSphereSpec &spec) {
    return sphere_size(spec.n, spec.r);
}

} // namespace leetile
