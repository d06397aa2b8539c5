#pragma once

// Per-dimension nonexistence certificates for lattice tilings of Z^n by
// S(n, 2). The case tree splits on n mod 3 and n mod 5; each leaf carries a
// quadratic q(n) that must satisfy q(n) <= 0 for a tiling to exist. Above the
// leaf's threshold q(n) > 0, which is the contradiction. At or below the
// threshold the verdict comes from the embedded small-dimension table or from
// an exhaustive search.

#include <leetile/abelian_group.hpp>
#include <leetile/bigint.hpp>
#include <leetile/errors.hpp>
#include <leetile/search.hpp>
#include <leetile/tiling.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leetile {

// q(n) = a n^2 + b n + c; a tiling would require q(n) <= 0.
struct Quadratic {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    BigInt operator()(const BigInt &n) const { return a * n * n + b * n + c; }

    std::string text() const {
        std::string out = std::to_string(a) + "n^2";
        out += (b < 0 ? " - " : " + ") + std::to_string(b < 0 ? -b : b) + "n";
        out += (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
        return out + " <= 0";
    }

    friend bool operator==(const Quadratic &, const Quadratic &) = default;
};

struct BranchRule {
    std::string family;   // which residue argument applies
    std::string case_label;
    Quadratic inequality;
    std::int64_t threshold = 0; // largest n the inequality leaves open
    std::string note;
};

enum class CertVerdict { nonexistent, exists_with_witness, uncertified };
enum class Justification { inequality, table, search, witness, none };

inline std::string to_string(CertVerdict v) {
    switch (v) {
    case CertVerdict::nonexistent:
        return "nonexistent";
    case CertVerdict::exists_with_witness:
        return "exists-with-witness";
    case CertVerdict::uncertified:
        return "uncertified";
    }
    return "unknown";
}

inline std::string to_string(Justification j) {
    switch (j) {
    case Justification::inequality:
        return "inequality";
    case Justification::table:
        return "table";
    case Justification::search:
        return "search";
    case Justification::witness:
        return "witness";
    case Justification::none:
        return "none";
    }
    return "unknown";
}

struct SearchSummary {
    std::string group;
    std::uint64_t nodes_explored = 0;
    bool exhausted = false;
    std::size_t solutions = 0;

    friend bool operator==(const SearchSummary &, const SearchSummary &) = default;
};

struct Witness {
    AbelianGroup group;
    std::vector<GroupElement> T;

    friend bool operator==(const Witness &, const Witness &) = default;
};

struct NonexistenceCertificate {
    std::int64_t n = 0;
    int n_mod3 = 0;
    int n_mod5 = 0;
    std::string family;
    std::string case_label;
    std::optional<Quadratic> inequality;
    std::optional<BigInt> evaluated_value;
    std::optional<std::int64_t> threshold;
    Justification justification = Justification::none;
    CertVerdict verdict = CertVerdict::uncertified;
    std::string note;
    std::optional<Witness> witness;
    std::vector<SearchSummary> search;

    friend bool operator==(const NonexistenceCertificate &, const NonexistenceCertificate &) = default;
};

// Dimensions 3..100 for which no lattice tiling is known to exist by prior
// computation, except the listed open cases.
inline constexpr std::array<std::int64_t, 8> kSmallTableOpenCases{16, 21, 36, 55, 64, 66, 78, 92};
inline constexpr std::int64_t kSmallTableMin = 3;
inline constexpr std::int64_t kSmallTableMax = 100;

inline bool small_table_rules_out(std::int64_t n) {
    return n >= kSmallTableMin && n <= kSmallTableMax &&
           std::find(kSmallTableOpenCases.begin(), kSmallTableOpenCases.end(), n) == kSmallTableOpenCases.end();
}

// Leaf of the case tree selected by (n mod 3, n mod 5).
inline BranchRule branch_rule(std::int64_t n) {
    const auto r3 = n % 3;
    const auto r5 = n % 5;
    if (r3 == 0) {
        return {"n=0 mod 3", "all", {1, -3, 0}, 3, "mod-3 profile forces 2n^2-2n <= (n+1)n"};
    }
    if (r5 == 0) {
        return {"n=0 mod 5", "case analysis on |Y_M|", {1, -3, 0}, 3,
                "|Y_M| >= 2 gives 2n^2-2n-Delta <= (n+1)n with Delta <= 0; |Y_M| = 1 is ruled out structurally"};
    }
    const std::string family = r3 == 1 ? "n=1 mod 3" : "n=2 mod 3";
    const std::string label = "n=" + std::to_string(r5) + " mod 5";
    static const std::map<std::pair<int, int>, std::pair<Quadratic, std::pair<std::int64_t, const char *>>> leaves{
        {{1, 1}, {{4, -64, 12}, {15, ""}}},
        {{1, 2}, {{4, -16, -12}, {6, "conservative threshold 6; the inequality alone already fails for n >= 5"}}},
        {{1, 3},
         {{8, -50, -3},
          {13, "conservative threshold 13; the inequality alone already fails for n >= 7"}}},
        {{1, 4}, {{2, -12, -1}, {6, ""}}},
        {{2, 1}, {{2, -12, -1}, {6, ""}}},
        {{2, 2}, {{2, -46, -6}, {23, ""}}},
        {{2, 3}, {{10, -80, -3}, {8, "from (2n+1)^2 >= (22n^2-68n)/3"}}},
        {{2, 4}, {{4, -80, -9}, {20, "from (2n+1)^2 >= (16n^2-68n)/3 - 2"}}},
    };
    const auto &leaf = leaves.at({static_cast<int>(r3), static_cast<int>(r5)});
    return {family, label, leaf.first, leaf.second.first, leaf.second.second};
}

struct CertifyOptions {
    // Prefer an exhaustive search over the table where the search is feasible.
    bool search_fallback = false;
    std::int64_t search_max_n = 6;
};

inline Witness known_tiling(std::int64_t n) {
    if (n == 1) {
        const auto G = AbelianGroup::cyclic(5);
        return {G, parse_elements(G, "0;1;4")};
    }
    if (n == 2) {
        const auto G = AbelianGroup::cyclic(13);
        return {G, parse_elements(G, "0;1;5;8;12")};
    }
    throw DomainError("no lattice tiling by S(n,2) exists for n >= 3");
}

inline NonexistenceCertificate certify(std::int64_t n, const CertifyOptions &opts = {}) {
    if (n < 1) {
        throw DomainError("certify requires n >= 1");
    }
    NonexistenceCertificate cert;
    cert.n = n;
    cert.n_mod3 = static_cast<int>(n % 3);
    cert.n_mod5 = static_cast<int>(n % 5);
    if (n <= 2) {
        auto w = known_tiling(n);
        if (!check_conditions(TilingCandidate::make(w.group, static_cast<int>(n), w.T)).accepted()) {
            throw std::logic_error("embedded witness fails the tiling conditions");
        }
        cert.family = "existence";
        cert.case_label = "n <= 2";
        cert.justification = Justification::witness;
        cert.verdict = CertVerdict::exists_with_witness;
        cert.witness = std::move(w);
        return cert;
    }
    const auto rule = branch_rule(n);
    cert.family = rule.family;
    cert.case_label = rule.case_label;
    cert.inequality = rule.inequality;
    cert.threshold = rule.threshold;
    cert.note = rule.note;
    cert.evaluated_value = rule.inequality(n);
    if (n > rule.threshold) {
        if (*cert.evaluated_value <= 0) {
            throw std::logic_error("inequality does not yield a contradiction above its threshold");
        }
        cert.justification = Justification::inequality;
        cert.verdict = CertVerdict::nonexistent;
        return cert;
    }
    if (opts.search_fallback && n <= opts.search_max_n) {
        bool ruled_out = true;
        for (const auto &outcome : search_all(static_cast<int>(n))) {
            cert.search.push_back({outcome.group.name(), outcome.nodes_explored, outcome.exhausted,
                                   outcome.solutions.size()});
            ruled_out = ruled_out && outcome.exhausted && outcome.solutions.empty();
        }
        if (ruled_out) {
            cert.justification = Justification::search;
            cert.verdict = CertVerdict::nonexistent;
            return cert;
        }
        cert.search.clear();
    }
    if (small_table_rules_out(n)) {
        cert.justification = Justification::table;
        cert.verdict = CertVerdict::nonexistent;
        return cert;
    }
    cert.justification = Justification::none;
    cert.verdict = CertVerdict::uncertified;
    return cert;
}

// Independent re-check of a certificate's stored arithmetic.
inline bool certificate_is_valid(const NonexistenceCertificate &cert) {
    if (cert.n_mod3 != cert.n % 3 || cert.n_mod5 != cert.n % 5) {
        return false;
    }
    switch (cert.justification) {
    case Justification::inequality:
        return cert.verdict == CertVerdict::nonexistent && cert.inequality && cert.evaluated_value &&
               cert.threshold && cert.n > *cert.threshold && (*cert.inequality)(cert.n) == *cert.evaluated_value &&
               *cert.evaluated_value > 0;
    case Justification::table:
        return cert.verdict == CertVerdict::nonexistent && small_table_rules_out(cert.n);
    case Justification::search:
        return cert.verdict == CertVerdict::nonexistent && !cert.search.empty() &&
               std::all_of(cert.search.begin(), cert.search.end(),
                           [](const SearchSummary &s) { return s.exhausted && s.solutions == 0; });
    case Justification::witness:
        return cert.verdict == CertVerdict::exists_with_witness && cert.witness &&
               check_conditions(TilingCandidate::make(cert.witness->group, static_cast<int>(cert.n), cert.witness->T))
                   .accepted();
    case Justification::none:
        return false;
    }
    return false;
}

struct RangeSummary {
    std::vector<NonexistenceCertificate> certificates;
    std::map<std::string, std::size_t> by_justification;
    std::vector<std::int64_t> gaps;

    bool complete() const noexcept { return gaps.empty(); }
};

inline RangeSummary certify_range(std::int64_t lo, std::int64_t hi, const CertifyOptions &opts = {}) {
    if (lo < 3 || lo > hi) {
        throw DomainError("certify_range requires 3 <= lo <= hi");
    }
    RangeSummary summary;
    summary.certificates.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (auto n = lo; n <= hi; ++n) {
        auto cert = certify(n, opts);
        if (cert.verdict == CertVerdict::uncertified) {
            summary.gaps.push_back(n);
        }
        ++summary.by_justification[to_string(cert.justification)];
        summary.certificates.push_back(std::move(cert));
    }
    return summary;
}

} // namespace leetile
