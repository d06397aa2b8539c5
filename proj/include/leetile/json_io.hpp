#pragma once

// JSON encodings for reports, profiles, search outcomes and certificates.
// Big integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.

#include <leetile/abelian_group.hpp>
#include <leetile/bigint.hpp>
#include <leetile/certify.hpp>
#include <leetile/profiles.hpp>
#include <leetile/search.hpp>
#include <leetile/tiling.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <string>

namespace leetile {

using json = nlohmann::json;

inline json big_to_json(const BigInt &v) {
    if (fits_int64(v)) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

inline BigInt big_from_json(const json &j) {
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    throw ParseError("expected an integer or decimal string");
}

inline void to_json(json &j, const GroupElement &g) { j = g.residues; }
inline void from_json(const json &j, GroupElement &g) { g.residues = j.get<std::vector<std::int64_t>>(); }

inline void to_json(json &j, const AbelianGroup &G) { j = json{{"name", G.name()}, {"factors", G.factors()}}; }
inline void from_json(const json &j, AbelianGroup &G) {
    G = AbelianGroup(j.at("factors").get<std::vector<std::int64_t>>());
}

namespace detail {

template <class Enum, std::size_t N>
Enum enum_from_string(const std::string &text, const std::array<Enum, N> &values) {
    for (auto v : values) {
        if (to_string(v) == text) {
            return v;
        }
    }
    throw ParseError("unknown value '" + text + "'");
}

inline constexpr std::array kConditions{Condition::size, Condition::identity_membership, Condition::symmetry,
                                        Condition::quadratic_identity, Condition::order, Condition::coset_collision};
inline constexpr std::array kVerdicts{Verdict::accept, Verdict::reject};
inline constexpr std::array kCertVerdicts{CertVerdict::nonexistent, CertVerdict::exists_with_witness,
                                          CertVerdict::uncertified};
inline constexpr std::array kJustifications{Justification::inequality, Justification::table, Justification::search,
                                            Justification::witness, Justification::none};

} // namespace detail

inline void to_json(json &j, const VerificationReport &r) {
    j = json{{"verdict", to_string(r.verdict)}, {"message", r.message}};
    j["failed_condition"] = r.failed_condition ? json(to_string(*r.failed_condition)) : json(nullptr);
    if (r.witness) {
        j["witness"] = {{"element", r.witness->element}, {"expected", r.witness->expected}, {"actual", r.witness->actual}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.collision) {
        j["collision"] = {{"first", r.collision->first}, {"second", r.collision->second}, {"coset", r.collision->coset}};
    } else {
        j["collision"] = nullptr;
    }
}

inline void from_json(const json &j, VerificationReport &r) {
    r.verdict = detail::enum_from_string(j.at("verdict").get<std::string>(), detail::kVerdicts);
    r.message = j.value("message", "");
    r.failed_condition.reset();
    if (j.contains("failed_condition") && !j.at("failed_condition").is_null()) {
        r.failed_condition = detail::enum_from_string(j.at("failed_condition").get<std::string>(), detail::kConditions);
    }
    r.witness.reset();
    if (j.contains("witness") && !j.at("witness").is_null()) {
        const auto &w = j.at("witness");
        r.witness = CoefficientWitness{w.at("element").get<GroupElement>(), w.at("expected").get<std::int64_t>(),
                                       w.at("actual").get<std::int64_t>()};
    }
    r.collision.reset();
    if (j.contains("collision") && !j.at("collision").is_null()) {
        const auto &c = j.at("collision");
        r.collision = CollisionWitness{c.at("first").get<LeeVector>(), c.at("second").get<LeeVector>(),
                                       c.at("coset").get<GroupElement>()};
    }
}

inline void to_json(json &j, const MultiplicityProfile &p) {
    json classes = json::array();
    for (const auto &[i, size] : p.histogram) {
        classes.push_back({{"multiplicity", i}, {"size", big_to_json(size)}});
    }
    j = json{{"k", p.k}, {"n", p.n}, {"max_index", p.max_index}, {"classes", classes}};
}

inline void from_json(const json &j, MultiplicityProfile &p) {
    p.k = j.at("k").get<int>();
    p.n = j.at("n").get<std::int64_t>();
    p.histogram.clear();
    for (const auto &c : j.at("classes")) {
        p.histogram[c.at("multiplicity").get<std::int64_t>()] = big_from_json(c.at("size"));
    }
    p.max_index = j.at("max_index").get<std::int64_t>();
}

inline void to_json(json &j, const IdentityCheck &c) {
    j = json{{"name", c.name}, {"relation", c.relation}, {"lhs", big_to_json(c.lhs)}, {"rhs", big_to_json(c.rhs)},
             {"holds", c.holds}};
}

inline void from_json(const json &j, IdentityCheck &c) {
    c.name = j.at("name").get<std::string>();
    c.relation = j.at("relation").get<std::string>();
    c.lhs = big_from_json(j.at("lhs"));
    c.rhs = big_from_json(j.at("rhs"));
    c.holds = j.at("holds").get<bool>();
}

inline void to_json(json &j, const IdentityReport &r) { j = json{{"checks", r.checks}, {"all_hold", r.all_hold()}}; }
inline void from_json(const json &j, IdentityReport &r) { r.checks = j.at("checks").get<std::vector<IdentityCheck>>(); }

inline void to_json(json &j, const K4Report &r) {
    j = r.identities;
    j["delta"] = big_to_json(r.delta.delta);
    j["delta_raw"] = big_to_json(r.delta.delta_raw);
}

inline void to_json(json &j, const PredictedProfile &p) {
    j = json{{"n", p.n}, {"n_mod3", p.n_mod3}};
    if (p.exact()) {
        json classes = json::array();
        for (const auto &[i, size] : p.classes) {
            classes.push_back({{"multiplicity", i}, {"size", big_to_json(size)}});
        }
        j["classes"] = classes;
    } else {
        json sums = json::object();
        for (const auto &[r, size] : p.residue_sums) {
            sums[std::to_string(r)] = big_to_json(size);
        }
        j["residue_sums"] = sums;
    }
}

inline void to_json(json &j, const SearchOutcome &o) {
    j = json{{"group", o.group},
             {"n", o.n},
             {"solutions", o.solutions},
             {"nodes_explored", o.nodes_explored},
             {"exhausted", o.exhausted},
             {"reduced", o.reduced}};
}

inline void from_json(const json &j, SearchOutcome &o) {
    o.group = j.at("group").get<AbelianGroup>();
    o.n = j.at("n").get<int>();
    o.solutions = j.at("solutions").get<std::vector<std::vector<GroupElement>>>();
    o.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    o.exhausted = j.at("exhausted").get<bool>();
    o.reduced = j.at("reduced").get<bool>();
}

inline void to_json(json &j, const NonexistenceCertificate &c) {
    j = json{{"n", c.n},
             {"residue_tags", {{"mod3", c.n_mod3}, {"mod5", c.n_mod5}}},
             {"branch", {{"family", c.family}, {"case", c.case_label}}},
             {"justification", to_string(c.justification)},
             {"verdict", to_string(c.verdict)},
             {"note", c.note}};
    if (c.inequality) {
        j["inequality"] = {{"a", c.inequality->a},
                           {"b", c.inequality->b},
                           {"c", c.inequality->c},
                           {"direction", "<= 0"},
                           {"text", c.inequality->text()}};
    } else {
        j["inequality"] = nullptr;
    }
    j["evaluated_value"] = c.evaluated_value ? big_to_json(*c.evaluated_value) : json(nullptr);
    j["threshold"] = c.threshold ? json(*c.threshold) : json(nullptr);
    if (c.witness) {
        j["witness"] = {{"group", c.witness->group}, {"T", c.witness->T}};
    } else {
        j["witness"] = nullptr;
    }
    json search = json::array();
    for (const auto &s : c.search) {
        search.push_back({{"group", s.group},
                          {"nodes_explored", s.nodes_explored},
                          {"exhausted", s.exhausted},
                          {"solutions", s.solutions}});
    }
    j["search"] = search;
}

inline void from_json(const json &j, NonexistenceCertificate &c) {
    c.n = j.at("n").get<std::int64_t>();
    c.n_mod3 = j.at("residue_tags").at("mod3").get<int>();
    c.n_mod5 = j.at("residue_tags").at("mod5").get<int>();
    c.family = j.at("branch").at("family").get<std::string>();
    c.case_label = j.at("branch").at("case").get<std::string>();
    c.justification = detail::enum_from_string(j.at("justification").get<std::string>(), detail::kJustifications);
    c.verdict = detail::enum_from_string(j.at("verdict").get<std::string>(), detail::kCertVerdicts);
    c.note = j.value("note", "");
    c.inequality.reset();
    if (!j.at("inequality").is_null()) {
        const auto &q = j.at("inequality");
        c.inequality = Quadratic{q.at("a").get<std::int64_t>(), q.at("b").get<std::int64_t>(), q.at("c").get<std::int64_t>()};
    }
    c.evaluated_value.reset();
    if (!j.at("evaluated_value").is_null()) {
        c.evaluated_value = big_from_json(j.at("evaluated_value"));
    }
    c.threshold.reset();
    if (!j.at("threshold").is_null()) {
        c.threshold = j.at("threshold").get<std::int64_t>();
    }
    c.witness.reset();
    if (!j.at("witness").is_null()) {
        c.witness = Witness{j.at("witness").at("group").get<AbelianGroup>(),
                            j.at("witness").at("T").get<std::vector<GroupElement>>()};
    }
    c.search.clear();
    for (const auto &s : j.at("search")) {
        c.search.push_back({s.at("group").get<std::string>(), s.at("nodes_explored").get<std::uint64_t>(),
                            s.at("exhausted").get<bool>(), s.at("solutions").get<std::size_t>()});
    }
}

inline json summary_to_json(const RangeSummary &s) {
    return json{{"certificates", s.certificates},
                {"by_justification", s.by_justification},
                {"gaps", s.gaps},
                {"complete", s.complete()}};
}

} // namespace leetile
