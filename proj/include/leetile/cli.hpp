#pragma once

// Command-line front end. Exit codes: 0 success/accept, 1 reject or failed
// identity, 2 malformed input, 3 certification gap.

#include <leetile/abelian_group.hpp>
#include <leetile/certify.hpp>
#include <leetile/json_io.hpp>
#include <leetile/lee_geometry.hpp>
#include <leetile/profiles.hpp>
#include <leetile/search.hpp>
#include <leetile/smith.hpp>
#include <leetile/tiling.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace leetile::cli {

enum ExitCode : int { kOk = 0, kReject = 1, kMalformed = 2, kGap = 3 };

namespace detail {

inline std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void print_report(std::ostream &out, const VerificationReport &r) {
    out << to_string(r.verdict);
    if (r.failed_condition) {
        out << ": " << to_string(*r.failed_condition);
    }
    out << ": " << r.message << '\n';
    if (r.witness) {
        out << "witness (" << to_string(r.witness->element) << "): expected " << r.witness->expected << ", actual "
            << r.witness->actual << '\n';
    }
    if (r.collision) {
        auto vec = [](const LeeVector &v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? " " : "") + std::to_string(v[i]);
            }
            return s;
        };
        out << "collision: (" << vec(r.collision->first) << ") and (" << vec(r.collision->second) << ") -> ("
            << to_string(r.collision->coset) << ")\n";
    }
}

inline void print_checks(std::ostream &out, const IdentityReport &r) {
    for (const auto &c : r.checks) {
        out << c.name << ": " << c.lhs << ' ' << c.relation << ' ' << c.rhs << (c.holds ? " ok" : " FAIL") << '\n';
    }
}

inline void print_certificate(std::ostream &out, const NonexistenceCertificate &c) {
    out << "n=" << c.n << ": " << to_string(c.verdict) << " by " << to_string(c.justification) << " [" << c.family
        << " / " << c.case_label << "]";
    if (c.justification == Justification::inequality) {
        out << " " << c.inequality->text() << " evaluates to " << *c.evaluated_value << " (threshold "
            << *c.threshold << ")";
    } else if (c.justification == Justification::witness) {
        out << " " << c.witness->group.name() << " T = {";
        for (std::size_t i = 0; i < c.witness->T.size(); ++i) {
            out << (i ? "; " : "") << to_string(c.witness->T[i]);
        }
        out << "}";
    } else if (c.justification == Justification::search) {
        for (const auto &s : c.search) {
            out << " " << s.group << ": " << s.solutions << " solutions, " << s.nodes_explored << " nodes";
        }
    }
    out << '\n';
}

inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParseError("range must look like lo:hi, got '" + text + "'");
    }
    return {leetile::detail::parse_int(std::string_view(text).substr(0, colon)),
            leetile::detail::parse_int(std::string_view(text).substr(colon + 1))};
}

} // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Lattice tilings of Z^n by Lee spheres: verification, search and nonexistence certificates",
                 "leetile"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> factor_bound;
    app.add_option("--factor-bound", factor_bound, "Largest group order the factorizer accepts");

    bool json_out = false;

    auto *sphere = app.add_subcommand("sphere", "Size (and optionally points) of the Lee sphere S(n, r)");
    int sphere_n = 0;
    int sphere_r = 0;
    bool sphere_list = false;
    sphere->add_option("--n", sphere_n)->required();
    sphere->add_option("--r", sphere_r)->required();
    sphere->add_flag("--list", sphere_list, "Print every point, one per line");
    sphere->add_flag("--json", json_out);

    auto *groups = app.add_subcommand("groups", "Abelian groups of a given order in invariant-factor form");
    std::int64_t group_order = 0;
    groups->add_option("--order", group_order)->required();
    groups->add_flag("--json", json_out);

    auto *verify = app.add_subcommand("verify", "Verify a lattice basis or a group model (G, T)");
    std::string basis_path;
    int verify_r = 2;
    std::string group_spec;
    int model_n = 0;
    std::string t_spec;
    auto *basis_opt = verify->add_option("--basis", basis_path, "Basis file (columns generate the lattice)");
    verify->add_option("--r", verify_r, "Sphere radius for --basis")->needs(basis_opt);
    auto *vgroup = verify->add_option("--group", group_spec, "Group spec, e.g. Z13 or Z5xZ5");
    auto *vn = verify->add_option("--n", model_n);
    auto *vt = verify->add_option("--t", t_spec, "Elements of T as \"r1,r2;...\"");
    basis_opt->excludes(vgroup)->excludes(vn)->excludes(vt);
    vgroup->needs(vn)->needs(vt);
    verify->add_flag("--json", json_out);

    auto *prof = app.add_subcommand("profile", "Multiplicity profile of T^(k) T and its identities");
    int k = 2;
    prof->add_option("--group", group_spec)->required();
    prof->add_option("--n", model_n)->required();
    prof->add_option("--t", t_spec)->required();
    prof->add_option("--k", k)->required()->check(CLI::IsMember({2, 4}));
    prof->add_flag("--json", json_out);

    auto *search = app.add_subcommand("search", "Exhaustive search for T over groups of order 2n^2+2n+1");
    int search_n = 0;
    int partitions = 1;
    std::optional<std::uint64_t> budget;
    bool no_reduction = false;
    search->add_option("--n", search_n)->required();
    search->add_option("--group", group_spec);
    search->add_option("--partitions", partitions)->check(CLI::PositiveNumber);
    search->add_option("--budget", budget);
    search->add_flag("--no-reduction", no_reduction);
    search->add_flag("--json", json_out);

    auto *cert = app.add_subcommand("certify", "Nonexistence certificates per dimension");
    std::optional<std::int64_t> cert_n;
    std::string range;
    bool search_fallback = false;
    bool list = false;
    auto *cn = cert->add_option("--n", cert_n);
    auto *cr = cert->add_option("--range", range, "lo:hi");
    cn->excludes(cr);
    cert->add_flag("--search-fallback", search_fallback, "Use exhaustive search where feasible instead of the table");
    cert->add_flag("--list", list, "With --range, print every certificate");
    cert->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kMalformed;
    }

    const auto bound = factor_bound.value_or(default_factor_bound());
    try {
        if (sphere->parsed()) {
            const LeeSphereSpec spec{sphere_n, sphere_r};
            spec.validate();
            const auto size = sphere_size(spec);
            if (json_out) {
                json j{{"n", sphere_n}, {"r", sphere_r}, {"size", big_to_json(size)}};
                if (sphere_list) {
                    j["points"] = sphere_points(spec);
                }
                out << j.dump(2) << '\n';
            } else {
                out << size << '\n';
                if (sphere_list) {
                    for (const auto &p : sphere_points(spec)) {
                        for (std::size_t i = 0; i < p.size(); ++i) {
                            out << (i ? " " : "") << p[i];
                        }
                        out << '\n';
                    }
                }
            }
            return kOk;
        }
        if (groups->parsed()) {
            const auto list_groups = enumerate_groups(group_order, bound);
            if (json_out) {
                out << json(list_groups).dump(2) << '\n';
            } else {
                for (const auto &G : list_groups) {
                    out << G.name() << '\n';
                }
            }
            return kOk;
        }
        if (verify->parsed()) {
            VerificationReport report;
            if (!basis_path.empty()) {
                report = verify_lattice(parse_basis(detail::read_file(basis_path)), verify_r);
            } else if (!group_spec.empty()) {
                const auto G = parse_group_spec(group_spec);
                report = check_conditions(TilingCandidate::make(G, model_n, parse_elements(G, t_spec)));
            } else {
                err << "error: verify needs --basis or --group/--n/--t\n\n" << verify->help();
                return kMalformed;
            }
            if (json_out) {
                out << json(report).dump(2) << '\n';
            } else {
                detail::print_report(out, report);
            }
            return report.accepted() ? kOk : kReject;
        }
        if (prof->parsed()) {
            const auto G = parse_group_spec(group_spec);
            const auto candidate = TilingCandidate::make(G, model_n, parse_elements(G, t_spec));
            const auto report = check_conditions(candidate);
            if (!report.accepted()) {
                if (json_out) {
                    out << json{{"verification", report}}.dump(2) << '\n';
                } else {
                    detail::print_report(out, report);
                }
                return kReject;
            }
            const auto p = profile(candidate, k);
            const char symbol = k == 2 ? 'X' : 'Y';
            bool ok = true;
            json j{{"profile", p}};
            if (k == 2) {
                const auto ids = check_identities_k2(p);
                ok = ids.all_hold();
                j["identities"] = ids;
                if (!json_out) {
                    for (const auto &[i, size] : p.histogram) {
                        out << '|' << symbol << '_' << i << "| = " << size << '\n';
                    }
                    detail::print_checks(out, ids);
                }
            } else {
                const auto ids = check_identities_k4(p);
                ok = ids.all_hold();
                j["identities"] = ids;
                if (!json_out) {
                    for (const auto &[i, size] : p.histogram) {
                        out << '|' << symbol << '_' << i << "| = " << size << '\n';
                    }
                    out << "delta = " << ids.delta.delta << " (delta_raw = " << ids.delta.delta_raw << ")\n";
                    detail::print_checks(out, ids.identities);
                }
            }
            if (json_out) {
                out << j.dump(2) << '\n';
            }
            return ok ? kOk : kReject;
        }
        if (search->parsed()) {
            SearchOptions opts;
            opts.use_automorphism_reduction = !no_reduction;
            opts.worker_partitions = partitions;
            opts.node_budget = budget;
            std::vector<SearchOutcome> outcomes;
            if (!group_spec.empty()) {
                outcomes.push_back(search_group(parse_group_spec(group_spec), search_n, opts));
            } else {
                outcomes = search_all(search_n, opts, bound);
            }
            if (json_out) {
                out << json{{"n", search_n}, {"outcomes", outcomes}}.dump(2) << '\n';
            } else {
                for (const auto &o : outcomes) {
                    out << o.group.name() << ": " << o.solutions.size() << " solution(s), " << o.nodes_explored
                        << " nodes, " << (o.exhausted ? "exhausted" : "budget hit")
                        << (o.reduced ? ", up to units" : "") << '\n';
                    for (const auto &T : o.solutions) {
                        out << "  T = {";
                        for (std::size_t i = 0; i < T.size(); ++i) {
                            out << (i ? "; " : "") << to_string(T[i]);
                        }
                        out << "}\n";
                    }
                }
            }
            return kOk;
        }
        if (cert->parsed()) {
            CertifyOptions opts;
            opts.search_fallback = search_fallback;
            if (cert_n) {
                const auto c = certify(*cert_n, opts);
                if (json_out) {
                    out << json(c).dump(2) << '\n';
                } else {
                    detail::print_certificate(out, c);
                }
                return c.verdict == CertVerdict::uncertified ? kGap : kOk;
            }
            if (range.empty()) {
                err << "error: certify needs --n or --range\n\n" << cert->help();
                return kMalformed;
            }
            const auto [lo, hi] = detail::parse_range(range);
            const auto summary = certify_range(lo, hi, opts);
            if (json_out) {
                out << summary_to_json(summary).dump(2) << '\n';
            } else {
                if (list) {
                    for (const auto &c : summary.certificates) {
                        detail::print_certificate(out, c);
                    }
                }
                out << "certified " << summary.certificates.size() - summary.gaps.size() << " of "
                    << summary.certificates.size() << " dimensions in [" << lo << ", " << hi << "]\n";
                for (const auto &[kind, count] : summary.by_justification) {
                    out << "  " << kind << ": " << count << '\n';
                }
                for (auto g : summary.gaps) {
                    out << "  gap: n=" << g << '\n';
                }
            }
            return summary.complete() ? kOk : kGap;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    }
    return kMalformed;
}

} // namespace leetile::cli
