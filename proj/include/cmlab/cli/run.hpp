#pragma once

// Command-line front end. run() is callable in-process; exit codes are
// 0 (checks pass), 1 (a check failed or a computation error), 2 (usage).

#include "cmlab/center/center.hpp"
#include "cmlab/cmcells/cells.hpp"
#include "cmlab/galois/certificate.hpp"
#include "cmlab/reflgrp/json.hpp"
#include "cmlab/series/hilbert.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cmlab::cli {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default truncation order for series, overridable by CMLAB_SERIES_ORDER.
inline int default_order() {
    if (const char* s = std::getenv("CMLAB_SERIES_ORDER")) {
        try {
            int n = std::stoi(s);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
        throw UsageError("CMLAB_SERIES_ORDER must be a positive integer");
    }
    return 12;
}

namespace detail {

inline std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

// key=value pairs from "a=1,b=2", "K=0,1,-1" or a file of lines key=value.
inline std::vector<std::pair<std::string, std::string>> read_assignments(const std::string& arg) {
    std::vector<std::string> items;
    std::ifstream f(arg);
    if (f) {
        std::string line;
        while (std::getline(f, line)) {
            line = trim(line.substr(0, line.find('#')));
            if (!line.empty()) items.push_back(line);
        }
    } else {
        // A comma after K= continues the list.
        for (const auto& piece : split(arg, ',')) {
            if (piece.find('=') == std::string::npos && !items.empty())
                items.back() += "," + piece;
            else
                items.push_back(piece);
        }
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& it : items) {
        auto eq = it.find('=');
        if (eq == std::string::npos) throw UsageError("parameter '" + it + "' is not of the form key=value");
        out.push_back({trim(it.substr(0, eq)), trim(it.substr(eq + 1))});
    }
    return out;
}

inline Cyclotomic parse_value(const std::string& s) {
    try {
        return Cyclotomic::parse(s);
    } catch (const std::exception& e) {
        throw UsageError("cannot parse parameter value '" + s + "': " + e.what());
    }
}

}  // namespace detail

/// A parameter point in C-coordinates, with the K-coordinates when the group
/// is cyclic.
struct ParamPoint {
    std::vector<Cyclotomic> c;
    std::vector<Cyclotomic> k;  // cyclic only: K0..K{d-1}
    std::string source;         // "C" or "K"
};

inline ParamPoint parse_params(const ReflectionGroup& g, const std::string& arg) {
    auto names = g.param_names();
    ParamPoint p;
    p.c.assign(names.size(), Cyclotomic(0));
    std::vector<bool> set(names.size(), false);
    for (const auto& [key, val] : detail::read_assignments(arg)) {
        if (key == "K") {
            if (!g.is_cyclic()) throw UsageError("K coordinates are accepted for cyclic groups only");
            std::vector<Cyclotomic> k;
            for (const auto& v : detail::split(val, ',')) k.push_back(detail::parse_value(v));
            try {
                p.c = c_from_k(g, k);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            p.source = "K";
            std::fill(set.begin(), set.end(), true);
            continue;
        }
        std::string name = key;
        if (g.spec == "b2" && (key == "a" || key == "b")) name = key == "a" ? "A" : "B";
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw UsageError("unknown parameter '" + key + "' for " + g.spec);
        p.c[it - names.begin()] = detail::parse_value(val);
        set[it - names.begin()] = true;
        if (p.source.empty()) p.source = "C";
    }
    for (size_t i = 0; i < names.size(); ++i)
        if (!set[i]) throw UsageError("missing parameter " + names[i]);
    if (g.is_cyclic()) {
        CParams cp;
        for (const auto& v : p.c) cp.c.push_back(Poly(v));
        KParams kp = c_to_k(g, cp);
        for (const auto& v : kp.k[0]) p.k.push_back(v.is_zero() ? Cyclotomic(0) : *v.as_constant());
    }
    return p;
}

inline nlohmann::ordered_json params_json(const ReflectionGroup& g, const ParamPoint& p) {
    nlohmann::ordered_json j;
    auto names = g.param_names();
    j["input"] = p.source;
    nlohmann::ordered_json c;
    for (size_t i = 0; i < names.size(); ++i) c[names[i]] = p.c[i].str();
    j["C"] = c;
    if (!p.k.empty()) {
        nlohmann::ordered_json k = nlohmann::ordered_json::array();
        for (const auto& v : p.k) k.push_back(v.str());
        j["K"] = k;
    }
    return j;
}

namespace detail {

inline std::shared_ptr<const ReflectionGroup> group_or_usage(const std::string& spec) {
    try {
        return build_group(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline Rational rational_or_usage(const Cyclotomic& c, const std::string& what) {
    auto q = c.as_rational();
    if (!q) throw UsageError(what + " must be rational, got " + c.str());
    return *q;
}

inline void print_report_text(std::ostream& out, const CenterReport& r) {
    int pass = 0;
    for (const auto& c : r.checks) {
        out << (c.ok ? "pass  " : "FAIL  ") << c.relation << ": " << c.statement << "\n";
        if (c.residue) out << "      residue: " << *c.residue << "\n";
        pass += c.ok;
    }
    out << pass << "/" << r.checks.size() << " checks pass\n";
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string blocks_text(const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::string> parts;
    for (const auto& b : blocks) parts.push_back("{" + join(b, ", ") + "}");
    return join(parts, " ");
}

}  // namespace detail

struct Output {
    bool json = false;
    std::ostream& out;
    void emit(const nlohmann::ordered_json& j) const { out << j.dump(2) << "\n"; }
};

inline int cmd_group_info(const Output& o, const std::string& spec) {
    auto g = detail::group_or_usage(spec);
    auto j = group_info_json(*g);
    if (o.json) {
        o.emit(j);
        return kPass;
    }
    o.out << g->spec << ": order " << g->order() << ", rank " << g->rank << "\n";
    o.out << "elements: " << detail::join(g->names, " ") << "\n";
    std::vector<std::string> deg;
    for (int d : g->degrees) deg.push_back(std::to_string(d));
    o.out << "degrees: " << detail::join(deg, " ") << "\n";
    for (const auto& rc : g->refl_classes) {
        std::vector<std::string> m;
        for (int w : rc.members) m.push_back(g->names[w]);
        o.out << "parameter " << rc.param << ": {" << detail::join(m, ", ") << "}\n";
    }
    for (const auto& c : g->chars)
        o.out << "character " << c.name << ": degree " << c.degree() << ", b = " << b_invariant(*g, c) << "\n";
    return kPass;
}

inline int cmd_verify(const Output& o, const std::string& what, const std::string& spec) {
    auto g = detail::group_or_usage(spec);
    CenterReport r;
    std::optional<Poly> poly;
    if (what == "center") {
        if (g->is_cyclic())
            r = verify_rank1_center(g->cyclic_d());
        else if (g->spec == "b2")
            r = verify_b2_center();
        else
            throw UsageError("no center presentation for " + spec);
    } else if (what == "relations") {
        if (g->spec != "b2") throw UsageError("relations Z1-Z9 are stated for b2");
        auto full = verify_b2_center();
        r.group = full.group;
        for (const auto& c : full.checks)
            if (c.relation.rfind("Z", 0) == 0) r.checks.push_back(c);
    } else {
        auto m = minpoly_euler(g);
        r = m.report;
        poly = m.polynomial;
    }
    if (o.json) {
        auto j = report_json(r);
        if (poly) j["polynomial"] = poly->str();
        o.emit(j);
    } else {
        if (poly) o.out << "F_eu(t) = " << poly->str() << "\n";
        detail::print_report_text(o.out, r);
    }
    return r.ok() ? kPass : kFail;
}

inline int cmd_families(const Output& o, const std::string& spec, const std::string& params, bool euler_only) {
    auto g = detail::group_or_usage(spec);
    auto p = parse_params(*g, params);
    auto fp = cm_families(g, p.c, euler_only ? FamilyMode::EulerOnly : FamilyMode::Full);
    if (o.json) {
        nlohmann::ordered_json j{{"group", g->spec}};
        j.update(families_json(fp));
        j["parameters"] = params_json(*g, p);
        o.emit(j);
    } else {
        o.out << g->spec << " families (" << (euler_only ? "euler-only" : "full") << "): " << detail::blocks_text(fp.blocks)
              << "\n";
    }
    return kPass;
}

inline int cmd_cells(const Output& o, const std::string& spec, const std::string& params) {
    auto g = detail::group_or_usage(spec);
    auto p = parse_params(*g, params);
    CellData cd;
    if (g->spec == "b2") {
        cd = b2_cells(detail::rational_or_usage(p.c[0], "A"), detail::rational_or_usage(p.c[1], "B"));
    } else if (g->is_cyclic()) {
        std::vector<Rational> k;
        for (const auto& v : p.k) k.push_back(detail::rational_or_usage(v, "K"));
        cd = rank1_cells(g->cyclic_d(), k);
    } else {
        throw UsageError("no cell data for " + spec);
    }
    auto fp = cm_families(g, p.c);
    auto sr = sum_rule_check(*g, cd, &fp);
    if (o.json) {
        auto j = cells_json(cd);
        j["parameters"] = params_json(*g, p);
        nlohmann::ordered_json s;
        s["status"] = sr.ok() ? "pass" : "fail";
        s["cell_sizes"] = sr.cell_sizes;
        s["left_cell_sizes"] = sr.left_cell_sizes;
        s["families_match"] = sr.families_match;
        s["failures"] = sr.failures;
        j["sum_rules"] = s;
        o.emit(j);
    } else {
        o.out << g->spec << " families: " << detail::blocks_text(cd.families) << "\n";
        if (!cd.supported) {
            o.out << "cells: unsupported (" << cd.note << ")\n";
        } else {
            for (size_t i = 0; i < cd.two_sided.size(); ++i)
                o.out << "two-sided cell {" << detail::join(cd.two_sided[i], ", ") << "}, size " << cd.two_sided[i].size()
                      << ", family {" << detail::join(cd.two_sided_family[i], ", ") << "}\n";
            for (size_t i = 0; i < cd.left.size(); ++i) {
                std::vector<std::string> ch;
                for (const auto& [n, m] : cd.cellular[i]) ch.push_back(m == 1 ? n : std::to_string(m) + "*" + n);
                o.out << "left cell {" << detail::join(cd.left[i], ", ") << "}: " << detail::join(ch, " + ") << "\n";
            }
        }
        o.out << "sum rules: " << (sr.ok() ? "pass" : "FAIL") << "\n";
        for (const auto& f : sr.failures) o.out << "  " << f << "\n";
    }
    return sr.ok() ? kPass : kFail;
}

inline int cmd_fake_degrees(const Output& o, const std::string& spec) {
    auto g = detail::group_or_usage(spec);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& chi : g->chars) {
        Poly f = fake_degree(*g, chi);
        ok = ok && f.substitute(std::map<std::string, Poly>{{"t", Poly(1)}}) == Poly(chi.degree());
        rows.push_back({{"character", chi.name}, {"fake_degree", f.str()}, {"b", b_invariant(*g, chi)}});
        if (!o.json) o.out << chi.name << ": " << f.str() << "  (b = " << b_invariant(*g, chi) << ")\n";
    }
    if (o.json) o.emit({{"group", g->spec}, {"status", ok ? "pass" : "fail"}, {"rows", rows}});
    return ok ? kPass : kFail;
}

inline int cmd_hilbert(const Output& o, const std::string& spec, int order, bool check) {
    auto g = detail::group_or_usage(spec);
    if (order < 1) throw UsageError("--order must be at least 1");
    auto cs = hilbert_center(g, order);
    auto inv = molien_bigraded(*g, order);
    bool invariants_agree = inv == fantome_bigraded(*g, order);
    bool ok = !check || (cs.agree() && invariants_agree);
    if (o.json) {
        nlohmann::ordered_json j;
        j["group"] = g->spec;
        j["order"] = order;
        j["numerator"] = fantome_numerator(*g).str();
        j["invariants"] = series_table_json(inv);
        j["center"] = series_table_json(cs.basis);
        nlohmann::ordered_json bd = nlohmann::ordered_json::array();
        for (const auto& [n, d] : cs.basis_bidegrees) bd.push_back({n, d.first, d.second});
        j["center_basis"] = bd;
        if (check) {
            j["checks"] = {{"molien_equals_fake_degree", invariants_agree},
                           {"center_molien_equals_fake_degree", cs.molien == cs.fantome},
                           {"center_equals_basis_series", cs.fantome == cs.basis}};
            j["status"] = ok ? "pass" : "fail";
        }
        o.emit(j);
    } else {
        o.out << "k[V + V*]^W: " << molien_closed_form(*g) << "\n";
        o.out << "center coefficients up to total degree " << order << " (i, j, dim):\n";
        for (const auto& row : series_table_json(cs.basis))
            o.out << "  " << row[0].get<int>() << " " << row[1].get<int>() << " " << row[2].get<std::string>() << "\n";
        if (check) o.out << "Molien = fake-degree form = P-basis series: " << (ok ? "pass" : "FAIL") << "\n";
    }
    return ok ? kPass : kFail;
}

inline int cmd_omega_table(const Output& o, const std::string& spec) {
    auto g = detail::group_or_usage(spec);
    auto H = CherednikAlgebra::generic(g);
    auto j = omega_table_json(H, center_generator_names(*g, FamilyMode::Full));
    if (o.json) {
        o.emit(j);
        return kPass;
    }
    for (const auto& row : j["rows"]) {
        o.out << row["character"].get<std::string>() << ":";
        for (const auto& [k, v] : row["omega"].items()) o.out << "  " << k << " -> " << v.get<std::string>();
        o.out << "\n";
    }
    return kPass;
}

inline int cmd_galois(const Output& o) {
    auto c = b2_galois_certificate();
    if (o.json) {
        o.emit(certificate_json(c));
    } else {
        for (const auto& s : c.steps) o.out << (s.ok ? "pass  " : "FAIL  ") << s.name << ": " << s.claim << "\n      " << s.computed << "\n";
        o.out << c.conclusion << "\n";
    }
    return c.ok() ? kPass : kFail;
}

inline int cmd_geometry(const Output& o, int d, const std::string& point, bool discriminant) {
    if (d < 2) throw UsageError("--d must be at least 2");
    nlohmann::ordered_json j;
    j["group"] = "cyclic:" + std::to_string(d);
    if (!point.empty()) {
        auto vals = detail::split(point, ',');
        if (static_cast<int>(vals.size()) != d + 3)
            throw UsageError("--point takes k_1..k_d, x, y, e (" + std::to_string(d + 3) + " values)");
        std::vector<Rational> r;
        for (const auto& v : vals) r.push_back(detail::rational_or_usage(detail::parse_value(v), "coordinate"));
        Rank1Point p{{r.begin(), r.begin() + d}, r[d], r[d + 1], r[d + 2]};
        bool sing, ram;
        try {
            sing = rank1_singular_test(p);
            ram = rank1_ramification_test(p);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        j["point"] = vals;
        j["singular"] = sing;
        j["ramified"] = ram;
    }
    if (discriminant) {
        auto [D, square] = rank1_discriminant(d);
        j["discriminant"] = D.str();
        j["discriminant_is_square"] = square;
    }
    j["notes"] = {rank1_singular_note()};
    if (o.json) {
        o.emit(j);
    } else {
        if (j.contains("singular"))
            o.out << "singular: " << (j["singular"].get<bool>() ? "yes" : "no") << "\nramified: " << (j["ramified"].get<bool>() ? "yes" : "no")
                  << "\n";
        if (discriminant)
            o.out << "disc_t F_eu = " << j["discriminant"].get<std::string>() << " (" << (j["discriminant_is_square"].get<bool>() ? "square" : "not a square")
                  << ")\n";
        o.out << "note: " << rank1_singular_note() << "\n";
    }
    return kPass;
}

inline int cmd_poisson(const Output& o, const std::string& spec, const std::string& lhs, const std::string& rhs) {
    auto g = detail::group_or_usage(spec);
    auto H = CherednikAlgebra::generic(g);
    auto named = named_center_generators(H);
    auto element = [&](const std::string& s) {
        auto it = named.find(s);
        if (it != named.end()) return it->second;
        try {
            return parse_pbw(H, s);
        } catch (const std::exception& e) {
            throw UsageError("cannot parse element '" + s + "': " + e.what());
        }
    };
    PBWElement a = element(lhs), b = element(rhs);
    PBWElement br;
    try {
        br = poisson_bracket(a, b);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    if (o.json) {
        o.emit({{"group", g->spec}, {"lhs", lhs}, {"rhs", rhs}, {"bracket", br.str()}});
    } else {
        o.out << "{" << lhs << ", " << rhs << "} = " << br.str() << "\n";
    }
    return kPass;
}

inline int run(const std::vector<std::string>& argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Rational Cherednik algebras at t = 0: centers, Calogero-Moser families and cells"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output");

    std::string spec, params, what, lhs = "eu", rhs = "delta", point;
    int order = 0, d = 0;
    bool check = false, euler_only = false, disc = false;
    std::function<int(const Output&)> action;

    auto* group = app.add_subcommand("group", "group data");
    std::string info;
    group->add_option("spec", spec, "group, e.g. b2 or cyclic:3")->required();
    group->add_option("what", info, "info")->required()->check(CLI::IsMember({"info"}));
    group->callback([&] { action = [&](const Output& o) { return cmd_group_info(o, spec); }; });

    auto* verify = app.add_subcommand("verify", "verify center presentations");
    verify->add_option("what", what, "center, relations or minpoly")->required()->check(CLI::IsMember({"center", "relations", "minpoly"}));
    verify->add_option("--group", spec)->required();
    verify->callback([&] { action = [&](const Output& o) { return cmd_verify(o, what, spec); }; });

    auto* fam = app.add_subcommand("families", "Calogero-Moser families at a parameter point");
    fam->add_option("--group", spec)->required();
    fam->add_option("--params", params, "file or inline a=..,b=.. / C1=.. / K=k0,..")->required();
    fam->add_flag("--euler-only", euler_only, "separate by Omega(eu) only");
    fam->callback([&] { action = [&](const Output& o) { return cmd_families(o, spec, params, euler_only); }; });

    auto* cells = app.add_subcommand("cells", "Calogero-Moser cells and cellular characters");
    cells->add_option("--group", spec)->required();
    cells->add_option("--params", params)->required();
    cells->callback([&] { action = [&](const Output& o) { return cmd_cells(o, spec, params); }; });

    auto* fake = app.add_subcommand("fake-degrees", "fake degrees and b-invariants");
    fake->add_option("--group", spec)->required();
    fake->callback([&] { action = [&](const Output& o) { return cmd_fake_degrees(o, spec); }; });

    auto* hilb = app.add_subcommand("hilbert", "bigraded Hilbert series");
    hilb->add_option("--group", spec)->required();
    hilb->add_option("--order", order, "truncation order (default: $CMLAB_SERIES_ORDER or 12)");
    hilb->add_flag("--check", check, "compare the Molien, fake-degree and P-basis forms");
    hilb->callback([&] {
        action = [&](const Output& o) { return cmd_hilbert(o, spec, order ? order : default_order(), check); };
    });

    auto* omega = app.add_subcommand("omega-table", "central characters of baby Verma modules");
    omega->add_option("--group", spec)->required();
    omega->callback([&] { action = [&](const Output& o) { return cmd_omega_table(o, spec); }; });

    auto* gal = app.add_subcommand("galois", "Galois certificates");
    std::string which;
    gal->add_option("which", which)->required()->check(CLI::IsMember({"b2-certificate"}));
    gal->callback([&] { action = [&](const Output& o) { return cmd_galois(o); }; });

    auto* geo = app.add_subcommand("geometry", "rank one geometry");
    std::string kind;
    geo->add_option("kind", kind)->required()->check(CLI::IsMember({"rank1"}));
    geo->add_option("--d", d)->required();
    geo->add_option("--point", point, "k_1,..,k_d,x,y,e");
    geo->add_flag("--discriminant", disc, "report disc_t F_eu with symbolic K");
    geo->callback([&] { action = [&](const Output& o) { return cmd_geometry(o, d, point, disc); }; });

    auto* poi = app.add_subcommand("poisson", "Poisson bracket of central elements");
    poi->add_option("--group", spec)->required();
    poi->add_option("--lhs", lhs);
    poi->add_option("--rhs", rhs);
    poi->callback([&] { action = [&](const Output& o) { return cmd_poisson(o, spec, lhs, rhs); }; });

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->add_flag("--json", json, "JSON output");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    try {
        return action(Output{json, out});
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace cmlab::cli
