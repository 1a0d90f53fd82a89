#pragma once

// symlag command-line front end. Kept in a header so the test suite can run
// subcommands in-process.

#include "symlag/io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace symlag::cli {

using io::Json;

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

enum class Format { Json, Table };

struct RunConfig {
    std::size_t n = 0;
    std::string basis_path;
    std::vector<std::string> node_paths;
    std::string point;
    Format format = Format::Json;
    std::optional<double> snap_tol;
    double det_tol = kDefaultDetTolerance;
    bool float_det = false;
    bool check_independence = false;
    std::size_t enum_limit = kDefaultEnumLimit;
};

namespace detail {

inline Json rational_text(const Rational& q) { return to_string(q); }

inline Json point_text(const Point& x) {
    Json a = Json::array();
    for (const auto& v : x) a.push_back(to_string(v));
    return a;
}

inline Json header(const char* command) {
    Json j;
    j["schema"] = io::kSchema;
    j["command"] = command;
    return j;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

template <class T>
std::string list_text(const std::vector<T>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>) {
            parts.push_back(to_string(x));
        } else {
            parts.push_back(std::to_string(x));
        }
    }
    return "(" + join(parts, ",") + ")";
}

/// Fixed-width table with a header row.
inline void print_table(std::ostream& out, const std::vector<std::string>& head,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < head.size(); ++c) {
            out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << (c < r.size() ? r[c] : "");
        }
        out << "\n";
    };
    line(head);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
}

inline void print_matrix(std::ostream& out, const TypeMatrix& m) {
    std::vector<std::string> head{"type"};
    for (const auto& t : m.order) head.push_back(t.to_string());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::string> row{m.order[i].to_string()};
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    print_table(out, head, rows);
}

/// Symbolic parameter names a, b, ..., z, p27, p28, ...
inline std::string parameter_name(std::size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('a' + k));
    return "p" + std::to_string(k + 1);
}

/// "(a,b,b)" style pattern for one orbit of type t, drawing names from `next`.
inline std::string orbit_pattern(const OrbitType& t, std::size_t& next) {
    std::vector<std::string> coords;
    for (std::size_t size : t.block_sizes()) {
        const std::string name = parameter_name(next++);
        coords.insert(coords.end(), size, name);
    }
    return "(" + join(coords, ",") + ")";
}

inline io::ParsedBasis load_basis(const RunConfig& cfg) {
    if (cfg.basis_path.empty()) throw io::ParseError("--basis is required");
    auto parsed = io::parse_basis(io::read_json_file(cfg.basis_path), cfg.n);
    if (cfg.n != 0 && parsed.n != cfg.n)
        throw io::ParseError("basis has n = " + std::to_string(parsed.n) + " but --n " + std::to_string(cfg.n));
    return parsed;
}

inline std::optional<Rational> snap_tolerance(const RunConfig& cfg) {
    if (!cfg.snap_tol) return std::nullopt;
    auto q = parse_rational(io::float_text(*cfg.snap_tol));
    return q;
}

inline io::ParsedNodes load_nodes(const RunConfig& cfg, const std::string& path) {
    auto parsed = io::parse_nodes(io::read_json_file(path), snap_tolerance(cfg));
    if (cfg.n != 0 && parsed.n != cfg.n)
        throw io::ParseError(path + " has n = " + std::to_string(parsed.n) + " but --n " + std::to_string(cfg.n));
    return parsed;
}

inline Json snaps_json(const std::vector<Snap>& snaps) {
    Json a = Json::array();
    for (const auto& s : snaps)
        a.push_back(Json{{"input", s.text}, {"value", to_string(s.value)}, {"error", to_string(s.error())}});
    return a;
}

inline Json orbits_json(const NodeSet& s) {
    Json a = Json::array();
    for (const auto& o : s.orbits()) {
        a.push_back(Json{{"type", io::to_json(o.type)},
                         {"size", o.points.size()},
                         {"representative", point_text(o.representative)}});
    }
    return a;
}

inline Json basis_orbits_json(const BasisSet& b) {
    Json a = Json::array();
    for (const auto& o : b.orbits()) {
        Json fs = Json::array();
        for (const auto& f : o.functions) fs.push_back(f.to_string());
        Json entry{{"size", o.functions.size()}, {"functions", std::move(fs)}};
        if (o.point_type) {
            entry["type"] = io::to_json(*o.point_type);
        } else {
            entry["type"] = nullptr;
            entry["note"] = "orbit class not realizable by point orbits";
        }
        a.push_back(std::move(entry));
    }
    return a;
}

inline Json system_json(const ConstraintSystem& sys) {
    Json j;
    j["r"] = sys.r;
    Json x = Json::array();
    for (const auto& q : sys.solution) x.push_back(rational_text(q));
    j["solution"] = std::move(x);
    j["admissible"] = sys.admissible();
    return j;
}

// ---- subcommands ------------------------------------------------------------

inline int cmd_types(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw InvalidArgument("--n must be at least 1");
    const auto order = enumerate_types(cfg.n);
    if (cfg.format == Format::Table) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < order.size(); ++i)
            rows.push_back({std::to_string(i + 1), order[i].to_string(), orbit_size(order[i]).str(),
                            stabilizer_order(order[i]).str()});
        out << "orbit classes of R^" << cfg.n << " (descending order)\n";
        print_table(out, {"rank", "type", "orbit size", "stabilizer order"}, rows);
        return kOk;
    }
    Json j = header("types");
    j["n"] = cfg.n;
    Json types = Json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        types.push_back(Json{{"rank", i + 1},
                             {"type", io::to_json(order[i])},
                             {"orbit_size", io::to_json(orbit_size(order[i]))},
                             {"stabilizer_order", io::to_json(stabilizer_order(order[i]))}});
    }
    j["types"] = std::move(types);
    out << j.dump(2) << "\n";
    return kOk;
}

inline int cmd_vmatrix(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw InvalidArgument("--n must be at least 1");
    const VMatrix v = v_matrix(cfg.n);
    const auto minors = leading_principal_minors(v.entries);
    const bool symmetric = v.entries == v.entries.transposed();
    const bool pd = symmetric && std::all_of(minors.begin(), minors.end(), [](const BigInt& m) { return m > 0; });
    if (cfg.format == Format::Table) {
        out << "V for n = " << cfg.n << "\n";
        print_matrix(out, v);
        out << "determinant: " << minors.back() << "\n";
        out << "leading principal minors: " << list_text(minors) << "\n";
        out << "symmetric: " << (symmetric ? "yes" : "no") << ", positive definite: " << (pd ? "yes" : "no") << "\n";
        return kOk;
    }
    Json j = header("vmatrix");
    const Json body = io::to_json(v);
    for (const auto& [key, val] : body.items()) j[key] = val;
    j["determinant"] = io::to_json(minors.back());
    Json m = Json::array();
    for (const auto& x : minors) m.push_back(io::to_json(x));
    j["leading_minors"] = std::move(m);
    j["symmetric"] = symmetric;
    j["positive_definite"] = pd;
    out << j.dump(2) << "\n";
    return kOk;
}

inline int cmd_kmatrix(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n == 0) throw InvalidArgument("--n must be at least 1");
    const KMatrix k = k_matrix(cfg.n);
    std::vector<BigInt> sizes;
    for (const auto& t : k.order) sizes.push_back(class_size(t));
    if (cfg.format == Format::Table) {
        out << "K for n = " << cfg.n << " (rows: orbit classes, columns: conjugacy classes)\n";
        print_matrix(out, k);
        out << "class sizes: " << list_text(sizes) << "\n";
        out << "vanishes on larger classes, nonzero diagonal: " << (k.vanishes_above_own_type() ? "yes" : "no")
            << "\n";
        return kOk;
    }
    Json j = header("kmatrix");
    const Json body = io::to_json(k);
    for (const auto& [key, val] : body.items()) j[key] = val;
    Json s = Json::array();
    for (const auto& x : sizes) s.push_back(io::to_json(x));
    j["class_sizes"] = std::move(s);
    j["triangular"] = k.vanishes_above_own_type();
    out << j.dump(2) << "\n";
    return kOk;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.point.empty()) {
        Point x;
        std::stringstream ss(cfg.point);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto q = parse_rational(tok);
            if (!q) throw io::ParseError("cannot parse coordinate \"" + tok + "\"");
            x.push_back(*q);
        }
        if (x.empty()) throw io::ParseError("--point needs at least one coordinate");
        const OrbitType t = classify_point(x);
        const TypeIndex idx = type_index(t);
        if (cfg.format == Format::Table) {
            out << "point " << to_string(x) << ": type " << t.to_string() << ", rank " << idx.rank << " of " << idx.c
                << ", orbit size " << orbit_size(t) << "\n";
            return kOk;
        }
        Json j = header("classify");
        j["point"] = point_text(x);
        j["type"] = io::to_json(t);
        j["rank"] = idx.rank;
        j["orbit_size"] = io::to_json(orbit_size(t));
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (cfg.node_paths.size() != 1) throw io::ParseError("classify needs --point or exactly one --nodes file");
    const auto parsed = load_nodes(cfg, cfg.node_paths.front());
    const NodeSet s = validate_symmetric(parsed.n, parsed.points);
    const OrbitVector x = orbit_vector(s);
    if (cfg.format == Format::Table) {
        out << s.size() << " points in R^" << s.n() << ", " << s.orbits().size() << " orbits\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& o : s.orbits())
            rows.push_back({o.type.to_string(), std::to_string(o.points.size()), to_string(o.representative)});
        print_table(out, {"type", "size", "representative"}, rows);
        out << "orbit vector: " << list_text(x.counts) << "\n";
        return kOk;
    }
    Json j = header("classify");
    j["n"] = s.n();
    j["points"] = s.size();
    j["orbits"] = orbits_json(s);
    j["orbit_vector"] = io::to_json(x);
    j["snaps"] = snaps_json(parsed.snaps);
    out << j.dump(2) << "\n";
    return kOk;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const auto parsed = load_basis(cfg);
    const BasisSet b = validate_symmetric_basis(parsed.n, parsed.functions);
    const ConstraintSystem sys = solve_constraints(v_matrix(b.n()), r_vector(b, cfg.enum_limit));
    const auto x = sys.orbit_vector();
    const auto order = sys.v.order;
    std::vector<std::string> templ;
    if (x) {
        std::size_t next = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t k = 0; k < x->counts[i]; ++k) templ.push_back(orbit_pattern(order[i], next));
    }
    const std::string infeasible = "infeasible: no symmetric unisolvent node set exists";
    if (cfg.format == Format::Table) {
        out << "basis: " << b.size() << " functions in " << b.n() << " variables, " << b.orbits().size()
            << " S_n-orbits\n";
        std::vector<std::string> names;
        for (const auto& t : order) names.push_back(t.to_string());
        out << "type order: " << join(names, " > ") << "\n";
        out << "r = " << list_text(sys.r) << "\n";
        out << "X = " << list_text(sys.solution) << "\n";
        if (x) {
            out << "admissible: " << x->total_orbits() << " orbits, node template:\n";
            for (const auto& t : templ) out << "  orbit of " << t << "\n";
            out << "parameters must keep each orbit's pattern (distinct block values) and orbits disjoint\n";
        } else {
            out << infeasible << "\n";
        }
        return x ? kOk : kNegative;
    }
    Json j = header("solve");
    j["n"] = b.n();
    Json ord = Json::array();
    for (const auto& t : order) ord.push_back(io::to_json(t));
    j["order"] = std::move(ord);
    j["basis_orbits"] = basis_orbits_json(b);
    const Json body = system_json(sys);
    for (const auto& [key, val] : body.items()) j[key] = val;
    if (x) {
        j["orbit_vector"] = io::to_json(*x);
        j["template"] = templ;
    } else {
        j["verdict"] = infeasible;
    }
    out << j.dump(2) << "\n";
    return x ? kOk : kNegative;
}

inline int cmd_equiv(const RunConfig& cfg, std::ostream& out) {
    if (cfg.node_paths.size() != 2) throw io::ParseError("equiv needs exactly two --nodes files");
    const auto pa = load_nodes(cfg, cfg.node_paths[0]);
    const auto pb = load_nodes(cfg, cfg.node_paths[1]);
    const NodeSet a = validate_symmetric(pa.n, pa.points);
    const NodeSet b = validate_symmetric(pb.n, pb.points);
    const Equivalence e = equivalent(a, b);
    if (cfg.format == Format::Table) {
        out << "orbit vectors: " << list_text(e.first.counts) << " vs " << list_text(e.second.counts) << "\n";
        out << (e.equivalent ? "equivalent" : "not equivalent") << "\n";
        if (e.bijection) {
            out << "equivariant bijection:\n";
            for (const auto& [x, y] : *e.bijection) out << "  " << to_string(x) << " -> " << to_string(y) << "\n";
        }
        return e.equivalent ? kOk : kNegative;
    }
    Json j = header("equiv");
    j["n"] = a.n();
    j["orbit_vectors"] = Json::array({io::to_json(e.first), io::to_json(e.second)});
    j["equivalent"] = e.equivalent;
    if (e.bijection) {
        Json pairs = Json::array();
        for (const auto& [x, y] : *e.bijection) pairs.push_back(Json{{"from", point_text(x)}, {"to", point_text(y)}});
        j["bijection"] = std::move(pairs);
    }
    out << j.dump(2) << "\n";
    return e.equivalent ? kOk : kNegative;
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    if (cfg.node_paths.size() != 1) throw io::ParseError("analyze needs exactly one --nodes file");
    const auto pb = load_basis(cfg);
    const auto pn = load_nodes(cfg, cfg.node_paths.front());
    if (pb.n != pn.n)
        throw io::ParseError("basis has n = " + std::to_string(pb.n) + ", nodes have n = " + std::to_string(pn.n));
    const BasisSet b = validate_symmetric_basis(pb.n, pb.functions);
    const NodeSet s = validate_symmetric(pn.n, pn.points);
    const NecessaryConditionReport nec = check_necessary_conditions(b, s, cfg.enum_limit);

    Json j = header("analyze");
    j["n"] = s.n();
    j["basis"] = Json{{"functions", b.size()}, {"orbits", basis_orbits_json(b)}};
    j["nodes"] = Json{{"points", s.size()}, {"orbits", orbits_json(s)}, {"orbit_vector", io::to_json(orbit_vector(s))},
                      {"snaps", snaps_json(pn.snaps)}};
    if (cfg.check_independence) {
        std::mt19937_64 rng(0x5eed);
        j["basis"]["linear_independence"] = check_linear_independence(b.functions(), rng) == Independence::Independent
                                                ? "independent"
                                                : "possibly dependent";
    }
    Json conds = Json::array();
    for (const auto& c : nec.checks)
        conds.push_back(Json{{"condition", static_cast<int>(c.condition)},
                             {"description", describe(c.condition)},
                             {"passed", c.passed},
                             {"detail", c.detail}});
    j["necessary_conditions"] = std::move(conds);
    if (nec.system) j["constraint_system"] = system_json(*nec.system);
    if (nec.notice) j["notice"] = *nec.notice;

    std::string verdict;
    std::string reason;
    int code = kNegative;
    if (!nec.satisfied()) {
        verdict = "not unisolvent";
        reason = nec.checks.back().detail;
    } else if (cfg.float_det) {
        std::vector<std::vector<double>> nodes;
        for (const auto& p : s.points()) {
            std::vector<double> d;
            for (const auto& v : p) d.push_back(v.convert_to<double>());
            nodes.push_back(std::move(d));
        }
        const auto rep = vandermonde_float(b.functions(), nodes, cfg.det_tol);
        std::ostringstream det;
        det << std::setprecision(17) << rep.determinant.value;
        j["determinant"] = Json{{"mode", "float"},
                                {"value", det.str()},
                                {"row_norm_product", rep.determinant.row_norm_product},
                                {"relative_tolerance", rep.relative_tolerance}};
        verdict = to_string(rep.verdict);
        code = rep.verdict == Verdict::Unisolvent ? kOk : kNegative;
        reason = rep.verdict == Verdict::Unisolvent ? "determinant clearly nonzero"
                                                    : "determinant below the relative threshold";
    } else {
        const auto rep = vandermonde(b, s);
        j["determinant"] = Json{{"mode", "exact"}, {"value", to_string(rep.determinant)}};
        verdict = to_string(rep.verdict);
        code = rep.verdict == Verdict::Unisolvent ? kOk : kNegative;
        reason = rep.verdict == Verdict::Unisolvent ? "determinant is nonzero" : "determinant is zero";
    }
    if (code == kOk && s.n() <= cfg.enum_limit) {
        // both sides of V X = r counted directly on the unisolvent pair
        std::vector<std::size_t> node_counts;
        for (const auto& t : enumerate_types(s.n())) node_counts.push_back(subgroup_orbit_count(s, t, cfg.enum_limit));
        j["stabilizer_orbit_counts"] = Json{{"nodes", node_counts}, {"basis", r_vector(b, cfg.enum_limit)}};
        if (auto y = b.orbit_vector()) j["basis_equivalent_to_nodes"] = *y == orbit_vector(s);
    }
    j["verdict"] = verdict;
    j["reason"] = reason;
    j["exit_code"] = code;

    if (cfg.format == Format::Json) {
        out << j.dump(2) << "\n";
        return code;
    }
    out << "basis: " << b.size() << " functions, " << b.orbits().size() << " orbits\n";
    for (const auto& o : b.orbits()) {
        out << "  " << o.functions.size() << " x {" << o.functions.front().to_string() << ", ...}: "
            << (o.point_type ? "type " + o.point_type->to_string() : "orbit class not realizable by point orbits")
            << "\n";
    }
    out << "nodes: " << s.size() << " points, orbit vector " << list_text(orbit_vector(s).counts) << "\n";
    for (const auto& snap : pn.snaps)
        out << "  snapped " << snap.text << " -> " << to_string(snap.value) << " (error " << to_string(snap.error())
            << ")\n";
    for (const auto& c : nec.checks)
        out << "condition " << static_cast<int>(c.condition) << " (" << describe(c.condition)
            << "): " << (c.passed ? "pass" : "FAIL") << " - " << c.detail << "\n";
    if (nec.system)
        out << "r = " << list_text(nec.system->r) << ", X = " << list_text(nec.system->solution) << "\n";
    if (nec.notice) out << "notice: " << *nec.notice << "\n";
    if (j.contains("determinant")) out << "determinant: " << j["determinant"]["value"].get<std::string>() << "\n";
    out << "verdict: " << verdict << " (" << reason << ")\n";
    return code;
}

}  // namespace detail

/// Runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"symlag: node symmetry analysis for symmetric Lagrange interpolation", "symlag"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "json";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--enum-limit", cfg.enum_limit, "largest n for which S_n may be enumerated")
            ->envname("SYMLAG_ENUM_LIMIT")
            ->check(CLI::PositiveNumber);
    };
    auto add_snap = [&](CLI::App* sub) {
        sub->add_option("--snap-tol", cfg.snap_tol, "snap decimal coordinates to rationals within this distance")
            ->check(CLI::PositiveNumber);
    };

    auto* types = app.add_subcommand("types", "list the orbit classes of R^n");
    types->add_option("--n", cfg.n, "dimension")->required();
    add_common(types);

    auto* vmat = app.add_subcommand("vmatrix", "print the Gram matrix V of permutation characters");
    vmat->add_option("--n", cfg.n, "dimension")->required();
    add_common(vmat);

    auto* kmat = app.add_subcommand("kmatrix", "print the fixed-point table K");
    kmat->add_option("--n", cfg.n, "dimension")->required();
    add_common(kmat);

    auto* classify = app.add_subcommand("classify", "classify a point or decompose a node set into orbits");
    classify->add_option("--point", cfg.point, "comma-separated coordinates, e.g. 1,2,2 or 1/2,1/2,3");
    classify->add_option("--nodes", cfg.node_paths, "node set JSON file");
    classify->add_option("--n", cfg.n, "dimension");
    add_snap(classify);
    add_common(classify);

    auto* solve = app.add_subcommand("solve", "solve V X = r for the node symmetry a basis admits");
    solve->add_option("--basis", cfg.basis_path, "basis JSON file")->required();
    solve->add_option("--n", cfg.n, "dimension (when the basis file does not give it)");
    add_common(solve);

    auto* equiv = app.add_subcommand("equiv", "decide whether two symmetric node sets are equivalent");
    equiv->add_option("--nodes", cfg.node_paths, "node set JSON file (give twice)")->required();
    equiv->add_option("--n", cfg.n, "dimension");
    add_snap(equiv);
    add_common(equiv);

    auto* analyze = app.add_subcommand("analyze", "full unisolvence analysis of a basis and a node set");
    analyze->add_option("--basis", cfg.basis_path, "basis JSON file")->required();
    analyze->add_option("--nodes", cfg.node_paths, "node set JSON file")->required();
    analyze->add_option("--n", cfg.n, "dimension");
    analyze->add_option("--det-tol", cfg.det_tol, "relative threshold for the floating determinant")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--float-det", cfg.float_det, "use the floating-point determinant instead of the exact one");
    analyze->add_flag("--check-independence", cfg.check_independence, "verify the basis is linearly independent");
    add_snap(analyze);
    add_common(analyze);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    cfg.format = format == "table" ? Format::Table : Format::Json;

    try {
        if (*types) return detail::cmd_types(cfg, out);
        if (*vmat) return detail::cmd_vmatrix(cfg, out);
        if (*kmat) return detail::cmd_kmatrix(cfg, out);
        if (*classify) return detail::cmd_classify(cfg, out);
        if (*solve) return detail::cmd_solve(cfg, out);
        if (*equiv) return detail::cmd_equiv(cfg, out);
        if (*analyze) return detail::cmd_analyze(cfg, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace symlag::cli
