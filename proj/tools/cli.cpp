#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spex/bounds.hpp"
#include "spex/canonical.hpp"
#include "spex/certify.hpp"
#include "spex/constructions.hpp"
#include "spex/gallery.hpp"
#include "spex/report.hpp"

namespace spex::cli {

namespace {

std::string fixed(double x, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << x;
    std::string s = os.str();
    // No "-0.000" in deterministic output.
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

int precision_or(const Options& opt, int fallback) { return opt.precision >= 0 ? opt.precision : fallback; }

std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& row : rows) {
        width = std::max(width, row.first.size());
    }
    std::ostringstream os;
    for (const auto& [key, value] : rows) {
        os << std::left << std::setw(static_cast<int>(width)) << key << " : " << value << '\n';
    }
    return os.str();
}

int to_count(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || value < 0) {
        throw UsageError(what + ": expected a nonnegative integer, got '" + token + "'");
    }
    return value;
}

std::vector<int> to_counts(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(to_count(item, "Blowup sizes"));
    }
    return out;
}

// A single-token family name such as C7, P4, K3.
std::optional<Graph> sized_family(const std::string& token) {
    if (token.size() < 2 || !std::isdigit(static_cast<unsigned char>(token[1]))) {
        return std::nullopt;
    }
    const char kind = token[0];
    if (kind != 'C' && kind != 'P' && kind != 'K') {
        return std::nullopt;
    }
    const int n = to_count(token.substr(1), token);
    if (kind == 'C') {
        return cycle(n);
    }
    if (kind == 'P') {
        return path(n);
    }
    return complete_graph(n);
}

}  // namespace

Graph parse_construction(const std::vector<std::string>& tokens) {
    if (tokens.empty()) {
        throw UsageError("empty construction");
    }
    const std::string& head = tokens[0];
    auto arity = [&](std::size_t k) {
        if (tokens.size() != k + 1) {
            throw UsageError(head + " takes " + std::to_string(k) + " argument(s)");
        }
    };
    auto arg = [&](std::size_t i) { return to_count(tokens[i], head); };
    try {
        if (head == "SK") {
            arity(2);
            return sk(arg(1), arg(2));
        }
        if (head == "S3") {
            arity(2);
            return s_odd(arg(1), arg(2), 2);
        }
        if (head == "Sodd") {
            arity(3);
            return s_odd(arg(1), arg(2), arg(3));
        }
        if (head == "Kst") {
            arity(2);
            return complete_bipartite(arg(1), arg(2));
        }
        if (head == "Bk") {
            arity(1);
            return book(arg(1));
        }
        if (head == "Star") {
            arity(1);
            return star(arg(1));
        }
        if (head == "StarPlus") {
            arity(1);
            return star_plus_edge(arg(1));
        }
        if (head == "Blowup") {
            arity(2);
            const Graph base = parse_construction({tokens[1]});
            return blow_up(base, to_counts(tokens[2]));
        }
        if (auto id = pattern_from_name(head)) {
            arity(0);
            return pattern(*id);
        }
        if (auto g = sized_family(head)) {
            arity(0);
            return *g;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(head + ": " + e.what());
    }
    throw UsageError("unknown construction '" + head + "'");
}

Graph parse_input(const std::vector<std::string>& tokens, bool construct) {
    if (construct) {
        return parse_construction(tokens);
    }
    if (tokens.size() != 1) {
        throw UsageError("expected one graph6 string (or --construct)");
    }
    try {
        return from_graph6(tokens[0]);
    } catch (const Graph6Error& e) {
        throw UsageError(std::string("malformed graph6: ") + e.what());
    }
}

Result cmd_spectrum(const Graph& g, const Options& opt) {
    const int p = precision_or(opt, 6);
    const Spectrum s = eigenvalues(g, opt.tol);
    double sum = 0;
    double sum_sq = 0;
    for (double x : s.values) {
        sum += x;
        sum_sq += x * x;
    }
    const double tri = triangle_count_trace(s);
    const long long t = triangle_count(g);
    const double slack = 1e-6 * (1.0 + static_cast<double>(g.order()) + 2.0 * g.size());
    const bool ok_sum = std::abs(sum) <= slack;
    const bool ok_sq = std::abs(sum_sq - 2.0 * g.size()) <= slack;
    const bool ok_tri = std::abs(tri - static_cast<double>(t)) <= 1e-6 * (1.0 + static_cast<double>(t));

    std::string values;
    for (double x : s.values) {
        values += (values.empty() ? "" : " ") + fixed(x, p);
    }
    auto mark = [](bool ok) { return ok ? " ok" : " MISMATCH"; };
    Result r;
    r.text = aligned({{"graph6", to_graph6(g)},
                      {"n", std::to_string(g.order())},
                      {"m", std::to_string(g.size())},
                      {"eigenvalues", values.empty() ? "-" : values},
                      {"sum", fixed(sum, p) + " (expect 0)" + mark(ok_sum)},
                      {"sum_sq", fixed(sum_sq, p) + " (2m = " + std::to_string(2 * g.size()) + ")" + mark(ok_sq)},
                      {"sum_cube/6", fixed(tri, p) + " (triangles = " + std::to_string(t) + ")" + mark(ok_tri)}});
    r.json = {{"graph6", to_graph6(g)}, {"n", g.order()},  {"m", g.size()},          {"eigenvalues", s.values},
              {"tol", s.tol},           {"sum", sum},      {"sum_sq", sum_sq},       {"triangles_trace", tri},
              {"triangles", t},         {"identities_ok", ok_sum && ok_sq && ok_tri}};
    r.exit_code = ok_sum && ok_sq && ok_tri ? kOk : kFailed;
    return r;
}

Result cmd_charpoly(const Graph& g, const Options&) {
    const CharPoly p = char_poly(g);
    std::vector<std::string> coeffs;
    for (const BigInt& c : p.coefficients()) {
        coeffs.push_back(c.str());
    }
    Result r;
    r.text = aligned({{"graph6", to_graph6(g)}, {"charpoly", to_string(p)}});
    r.json = {{"graph6", to_graph6(g)}, {"coefficients", coeffs}, {"text", to_string(p)}};
    return r;
}

Result cmd_bounds(int m, const Options& opt) {
    if (m < 1 || m > 100'000'000) {
        throw UsageError("bounds: need 1 <= m <= 1e8");
    }
    const int p = precision_or(opt, 10);
    auto root = [](int k) { return k >= 0 ? std::sqrt(static_cast<double>(k)) : std::nan(""); };
    std::vector<std::pair<std::string, std::string>> rows{{"m", std::to_string(m)}};
    nlohmann::json j{{"m", m}};
    bool ok = true;
    if (m >= 5) {
        const double b = beta(m);
        rows.emplace_back("beta(m)", fixed(b, p));
        j["beta"] = b;
        if (m >= 6) {
            const bool in = root(m - 2) < b && b < root(m - 1);
            ok = ok && in;
            rows.emplace_back("sqrt(m-2) < beta < sqrt(m-1)", in ? "ok" : "FAIL");
            j["beta_bracket_ok"] = in;
        }
    } else {
        rows.emplace_back("beta(m)", "omitted (needs m >= 5)");
        j["beta"] = nullptr;
    }
    if (m >= 7) {
        const double g = gamma(m);
        const bool in = root(m - 4) < g && g <= root(m - 3) + 1e-12;
        ok = ok && in;
        rows.emplace_back("gamma(m)", fixed(g, p));
        rows.emplace_back("sqrt(m-4) < gamma <= sqrt(m-3)", in ? "ok" : "FAIL");
        j["gamma"] = g;
        j["gamma_bracket_ok"] = in;
    } else {
        rows.emplace_back("gamma(m)", "omitted (needs m >= 7)");
        j["gamma"] = nullptr;
    }
    for (int d : {1, 2, 3, 4}) {
        const std::string key = "sqrt(m-" + std::to_string(d) + ")";
        if (m - d >= 0) {
            rows.emplace_back(key, fixed(root(m - d), p));
            j["sqrt_m_minus_" + std::to_string(d)] = root(m - d);
        }
    }
    rows.emplace_back("sqrt(m)", fixed(root(m), p));
    j["sqrt_m"] = root(m);
    Result r;
    r.text = aligned(rows);
    r.json = j;
    r.exit_code = ok ? kOk : kFailed;
    return r;
}

Result cmd_construct(const Graph& g, const Options&) {
    Result r;
    r.text = aligned({{"graph6", to_graph6(g)},
                      {"canonical", canonical_form(g)},
                      {"n", std::to_string(g.order())},
                      {"m", std::to_string(g.size())}});
    r.json = {{"graph6", to_graph6(g)}, {"canonical", canonical_form(g)}, {"n", g.order()}, {"m", g.size()}};
    return r;
}

Result cmd_tables(const Options& opt) {
    const int p = precision_or(opt, 3);
    constexpr double kTableTol = 1e-3;
    std::ostringstream os;
    nlohmann::json rows = nlohmann::json::array();
    bool all_ok = true;
    int current = -1;
    for (int table : {1, 2, 0}) {
        for (PatternId id : kAllPatterns) {
            if (reference_table(id) != table) {
                continue;
            }
            if (table != current) {
                os << (table == 0 ? "Unlisted" : "Table " + std::to_string(table)) << '\n';
                current = table;
            }
            const Spectrum s = eigenvalues(pattern(id), opt.tol);
            const auto ref = reference_spectrum(id);
            double worst = 0.0;
            bool ok = ref.empty() || ref.size() == s.size();
            os << "  " << std::left << std::setw(4) << pattern_name(id);
            for (std::size_t i = 0; i < s.size(); ++i) {
                bool cell = true;
                if (!ref.empty() && i < ref.size()) {
                    const double dev = std::abs(s[i] - ref[i]);
                    worst = std::max(worst, dev);
                    cell = dev <= kTableTol;
                }
                ok = ok && cell;
                os << ' ' << std::right << std::setw(p + 4) << fixed(s[i], p) << (cell ? ' ' : '*');
            }
            if (!ref.empty()) {
                os << "  max|dev| " << fixed(worst, 5);
            }
            os << (ok ? "" : "  MISMATCH") << '\n';
            all_ok = all_ok && ok;
            rows.push_back({{"name", std::string(pattern_name(id))},
                            {"table", table},
                            {"computed", s.values},
                            {"reference", std::vector<double>(ref.begin(), ref.end())},
                            {"max_deviation", worst},
                            {"ok", ok}});
        }
    }
    Result r;
    r.text = os.str();
    r.json = {{"rows", rows}, {"tolerance", kTableTol}, {"ok", all_ok}};
    r.exit_code = all_ok ? kOk : kFailed;
    return r;
}

Result cmd_explore(int m, const Options& opt) {
    const BooksizeReport rep = explore_booksize(m, opt.jobs);
    Result r;
    r.text = to_text(rep, precision_or(opt, 10));
    r.json = to_json(rep);
    r.exit_code = rep.floor_holds ? kOk : kFailed;
    return r;
}

Result cmd_certify(const std::string& theorem, int parameter, int k, const Options& opt) {
    if (theorem == "booksize") {
        return cmd_explore(parameter, opt);
    }
    CertificationReport rep;
    if (theorem == "mantel") {
        rep = certify_mantel(parameter, opt.jobs);
    } else if (theorem == "erdos") {
        rep = certify_erdos(parameter, opt.jobs);
    } else if (theorem == "nosal") {
        rep = certify_nosal(parameter, opt.jobs);
    } else if (theorem == "lnw") {
        rep = certify_lnw_sum(parameter, opt.jobs);
    } else if (theorem == "thm15") {
        rep = certify_thm15(parameter, opt.jobs);
    } else if (theorem == "zhai-shu") {
        rep = certify_zhai_shu(parameter, opt.jobs);
    } else if (theorem == "main") {
        rep = certify_main(parameter, opt.jobs);
    } else if (theorem == "conj51") {
        rep = certify_conj51(parameter, k, opt.jobs);
    } else {
        throw UsageError("unknown theorem '" + theorem +
                         "' (mantel, erdos, nosal, lnw, thm15, zhai-shu, main, conj51, booksize)");
    }
    Result r;
    r.text = to_text(rep, precision_or(opt, 10));
    r.json = to_json(rep);
    r.exit_code = rep.verdict == Verdict::Violated ? kFailed : kOk;
    return r;
}

Result cmd_enumerate(int m, bool connected, bool triangle_free, bool c5_free, bool non_bipartite,
                     int odd_girth_min, bool count_only, const Options& opt) {
    const ClassFilter f{.m = m,
                        .connected = connected,
                        .triangle_free = triangle_free,
                        .c5_free = c5_free,
                        .non_bipartite = non_bipartite,
                        .odd_girth_min = odd_girth_min};
    const std::vector<Graph> graphs = enumerate(f, opt.jobs);
    std::vector<std::string> keys;
    std::ostringstream os;
    for (const Graph& g : graphs) {
        keys.push_back(to_graph6(g));
        if (!count_only) {
            os << keys.back() << '\n';
        }
    }
    os << "# " << f.describe() << ": " << graphs.size() << " classes\n";
    Result r;
    r.text = os.str();
    r.json = {{"filter", f.describe()}, {"count", graphs.size()}, {"graphs", keys}};
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"spex: spectral extremal graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::string json_path;
    app.add_option("--jobs", opt.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--precision", opt.precision, "decimals in text output")->check(CLI::Range(0, 30));
    app.add_option("--tol", opt.tol, "eigensolver residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--json", json_path, "write JSON to this path ('-' for stdout)");

    std::vector<std::string> tokens;
    bool construct = false;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and trace identities");
    auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    auto* construct_cmd = app.add_subcommand("construct", "build a graph and print its graph6");
    for (auto* sub : {spectrum, charpoly}) {
        sub->add_flag("--construct", construct, "read the input as a construction");
        sub->add_option("input", tokens, "graph6 string or construction tokens")->required();
    }
    construct_cmd->add_option("tokens", tokens, "construction tokens")->required();

    int m = 0;
    auto* bounds = app.add_subcommand("bounds", "beta(m), gamma(m) and square-root brackets");
    bounds->add_option("m", m)->required();

    std::string theorem;
    int k = 3;
    auto* certify = app.add_subcommand("certify", "exhaustive check of one theorem");
    certify->add_option("theorem", theorem)->required();
    certify->add_option("parameter", m, "m, or n for mantel/erdos")->required();
    certify->add_option("--k", k, "path parameter for conj51");

    auto* tables = app.add_subcommand("tables", "reproduce the reference eigenvalue tables");

    bool connected = false;
    bool triangle_free = false;
    bool c5_free = false;
    bool non_bipartite = false;
    bool count_only = false;
    int odd_girth_min = 0;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorphism classes with m edges");
    enumerate_cmd->add_option("m", m)->required();
    enumerate_cmd->add_flag("--connected", connected);
    enumerate_cmd->add_flag("--triangle-free", triangle_free);
    enumerate_cmd->add_flag("--c5-free", c5_free);
    enumerate_cmd->add_flag("--non-bipartite", non_bipartite);
    enumerate_cmd->add_option("--odd-girth", odd_girth_min, "minimum odd girth");
    enumerate_cmd->add_flag("--count", count_only, "print only the count");

    auto* explore = app.add_subcommand("explore", "booksize evidence for non-bipartite-like graphs");
    explore->add_option("m", m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Result r;
    try {
        if (spectrum->parsed()) {
            r = cmd_spectrum(parse_input(tokens, construct), opt);
        } else if (charpoly->parsed()) {
            r = cmd_charpoly(parse_input(tokens, construct), opt);
        } else if (construct_cmd->parsed()) {
            r = cmd_construct(parse_construction(tokens), opt);
        } else if (bounds->parsed()) {
            r = cmd_bounds(m, opt);
        } else if (certify->parsed()) {
            r = cmd_certify(theorem, m, k, opt);
        } else if (tables->parsed()) {
            r = cmd_tables(opt);
        } else if (enumerate_cmd->parsed()) {
            r = cmd_enumerate(m, connected, triangle_free, c5_free, non_bipartite, odd_girth_min, count_only, opt);
        } else if (explore->parsed()) {
            r = cmd_explore(m, opt);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (json_path == "-") {
        out << r.json.dump(2) << '\n';
    } else {
        out << r.text;
        if (!json_path.empty()) {
            std::ofstream file(json_path);
            if (!file) {
                err << "error: cannot write " << json_path << '\n';
                return kUsage;
            }
            file << r.json.dump(2) << '\n';
        }
    }
    return r.exit_code;
}

}  // namespace spex::cli
