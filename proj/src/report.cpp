#include "spex/report.hpp"

#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace spex {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string fixed(double x, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << x;
    return os.str();
}

std::string joined(const std::vector<std::string>& items) {
    if (items.empty()) {
        return "-";
    }
    std::string s;
    for (const auto& item : items) {
        s += (s.empty() ? "" : " ") + item;
    }
    return s;
}

std::string aligned(const Rows& rows) {
    std::size_t width = 0;
    for (const auto& [key, value] : rows) {
        width = std::max(width, key.size());
    }
    std::ostringstream os;
    for (const auto& [key, value] : rows) {
        os << std::left << std::setw(static_cast<int>(width)) << key << " : " << value << '\n';
    }
    return os.str();
}

}  // namespace

nlohmann::json to_json(const CertificationReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["parameter"] = r.parameter;
    j["filter"] = r.filter;
    j["graphs_examined"] = r.graphs_examined;
    j["quantity"] = r.quantity;
    j["max_value"] = r.max_value;
    j["bound"] = r.bound;
    j["maximizers"] = r.maximizers;
    j["equality_graphs"] = r.equality_graphs;
    j["expected_equality"] = r.expected_equality;
    j["verdict"] = verdict_name(r.verdict);
    j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    j["conjecture"] = r.conjecture;
    j["wall_time"] = r.wall_time;
    j["notes"] = r.notes;
    return j;
}

CertificationReport report_from_json(const nlohmann::json& j) {
    CertificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.parameter = j.at("parameter").get<int>();
    r.filter = j.at("filter").get<std::string>();
    r.graphs_examined = j.at("graphs_examined").get<long long>();
    r.quantity = j.at("quantity").get<std::string>();
    r.max_value = j.at("max_value").get<double>();
    r.bound = j.at("bound").get<double>();
    r.maximizers = j.at("maximizers").get<std::vector<std::string>>();
    r.equality_graphs = j.at("equality_graphs").get<std::vector<std::string>>();
    r.expected_equality = j.at("expected_equality").get<std::vector<std::string>>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (!j.at("counterexample").is_null()) {
        r.counterexample = j.at("counterexample").get<std::string>();
    }
    r.conjecture = j.at("conjecture").get<bool>();
    r.wall_time = j.at("wall_time").get<double>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

nlohmann::json to_json(const BooksizeReport& r) {
    return {{"m", r.m},
            {"graphs_examined", r.graphs_examined},
            {"candidates", r.candidates},
            {"min_booksize", r.min_booksize},
            {"min_graphs", r.min_graphs},
            {"ratio", r.ratio},
            {"booksize_floor", r.booksize_floor},
            {"floor_holds", r.floor_holds},
            {"wall_time", r.wall_time}};
}

BooksizeReport booksize_from_json(const nlohmann::json& j) {
    BooksizeReport r;
    r.m = j.at("m").get<int>();
    r.graphs_examined = j.at("graphs_examined").get<long long>();
    r.candidates = j.at("candidates").get<long long>();
    r.min_booksize = j.at("min_booksize").get<int>();
    r.min_graphs = j.at("min_graphs").get<std::vector<std::string>>();
    r.ratio = j.at("ratio").get<double>();
    r.booksize_floor = j.at("booksize_floor").get<double>();
    r.floor_holds = j.at("floor_holds").get<bool>();
    r.wall_time = j.at("wall_time").get<double>();
    return r;
}

std::string to_text(const CertificationReport& r, int precision) {
    Rows rows{{"theorem", r.theorem + (r.conjecture ? " (CONJECTURE)" : "")},
              {"parameter", std::to_string(r.parameter)},
              {"filter", r.filter},
              {"graphs_examined", std::to_string(r.graphs_examined)},
              {"quantity", r.quantity},
              {"max_value", fixed(r.max_value, precision)},
              {"bound", fixed(r.bound, precision)},
              {"maximizers", joined(r.maximizers)},
              {"equality_graphs", joined(r.equality_graphs)},
              {"expected_equality", joined(r.expected_equality)},
              {"verdict", verdict_name(r.verdict)}};
    if (r.counterexample) {
        rows.emplace_back("counterexample", *r.counterexample);
    }
    for (const auto& note : r.notes) {
        rows.emplace_back("note", note);
    }
    rows.emplace_back("wall_time", fixed(r.wall_time, 3) + " s");
    return aligned(rows);
}

std::string to_text(const BooksizeReport& r, int precision) {
    return aligned({{"m", std::to_string(r.m)},
                    {"graphs_examined", std::to_string(r.graphs_examined)},
                    {"candidates", std::to_string(r.candidates)},
                    {"min_booksize", std::to_string(r.min_booksize)},
                    {"min_graphs", joined(r.min_graphs)},
                    {"ratio", fixed(r.ratio, precision)},
                    {"booksize_floor", fixed(r.booksize_floor, precision)},
                    {"floor_holds", r.floor_holds ? "yes" : "no"},
                    {"wall_time", fixed(r.wall_time, 3) + " s"}});
}

}  // namespace spex
