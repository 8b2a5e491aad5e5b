#include "spex/gallery.hpp"

#include <stdexcept>

#include "spex/constructions.hpp"

namespace spex {

namespace {

struct Entry {
    PatternId id;
    std::string_view name;
    int table;
    std::vector<double> row;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {PatternId::C7, "C7", 1, {2, 1.246, 1.246, -0.445, -0.445, -1.801, -1.801}},
        {PatternId::C9, "C9", 2, {2, 1.532, 1.532, 0.347, 0.347, -1, -1, -1.879, -1.879}},
        {PatternId::H1, "H1", 1, {2.115, 1, 0.618, -0.254, -1.618, -1.860}},
        {PatternId::H2, "H2", 1, {2.641, 1, 0.723, 0.414, -0.589, -1.775, -2.414}},
        {PatternId::H3, "H3", 1, {2.681, 1, 0.642, 0, 0, -2, -2.323}},
        {PatternId::T0, "T0", 0, {}},
        {PatternId::T1, "T1", 2, {2.223, 1.568, 1.247, 0.288, 0, -0.445, -0.919, -1.801, -2.161}},
        {PatternId::T2, "T2", 2, {2.573, 1.453, 1.441, 0.566, -0.358, -0.485, -0.795, -1.871, -2.523}},
        {PatternId::T3, "T3", 2, {2.579, 1.618, 1.373, 0, 0, -0.451, -0.618, -2, -2.501}},
        {PatternId::T4, "T4", 2, {2.503, 1.813, 1.264, 0, 0, -0.470, -0.576, -2.191, -2.342}},
        {PatternId::T5, "T5", 2, {2.414, 1.508, 1.247, 0.679, -0.414, -0.445, -0.825, -1.801, -2.362}},
        {PatternId::T6, "T6", 2, {2.124, 1.540, 1.247, 0.807, -0.337, -0.445, -1.101, -1.801, -2.032}},
    };
    return table;
}

const Entry& entry(PatternId id) {
    for (const Entry& e : entries()) {
        if (e.id == id) {
            return e;
        }
    }
    throw std::invalid_argument("unknown pattern id");
}

// Cycle on k vertices plus extra vertices, each given by its neighbours.
Graph decorated_cycle(int k, std::initializer_list<std::vector<int>> attachments) {
    Graph g = cycle(k).with_vertices(static_cast<int>(attachments.size()));
    int next = k;
    for (const auto& nbrs : attachments) {
        for (int u : nbrs) {
            g = g.with_edge(next, u);
        }
        ++next;
    }
    return g;
}

}  // namespace

std::string_view pattern_name(PatternId id) { return entry(id).name; }

std::optional<PatternId> pattern_from_name(std::string_view name) {
    for (const Entry& e : entries()) {
        if (e.name == name) {
            return e.id;
        }
    }
    return std::nullopt;
}

Graph pattern(PatternId id) {
    switch (id) {
        case PatternId::C7:
            return cycle(7);
        case PatternId::C9:
            return cycle(9);
        case PatternId::H1:  // pendant at u1
            return decorated_cycle(5, {{0}});
        case PatternId::H2:  // v ~ {u1,u3}, w ~ {u2,u4}, v !~ w
            return decorated_cycle(5, {{0, 2}, {1, 3}});
        case PatternId::H3:  // v ~ {u1,u3}, w ~ {u3,u5}
            return decorated_cycle(5, {{0, 2}, {2, 4}});
        case PatternId::T0:  // pendant at u1
            return decorated_cycle(7, {{0}});
        case PatternId::T1:  // two pendants at u1
            return decorated_cycle(7, {{0}, {0}});
        case PatternId::T2:  // v ~ {u1,u3}, w ~ {u2,u4}, v !~ w
            return decorated_cycle(7, {{0, 2}, {1, 3}});
        case PatternId::T3:  // v ~ {u1,u3}, w ~ {u3,u5}
            return decorated_cycle(7, {{0, 2}, {2, 4}});
        case PatternId::T4:  // v ~ {u1,u3}, w ~ {u4,u6}
            return decorated_cycle(7, {{0, 2}, {3, 5}});
        case PatternId::T5:  // v ~ {u1,u3}, v' pendant on v
            return decorated_cycle(7, {{0, 2}, {7}});
        case PatternId::T6:  // path v' - v - u1
            return decorated_cycle(7, {{0}, {7}});
    }
    throw std::invalid_argument("unknown pattern id");
}

std::span<const double> reference_spectrum(PatternId id) { return entry(id).row; }

int reference_table(PatternId id) { return entry(id).table; }

}  // namespace spex
