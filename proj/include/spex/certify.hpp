#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

inline constexpr int kEnumerateMaxEdges = 12;
inline constexpr int kEnumerateMaxVertices = 8;
// |value - bound| at or below this nominates an equality candidate.
inline constexpr double kEqualityTol = 1e-7;
// Graphs within this of the class maximum are reported as maximizers.
inline constexpr double kMaximizerTol = 1e-9;

class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// Class of graphs with m edges and no isolated vertices. Triangle-free,
// c5-free and odd_girth_min are closed under edge deletion and prune the
// generation tree; connected and non_bipartite are checked on output.
struct ClassFilter {
    int m = 0;
    bool connected = false;
    bool triangle_free = false;
    bool c5_free = false;
    bool non_bipartite = false;
    int odd_girth_min = 0;

    bool accepts(const Graph& g) const;
    // The monotone part only.
    bool accepts_partial(const Graph& g) const;
    std::string describe() const;
};

// Every isomorphism class in the filter exactly once, sorted by canonical
// graph6 and stored in canonical labeling. Result is independent of jobs.
std::vector<Graph> enumerate(const ClassFilter& filter, int jobs = 1);

// All graphs on exactly n vertices (isolated vertices allowed), up to
// isomorphism, optionally triangle-free only. Same ordering as enumerate.
std::vector<Graph> enumerate_by_vertices(int n, bool triangle_free, int jobs = 1);

enum class Verdict { Holds, HoldsWithEquality, Violated };
std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct CertificationReport {
    std::string theorem;
    int parameter = 0;  // m, or n for the vertex-indexed theorems
    std::string filter;
    long long graphs_examined = 0;
    std::string quantity;
    double max_value = 0.0;
    double bound = 0.0;
    std::vector<std::string> maximizers;  // canonical graph6, sorted
    std::vector<std::string> equality_graphs;
    std::vector<std::string> expected_equality;
    Verdict verdict = Verdict::Holds;
    std::optional<std::string> counterexample;
    bool conjecture = false;
    double wall_time = 0.0;
    std::vector<std::string> notes;

    bool operator==(const CertificationReport&) const = default;
};

CertificationReport certify_nosal(int m, int jobs = 1);
CertificationReport certify_lnw_sum(int m, int jobs = 1);
CertificationReport certify_thm15(int m, int jobs = 1);
CertificationReport certify_zhai_shu(int m, int jobs = 1);
CertificationReport certify_main(int m, int jobs = 1);
CertificationReport certify_mantel(int n, int jobs = 1);
CertificationReport certify_erdos(int n, int jobs = 1);
// Evidence for the odd-subdivision conjecture: k = 1, 2 use the proven
// bounds, k >= 3 needs odd m.
CertificationReport certify_conj51(int m, int k, int jobs = 1);

// Canonical forms of every blow-up (parts >= 1) of P2, 2P2, P4, P5 with m edges.
std::vector<std::string> lnw_equality_class(int m);

struct BooksizeReport {
    int m = 0;
    long long graphs_examined = 0;
    long long candidates = 0;  // not complete bipartite, lambda >= sqrt(m)
    int min_booksize = 0;
    std::vector<std::string> min_graphs;
    double ratio = 0.0;  // min_booksize / sqrt(m)
    double booksize_floor = 0.0;  // m^(1/4) / 12
    bool floor_holds = true;
    double wall_time = 0.0;

    bool operator==(const BooksizeReport&) const = default;
};

BooksizeReport explore_booksize(int m, int jobs = 1);

}  // namespace spex
