#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "spex/graph.hpp"
#include "spex/spectra.hpp"

namespace spex::cli {

enum ExitCode { kOk = 0, kUsage = 1, kFailed = 2 };

// Raised for malformed user input; maps to exit code 1.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int jobs = 1;
    int precision = -1;  // -1: command default
    double tol = kDefaultTol;
};

struct Result {
    std::string text;
    nlohmann::json json;
    int exit_code = kOk;
};

// Mini-language: Cn, Pn, Kn, Star k, SK a b, S3 a b, Sodd a b k, Kst s t,
// Bk k, StarPlus m, Blowup <base> s1,s2,..., plus gallery names (H1, T4, ...).
Graph parse_construction(const std::vector<std::string>& tokens);
// Either a single graph6 string or, with construct set, the mini-language.
Graph parse_input(const std::vector<std::string>& tokens, bool construct);

Result cmd_spectrum(const Graph& g, const Options& opt);
Result cmd_charpoly(const Graph& g, const Options& opt);
Result cmd_bounds(int m, const Options& opt);
Result cmd_construct(const Graph& g, const Options& opt);
Result cmd_tables(const Options& opt);
Result cmd_certify(const std::string& theorem, int parameter, int k, const Options& opt);
Result cmd_enumerate(int m, bool connected, bool triangle_free, bool c5_free, bool non_bipartite,
                     int odd_girth_min, bool count_only, const Options& opt);
Result cmd_explore(int m, const Options& opt);

// Full command line; json goes to the --json path ("-" for stdout).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spex::cli
