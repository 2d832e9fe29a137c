#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kecs/graph.hpp"
#include "kecs/rational.hpp"

namespace kecs::cli {

inline constexpr const char* kReportSchema = "kecs-run-report/1";

/// Exit status reserved for a colored count below the promised bound.
inline constexpr int kGuaranteeViolated = 2;

struct RunReport {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    bool simple = true;
    std::string strategy;
    std::string family = "none";
    int k = 0;
    int colored = 0;
    Rational fraction{1};
    /// Fraction the strategy promises; what it multiplies is `guarantee_basis`.
    std::optional<Rational> guarantee;
    std::string guarantee_basis = "edges";
    /// Smallest colored count the guarantee allows, when it can be computed.
    std::optional<int> promised;
    std::optional<int> oracle_optimum;
    std::optional<double> wall_time_ms;
    std::int64_t iterations = 0;
    std::map<std::string, int> moves;
    nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const RunReport& r);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; `in` feeds "-" inputs. Returns the exit status:
/// 0 success, 1 usage or module error, 2 guarantee violated.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace kecs::cli
