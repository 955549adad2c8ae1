/**
 * @file verify.hpp
 * @brief The built-in verification suite behind `prmforge verify`.
 *
 * Each check recomputes a published value or property from scratch with the
 * library (exhaustive searches, brute-force counts, closed forms) and
 * compares. Checks flagged slow can be skipped.
 */

#ifndef PRMFORGE_VERIFY_HPP
#define PRMFORGE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace prmforge {

struct CheckResult {
    std::string id;      // "1".."10"
    std::string anchor;  // the value or statement being reproduced
    std::string title;
    bool passed = false;
    bool skipped = false;
    bool slow = false;
    std::string detail;
    double elapsed_sec = 0.0;

    nlohmann::json to_json() const;
};

struct VerifyOptions {
    unsigned threads = 1;
    bool skip_slow = false;
    std::uint64_t trials = 100'000;  // randomized e_5(2,3) search
    std::uint64_t seed = 1;
    /// Called after each check finishes, in order.
    std::function<void(const CheckResult&)> on_result;
};

/// Names of the suites accepted by run_suite().
std::vector<std::string> suite_names();

/// Runs every check of the named suite ("paper" is an alias of "acceptance",
/// "quick" the same with slow checks skipped). Throws ParseError for
/// an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace prmforge

#endif
