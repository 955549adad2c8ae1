/**
 * @file cli.hpp
 * @brief The `prmforge` command-line front end.
 *
 * Exit codes: 0 success, 1 usage or input error, 2 a hypothesis of the
 * requested computation does not hold, 3 the computation is too large,
 * 4 a verification check failed.
 */

#ifndef PRMFORGE_CLI_HPP
#define PRMFORGE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace prmforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitTooLarge = 3;
inline constexpr int kExitVerifyFailed = 4;

/// Runs one command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flattens an object (one row) or an array of objects (one row each) to CSV
/// with a header line. Nested arrays are joined with ';'.
std::string to_csv(const nlohmann::json& doc);

}  // namespace prmforge

#endif
