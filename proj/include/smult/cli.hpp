#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace smult::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // domain error, failed check, route disagreement
inline constexpr int kUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// as JSON (or CSV where requested); failures print {"error": {...}} to `out`
/// as well and return a nonzero code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Recomputes every example in a golden file. Each entry carries an "id", a
/// "kind", its inputs and an "expected" value; the result lists each entry
/// with its actual value and "match".
nlohmann::json reproduce_examples(const nlohmann::json& golden);

/// Path baked in at build time.
std::string default_golden_path();

}  // namespace smult::cli
