#ifndef KTZ_CLI_HPP
#define KTZ_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktz/indices.hpp"

namespace ktz::cli {

enum class Format { text, json, dot };

struct CommandRequest {
    std::string subcommand;
    int k = 0;
    int n = 0;
    std::vector<double> c{1.0};
    std::optional<IndexFamily> family;
    std::uint64_t seed = 1;
    /// "min" or "max" for search.
    std::string direction = "min";
    /// kpath | kstar | random, used when no input file is given.
    std::string kind = "random";
    /// growth | filter | canonical for enumerate.
    std::string method = "growth";
    std::string input;
    std::string output;
    Format format = Format::text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Executes a parsed request. Diagnostics go to `err` as a single line.
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs; the whole process entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1" for integral values, shortest round-trip form otherwise.
std::string format_c(double c);

} // namespace ktz::cli

#endif // KTZ_CLI_HPP
