#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimkit::cli {

enum class Subcommand { Count, Enumerate, Maximum, Verify, Transform, Lemmas, Gen };
enum class OutputFormat { Text, Json };

struct CommandConfig {
    Subcommand subcommand = Subcommand::Count;
    /// graph6 file, or "-" for standard input.
    std::string input = "-";
    /// Generator spec such as "cycle 4", used instead of --input.
    std::optional<std::string> generator;
    std::string strategy = "auto";
    OutputFormat format = OutputFormat::Text;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::size_t max_n = 16;
    bool force = false;

    bool timestamps = false;                     // enumerate
    std::string solver = "stream";               // maximum
    std::optional<std::size_t> exhaustive;       // verify
    bool quiet = false;                          // verify
    std::size_t u = 0, v = 0;                    // transform
    bool twin_set = false;                       // transform
    std::string lemma;                           // lemmas
    std::string family;                          // gen
    std::vector<long long> params;               // gen
};

/// Parses argv (without the program name) and runs the subcommand. Returns
/// the process exit status: 0 iff there were no errors and no violations.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err);

int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mimkit::cli
