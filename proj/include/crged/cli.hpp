#pragma once

#include "crged/crg.hpp"
#include "crged/curves.hpp"
#include "crged/graph.hpp"
#include "crged/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crged::cli {

enum class Command : std::uint8_t { Spectrum, Gamma, GFun, Embed, PCore, EdCurve, Search, Dist, Estimate };

std::string_view command_name(Command c);

/// Process exit codes; each failure category has its own.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,          // unknown flag, missing option, bad grid spec
    kBadRational = 3,
    kBadCrg = 4,
    kBadGraph = 5,
    kInvalidArgument = 6, // well-formed but out of range
    kResource = 7,
    kIo = 8,
};

class CliError : public std::runtime_error {
public:
    CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

enum class CurveMode : std::uint8_t { Theorem, Gamma, Search, Compare };

/// Fully validated job. Only fields relevant to `command` are set.
struct JobSpec {
    Command command = Command::Spectrum;

    std::optional<Graph> graph;   // --graph
    std::optional<Graph> forbid;  // --forbid
    std::optional<Crg> crg;       // --crg
    std::optional<Rational> p;    // --p
    std::vector<Rational> grid;   // --grid (with --from/--to applied)
    std::string grid_spec;        // canonical description of the grid

    std::optional<std::size_t> r_max, s_max; // spectrum
    bool extreme_only = false;

    std::optional<TheoremFamily> family; // edcurve
    std::size_t family_n = 0;
    CurveMode curve_mode = CurveMode::Theorem;
    std::size_t max_size = 3;
    bool long_running = false;

    std::size_t n = 0;            // estimate
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    std::uint64_t node_limit = 20'000'000;

    std::optional<std::filesystem::path> output_path;
    std::optional<std::filesystem::path> cache_dir; // --cache-dir, else $CRGED_CACHE_DIR
    bool no_cache = false;
    std::size_t jobs = 1;
    bool float_display = false;

    /// Stable text over every input that affects the output bytes.
    std::string canonical() const;
};

/// Throws CliError with the matching exit code.
JobSpec parse_inputs(const std::vector<std::string>& args);

/// Exact output bytes of a job (CSV or JSON), without caching.
std::string execute(const JobSpec& job);

/// Dispatch with caching and output; returns an exit code. Errors are reported on `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// parse_inputs + run; args exclude the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Replaces every "num/den" token with a decimal rendering.
std::string render_floats(const std::string& exact);

} // namespace crged::cli
