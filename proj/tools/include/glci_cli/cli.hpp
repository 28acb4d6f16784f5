#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glci/algebra.hpp"
#include "glci/grid.hpp"

namespace glci::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification or invariant failed
inline constexpr int kExitInvalid = 2;  // malformed flags or inputs

enum class Format { Text, Json, Dot };

enum class LambdaSource { Symbolic, Generic, File };

struct RunConfig {
    std::string subcommand;
    std::optional<int> dim;
    std::optional<std::vector<int>> weights;

    LambdaSource lambda_source = LambdaSource::Symbolic;
    std::optional<int> lambda_seed;  // Vandermonde node offset for Generic
    std::string lambda_file;
    Format format = Format::Text;

    // quiver
    std::string interval = "canonical";  // canonical | cm | range
    std::string from, to;                // group elements for range
    bool gldim = false;

    // coxeter
    bool check_matrix = false;

    // mf
    std::optional<std::vector<int>> ell;
    bool verify = false;
    bool minors = false;

    // classify
    bool slice = false;
    bool knoerrer = false;

    // enumerate
    int n = 0;
    std::string cls = "fano";

    // suite
    std::vector<std::string> only;
    GridSelector grid{};
};

// "2,3,5" or "-" for the empty list.
std::vector<int> parse_weights(const std::string& text);
// "symbolic", "generic", "generic:SEED", or a path to a JSON matrix.
void parse_lambda_flag(const std::string& text, RunConfig& cfg);

// Returns nullopt after printing help; throws InvalidInput on bad flags.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args + run with exception-to-exit-code mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string export_quiver(const Quiver& q, Format format);
Quiver quiver_from_json(const std::string& text);
// n x (d+1) matrix from a JSON array of rows, or an object {"lambda": rows};
// entries are integers or rational strings.
RationalMatrix lambda_from_json(const std::string& text);

int run_suite(const RunConfig& cfg, std::ostream& out);

}  // namespace glci::cli
