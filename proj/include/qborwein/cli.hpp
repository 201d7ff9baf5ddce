#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qb::cli {

enum class Format { csv, jsonl };

/// Resolved invocation. Exit-code contract across all commands:
/// 0 = all checks pass, 1 = mathematical disagreement found,
/// 2 = usage / configuration error.
struct RunConfig {
    std::string command;  // expand | decompose | sum | verify | sieve-test | sweep
    std::vector<std::int64_t> p_list;
    std::vector<std::int64_t> s_list;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> n_max;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> b;
    std::optional<std::int64_t> q;  // sweep: enables the Zaharescu comparator column
    Format format = Format::csv;
    std::string out_path;  // empty -> the stream handed to run()
    std::optional<long> precision_bits;
    std::uint64_t seed = 1;
    std::int64_t degree_cap = 1'000'000;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sieve_test(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full front end: flag parsing (including --config key=value files; explicit
/// flags win) followed by run(). args excludes the program name.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qb::cli
