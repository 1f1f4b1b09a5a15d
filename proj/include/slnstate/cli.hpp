#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slnstate::cli {

struct CliResult {
    int exit_code = 0;
    std::string output;  // JSON or TSV, newline terminated
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// argv without the program name. Reads stdin from `in` when no inline or file input is given.
CliResult run(const std::vector<std::string>& args, std::istream& in, const EnvLookup& env);
CliResult run(const std::vector<std::string>& args);

struct PropertyOutcome {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string counterexample;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

std::vector<std::string> verify_suite_names();
// Throws DomainError for an unknown suite.
std::vector<PropertyOutcome> run_verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace slnstate::cli
