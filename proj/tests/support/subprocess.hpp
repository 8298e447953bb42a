#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace umbral::testing {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

/// Runs a shell command, capturing stdout; stderr is silenced.
inline RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Path of the CLI under test, wired in by ctest.
inline std::string cli_path() {
    if (const char* env = std::getenv("UMBRAL_CLI")) return env;
    throw std::runtime_error("UMBRAL_CLI is not set; run through ctest");
}

inline std::string schema_path() {
    if (const char* env = std::getenv("UMBRAL_SCHEMA")) return env;
    throw std::runtime_error("UMBRAL_SCHEMA is not set; run through ctest");
}

}  // namespace umbral::testing
