/* SPDX-License-Identifier: Apache-2.0 */

// Drives the installed CLI binary through the shell.  RATSEQ_CLI_PATH is
// injected by the build.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace ratseq::testing {

struct RunResult {
    int exit_code;
    std::string output;
};

enum class Capture { stdout_only, stderr_only };

inline RunResult run_cli(const std::string& args,
                         Capture capture = Capture::stdout_only) {
    std::string command = std::string("'") + RATSEQ_CLI_PATH + "' " + args;
    if (capture == Capture::stderr_only)
        command += " 2>&1 1>/dev/null";
    else
        command += " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed for: " + command);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{exit_code, std::move(output)};
}

}  // namespace ratseq::testing
