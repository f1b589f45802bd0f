// Helper for driving the deskcalc binary from tests.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace cli {

struct Result {
    int exit_code;
    std::string output;  // stdout only
};

inline Result run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (!stdin_data.empty()) {
        // feed stdin through a temp file to keep things simple
        char path[] = "/tmp/deskcalc_stdin_XXXXXX";
        int fd = mkstemp(path);
        if (fd < 0) throw std::runtime_error("mkstemp failed");
        FILE* f = fdopen(fd, "w");
        fwrite(stdin_data.data(), 1, stdin_data.size(), f);
        fclose(f);
        cmd = std::string(DESKCALC_BIN) + " " + args + " < " + path + " 2>/dev/null";
    } else {
        cmd = std::string(DESKCALC_BIN) + " " + args + " 2>/dev/null";
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string output;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

}  // namespace cli
