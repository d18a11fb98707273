#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ispoly::testing {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

inline std::string temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "ispoly_cli_tests";
    std::filesystem::create_directories(dir);
    return dir.string();
}

inline std::string write_temp(const std::string& name, const std::string& contents)
{
    std::string path = temp_dir() + "/" + name;
    std::ofstream(path) << contents;
    return path;
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the CLI with `args` through the shell; stdout is captured through a
/// pipe, stderr through a file.
inline CliResult run_cli(const std::string& args)
{
    const std::string err_path = temp_dir() + "/stderr.txt";
    const std::string command = std::string(ISPOLY_CLI_PATH) + " " + args + " 2>" + err_path;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed");
    CliResult result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    int status = ::pclose(pipe);
    result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = slurp(err_path);
    return result;
}

} // namespace ispoly::testing
