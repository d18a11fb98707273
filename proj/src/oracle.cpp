#include "ispoly/oracle.hpp"

#include "ispoly/errors.hpp"
#include "ispoly/graph_io.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <istream>
#include <ostream>

#include <sys/wait.h>
#include <unistd.h>

namespace ispoly {

Rational DefinitionalOracle::evaluate(const Graph& g, const Rational& point, std::size_t /*index*/)
{
    return isp_eval(g, point, limits_);
}

std::unique_ptr<Oracle> external_oracle(std::string command_template)
{
    if (command_template.empty())
        throw DomainError("empty oracle command");
    return std::make_unique<ExternalOracle>(std::move(command_template));
}

std::string format_oracle_request(const Graph& g, const Rational& point, std::size_t index)
{
    Json doc;
    doc["index"] = index;
    doc["graph"] = graph_to_json(g);
    doc["point"] = point.to_string();
    return doc.dump();
}

OracleRequest parse_oracle_request(std::string_view line)
{
    Json doc;
    try {
        doc = Json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw ProtocolError("request is not JSON: " + std::string(line));
    }
    if (!doc.is_object() || !doc.contains("graph") || !doc.contains("point") || !doc["point"].is_string())
        throw ProtocolError("request needs 'graph' and a string 'point': " + std::string(line));
    OracleRequest req;
    if (doc.contains("index")) {
        if (!doc["index"].is_number_unsigned())
            throw ProtocolError("request 'index' must be a nonnegative integer: " + std::string(line));
        req.index = doc["index"].get<std::size_t>();
    }
    req.graph = graph_from_json(doc["graph"]);
    req.point = Rational::parse(doc["point"].get<std::string>());
    return req;
}

std::string format_oracle_response(const Rational& value, std::size_t index)
{
    Json doc;
    doc["index"] = index;
    doc["value"] = value.to_string();
    return doc.dump();
}

Rational parse_oracle_response(std::string_view line, std::optional<std::size_t> expected_index)
{
    const std::string quoted = "'" + std::string(line) + "'";
    Json doc;
    try {
        doc = Json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw ProtocolError("oracle response is not JSON: " + quoted);
    }
    if (!doc.is_object())
        throw ProtocolError("oracle response is not an object: " + quoted);
    if (expected_index && doc.contains("index")) {
        if (!doc["index"].is_number_unsigned() || doc["index"].get<std::size_t>() != *expected_index)
            throw ProtocolError("oracle response index mismatch, expected " + std::to_string(*expected_index) +
                                ": " + quoted);
    }
    if (doc.contains("error")) {
        std::string message = doc["error"].is_string() ? doc["error"].get<std::string>() : doc["error"].dump();
        std::string category = doc.value("category", "");
        if (category == "capacity")
            throw CapacityError("oracle: " + message);
        if (category == "domain")
            throw DomainError("oracle: " + message);
        throw ProtocolError("oracle error: " + message);
    }
    if (!doc.contains("value") || !doc["value"].is_string())
        throw ProtocolError("oracle response lacks a string 'value': " + quoted);
    try {
        return Rational::parse(doc["value"].get<std::string>());
    } catch (const ParseError&) {
        throw ProtocolError("oracle response value is not a rational: " + quoted);
    }
}

std::size_t serve_oracle(std::istream& in, std::ostream& out, const EvalLimits& limits)
{
    std::size_t served = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::size_t index = 0;
        Json reply;
        try {
            OracleRequest req = parse_oracle_request(line);
            index = req.index;
            out << format_oracle_response(isp_eval(req.graph, req.point, limits), index) << '\n';
        } catch (const CapacityError& e) {
            reply["index"] = index;
            reply["error"] = e.what();
            reply["category"] = "capacity";
            out << reply.dump() << '\n';
        } catch (const ProtocolError& e) {
            reply["index"] = index;
            reply["error"] = e.what();
            reply["category"] = "protocol";
            out << reply.dump() << '\n';
        } catch (const DomainError& e) {
            reply["index"] = index;
            reply["error"] = e.what();
            reply["category"] = "domain";
            out << reply.dump() << '\n';
        }
        out.flush();
        ++served;
    }
    return served;
}

namespace {

class ScopedIgnoreSigpipe {
public:
    ScopedIgnoreSigpipe()
    {
        struct sigaction ignore {};
        ignore.sa_handler = SIG_IGN;
        sigemptyset(&ignore.sa_mask);
        sigaction(SIGPIPE, &ignore, &previous_);
    }
    ~ScopedIgnoreSigpipe() { sigaction(SIGPIPE, &previous_, nullptr); }
    ScopedIgnoreSigpipe(const ScopedIgnoreSigpipe&) = delete;
    ScopedIgnoreSigpipe& operator=(const ScopedIgnoreSigpipe&) = delete;

private:
    struct sigaction previous_ {};
};

class Fd {
public:
    explicit Fd(int fd = -1) : fd_(fd) {}
    ~Fd() { reset(); }
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;

    int get() const { return fd_; }
    void reset()
    {
        if (fd_ >= 0)
            ::close(fd_);
        fd_ = -1;
    }

private:
    int fd_;
};

std::string errno_text()
{
    return std::strerror(errno);
}

} // namespace

Rational ExternalOracle::evaluate(const Graph& g, const Rational& point, std::size_t index)
{
    const std::string request = format_oracle_request(g, point, index) + "\n";

    int to_child[2], from_child[2];
    if (::pipe(to_child) != 0)
        throw IoError("pipe: " + errno_text());
    Fd to_read(to_child[0]), to_write(to_child[1]);
    if (::pipe(from_child) != 0)
        throw IoError("pipe: " + errno_text());
    Fd from_read(from_child[0]), from_write(from_child[1]);

    pid_t pid = ::fork();
    if (pid < 0)
        throw IoError("fork: " + errno_text());
    if (pid == 0) {
        ::dup2(to_child[0], STDIN_FILENO);
        ::dup2(from_child[1], STDOUT_FILENO);
        ::close(to_child[0]);
        ::close(to_child[1]);
        ::close(from_child[0]);
        ::close(from_child[1]);
        ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    to_read.reset();
    from_write.reset();

    {
        ScopedIgnoreSigpipe guard;
        std::size_t written = 0;
        while (written < request.size()) {
            ssize_t w = ::write(to_write.get(), request.data() + written, request.size() - written);
            if (w < 0) {
                if (errno == EINTR)
                    continue;
                break; // the child stopped reading; its answer still decides
            }
            written += static_cast<std::size_t>(w);
        }
        to_write.reset();
    }

    std::string output;
    char buf[4096];
    for (;;) {
        ssize_t r = ::read(from_read.get(), buf, sizeof buf);
        if (r < 0 && errno == EINTR)
            continue;
        if (r <= 0)
            break;
        output.append(buf, static_cast<std::size_t>(r));
    }
    int status = 0;
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && output.empty())
        throw IoError("could not run oracle command '" + command_ + "'");

    auto newline = output.find('\n');
    std::string line = output.substr(0, newline);
    if (line.empty()) {
        std::string how = WIFEXITED(status) ? "exit status " + std::to_string(WEXITSTATUS(status))
                                            : "signal " + std::to_string(WTERMSIG(status));
        throw ProtocolError("oracle command produced no response line (" + how + ")");
    }
    return parse_oracle_response(line, index);
}

} // namespace ispoly
