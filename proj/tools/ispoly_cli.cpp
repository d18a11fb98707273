// ispoly: batch front end. Every subcommand prints one JSON record per line.

#include "ispoly/clone_calculus.hpp"
#include "ispoly/cnf.hpp"
#include "ispoly/errors.hpp"
#include "ispoly/graph_io.hpp"
#include "ispoly/interpolation.hpp"
#include "ispoly/isp_eval.hpp"
#include "ispoly/oracle.hpp"
#include "ispoly/report.hpp"
#include "ispoly/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace ispoly;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_capacity = 2;
constexpr int exit_io = 3;
constexpr int exit_usage = 64;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read '" + path + "'");
    return buf.str();
}

void write_output(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    out << contents;
    out.flush();
    if (!out)
        throw IoError("cannot write '" + path + "'");
}

CloneSpec parse_clone_list(const std::string& text)
{
    std::vector<std::size_t> entries;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Integer value = parse_integer(item);
        if (value < 0 || !value.fits_ulong_p())
            throw DomainError("clone list entry out of range: '" + item + "'");
        entries.push_back(value.get_ui());
    }
    if (entries.empty())
        throw DomainError("clone list is empty");
    return CloneSpec(std::move(entries));
}

Json graph_size(const Graph& g)
{
    Json doc;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    return doc;
}

Json formula_size(const CnfFormula& f)
{
    Json doc;
    doc["n"] = f.variable_count();
    doc["m"] = f.clause_count();
    return doc;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return static_cast<double>(us.count()) / 1000.0;
}

void emit(Json report, std::chrono::steady_clock::time_point start)
{
    report["elapsed_ms"] = elapsed_ms(start);
    std::cout << report.dump() << '\n';
}

Json base_report(const std::string& command)
{
    Json doc;
    doc["command"] = command;
    return doc;
}

struct Options {
    std::string file;
    std::string output;
    std::string at;
    std::string clone_list;
    std::string oracle;
    std::string mode = "verified";
    std::string suite = "all";
    std::uint64_t seed = default_verify_seed;
    bool from_3cnf = false;
};

int run_count_sat(const Options& opt, bool exact_one)
{
    auto start = std::chrono::steady_clock::now();
    CnfFormula f = parse_dimacs(read_input(opt.file));
    Json report = base_report(exact_one ? "count-x3sat" : "count-sat");
    report["input"] = formula_size(f);
    report["count"] = (exact_one ? count_x3sat(f) : count_sat(f)).get_str();
    emit(std::move(report), start);
    return exit_ok;
}

int run_reduce_x3sat(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    CnfFormula f = parse_dimacs(read_input(opt.file));
    CnfFormula out = schaefer_reduce(f);
    Json report = base_report("reduce-x3sat");
    report["input"] = formula_size(f);
    report["output"] = formula_size(out);
    if (opt.output.empty())
        report["dimacs"] = to_dimacs(out);
    else {
        write_output(opt.output, to_dimacs(out));
        report["written"] = opt.output;
    }
    emit(std::move(report), start);
    return exit_ok;
}

int run_reduce_graph(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    CnfFormula f = parse_dimacs(read_input(opt.file));
    ReductionChain chain = opt.from_3cnf ? reduce_chain(f) : reduce_x3sat_chain(f);
    Json report = base_report("reduce-graph");
    report["input"] = formula_size(f);
    report["reduction"] = to_json(chain.report);
    const std::string text = format_graph_text(chain.reduced.graph);
    if (opt.output.empty())
        report["graph"] = text;
    else {
        write_output(opt.output, text);
        report["written"] = opt.output;
    }
    emit(std::move(report), start);
    return exit_ok;
}

int run_count_via_is(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    CnfFormula f = parse_dimacs(read_input(opt.file));
    ReductionChain chain = reduce_chain(f);
    Json report = base_report("count-via-is");
    report["input"] = formula_size(f);
    report["reduction"] = to_json(chain.report);
    report["count"] = count_solutions(chain.reduced).get_str();
    emit(std::move(report), start);
    return exit_ok;
}

int run_isp_eval(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph(read_input(opt.file));
    Rational x = Rational::parse(opt.at);
    Json report = base_report("isp-eval");
    report["input"] = graph_size(g);
    report["at"] = x.to_string();
    report["value"] = isp_eval(g, x).to_string();
    emit(std::move(report), start);
    return exit_ok;
}

int run_isp_coeffs(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph(read_input(opt.file));
    Json report = base_report("isp-coeffs");
    report["input"] = graph_size(g);
    report["coeffs"] = to_json(isp_coeffs(g));
    emit(std::move(report), start);
    return exit_ok;
}

int run_clone(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph(read_input(opt.file));
    CloneSpec spec = parse_clone_list(opt.clone_list);
    Graph out = s_clone(g, spec);
    Json report = base_report("clone");
    report["input"] = graph_size(g);
    report["S"] = to_json(spec);
    report["output"] = graph_size(out);
    if (opt.output.empty())
        report["graph"] = graph_to_json(out);
    else {
        write_output(opt.output, format_graph_text(out));
        report["written"] = opt.output;
    }
    emit(std::move(report), start);
    return exit_ok;
}

int run_normalize_point(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Rational x = Rational::parse(opt.at);
    Json report = base_report("normalize-point");
    report["plan"] = to_json(normalize_point(x));
    emit(std::move(report), start);
    return exit_ok;
}

int run_interpolate(const Options& opt)
{
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph(read_input(opt.file));
    Rational x = Rational::parse(opt.at);
    DeltaMode mode = opt.mode == "paper" ? DeltaMode::paper_formula : DeltaMode::verified_minimal;
    std::unique_ptr<Oracle> oracle;
    if (opt.oracle.empty())
        oracle = std::make_unique<DefinitionalOracle>();
    else
        oracle = external_oracle(opt.oracle);
    InterpolationTrace trace = interpolate_coeffs_traced(g, x, *oracle, mode);
    Json report = base_report("interpolate");
    report["input"] = graph_size(g);
    report["at"] = x.to_string();
    report["mode"] = to_string(mode);
    report["oracle"] = opt.oracle.empty() ? "internal" : "external";
    report["family"] = to_json(trace.family);
    report["coeffs"] = to_json(trace.coefficients);
    emit(std::move(report), start);
    return exit_ok;
}

int run_verify(const Options& opt)
{
    bool all_passed = true;
    for (const auto& name : opt.suite == "all" ? suite_names() : std::vector<std::string>{opt.suite}) {
        auto start = std::chrono::steady_clock::now();
        SuiteResult result = run_suites(name, opt.seed).front();
        all_passed = all_passed && result.passed();
        Json report = base_report("verify");
        report.update(to_json(result));
        emit(std::move(report), start);
    }
    return all_passed ? exit_ok : exit_domain;
}

int run_oracle_serve()
{
    serve_oracle(std::cin, std::cout);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact independent set polynomial toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::function<int()> action;

    auto file_command = [&](const std::string& name, const std::string& help, const std::string& what,
                            std::function<int()> run) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, what + " file, or - for stdin")->required();
        sub->callback([&action, run] { action = run; });
        return sub;
    };

    file_command("count-sat", "Count satisfying assignments of a DIMACS CNF", "DIMACS",
                 [&] { return run_count_sat(opt, false); });
    file_command("count-x3sat", "Count exactly-one assignments of a DIMACS CNF", "DIMACS",
                 [&] { return run_count_sat(opt, true); });
    file_command("reduce-x3sat", "Reduce a 3-CNF to an equivalent X3SAT instance", "DIMACS",
                 [&] { return run_reduce_x3sat(opt); })
        ->add_option("--output,-o", opt.output, "Write the DIMACS result here");
    {
        auto* sub = file_command("reduce-graph", "Reduce an X3SAT instance to a clause-clique graph", "DIMACS",
                                 [&] { return run_reduce_graph(opt); });
        sub->add_option("--output,-o", opt.output, "Write the graph here");
        sub->add_flag("--from-3cnf", opt.from_3cnf, "Apply the 3-SAT -> X3SAT reduction first");
    }
    file_command("count-via-is", "Count 3-CNF solutions through independent sets", "DIMACS",
                 [&] { return run_count_via_is(opt); });
    file_command("isp-eval", "Evaluate I(G; x) exactly", "Graph", [&] { return run_isp_eval(opt); })
        ->add_option("--at", opt.at, "Point p/q")
        ->required();
    file_command("isp-coeffs", "Coefficients of I(G; X)", "Graph", [&] { return run_isp_coeffs(opt); });
    {
        auto* sub = file_command("clone", "Build the S-clone of a graph", "Graph", [&] { return run_clone(opt); });
        sub->add_option("--s", opt.clone_list, "Comma-separated path lengths, e.g. 0,1,1")->required();
        sub->add_option("--output,-o", opt.output, "Write the graph here");
    }
    {
        auto* sub = app.add_subcommand("normalize-point", "Plan moving a point to a nondegenerate one");
        sub->add_option("--at", opt.at, "Point p/q")->required();
        sub->callback([&] { action = [&] { return run_normalize_point(opt); }; });
    }
    {
        auto* sub = file_command("interpolate", "Recover I(G; X) from evaluations at one point", "Graph",
                                 [&] { return run_interpolate(opt); });
        sub->add_option("--at", opt.at, "Point p/q")->required();
        sub->add_option("--oracle", opt.oracle, "Evaluation command speaking the line protocol");
        sub->add_option("--mode", opt.mode, "Clone family spacing")
            ->check(CLI::IsMember({"verified", "paper"}));
    }
    {
        auto* sub = app.add_subcommand("verify", "Run property suites");
        std::vector<std::string> names = suite_names();
        names.emplace_back("all");
        sub->add_option("--suite", opt.suite, "Suite name or all")->check(CLI::IsMember(names));
        sub->add_option("--seed", opt.seed, "Random seed");
        sub->callback([&] { action = [&] { return run_verify(opt); }; });
    }
    app.add_subcommand("oracle-serve", "Answer evaluation requests on stdin with the definitional evaluator")
        ->callback([&] { action = run_oracle_serve; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ispoly: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        return action();
    } catch (const CapacityError& e) {
        std::cerr << "ispoly: capacity: " << e.what() << '\n';
        return exit_capacity;
    } catch (const IoError& e) {
        std::cerr << "ispoly: io: " << e.what() << '\n';
        return exit_io;
    } catch (const DomainError& e) {
        std::cerr << "ispoly: error: " << e.what() << '\n';
        return exit_domain;
    }
}
