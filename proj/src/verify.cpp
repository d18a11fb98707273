#include "ispoly/verify.hpp"

#include "ispoly/clone_calculus.hpp"
#include "ispoly/cnf.hpp"
#include "ispoly/errors.hpp"
#include "ispoly/interpolation.hpp"
#include "ispoly/isp_eval.hpp"
#include "ispoly/random.hpp"
#include "ispoly/report.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ispoly {

namespace {

const std::vector<Rational>& identity_points()
{
    static const std::vector<Rational> points{Rational(2), Rational(1), Rational(1, 2), Rational(-1, 5)};
    return points;
}

class SuiteRun {
public:
    SuiteRun(std::string name, std::uint64_t seed) : rng(seed)
    {
        result.name = std::move(name);
        result.seed = seed;
    }

    /// Records one case of `check`; on failure keeps the first counterexample.
    void record(const std::string& check, bool ok, const std::function<Counterexample()>& dump)
    {
        ++result.cases;
        auto& tally = tallies_[check];
        ++tally.first;
        if (ok) {
            ++tally.second;
            return;
        }
        ++result.failures;
        if (!result.counterexample) {
            result.counterexample = dump();
            result.counterexample->check = check;
        }
    }

    SuiteResult finish()
    {
        for (const auto& check : order_)
            result.summary.push_back(check + ": " + std::to_string(tallies_[check].second) + "/" +
                                     std::to_string(tallies_[check].first));
        return std::move(result);
    }

    void declare(const std::string& check) { order_.push_back(check); }

    Rng rng;
    SuiteResult result;

private:
    std::vector<std::string> order_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tallies_;
};

Counterexample graph_dump(const Graph& g, Json params)
{
    return Counterexample{"", "graph", format_graph_text(g), std::move(params)};
}

Counterexample formula_dump(const CnfFormula& f, Json params = Json::object())
{
    return Counterexample{"", "dimacs-cnf", to_dimacs(f), std::move(params)};
}

// X3SAT extensions of the gadget of `clause` for fixed values of its
// variables; fixed[v-1] is the value of variable v.
std::size_t gadget_extensions(const Clause& clause, std::size_t vars, const std::vector<bool>& fixed)
{
    CnfFormula gadget = schaefer_reduce(CnfFormula(vars, {clause}));
    std::size_t count = 0;
    for (unsigned ext = 0; ext < 64; ++ext) {
        auto value = [&](const Literal& lit) {
            bool v = lit.variable <= vars ? fixed[lit.variable - 1] : ((ext >> (lit.variable - vars - 1)) & 1U) != 0;
            return v != lit.negated;
        };
        bool ok = std::all_of(gadget.clauses().begin(), gadget.clauses().end(), [&](const Clause& c) {
            return std::count_if(c.begin(), c.end(), value) == 1;
        });
        count += ok ? 1 : 0;
    }
    return count;
}

SuiteResult gadget_suite(std::uint64_t seed)
{
    SuiteRun run("gadget", seed);
    const std::vector<std::pair<std::string, Clause>> pluggings{
        {"gadget corners", {Literal{1, false}, Literal{2, false}, Literal{3, false}}},
        {"gadget corners c:=b", {Literal{1, false}, Literal{2, false}}},
        {"gadget corners c:=b:=a", {Literal{1, false}}},
    };
    for (const auto& [check, clause] : pluggings) {
        run.declare(check);
        const std::size_t vars = clause.size();
        for (unsigned corner = 0; corner < (1U << vars); ++corner) {
            std::vector<bool> fixed(vars);
            for (std::size_t v = 0; v < vars; ++v)
                fixed[v] = ((corner >> v) & 1U) != 0;
            bool satisfied = corner != 0;
            std::size_t ext = gadget_extensions(clause, vars, fixed);
            run.record(check, ext == (satisfied ? 1U : 0U), [&] {
                Json params;
                params["corner"] = fixed;
                params["extensions"] = ext;
                return formula_dump(CnfFormula(vars, {clause}), params);
            });
        }
    }
    return run.finish();
}

SuiteResult reduction_suite(std::uint64_t seed)
{
    SuiteRun run("reduction", seed);
    run.declare("3sat parsimony");
    run.declare("x3sat graph bijection");
    for (std::size_t i = 0; i < 60; ++i) {
        std::size_t n = 1 + i / 15, m = run.rng.between(0, 2);
        CnfFormula f = random_3cnf(run.rng, n, m);
        Integer direct = count_sat(f);
        Integer via_x3sat = count_x3sat(schaefer_reduce(f));
        Integer via_is = sat_count_via_is(f);
        run.record("3sat parsimony", direct == via_x3sat && direct == via_is, [&] {
            Json params;
            params["count_sat"] = direct.get_str();
            params["count_x3sat"] = via_x3sat.get_str();
            params["count_via_is"] = via_is.get_str();
            return formula_dump(f, params);
        });
    }
    for (std::size_t i = 0; i < 60; ++i) {
        std::size_t width = 2 + i / 6;
        CnfFormula f = random_x3sat(run.rng, run.rng.between(3, 6), width);
        X3satGraph red = x3sat_to_graph(f);
        Integer direct = count_x3sat(f);
        Integer via_is = count_is_of_size(red.graph, red.target_size) * red.multiplier;
        run.record("x3sat graph bijection", direct == via_is, [&] {
            Json params;
            params["count_x3sat"] = direct.get_str();
            params["count_via_is"] = via_is.get_str();
            return formula_dump(f, params);
        });
    }
    return run.finish();
}

SuiteResult clone_identity_suite(std::uint64_t seed)
{
    SuiteRun run("clone-identity", seed);
    run.declare("s-clone identity");
    run.declare("k-clone identity");
    for (std::size_t i = 0; i < 48; ++i) {
        Graph g = random_graph(run.rng, 1 + i / 12);
        CloneSpec spec = random_clone_spec(run.rng, 3, 3);
        const Rational& x = run.rng.pick(identity_points());
        Rational lhs = isp_eval(s_clone(g, spec), x);
        Rational rhs = clone_factor(x, spec, g.vertex_count()) * isp_eval(g, x_of_S(x, spec));
        run.record("s-clone identity", lhs == rhs, [&] {
            Json params;
            params["S"] = to_json(spec);
            params["x"] = x.to_string();
            params["lhs"] = lhs.to_string();
            params["rhs"] = rhs.to_string();
            return graph_dump(g, params);
        });
    }
    for (std::size_t i = 0; i < 24; ++i) {
        Graph g = random_graph(run.rng, 1 + i / 6);
        std::size_t k = run.rng.between(1, 3);
        const Rational& x = run.rng.pick(identity_points());
        Rational lhs = isp_eval(k_clone(g, k), x);
        Rational rhs = isp_eval(g, (Rational(1) + x).pow(static_cast<long>(k)) - Rational(1));
        run.record("k-clone identity", lhs == rhs, [&] {
            Json params;
            params["k"] = k;
            params["x"] = x.to_string();
            return graph_dump(g, params);
        });
    }
    return run.finish();
}

SuiteResult path_identity_suite(std::uint64_t seed)
{
    SuiteRun run("path-identity", seed);
    run.declare("path identity");
    for (std::size_t i = 0; i < 48; ++i) {
        Graph g = random_graph(run.rng, 1 + i / 12);
        Vertex v = run.rng.below(g.vertex_count());
        std::size_t k = run.rng.between(0, 4);
        const Rational& x = run.rng.pick(identity_points());
        PathWeights w = path_weights(x, k);
        std::vector<Rational> weights(g.vertex_count(), x);
        weights[v] = w.b / w.c;
        Rational lhs = isp_eval(attach_path(g, v, k), x);
        Rational rhs = w.c * isp_multivariate(g, weights);
        run.record("path identity", lhs == rhs, [&] {
            Json params;
            params["vertex"] = v;
            params["k"] = k;
            params["x"] = x.to_string();
            return graph_dump(g, params);
        });
    }
    return run.finish();
}

SuiteResult comb_identity_suite(std::uint64_t seed)
{
    SuiteRun run("comb-identity", seed);
    run.declare("comb identity");
    for (std::size_t i = 0; i < 36; ++i) {
        Graph g = random_graph(run.rng, 1 + i / 6);
        std::size_t k = run.rng.between(0, 3);
        const Rational& x = run.rng.pick(identity_points());
        const Rational base = (Rational(1) + x).pow(static_cast<long>(k));
        Rational lhs = isp_eval(comb(g, k), x);
        Rational rhs = base.pow(static_cast<long>(g.vertex_count())) * isp_eval(g, x / base);
        run.record("comb identity", lhs == rhs, [&] {
            Json params;
            params["k"] = k;
            params["x"] = x.to_string();
            return graph_dump(g, params);
        });
    }
    return run.finish();
}

SuiteResult pipeline_suite(std::uint64_t seed)
{
    SuiteRun run("pipeline", seed);
    run.declare("interpolated coefficients");
    DefinitionalOracle oracle;
    for (std::size_t i = 0; i < 10; ++i) {
        Graph g = random_graph(run.rng, 1 + i / 2);
        Rational x = i % 2 == 0 ? Rational(2) : Rational(1, 2);
        Polynomial got = interpolate_coeffs(g, x, oracle);
        Polynomial want = isp_coeffs(g);
        run.record("interpolated coefficients", got == want, [&] {
            Json params;
            params["x"] = x.to_string();
            params["interpolated"] = to_string(got);
            params["expected"] = to_string(want);
            return graph_dump(g, params);
        });
    }
    return run.finish();
}

SuiteResult normalizer_suite(std::uint64_t seed)
{
    SuiteRun run("normalizer", seed);
    run.declare("plan soundness");
    const std::vector<Rational> points{Rational(-3), Rational(-1, 2), Rational(-5, 4)};
    for (std::size_t i = 0; i < 12; ++i) {
        Graph g = random_graph(run.rng, 1 + i / 3);
        const Rational& x = points[i % points.size()];
        TransformPlan plan = normalize_point(x);
        Rational lhs = isp_eval(apply_plan(g, plan), x) / plan.factor(g.vertex_count());
        Rational rhs = isp_eval(g, plan.target_point);
        run.record("plan soundness", lhs == rhs && is_nondegenerate(plan.target_point), [&] {
            Json params;
            params["x"] = x.to_string();
            params["target"] = plan.target_point.to_string();
            return graph_dump(g, params);
        });
    }
    return run.finish();
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"gadget", gadget_suite},
        {"reduction", reduction_suite},
        {"clone-identity", clone_identity_suite},
        {"path-identity", path_identity_suite},
        {"comb-identity", comb_identity_suite},
        {"pipeline", pipeline_suite},
        {"normalizer", normalizer_suite},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_suites(std::string_view name, std::uint64_t seed)
{
    std::vector<SuiteResult> results;
    for (const auto& [suite, fn] : registry())
        if (name == "all" || name == suite)
            results.push_back(fn(seed));
    if (results.empty())
        throw DomainError("unknown suite '" + std::string(name) + "'");
    return results;
}

Json to_json(const SuiteResult& result)
{
    Json doc;
    doc["suite"] = result.name;
    doc["seed"] = result.seed;
    doc["cases"] = result.cases;
    doc["failures"] = result.failures;
    doc["passed"] = result.passed();
    doc["checks"] = result.summary;
    if (result.counterexample) {
        Json ce;
        ce["check"] = result.counterexample->check;
        ce["format"] = result.counterexample->format;
        ce["contents"] = result.counterexample->contents;
        ce["parameters"] = result.counterexample->parameters;
        doc["counterexample"] = std::move(ce);
    }
    return doc;
}

} // namespace ispoly
