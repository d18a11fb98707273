#include "ispoly/report.hpp"

namespace ispoly {

Json to_json(const Polynomial& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(c.to_string());
    return arr;
}

Json to_json(const CloneSpec& spec)
{
    Json arr = Json::array();
    for (auto s : spec.entries())
        arr.push_back(s);
    return arr;
}

Json to_json(const TransformPlan& plan)
{
    Json doc;
    doc["source"] = plan.source_point.to_string();
    Json steps = Json::array();
    for (const auto& step : plan.steps) {
        Json s;
        s["kind"] = to_string(step.kind);
        if (step.kind == PlanStepKind::comb)
            s["k"] = step.k;
        s["point"] = step.point.to_string();
        steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    doc["target"] = plan.target_point.to_string();
    doc["factor_base"] = plan.factor_base.to_string();
    doc["factor_exponent_per_vertex"] = plan.factor_exponent_per_vertex;
    return doc;
}

Json to_json(const CloneFamily& family)
{
    Json doc;
    doc["x"] = family.x.to_string();
    doc["n"] = family.n;
    doc["s0"] = family.s0;
    doc["delta"] = family.delta;
    Json members = Json::array();
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
        Json m;
        m["i"] = i;
        m["S"] = to_json(family.sets[i]);
        m["point"] = family.points[i].to_string();
        m["clone_vertices"] = family.n * family.sets[i].block_size();
        members.push_back(std::move(m));
    }
    doc["members"] = std::move(members);
    return doc;
}

Json to_json(const ReductionReport& report)
{
    Json doc;
    doc["clauses_in"] = report.clauses_in;
    doc["clauses_out"] = report.clauses_out;
    doc["vars_out"] = report.vars_out;
    doc["vertices"] = report.vertices;
    doc["target_size"] = report.target_size;
    doc["multiplier"] = report.multiplier.get_str();
    return doc;
}

} // namespace ispoly
