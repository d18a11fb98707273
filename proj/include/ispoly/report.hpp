#pragma once

#include "ispoly/clone_calculus.hpp"
#include "ispoly/cnf.hpp"
#include "ispoly/graph_io.hpp"
#include "ispoly/interpolation.hpp"
#include "ispoly/polynomial.hpp"

namespace ispoly {

// Report payloads. Integers are decimal strings, rationals "p/q".

Json to_json(const Polynomial& p);
Json to_json(const CloneSpec& spec);
Json to_json(const TransformPlan& plan);
Json to_json(const CloneFamily& family);
Json to_json(const ReductionReport& report);

} // namespace ispoly
