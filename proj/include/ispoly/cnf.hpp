#pragma once

#include "ispoly/graph.hpp"
#include "ispoly/isp_eval.hpp"
#include "ispoly/literal.hpp"
#include "ispoly/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ispoly {

using Clause = std::vector<Literal>;

/// Conjunction of clauses over variables 1..variable_count. Duplicate
/// literals inside a clause are dropped on construction; complementary
/// pairs are kept. Clauses must be nonempty.
class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(std::size_t variable_count, std::vector<Clause> clauses);

    std::size_t variable_count() const { return variable_count_; }
    std::size_t clause_count() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }
    /// Sum of clause widths.
    std::size_t literal_count() const;
    /// Declared variables that occur in no clause.
    std::size_t unused_variable_count() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    std::size_t variable_count_ = 0;
    std::vector<Clause> clauses_;
};

/// DIMACS CNF: "c" comment lines, a "p cnf n m" header, then m clauses as
/// 0-terminated literal sequences that may span lines.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

struct SatLimits {
    std::size_t max_variables = 24;
};

/// Satisfying assignments over all 2^n assignments.
Integer count_sat(const CnfFormula& f, const SatLimits& limits = {});

/// Assignments with exactly one true literal in every clause. Clause widths
/// must be 2 or 3.
Integer count_x3sat(const CnfFormula& f, const SatLimits& limits = {});

/// Rejects formulas that are not valid X3SAT instances for the graph
/// reduction: widths outside {2, 3}, repeated literals, or a literal next to
/// its negation.
void validate_x3sat(const CnfFormula& f);

/// Schaefer's parsimonious 3-SAT -> X3SAT reduction. Clause i = (a v b v c)
/// becomes, with fresh variables u1..u6 = n + 6i + 1 .. n + 6i + 6,
///     (a u1 u4)(b u2 u4)(u1 u2 u5)(u3 u4 u6)(c u3).
/// A width-2 clause plugs c := b, a width-1 clause c := b := a.
CnfFormula schaefer_reduce(const CnfFormula& f);

struct X3satGraph {
    Graph graph;
    /// Independent sets of this size correspond to solutions.
    std::size_t target_size = 0;
    /// 2^r for the r declared variables that occur in no clause.
    Integer multiplier{1};
};

/// Clause-clique graph of an X3SAT instance. Vertex ids follow clause order,
/// then literal order; every vertex is labeled by its literal. Two vertices of
/// different clauses with the same literal are each joined to the other's
/// clause partners; complementary literals are joined to each other and their
/// partner sets are joined completely.
X3satGraph x3sat_to_graph(const CnfFormula& f);

/// multiplier * (independent sets of the target size).
Integer count_solutions(const X3satGraph& reduced, const EvalLimits& limits = {});

/// count_sat computed through schaefer_reduce, x3sat_to_graph and
/// count_is_of_size.
Integer sat_count_via_is(const CnfFormula& f, const EvalLimits& limits = {});

/// Size bookkeeping of the two reductions.
struct ReductionReport {
    std::size_t clauses_in = 0;
    std::size_t clauses_out = 0;
    std::size_t vars_out = 0;
    std::size_t vertices = 0;
    std::size_t target_size = 0;
    Integer multiplier{1};
};

/// Both reductions applied to a 3-CNF, with their size bookkeeping.
struct ReductionChain {
    CnfFormula x3sat;
    X3satGraph reduced;
    ReductionReport report;
};

ReductionChain reduce_chain(const CnfFormula& f);

/// Graph reduction of an X3SAT instance with its bookkeeping (clauses_in and
/// clauses_out both count the X3SAT clauses).
ReductionChain reduce_x3sat_chain(const CnfFormula& f);

} // namespace ispoly
