#include "ispoly/clone_calculus.hpp"
#include "ispoly/errors.hpp"
#include "ispoly/isp_eval.hpp"
#include "ispoly/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ispoly;
using namespace ispoly::testing;

TEST(PathWeights, Examples)
{
    const std::vector<std::pair<long, long>> expected{{2, 1}, {2, 3}, {6, 5}};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        PathWeights w = path_weights(Rational(2), k);
        EXPECT_EQ(w.b, Rational(expected[k].first));
        EXPECT_EQ(w.c, Rational(expected[k].second));
        EXPECT_EQ(w.k, k);
    }
}

TEST(PathWeights, RecurrenceMatchesMatrixPowers)
{
    for (const auto& x : {Rational(2), Rational(-3, 7), Rational(-1, 4), Rational(0)})
        for (std::size_t k = 0; k <= 20; ++k) {
            auto [b, c] = matrix_path_weights(x, k);
            PathWeights w = path_weights(x, k);
            EXPECT_EQ(w.b, b);
            EXPECT_EQ(w.c, c);
        }
}

TEST(PathWeights, ClosedFormsAgreeUpToFifty)
{
    for (const auto& x : sample_points()) {
        auto [l1, l2] = lambda_pair(x);
        for (std::size_t k = 0; k <= 50; ++k) {
            PathWeights w = path_weights(x, k);
            auto [b, c] = path_weights_closed_form(x, k);
            EXPECT_EQ(b, QuadExt::rational(w.b, l1.d()));
            EXPECT_EQ(c, QuadExt::rational(w.c, l1.d()));
            EXPECT_EQ(b.to_rational(), w.b);
            EXPECT_EQ(c.to_rational(), w.c);
            // C_k = (l1^(k+2) - l2^(k+2)) / (l1 - l2), written out independently.
            QuadExt direct = (l1.pow(k + 2) - l2.pow(k + 2)) / (l1 - l2);
            EXPECT_EQ(direct, c);
            EXPECT_FALSE(w.c.is_zero());
        }
    }
}

TEST(PathWeights, PerVertexVariantFoldsTowardsRoot)
{
    // Path a0 a1 a2 with weights w0, w1, w2 attached at a0: the pendant part
    // contributes (B, C) with I = C * (1 + (B / C)-weighted root).
    std::vector<Rational> w{Rational(2), Rational(1, 3), Rational(-1, 5)};
    PathWeights pw = path_weights(w);
    Graph p = path_graph(3);
    EXPECT_EQ(pw.c + pw.b, brute_multivariate(p, w));
    EXPECT_EQ(pw.c, brute_multivariate(Graph(2, {{0, 1}}), {w[1], w[2]}));
    std::vector<Rational> uniform(5, Rational(3));
    PathWeights u = path_weights(uniform);
    PathWeights r = path_weights(Rational(3), 4);
    EXPECT_EQ(u.b, r.b);
    EXPECT_EQ(u.c, r.c);
}

TEST(IsNondegenerate, Examples)
{
    EXPECT_TRUE(is_nondegenerate(Rational(2)));
    EXPECT_FALSE(is_nondegenerate(Rational(0)));
    EXPECT_FALSE(is_nondegenerate(Rational(-1, 4)));
    EXPECT_TRUE(is_nondegenerate(Rational(-1, 5)));
    EXPECT_FALSE(is_nondegenerate(Rational(-3)));
}

TEST(IsCompatible, Examples)
{
    EXPECT_TRUE(is_compatible(Rational(2), CloneSpec({0, 1, 5})));
    EXPECT_TRUE(is_compatible(Rational(1, 2), CloneSpec({3})));
    EXPECT_TRUE(is_compatible(Rational(-1, 5), CloneSpec({0})));
    EXPECT_THROW(is_compatible(Rational(-1, 2), CloneSpec({0})), DomainError);
}

TEST(XOfS, Examples)
{
    EXPECT_EQ(x_of_S(Rational(2), CloneSpec({0})), Rational(2));
    EXPECT_EQ(x_of_S(Rational(2), CloneSpec({1})), Rational(2, 3));
    EXPECT_EQ(x_of_S(Rational(2), CloneSpec({0, 0})), Rational(8));
    EXPECT_THROW(x_of_S(Rational(0), CloneSpec({1})), DomainError);
    EXPECT_THROW(x_of_S(Rational(-1, 2), CloneSpec({1})), DomainError);
}

TEST(XOfS, IsMultiplicativeOverUnion)
{
    for (const auto& x : sample_points())
        for (const auto& s : all_clone_specs(2, 3))
            for (const auto& t : all_clone_specs(2, 3)) {
                std::vector<std::size_t> both = s.entries();
                both.insert(both.end(), t.entries().begin(), t.entries().end());
                Rational lhs = Rational(1) + x_of_S(x, CloneSpec(both));
                Rational rhs = (Rational(1) + x_of_S(x, s)) * (Rational(1) + x_of_S(x, t));
                EXPECT_EQ(lhs, rhs);
            }
}

TEST(CloneFactor, Examples)
{
    EXPECT_EQ(clone_factor(Rational(2), CloneSpec({1}), 2), Rational(9));
    EXPECT_EQ(clone_factor(Rational(2), CloneSpec({2}), 1), Rational(5));
    for (const auto& x : sample_points())
        for (std::size_t n = 0; n < 5; ++n)
            EXPECT_EQ(clone_factor(x, CloneSpec({0}), n), Rational(1));
}

TEST(MasterIdentity, WorkedCase)
{
    Graph k2 = complete_graph(2);
    CloneSpec s({1});
    EXPECT_EQ(isp_eval(s_clone(k2, s), Rational(2)), Rational(21));
    EXPECT_EQ(isp_eval(k2, Rational(2, 3)), Rational(7, 3));
    EXPECT_EQ(clone_factor(Rational(2), s, 2) * isp_eval(k2, x_of_S(Rational(2), s)), Rational(21));
}

TEST(MasterIdentity, HoldsOnSmallGraphs)
{
    const auto specs = all_clone_specs(2, 3);
    for (const auto& g : small_graphs(4))
        for (const auto& spec : specs)
            for (const auto& x : sample_points())
                EXPECT_EQ(isp_eval(s_clone(g, spec), x),
                          clone_factor(x, spec, g.vertex_count()) * brute_eval(g, x_of_S(x, spec)));
}

TEST(KCloneIdentity, HoldsUpToSevenVertices)
{
    Rng rng(41);
    for (std::size_t n = 0; n <= 7; ++n)
        for (int i = 0; i < 6; ++i) {
            Graph g = random_graph(rng, n);
            for (std::size_t k = 1; k <= 3; ++k)
                for (const auto& x : sample_points())
                    EXPECT_EQ(isp_eval(k_clone(g, k), x),
                              isp_eval(g, (Rational(1) + x).pow(static_cast<long>(k)) - Rational(1)));
        }
}

TEST(CombIdentity, UsesPerVertexFactor)
{
    for (const auto& g : small_graphs(5))
        for (std::size_t k = 0; k <= 3; ++k)
            for (const auto& x : {Rational(2), Rational(-1, 2), Rational(-3)}) {
                Rational base = (Rational(1) + x).pow(static_cast<long>(k));
                EXPECT_EQ(isp_eval(comb(g, k), x),
                          base.pow(static_cast<long>(g.vertex_count())) * brute_eval(g, x / base));
            }
}

TEST(PathIdentity, HoldsAtEveryVertex)
{
    for (const auto& g : small_graphs(5))
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (std::size_t k = 0; k <= 4; ++k)
                for (const auto& x : sample_points()) {
                    auto [b, c] = matrix_path_weights(x, k);
                    std::vector<Rational> w(g.vertex_count(), x);
                    w[v] = b / c;
                    EXPECT_EQ(brute_eval(attach_path(g, v, k), x), c * brute_multivariate(g, w));
                }
}

TEST(NormalizePoint, NondegenerateIsUnchanged)
{
    TransformPlan plan = normalize_point(Rational(5));
    EXPECT_TRUE(plan.steps.empty());
    EXPECT_EQ(plan.target_point, Rational(5));
    EXPECT_EQ(plan.factor(4), Rational(1));
    EXPECT_EQ(apply_plan(path_graph(3), plan), path_graph(3));
}

TEST(NormalizePoint, BelowMinusTwo)
{
    TransformPlan plan = normalize_point(Rational(-3));
    ASSERT_EQ(plan.steps.size(), 1U);
    EXPECT_EQ(plan.steps[0].kind, PlanStepKind::two_clone);
    EXPECT_EQ(plan.target_point, Rational(3));
}

TEST(NormalizePoint, MinusOneHalf)
{
    TransformPlan plan = normalize_point(Rational(-1, 2));
    ASSERT_EQ(plan.steps.size(), 2U);
    EXPECT_EQ(plan.steps[0].kind, PlanStepKind::comb);
    EXPECT_EQ(plan.steps[0].k, 4U);
    EXPECT_EQ(plan.steps[0].point, Rational(-8));
    EXPECT_EQ(plan.steps[1].kind, PlanStepKind::two_clone);
    EXPECT_EQ(plan.target_point, Rational(48));
}

TEST(NormalizePoint, CombExponentIsSmallestEvenByExactSearch)
{
    for (const auto& x : {Rational(-1, 4), Rational(-1, 2), Rational(-5, 4), Rational(-3, 10), Rational(-19, 10),
                          Rational(-11, 10), Rational(-9, 10)}) {
        TransformPlan plan = normalize_point(x);
        ASSERT_EQ(plan.steps.size(), 2U) << x;
        std::size_t k = plan.steps[0].k;
        EXPECT_EQ(k % 2, 0U);
        EXPECT_LT(x / (Rational(1) + x).pow(static_cast<long>(k)), Rational(-2));
        for (std::size_t smaller = 2; smaller < k; smaller += 2)
            EXPECT_GE(x / (Rational(1) + x).pow(static_cast<long>(smaller)), Rational(-2));
        EXPECT_TRUE(is_nondegenerate(plan.target_point));
    }
    EXPECT_EQ(normalize_point(Rational(-1, 4)).steps[0].k, 8U);
    EXPECT_EQ(normalize_point(Rational(-5, 4)).steps[0].k, 2U);
}

TEST(NormalizePoint, RejectsCycleGadgetPoints)
{
    for (const auto& x : {Rational(0), Rational(-1), Rational(-2)}) {
        try {
            normalize_point(x);
            ADD_FAILURE() << "accepted " << x;
        } catch (const DomainError& e) {
            EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
        }
    }
}

TEST(NormalizePoint, PlanIsSound)
{
    for (const auto& x : {Rational(-3), Rational(-1, 2), Rational(-5, 4), Rational(-7, 3)}) {
        TransformPlan plan = normalize_point(x);
        for (const auto& g : small_graphs(3)) {
            Graph h = apply_plan(g, plan);
            EXPECT_EQ(isp_eval(h, x) / plan.factor(g.vertex_count()), brute_eval(g, plan.target_point));
        }
    }
}
