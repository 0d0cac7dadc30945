#include <random>

#include <gtest/gtest.h>

#include <powerideal/involution.hpp>
#include <powerideal/standard_monomials.hpp>
#include <powerideal/verify.hpp>

#include "oracles.hpp"

using namespace powerideal;

namespace
{

VertexSubset S(std::initializer_list<Vertex> v)
{
    return VertexSubset::of(v);
}

FunctionalSubgraph k3_subgraph(std::optional<Arc> from1, std::optional<Arc> from2)
{
    FunctionalSubgraph h(2);
    h.set_out_edge(1, from1);
    h.set_out_edge(2, from2);
    return h;
}

// Ordered set partitions of an m-set.
std::size_t fubini(int m)
{
    std::vector<std::size_t> a{1};
    for (int j = 1; j <= m; ++j) {
        std::size_t sum = 0;
        std::size_t binom = 1;
        for (int i = 1; i <= j; ++i) {
            binom = binom * static_cast<std::size_t>(j - i + 1) / static_cast<std::size_t>(i);
            sum += binom * a[static_cast<std::size_t>(j - i)];
        }
        a.push_back(sum);
    }
    return a[static_cast<std::size_t>(m)];
}

} // namespace

TEST(SubsetChain, Validation)
{
    EXPECT_NO_THROW(SubsetChain({S({1}), S({1, 2})}));
    EXPECT_THROW(SubsetChain({S({1, 2}), S({1, 2})}), std::invalid_argument);
    EXPECT_THROW(SubsetChain({S({1}), S({2})}), std::invalid_argument);
    EXPECT_THROW(SubsetChain({VertexSubset{}}), std::invalid_argument);
}

TEST(SubsetChain, EnumerationCount)
{
    for (int n = 1; n <= 5; ++n) {
        std::size_t expected = 0;
        std::size_t binom = 1;
        for (int m = 0; m <= n; ++m) {
            expected += binom * fubini(m);
            binom = binom * static_cast<std::size_t>(n - m) / static_cast<std::size_t>(m + 1);
        }
        EXPECT_EQ(enumerate_chains(n).size(), expected) << "n = " << n;
    }
    EXPECT_EQ(enumerate_chains(4).size(), 150u);
    EXPECT_TRUE(enumerate_chains(3).front().empty());
}

TEST(AlternatingSum, K3Terms)
{
    const auto family = monomize(RootedMultigraph::complete(3), 1);
    EXPECT_EQ(chain_term(family, SubsetChain{}), 9);
    EXPECT_EQ(chain_term(family, SubsetChain({S({1})})), 0);
    EXPECT_EQ(chain_term(family, SubsetChain({S({2})})), 0);
    EXPECT_EQ(chain_term(family, SubsetChain({S({1, 2})})), 2);
    EXPECT_EQ(chain_term(family, SubsetChain({S({1}), S({1, 2})})), 0);
    EXPECT_EQ(chain_term(family, SubsetChain({S({2}), S({1, 2})})), 0);
    const auto sum = alternating_sum(family);
    EXPECT_EQ(sum.value, 7);
    EXPECT_EQ(sum.nonzero_chains, 2u);
}

TEST(AlternatingSum, Examples)
{
    EXPECT_EQ(alternating_sum_dimension(RootedMultigraph::complete(2)), 2);
    EXPECT_EQ(alternating_sum_dimension(RootedMultigraph::complete(3)), 7);
    EXPECT_EQ(alternating_sum_dimension(oracle::load("example4.graph")), 82);
    EXPECT_EQ(alternating_sum_dimension(RootedMultigraph::complete(5)), 291);
}

TEST(AlternatingSum, MatchesBasisSizeOnDigraphs)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_digraph(rng, 3, 2);
        for (int k : {0, 1}) {
            const auto family = monomize(g, k);
            EXPECT_EQ(alternating_sum(family).value, static_cast<std::int64_t>(standard_monomials(family).size()));
        }
    }
}

TEST(CompatiblePairs, K3)
{
    const auto k3 = RootedMultigraph::complete(3);
    EXPECT_EQ(count_compatible_pairs(k3, SubsetChain({S({1, 2})})), 2u);
    EXPECT_EQ(count_compatible_pairs(k3, SubsetChain{}), 9u);
    EXPECT_EQ(count_compatible_pairs(k3, SubsetChain({S({1})})), 0u);

    // {1,2}: 1 must point at 2; 2 points at 1 or nowhere.
    EXPECT_TRUE(is_compatible(k3_subgraph(Arc{2, 0}, Arc{1, 0}), SubsetChain({S({1, 2})})));
    EXPECT_TRUE(is_compatible(k3_subgraph(Arc{2, 0}, std::nullopt), SubsetChain({S({1, 2})})));
    EXPECT_FALSE(is_compatible(k3_subgraph(Arc{2, 0}, Arc{0, 0}), SubsetChain({S({1, 2})})));
    EXPECT_FALSE(is_compatible(k3_subgraph(std::nullopt, Arc{1, 0}), SubsetChain({S({1, 2})})));
}

TEST(CompatiblePairs, EmptyChainCountsEverySubgraph)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = oracle::random_graph(rng, 3, 2, 0.5);
        std::size_t product = 1;
        for (Vertex v = 1; v <= 3; ++v) {
            product *= static_cast<std::size_t>(g.out_degree(v) + 1);
        }
        EXPECT_EQ(count_compatible_pairs(g, SubsetChain{}), product);
    }
}

TEST(LabelSpecial, K3)
{
    const auto k3 = RootedMultigraph::complete(3);
    const auto forest = label_special(k3, k3_subgraph(std::nullopt, Arc{1, 0}));
    EXPECT_TRUE(forest.special_set.empty());
    EXPECT_EQ(forest.label, (std::vector<Label>{Label::nonspecial, Label::nonspecial, Label::nonspecial}));

    const auto up = label_special(k3, k3_subgraph(Arc{2, 0}, std::nullopt));
    EXPECT_EQ(up.special_set, S({1, 2}));
    EXPECT_EQ(up.label, (std::vector<Label>{Label::nonspecial, Label::special, Label::special}));

    EXPECT_TRUE(label_special(k3, FunctionalSubgraph(2)).special_set.empty());
    EXPECT_THROW(label_special(k3, k3_subgraph(Arc{2, 1}, std::nullopt)), std::invalid_argument);
}

TEST(LabelSpecial, StopsAtFirstVertexWithOutEdge)
{
    // 1 -> 0, 2 -> 3, 3 -> 2: vertex 2 has an out-edge, so 2 and 3 are special.
    const RootedMultigraph g(3, {{0, 1}, {2, 3}, {0, 2}});
    FunctionalSubgraph h(3);
    h.set_out_edge(1, Arc{0, 0});
    h.set_out_edge(2, Arc{3, 0});
    h.set_out_edge(3, Arc{2, 0});
    const auto labels = label_special(g, h);
    EXPECT_EQ(labels.special_set, S({2, 3}));
    EXPECT_EQ(labels.label[1], Label::nonspecial);
}

TEST(Kappa, K3Examples)
{
    const auto k3 = RootedMultigraph::complete(3);
    const auto up = k3_subgraph(Arc{2, 0}, std::nullopt);
    EXPECT_EQ(kappa(k3, up, SubsetChain{}), SubsetChain({S({1, 2})}));
    EXPECT_EQ(kappa(k3, up, SubsetChain({S({1, 2})})), SubsetChain{});

    const auto down = k3_subgraph(std::nullopt, Arc{1, 0});
    EXPECT_EQ(kappa(k3, down, SubsetChain{}), SubsetChain{});
}

TEST(Kappa, RejectsIncompatiblePairs)
{
    const auto k3 = RootedMultigraph::complete(3);
    const auto down = k3_subgraph(std::nullopt, Arc{1, 0});
    EXPECT_THROW(kappa(k3, down, SubsetChain({S({1, 2})})), std::invalid_argument);
    EXPECT_THROW(kappa(k3, down, SubsetChain({S({2})})), std::invalid_argument);
}

TEST(Kappa, ExhaustiveOnExamples)
{
    for (const auto &g : {RootedMultigraph::complete(3), oracle::load("example4.graph"), RootedMultigraph::complete(5)}) {
        const auto result = check_involution(g);
        EXPECT_EQ(result.status, CheckStatus::pass) << result.detail;
        const auto terms = check_chain_terms(g);
        EXPECT_EQ(terms.status, CheckStatus::pass) << terms.detail;
        const auto labels = check_labeling(g);
        EXPECT_EQ(labels.status, CheckStatus::pass) << labels.detail;
    }
}

TEST(Kappa, ExhaustiveOnDigraphs)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_digraph(rng, 3, 1);
        EXPECT_EQ(check_involution(g).status, CheckStatus::pass);
        EXPECT_EQ(check_chain_terms(g).status, CheckStatus::pass);
    }
}
