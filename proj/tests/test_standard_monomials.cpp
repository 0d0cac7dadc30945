#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include <powerideal/standard_monomials.hpp>

#include "oracles.hpp"
#include "sweep.hpp"

using namespace powerideal;

namespace
{

std::vector<std::int64_t> golden_profile(const std::string &name)
{
    std::istringstream in(oracle::read_file(oracle::fixture_path("golden/" + name)));
    std::vector<std::int64_t> out;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        for (std::int64_t c; fields >> c;) {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

TEST(ClassicalParking, Examples)
{
    EXPECT_TRUE(is_classical_parking({0, 0, 0, 0}));
    EXPECT_FALSE(is_classical_parking({1, 1, 1}));
    EXPECT_TRUE(is_classical_parking({0, 1}));
    EXPECT_TRUE(is_classical_parking({1, 0}));
    EXPECT_TRUE(is_classical_parking({0, 0}));
    EXPECT_FALSE(is_classical_parking({1, 1}));
    EXPECT_TRUE(is_classical_parking({2, 0, 1}));
    EXPECT_FALSE(is_classical_parking({0, 2, 2}));
}

TEST(GParking, K3)
{
    const auto k3 = RootedMultigraph::complete(3);
    std::set<ExponentVector> parking;
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            if (is_g_parking(k3, {a, b}, 0)) {
                parking.insert({a, b});
            }
        }
    }
    EXPECT_EQ(parking, (std::set<ExponentVector>{{0, 0}, {0, 1}, {1, 0}}));

    EXPECT_TRUE(is_g_parking(k3, {1, 2}, 1));
    EXPECT_FALSE(is_g_parking(k3, {2, 1}, 1));
    EXPECT_THROW(is_g_parking(k3, {0}, 1), std::invalid_argument);
}

TEST(GParking, ZeroVectorAlwaysParks)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_graph(rng, 4, 2, 0.3);
        EXPECT_TRUE(is_g_parking(g, ExponentVector(4, 0), 0));
        EXPECT_TRUE(is_g_parking(g, ExponentVector(4, 0), 1));
    }
}

TEST(StandardMonomials, K3)
{
    const auto k3 = RootedMultigraph::complete(3);
    const auto basis = standard_monomials(monomize(k3, 1));
    const std::vector<ExponentVector> expected{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {1, 2}};
    EXPECT_EQ(basis, expected);
    // Exactly one of x^2 y and x y^2.
    const bool has_x2y = std::find(basis.begin(), basis.end(), ExponentVector{2, 1}) != basis.end();
    const bool has_xy2 = std::find(basis.begin(), basis.end(), ExponentVector{1, 2}) != basis.end();
    EXPECT_NE(has_x2y, has_xy2);

    EXPECT_EQ(standard_monomials(monomize(k3, 0)).size(), 3u);
}

TEST(StandardMonomials, Example4)
{
    const auto ex4 = oracle::load("example4.graph");
    EXPECT_EQ(standard_monomials(monomize(ex4, 1)).size(), 82u);
}

TEST(StandardMonomials, InfiniteQuotient)
{
    // No generator is a pure power of x2, so nothing bounds it.
    const MonomialIdeal family{2, 1, {{VertexSubset::of({1}), {2, 0}}, {VertexSubset::of({2}), {1, 1}}, {VertexSubset::of({1, 2}), {1, 1}}}};
    try {
        standard_monomials(family);
        FAIL() << "expected infinite_quotient";
    } catch (const infinite_quotient &e) {
        EXPECT_EQ(e.variable(), 2);
    }
}

TEST(StandardMonomials, SinkVertexGivesZeroQuotientAtKZero)
{
    // Vertex 2 has no out-arcs, so m_{2} = 1 when k = 0.
    const auto g = parse_graph("graph 2 directed\n1 0\n1 2\n");
    EXPECT_TRUE(standard_monomials(monomize(g, 0)).empty());
    EXPECT_EQ(standard_monomials(monomize(g, 1)).size(), 2u);
}

TEST(StandardMonomials, UnitIdealGivesZeroQuotient)
{
    // Nothing leaves {1,2}, so m_{1,2} = 1 at k = 0.
    const auto g = parse_graph("graph 2 directed\n1 2\n2 1\n");
    EXPECT_TRUE(standard_monomials(monomize(g, 0)).empty());
    EXPECT_EQ(hilbert_series_B(monomize(g, 0)), HilbertSeries{});
}

TEST(HilbertSeriesB, Examples)
{
    EXPECT_EQ(hilbert_series_B(monomize(RootedMultigraph::complete(3), 1)), HilbertSeries({1, 2, 3, 1}));
    EXPECT_EQ(hilbert_series_B(monomize(RootedMultigraph::complete(2), 1)), HilbertSeries({1, 1}));
    EXPECT_EQ(hilbert_series_B(monomize(RootedMultigraph::complete(3), 1)).to_string(), "1 + 2t + 3t^2 + t^3");
}

TEST(HilbertSeriesB, Example4GoldenProfile)
{
    const auto ex4 = oracle::load("example4.graph");
    const auto golden = golden_profile("example4_k1.hilbert");
    EXPECT_EQ(golden, oracle::parking_profile(ex4, 1));
    const auto series = hilbert_series_B(monomize(ex4, 1));
    EXPECT_EQ(series.coeffs(), golden);
    EXPECT_EQ(series.total(), 82);
}

TEST(HilbertSeriesB, AgreesWithDefinitionScan)
{
    const auto corpus = sweep::theorem_sweep();
    for (std::size_t j = 0; j < corpus.size(); j += 7) {
        for (int k : {0, 1}) {
            EXPECT_EQ(hilbert_series_B(monomize(corpus[j], k)).coeffs(), oracle::parking_profile(corpus[j], k));
        }
    }
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const auto g = oracle::random_digraph(rng, 3, 2);
        EXPECT_EQ(hilbert_series_B(monomize(g, 1)).coeffs(), oracle::parking_profile(g, 1));
    }
}

TEST(OrbitCount, Examples)
{
    const auto k3 = standard_monomials(monomize(RootedMultigraph::complete(3), 0));
    EXPECT_EQ(orbit_count(k3), 2u);
    const auto k4 = standard_monomials(monomize(RootedMultigraph::complete(4), 0));
    EXPECT_EQ(k4.size(), 16u);
    EXPECT_EQ(orbit_count(k4), 5u);
    EXPECT_EQ(orbit_count(std::vector<ExponentVector>{{0, 0, 0}}), 1u);
}

TEST(StandardMonomials, ListingFormat)
{
    const auto basis = standard_monomials(monomize(RootedMultigraph::complete(3), 0));
    std::ostringstream out;
    write_standard_monomials(out, 2, 0, basis);
    EXPECT_EQ(out.str(), "# n=2 k=0 dim=3\n0 0\n0 1\n1 0\n");
}

TEST(HilbertSeries, Formatting)
{
    EXPECT_EQ(HilbertSeries({1}).to_string(), "1");
    EXPECT_EQ(HilbertSeries({1, 1}).to_string(), "1 + t");
    EXPECT_EQ(HilbertSeries({1, 0, 4, 0, 0}).to_string(), "1 + 4t^2");
    EXPECT_EQ(HilbertSeries({1, 0, 4, 0, 0}).degree(), 2);
    EXPECT_EQ(HilbertSeries{}.to_string(), "0");
    EXPECT_TRUE(HilbertSeries({1, 2}).dominated_by(HilbertSeries({1, 2, 1})));
    EXPECT_FALSE(HilbertSeries({1, 3}).dominated_by(HilbertSeries({1, 2, 1})));
}
