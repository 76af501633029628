#include <gtest/gtest.h>

#include "support.hpp"

using namespace dpcanvas;
using namespace testing_support;

namespace {

std::vector<int> sizes_for(const PlaneGraph& g, int outer_size, int inner_size) {
    auto outer = g.outer_vertex_mask();
    std::vector<int> k(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) k[v] = outer[v] ? outer_size : inner_size;
    return k;
}

// Random plane graph: a triangulation with edges thinned, possibly
// disconnected or with cut vertices.
PlaneGraph thinned(std::uint64_t seed, int n) {
    PlaneGraph t = random_triangulation(n, n, seed);
    SplitMix64 rng(seed + 5);
    SubgraphMask m = SubgraphMask::full(t);
    for (EdgeId e = 0; e < t.num_edges(); ++e)
        if (rng.chance(2, 5)) m.edges[e] = 0;
    return restrict_to(t, m).graph;
}

}  // namespace

TEST(ColourPlanar, GraphIsJustThePrecolouredEdge) {
    PlaneGraph g({{1}, {0}}, 0, 1);
    CorrespondenceAssignment a{{3, 3}, {{{0, 0}}}};
    Colouring phi{2, 1};
    EXPECT_EQ(colour_planar(g, a, {0, 1}, phi), phi);
}

TEST(ColourPlanar, WheelWithPrecolouredRimEdge) {
    PlaneGraph g = wheel(5);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto a = random_assignment(g, sizes_for(g, 3, 5), Rational(1), seed);
        Colouring phi(6, kUncoloured);
        SplitMix64 rng(seed);
        do {
            phi[0] = rng.below_int(3);
            phi[1] = rng.below_int(3);
        } while (!is_valid_colouring(g, a, phi, false));
        ASSERT_TRUE(extend(g, a, phi));
        Colouring out = colour_planar(g, a, {0, 1}, phi);
        EXPECT_TRUE(is_valid_colouring(g, a, out, true));
        EXPECT_EQ(out[0], phi[0]);
        EXPECT_EQ(out[1], phi[1]);
    }
}

TEST(ColourPlanar, ThousandVertexStackedTriangulation) {
    PlaneGraph g = stacked_triangulation(1000, 9);
    auto a = random_assignment(g, sizes_for(g, 3, 5), Rational(1), 9);
    Vertex x = g.outer_walk()[0], y = g.outer_walk()[1];
    Colouring phi(g.num_vertices(), kUncoloured);
    phi[x] = 0;
    for (phi[y] = 0; phi[y] < 3 && !is_valid_colouring(g, a, phi, false); ++phi[y]) {
    }
    ASSERT_LT(phi[y], 3);
    EXPECT_TRUE(is_valid_colouring(g, a, colour_planar(g, a, {x, y}, phi), true));
}

TEST(ColourPlanar, PreconditionsAreInputErrors) {
    PlaneGraph g = wheel(5);
    auto a = CorrespondenceAssignment::empty(g, 5);
    Colouring phi(6, kUncoloured);
    phi[5] = 0;
    EXPECT_THROW(colour_planar(g, a, {5}, phi), InputError);  // hub is not outer
    phi.assign(6, kUncoloured);
    phi[0] = phi[1] = phi[2] = 0;
    EXPECT_THROW(colour_planar(g, a, {0, 1, 2}, phi), InputError);
    phi.assign(6, kUncoloured);
    phi[0] = phi[2] = 0;
    EXPECT_THROW(colour_planar(g, a, {0, 2}, phi), InputError);  // not adjacent
    auto small = a;
    small.list_sizes[5] = 4;
    phi.assign(6, kUncoloured);
    phi[0] = 0;
    EXPECT_THROW(colour_planar(g, small, {0}, phi), InputError);
    auto tight = a;
    tight.list_sizes[3] = 2;
    EXPECT_THROW(colour_planar(g, tight, {0}, phi), InputError);
    auto clash = identity_matchings(g, 5);
    phi[1] = 0;
    EXPECT_THROW(colour_planar(g, clash, {0, 1}, phi), InputError);
}

TEST(Colour5cc, KFour) {
    PlaneGraph g = k4();
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto a = random_assignment(g, std::vector<int>(4, 5), Rational(seed % 3, 2), seed);
        EXPECT_TRUE(is_valid_colouring(g, a, colour_5cc(g, a), true));
    }
}

TEST(Colour5cc, EmptyGraph) {
    PlaneGraph g;
    EXPECT_TRUE(colour_5cc(g, CorrespondenceAssignment{}).empty());
}

TEST(Colour5cc, Icosahedron) {
    PlaneGraph g = icosahedron();
    auto a = random_assignment(g, std::vector<int>(12, 5), Rational(1), 1);
    EXPECT_TRUE(is_valid_colouring(g, a, colour_5cc(g, a), true));
}

TEST(Colour5cc, RejectsShortLists) {
    PlaneGraph g = k4();
    auto a = CorrespondenceAssignment::empty(g, 5);
    a.list_sizes[2] = 4;
    EXPECT_THROW(colour_5cc(g, a), InputError);
}

TEST(Colour5cc, RandomTriangulationsSaturated) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int n = 4 + static_cast<int>(seed * 7 % 150);
        PlaneGraph g = random_triangulation(n, 2 * n, seed);
        auto a = random_assignment(g, std::vector<int>(n, 5), Rational(1), seed);
        EXPECT_TRUE(is_valid_colouring(g, a, colour_5cc(g, a), true)) << "seed " << seed;
    }
}

TEST(Colour5cc, SparseGraphsWithCutVertices) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        PlaneGraph g = thinned(seed, 5 + static_cast<int>(seed % 40));
        auto a = random_assignment(g, std::vector<int>(g.num_vertices(), 5), Rational(1), seed);
        EXPECT_TRUE(is_valid_colouring(g, a, colour_5cc(g, a), true)) << "seed " << seed;
    }
}

TEST(ColourPlanar, ThreeListsOnTheOuterWalkAgreeWithSolver) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int n = 4 + static_cast<int>(seed % 60);
        PlaneGraph g = random_triangulation(n, 2 * n, seed);
        auto a = random_assignment(g, sizes_for(g, 3, 5), Rational(1 + seed % 2, 2), seed);
        auto walk = g.outer_walk();
        Vertex x = walk[0], y = walk[1];
        Colouring phi(n, kUncoloured);
        SplitMix64 rng(seed);
        do {
            phi[x] = rng.below_int(3);
            phi[y] = rng.below_int(3);
        } while (!is_valid_colouring(g, a, phi, false));
        Colouring out = colour_planar(g, a, {x, y}, phi);
        EXPECT_TRUE(is_valid_colouring(g, a, out, true)) << "seed " << seed;
        EXPECT_EQ(out[x], phi[x]);
        EXPECT_EQ(out[y], phi[y]);
    }
}
