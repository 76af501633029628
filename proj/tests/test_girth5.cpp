#include <gtest/gtest.h>

#include "support.hpp"

using namespace dpcanvas;
using namespace testing_support;

namespace {

// C5 0..4 with a pendant 5 hanging into the disk from 0.
PlaneGraph c5_pendant() {
    return PlaneGraph::with_outer_walk({{4, 5, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}, {0}}, iota_cycle(5));
}

// C8 with the chord 0-4.
PlaneGraph c8_chord() {
    return PlaneGraph::with_outer_walk({{7, 4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0, 5}, {4, 6}, {5, 7}, {6, 0}},
                                       iota_cycle(8));
}

// C9 with a vertex 9 adjacent to 0, 3, 6.
PlaneGraph c9_tripod() {
    Rotation r(10);
    for (int i = 0; i < 9; ++i) r[i] = {(i + 8) % 9, (i + 1) % 9};
    for (int i : {0, 3, 6}) r[i].insert(r[i].begin() + 1, 9);
    r[9] = {6, 3, 0};
    return PlaneGraph::with_outer_walk(std::move(r), iota_cycle(9));
}

Girth5Canvas on_cycle(const PlaneGraph& g, int len, int lists) {
    Girth5Canvas t{g, cycle_mask(g, iota_cycle(len)), CorrespondenceAssignment::empty(g, lists)};
    return t;
}

}  // namespace

TEST(Girth, Examples) {
    EXPECT_EQ(girth(cycle_graph(5)), 5);
    EXPECT_EQ(girth(cycle_graph(3)), 3);
    EXPECT_EQ(girth(c5_pendant()), 5);
    EXPECT_EQ(girth(c9_tripod()), 5);
    EXPECT_EQ(girth(wheel(5)), 3);
    PlaneGraph path({{1}, {0, 2}, {1}}, 0, 1);
    EXPECT_EQ(girth(path), std::nullopt);
}

TEST(Girth, AgreesWithBreadthFirstOracle) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        PlaneGraph g = seed % 2 ? random_girth5_disk(5 + static_cast<int>(seed % 5), 6, seed)
                                : random_triangulation(5 + static_cast<int>(seed % 20), 10, seed);
        EXPECT_EQ(girth(g), naive_girth(g)) << "seed " << seed;
        if (seed % 2) {
            EXPECT_GE(*girth(g), 5);
            EXPECT_TRUE(is_two_connected(g));
        }
    }
}

TEST(Girth, TreeDisks) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int boundary = 5 + static_cast<int>(seed % 9);
        const int internal = 1 + static_cast<int>(seed % 6);
        if (boundary == 5 && internal == 1) continue;
        PlaneGraph g = random_girth5_tree_disk(boundary, internal, seed);
        EXPECT_EQ(g.num_vertices(), boundary + internal);
        EXPECT_EQ(g.outer_walk(), iota_cycle(boundary)) << "seed " << seed;
        EXPECT_GE(*naive_girth(g), 5) << "seed " << seed;
        EXPECT_TRUE(is_two_connected(g)) << "seed " << seed;
        for (Vertex v = boundary; v < g.num_vertices(); ++v) {
            EXPECT_GE(g.degree(v), 2);
            EXPECT_LE(g.degree(v), 3);
        }
    }
    EXPECT_THROW(random_girth5_tree_disk(4, 2, 1), InputError);
    EXPECT_THROW(random_girth5_tree_disk(7, 0, 1), InputError);
    EXPECT_THROW(random_girth5_tree_disk(5, 1, 1), InputError);
}

TEST(Girth5Params, Constraints) {
    EXPECT_TRUE(girth5_parameters_ok({}));
    Girth5Params bad{Rational(1, 10), Rational(1, 10)};
    EXPECT_FALSE(girth5_parameters_ok(bad));
    EXPECT_THROW(girth5_inequality(on_cycle(c8_chord(), 8, 3), bad), InputError);
    Girth5Params zero{Rational(0), Rational(37, 100)};
    EXPECT_FALSE(girth5_parameters_ok(zero));
}

TEST(Girth5Shapes, Excluded) {
    EXPECT_TRUE(girth5_excluded_shape(on_cycle(c8_chord(), 8, 3)));
    EXPECT_TRUE(girth5_excluded_shape(on_cycle(c9_tripod(), 9, 3)));
    EXPECT_FALSE(girth5_excluded_shape(on_cycle(c5_pendant(), 5, 3)));
}

TEST(Girth5Inequality, Arithmetic) {
    auto chord = girth5_inequality(on_cycle(c8_chord(), 8, 3));
    EXPECT_EQ(chord.e, 1);
    EXPECT_EQ(chord.v, 0);
    EXPECT_EQ(chord.lhs, Rational(3));
    EXPECT_EQ(chord.margin(), Rational(0));
    auto tripod = girth5_inequality(on_cycle(c9_tripod(), 9, 3));
    EXPECT_EQ(tripod.e, 3);
    EXPECT_EQ(tripod.v, 1);
    EXPECT_EQ(tripod.q, 1);
    EXPECT_EQ(tripod.lhs, Rational(181, 50));
}

TEST(Girth5Violations, Examples) {
    EXPECT_TRUE(girth5_violations(on_cycle(c9_tripod(), 9, 3)).empty());
    auto pendant = on_cycle(c5_pendant(), 5, 3);
    pendant.a.list_sizes[5] = 1;
    EXPECT_FALSE(girth5_violations(pendant).empty());
    PlaneGraph w = wheel(5);
    EXPECT_FALSE(girth5_violations(on_cycle(w, 5, 3)).empty());
    auto broken = on_cycle(c9_tripod(), 9, 3);
    broken.s.vertices[9] = 1;  // isolated in s
    EXPECT_FALSE(girth5_violations(broken).empty());
}

TEST(Girth5Bound, PendantWithForcedColour) {
    PlaneGraph g = c5_pendant();
    auto a = CorrespondenceAssignment::empty(g, 3);
    a.list_sizes[5] = 1;
    a.matchings[*g.find_edge(0, 5)] = {{0, 0}};
    auto r = girth5_bound_check(g, iota_cycle(5), a);
    EXPECT_EQ(r.bound, Rational(445));
    EXPECT_EQ(r.lhs, Rational(6));
    EXPECT_EQ(r.margin(), Rational(439));
    EXPECT_TRUE(r.ok());
}

TEST(Girth5Bound, RejectsNonCriticalAndShortCycles) {
    PlaneGraph g = c5_pendant();
    EXPECT_THROW(girth5_bound_check(g, iota_cycle(5), CorrespondenceAssignment::empty(g, 3)), InputError);
    PlaneGraph w = wheel(5);
    EXPECT_THROW(girth5_bound_check(w, iota_cycle(5), identity_matchings(w, 5)), InputError);
}

TEST(Girth5Extend, CycleWithThreeLists) {
    PlaneGraph g = cycle_graph(5);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto a = random_assignment(g, std::vector<int>(5, 3), Rational(1), seed);
        EXPECT_TRUE(thomassen_g5_extendability(g, a, {0, 1}, {}));
    }
}

TEST(Girth5Extend, HypothesisViolations) {
    PlaneGraph g = cycle_graph(5);
    EXPECT_THROW(thomassen_g5_extendability(g, identity_matchings(g, 2), {0}, {}), InputError);
    auto a = CorrespondenceAssignment::empty(g, 3);
    EXPECT_THROW(thomassen_g5_extendability(g, a, {}, {}), InputError);
    EXPECT_THROW(thomassen_g5_extendability(g, a, {0, 2}, {}), InputError);  // not a path
    auto two = a;
    two.list_sizes[1] = 2;
    EXPECT_THROW(thomassen_g5_extendability(g, two, {0}, {1}), InputError);  // neighbour of s
    auto far = a;
    far.list_sizes[3] = 2;
    EXPECT_NO_THROW(thomassen_g5_extendability(g, far, {0}, {3}));
    EXPECT_THROW(thomassen_g5_extendability(wheel(5), identity_matchings(wheel(5), 5), {0}, {}), InputError);
}

TEST(Girth5Extend, RandomDisks) {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const int boundary = 5 + static_cast<int>(seed % 5);
        PlaneGraph g = random_girth5_disk(boundary, 1 + static_cast<int>(seed % 6), seed, 22);
        SplitMix64 rng(seed);
        auto walk = g.outer_walk();
        const int len = static_cast<int>(walk.size());
        const int slen = 1 + rng.below_int(std::min(6, len));
        const int start = rng.below_int(len);
        std::vector<Vertex> s;
        std::vector<char> in_s(g.num_vertices(), 0), blocked(g.num_vertices(), 0);
        for (int i = 0; i < slen; ++i) {
            s.push_back(walk[(start + i) % len]);
            in_s[s.back()] = 1;
        }
        for (Vertex v : s)
            for (Vertex w : g.rotation(v)) blocked[w] = 1;
        std::vector<Vertex> a_set;
        for (Vertex v : walk)
            if (!in_s[v] && !blocked[v] && rng.chance(1, 3)) {
                a_set.push_back(v);
                for (Vertex w : g.rotation(v)) blocked[w] = 1;
            }
        std::vector<int> sizes(g.num_vertices(), 3);
        for (Vertex v : a_set) sizes[v] = 2;
        auto a = random_assignment(g, sizes, Rational(1 + rng.below_int(2), 2), seed);
        EXPECT_TRUE(thomassen_g5_extendability(g, a, s, a_set)) << "seed " << seed;
        ++checked;
    }
    EXPECT_EQ(checked, 300);
}
