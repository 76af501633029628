#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace dpcanvas;
using namespace testing_support;

namespace {

PlaneGraph edge_graph() { return PlaneGraph({{1}, {0}}, 0, 1); }

CorrespondenceAssignment random_sparse(const PlaneGraph& g, std::uint64_t seed, int lo = 1, int hi = 5) {
    SplitMix64 rng(seed);
    std::vector<int> sizes(g.num_vertices());
    for (int& k : sizes) k = lo + rng.below_int(hi - lo + 1);
    return random_assignment(g, sizes, Rational(rng.below_int(5), 4), seed + 1);
}

}  // namespace

TEST(Validity, MatchedPairIsAConflict) {
    PlaneGraph g = edge_graph();
    CorrespondenceAssignment a{{2, 2}, {{{0, 1}}}};
    EXPECT_FALSE(is_valid_colouring(g, a, {0, 1}, true));
}

TEST(Validity, EqualIndicesAreUnrelatedUnlessMatched) {
    PlaneGraph g = edge_graph();
    CorrespondenceAssignment a{{2, 2}, {{{0, 1}}}};
    EXPECT_TRUE(is_valid_colouring(g, a, {0, 0}, true));
}

TEST(Validity, EmptyMatchingsAcceptEverything) {
    PlaneGraph g = wheel(5);
    auto a = CorrespondenceAssignment::empty(g, 3);
    SplitMix64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Colouring phi(6);
        for (int& c : phi) c = rng.below_int(3);
        EXPECT_TRUE(is_valid_colouring(g, a, phi, true));
    }
}

TEST(Validity, TotalFlagAndRange) {
    PlaneGraph g = edge_graph();
    auto a = CorrespondenceAssignment::empty(g, 2);
    EXPECT_TRUE(is_valid_colouring(g, a, {0, kUncoloured}, false));
    EXPECT_FALSE(is_valid_colouring(g, a, {0, kUncoloured}, true));
    EXPECT_THROW(is_valid_colouring(g, a, {0, 2}, true), InputError);
    EXPECT_THROW(is_valid_colouring(g, a, {0}, true), InputError);
}

TEST(Validate, RejectsBadAssignments) {
    PlaneGraph g = edge_graph();
    EXPECT_THROW(validate(g, {{2, 2}, {{{0, 2}}}}), InputError);          // out of range
    EXPECT_THROW(validate(g, {{2, 2}, {{{0, 0}, {0, 1}}}}), InputError);  // not a matching
    EXPECT_THROW(validate(g, {{2}, {{}}}), InputError);                   // list count
    EXPECT_THROW(validate(g, {{2, 2}, {}}), InputError);                  // matching count
}

TEST(Corresponds, Examples) {
    PlaneGraph g = edge_graph();  // u = 0, v = 1
    CorrespondenceAssignment a{{3, 3}, {{{2, 0}}}};
    EXPECT_EQ(corresponds(g, a, 0, 1, 0), 2);
    EXPECT_EQ(corresponds(g, a, 0, 1, 1), std::nullopt);
    auto id = identity_matchings(g, 5);
    EXPECT_EQ(corresponds(g, id, 0, 1, 3), 3);
    EXPECT_THROW(corresponds(wheel(5), CorrespondenceAssignment::empty(wheel(5), 5), 0, 2, 0), InputError);
}

TEST(Corresponds, Symmetric) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        PlaneGraph g = random_triangulation(8, 10, seed);
        auto a = random_sparse(g, seed);
        for (const Edge& e : g.edges())
            for (int c = 0; c < a.list_sizes[e.v]; ++c) {
                auto d = corresponds(g, a, e.u, e.v, c);
                if (d) {
                    EXPECT_EQ(corresponds(g, a, e.v, e.u, *d), c);
                }
            }
        for (const Edge& e : g.edges())
            for (int d = 0; d < a.list_sizes[e.u]; ++d) {
                auto c = corresponds(g, a, e.v, e.u, d);
                if (c) {
                    EXPECT_EQ(corresponds(g, a, e.u, e.v, *c), d);
                }
            }
    }
}

TEST(Residual, ThreeDistinctCorrespondencesLeaveTwo) {
    PlaneGraph g = wheel(5);  // hub 5
    auto a = CorrespondenceAssignment::empty(g, 5);
    // rim 0, 1, 2 coloured 0; their partners at the hub are 1, 2, 3.
    a.matchings[*g.find_edge(0, 5)] = {{0, 1}};
    a.matchings[*g.find_edge(1, 5)] = {{0, 2}};
    a.matchings[*g.find_edge(2, 5)] = {{0, 3}};
    Colouring phi(6, kUncoloured);
    phi[0] = phi[1] = phi[2] = 0;
    auto s = residual_lists(g, a, phi);
    EXPECT_EQ(s[5], (std::vector<int>{0, 4}));
    EXPECT_EQ(s[0], (std::vector<int>{0}));
}

TEST(Residual, NoColouredNeighboursKeepsEverything) {
    PlaneGraph g = wheel(5);
    auto a = identity_matchings(g, 5);
    auto s = residual_lists(g, a, Colouring(6, kUncoloured));
    EXPECT_EQ(s[5].size(), 5u);
}

TEST(Residual, UnmatchedColourRemovesNothing) {
    PlaneGraph g = edge_graph();
    CorrespondenceAssignment a{{5, 5}, {{{1, 1}}}};
    auto s = residual_lists(g, a, {0, kUncoloured});
    EXPECT_EQ(s[1].size(), 5u);
}

TEST(Residual, SizeBoundAndEqualityCase) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        PlaneGraph g = random_triangulation(9, 12, seed);
        auto a = random_sparse(g, seed, 2, 6);
        SplitMix64 rng(seed + 99);
        Colouring phi(g.num_vertices(), kUncoloured);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (rng.chance(1, 2)) phi[v] = rng.below_int(a.list_sizes[v]);
        auto s = residual_lists(g, a, phi);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (phi[v] != kUncoloured) continue;
            int coloured = 0;
            std::set<int> partners;
            bool all_exist = true;
            for (Vertex u : g.rotation(v)) {
                if (phi[u] == kUncoloured) continue;
                ++coloured;
                auto c = corresponds(g, a, v, u, phi[u]);
                if (c) partners.insert(*c);
                else all_exist = false;
            }
            const int k = a.list_sizes[v];
            EXPECT_GE(static_cast<int>(s[v].size()), k - coloured);
            bool distinct = all_exist && static_cast<int>(partners.size()) == coloured;
            EXPECT_EQ(static_cast<int>(s[v].size()) == k - coloured, distinct);
        }
    }
}

TEST(Saturate, Examples) {
    PlaneGraph g = edge_graph();
    auto five = saturate_matchings(g, CorrespondenceAssignment::empty(g, 5));
    EXPECT_EQ(five.matchings[0].size(), 5u);
    EXPECT_EQ(saturate_matchings(g, five), five);
    auto mixed = saturate_matchings(g, {{2, 5}, {{}}});
    EXPECT_EQ(mixed.matchings[0], (std::vector<ColourPair>{{0, 0}, {1, 1}}));
    auto partial = saturate_matchings(g, {{3, 3}, {{{0, 1}}}});
    EXPECT_EQ(partial.matchings[0], (std::vector<ColourPair>{{0, 1}, {1, 0}, {2, 2}}));
}

TEST(Saturate, NeverCreatesColourings) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        PlaneGraph g = random_triangulation(6, 8, seed);
        auto a = random_sparse(g, seed, 1, 3);
        auto sat = saturate_matchings(g, a);
        validate(g, sat);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            EXPECT_EQ(static_cast<int>(sat.matchings[e].size()),
                      std::min(a.list_sizes[g.edge(e).u], a.list_sizes[g.edge(e).v]));
            for (auto p : a.matchings[e])
                EXPECT_TRUE(std::find(sat.matchings[e].begin(), sat.matchings[e].end(), p) != sat.matchings[e].end());
        }
        Colouring none(g.num_vertices(), kUncoloured);
        if (naive_extends(g, sat, none)) {
            EXPECT_TRUE(naive_extends(g, a, none));
        }
    }
}

TEST(FromLists, Examples) {
    PlaneGraph g = edge_graph();
    auto same = from_list_assignment(g, {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}});
    EXPECT_EQ(same.matchings[0].size(), 5u);
    auto one = from_list_assignment(g, {{1, 2}, {2, 3}});
    EXPECT_EQ(one.matchings[0], (std::vector<ColourPair>{{1, 0}}));
    auto none = from_list_assignment(g, {{1, 2}, {3, 4}});
    EXPECT_TRUE(none.matchings[0].empty());
    EXPECT_THROW(from_list_assignment(g, {{1, 1}, {2}}), InputError);
}

TEST(FromLists, ProperListColouringIffValidCorrespondence) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        PlaneGraph g = random_triangulation(6, 6, seed);
        SplitMix64 rng(seed);
        std::vector<std::vector<int>> lists(g.num_vertices());
        for (auto& l : lists) {
            std::vector<int> pal{0, 1, 2, 3, 4};
            rng.shuffle(pal);
            pal.resize(1 + rng.below_int(3));
            l = pal;
        }
        auto a = from_list_assignment(g, lists);
        // Walk every index vector.
        Colouring phi(g.num_vertices(), 0);
        while (true) {
            bool proper = true;
            for (const Edge& e : g.edges())
                if (lists[e.u][phi[e.u]] == lists[e.v][phi[e.v]]) proper = false;
            EXPECT_EQ(proper, is_valid_colouring(g, a, phi, true));
            int i = 0;
            while (i < g.num_vertices() && ++phi[i] == static_cast<int>(lists[i].size())) phi[i++] = 0;
            if (i == g.num_vertices()) break;
        }
    }
}

TEST(RandomAssignment, DensityZeroAndOne) {
    PlaneGraph g = random_triangulation(10, 10, 4);
    auto empty = random_assignment(g, std::vector<int>(10, 4), Rational(0), 1);
    for (const auto& m : empty.matchings) EXPECT_TRUE(m.empty());
    auto full = random_assignment(g, std::vector<int>(10, 4), Rational(1), 1);
    for (const auto& m : full.matchings) EXPECT_EQ(m.size(), 4u);
    validate(g, full);
    EXPECT_THROW(random_assignment(g, std::vector<int>(10, 4), Rational(3, 2), 1), InputError);
}

TEST(RandomAssignment, Deterministic) {
    PlaneGraph g = random_triangulation(10, 10, 4);
    auto x = random_assignment(g, std::vector<int>(10, 5), Rational(1, 2), 77);
    auto y = random_assignment(g, std::vector<int>(10, 5), Rational(1, 2), 77);
    auto z = random_assignment(g, std::vector<int>(10, 5), Rational(1, 2), 78);
    EXPECT_EQ(x, y);
    EXPECT_NE(x, z);
}

TEST(SplitMix, ReferenceValues) {
    // First outputs for seed 0, from the published reference implementation.
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}
