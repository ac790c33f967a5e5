#include "denergy/family.hpp"
#include "denergy/rng.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace denergy;

TEST(SplitMix64, KnownSequence)
{
    // Reference outputs of SplitMix64 seeded with 1234567.
    SplitMix64 rng(1234567);
    EXPECT_EQ(rng(), 6457827717110365317ULL);
    EXPECT_EQ(rng(), 3203168211198807973ULL);
    EXPECT_EQ(rng(), 9817491932198370423ULL);
}

TEST(SplitMix64, BelowStaysInRange)
{
    SplitMix64 rng(7);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto x = rng.below(7);
        ASSERT_LT(x, 7u);
        ++hits[x];
    }
    for (int h : hits) {
        EXPECT_GT(h, 800);
    }
}

TEST(SplitMix64, ShuffleIsPermutation)
{
    SplitMix64 rng(3);
    std::vector<int> v(50);
    std::iota(v.begin(), v.end(), 0);
    auto w = v;
    rng.shuffle(w);
    EXPECT_NE(v, w);
    std::sort(w.begin(), w.end());
    EXPECT_EQ(v, w);
}

TEST(Generate, DeterministicFamilies)
{
    const auto k5 = generate(family::Complete{5});
    EXPECT_EQ(k5.size(), 10u);
    const auto c6 = generate(family::Cycle{6});
    EXPECT_EQ(c6.size(), 6u);
    EXPECT_TRUE(classify(c6).is_regular());
    const auto k34 = generate(family::CompleteBipartite{3, 4});
    EXPECT_EQ(k34.size(), 12u);
    EXPECT_TRUE(k34.adjacent(0, 3));
    EXPECT_FALSE(k34.adjacent(0, 1));
}

TEST(Generate, Petersen)
{
    const auto g = generate(family::Petersen{});
    EXPECT_EQ(g.order(), 10u);
    EXPECT_EQ(g.size(), 15u);
    const auto cls = classify(g);
    ASSERT_TRUE(cls.is_regular());
    EXPECT_EQ(std::get<Regular>(cls.kind).degree, 3u);
    // Girth 5: no triangles and no 4-cycles, so adjacent vertices share no
    // neighbour and non-adjacent ones share exactly one.
    for (Vertex u = 0; u < 10; ++u) {
        for (Vertex v = u + 1; v < 10; ++v) {
            int common = 0;
            for (Vertex w : g.neighbors(u)) {
                common += g.adjacent(w, v) ? 1 : 0;
            }
            EXPECT_EQ(common, g.adjacent(u, v) ? 0 : 1);
        }
    }
}

TEST(Generate, RandomRegularIsSimpleConnectedRegular)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (auto [n, r] : {std::pair<std::size_t, std::size_t>{12, 3}, {10, 4}, {9, 2}, {8, 3}}) {
            const auto g = generate(family::RandomRegular{n, r, seed});
            const auto cls = classify(g);
            ASSERT_TRUE(cls.is_regular());
            EXPECT_EQ(std::get<Regular>(cls.kind).degree, r);
            EXPECT_TRUE(cls.connected);
        }
    }
}

TEST(Generate, RandomRegularDependsOnlyOnSeed)
{
    EXPECT_EQ(generate(family::RandomRegular{12, 3, 5}), generate(family::RandomRegular{12, 3, 5}));
    EXPECT_NE(generate(family::RandomRegular{12, 3, 5}), generate(family::RandomRegular{12, 3, 6}));
}

TEST(Generate, RandomBiregular)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = generate(family::RandomBiregular{4, 6, 3, 2, seed});
        const auto cls = classify(g);
        ASSERT_TRUE(cls.is_semiregular());
        const auto& s = std::get<Semiregular>(cls.kind);
        EXPECT_EQ(s.r1, 3u);
        EXPECT_EQ(s.r2, 2u);
        EXPECT_EQ(s.part1, (std::vector<Vertex>{0, 1, 2, 3}));
        EXPECT_TRUE(cls.connected);
    }
}

TEST(Generate, InfeasibleSpecs)
{
    EXPECT_THROW_CODE(generate(family::Cycle{2}), Errc::InfeasibleSpec);
    EXPECT_THROW_CODE(generate(family::Complete{0}), Errc::InfeasibleSpec);
    EXPECT_THROW_CODE(generate(family::CompleteBipartite{0, 3}), Errc::InfeasibleSpec);
    EXPECT_THROW_CODE(generate(family::RandomRegular{7, 3, 1}), Errc::InfeasibleSpec);
    EXPECT_THROW_CODE(generate(family::RandomRegular{4, 4, 1}), Errc::InfeasibleSpec);
    EXPECT_THROW_CODE(generate(family::RandomBiregular{4, 5, 3, 2, 1}), Errc::InfeasibleSpec);
    EXPECT_THROW_CODE(generate(family::RandomBiregular{2, 3, 6, 4, 1}), Errc::InfeasibleSpec);
}

TEST(Generate, DenseSpecsExhaustTheRejectionSampler)
{
    // Whole-sample rejection rarely yields a simple 5-regular graph on 8
    // vertices; the cap is hit rather than a biased sampler substituted.
    EXPECT_THROW_CODE(generate(family::RandomRegular{8, 5, 1}), Errc::GenerationExhausted);
}

TEST(Generate, ExhaustionWhenNoConnectedSampleExists)
{
    // Every simple 1-regular graph on 4 vertices is a disconnected matching.
    EXPECT_THROW_CODE(generate(family::RandomRegular{4, 1, 1}), Errc::GenerationExhausted);
}

TEST(ParseFamily, LabelsRoundTrip)
{
    for (const auto& spec : standard_suite()) {
        const auto parsed = parse_family_specs(label(spec));
        ASSERT_EQ(parsed.size(), 1u);
        EXPECT_EQ(label(parsed.front()), label(spec));
    }
}

TEST(ParseFamily, RangesExpand)
{
    const auto specs = parse_family_specs("complete:3..7");
    ASSERT_EQ(specs.size(), 5u);
    EXPECT_EQ(label(specs.front()), "complete:3");
    EXPECT_EQ(label(specs.back()), "complete:7");

    const auto grid = parse_family_specs("random_regular:n=10,r=3..4,seed=1..2");
    ASSERT_EQ(grid.size(), 4u);
    EXPECT_EQ(label(grid[0]), "random_regular:n=10,r=3,seed=1");
    EXPECT_EQ(label(grid[1]), "random_regular:n=10,r=3,seed=2");
    EXPECT_EQ(label(grid[3]), "random_regular:n=10,r=4,seed=2");
}

TEST(ParseFamily, DefaultSeedAndLists)
{
    const auto specs = parse_family_specs("petersen; random_regular:12,3 ;cycle:n=4", 42);
    ASSERT_EQ(specs.size(), 3u);
    EXPECT_EQ(label(specs[1]), "random_regular:n=12,r=3,seed=42");
    EXPECT_EQ(label(specs[2]), "cycle:4");
}

TEST(ParseFamily, Standard)
{
    const auto specs = parse_family_specs("standard");
    EXPECT_EQ(specs.size(), 30u);
    std::set<std::string> labels;
    for (const auto& s : specs) {
        labels.insert(label(s));
    }
    EXPECT_EQ(labels.size(), 30u);
    EXPECT_TRUE(labels.count("random_biregular:n1=4,n2=6,r1=3,r2=2,seed=3"));
}

TEST(ParseFamily, Errors)
{
    for (const char* bad : {"", "wheel:5", "complete", "complete:x", "complete:5..3", "complete:3,4",
                            "random_regular:n=12", "cycle:k=4", "complete_bipartite:2", "petersen:3"}) {
        EXPECT_THROW_CODE(parse_family_specs(bad), Errc::ParseError);
    }
}
