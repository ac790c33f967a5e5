#include "denergy/bounds.hpp"
#include "denergy/rng.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace denergy;

namespace {

BoundParams regular(std::size_t n, std::size_t r, std::optional<double> lel_base = std::nullopt)
{
    return {BaseParams::regular(n, n * r / 2, r), lel_base};
}

BoundParams semiregular(std::size_t n, std::size_t r1, std::size_t r2)
{
    return {BaseParams::semiregular(n, n * r1 * r2 / (r1 + r2), r1, r2), std::nullopt};
}

double value(BoundId id, const BoundParams& p)
{
    const auto res = evaluate_bound(id, p);
    EXPECT_TRUE(res.applicable) << to_string(id) << ": " << res.reason;
    return res.value;
}

double exact(const Graph& g, Target t, InvariantName inv)
{
    Graph h = g;
    if (t == Target::RGraph) {
        h = r_graph(g);
    } else if (t == Target::QGraph) {
        h = q_graph(g);
    } else if (t == Target::LineGraph) {
        h = line_graph(g);
    }
    return inv == InvariantName::LEL ? lel(laplacian_spectrum(h)).value : ie(signless_laplacian_spectrum(h)).value;
}

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s5 = std::sqrt(5.0);

} // namespace

TEST(Registry, NamesAreUniqueAndRoundTrip)
{
    const auto reg = bound_registry();
    EXPECT_EQ(reg.size(), 22u);
    std::set<std::string_view> names;
    for (const auto& info : reg) {
        names.insert(info.name);
        EXPECT_EQ(bound_id_from_string(info.name), info.id);
        EXPECT_EQ(&bound_info(info.id), &info);
        EXPECT_FALSE(info.formula.empty());
    }
    EXPECT_EQ(names.size(), 22u);
    EXPECT_FALSE(bound_id_from_string("THM99_UPPER"));
}

TEST(ApplicableBounds, RegistryLookup)
{
    const RegularityClass reg3{Regular{3}, true};
    const auto r_lel = applicable_bounds(reg3, Target::RGraph, InvariantName::LEL);
    const std::set<BoundId> want{BoundId::Thm31Upper,  BoundId::Thm31Lower,    BoundId::Cor32Upper,
                                 BoundId::Cor32Lower,  BoundId::PirzadaRUpper, BoundId::PirzadaRLower};
    EXPECT_EQ(std::set<BoundId>(r_lel.begin(), r_lel.end()), want);
    EXPECT_EQ(r_lel.size(), 6u);

    const RegularityClass semi{Semiregular{3, 2, {}, {}}, true};
    const auto line_ie = applicable_bounds(semi, Target::LineGraph, InvariantName::IE);
    EXPECT_EQ(std::set<BoundId>(line_ie.begin(), line_ie.end()),
              (std::set<BoundId>{BoundId::WangYangLineUpper, BoundId::Thm43Lower}));

    EXPECT_TRUE(applicable_bounds(RegularityClass{Irregular{}, true}, Target::RGraph, InvariantName::LEL).empty());
    EXPECT_TRUE(applicable_bounds(reg3, Target::LineGraph, InvariantName::LEL).empty());
    EXPECT_EQ(applicable_bounds(reg3, Target::BaseGraph, InvariantName::LEL).size(), 2u);
    EXPECT_EQ(applicable_bounds(reg3, Target::QGraph, InvariantName::IE).size(), 2u);
}

TEST(EvaluateBound, SpotValues)
{
    const auto lemma = evaluate_bound(BoundId::Lemma23Lower, regular(3, 2));
    EXPECT_NEAR(lemma.value, 2 * s3, 1e-12);
    EXPECT_TRUE(lemma.equality_expected);
    EXPECT_EQ(lemma.side, Side::Lower);

    EXPECT_NEAR(value(BoundId::Thm31Upper, regular(3, 2, 2 * s3)), 2 + 2 * std::sqrt(13.0), 1e-12);
    EXPECT_NEAR(value(BoundId::Thm31Lower, regular(3, 2, 2 * s3)), 2 + 4 * s3, 1e-12);
    EXPECT_NEAR(value(BoundId::Thm35Lower, semiregular(5, 3, 2)), 2 * s5 + 3 * std::sqrt(65.0 / 12 - 4), 1e-12);
    EXPECT_NEAR(value(BoundId::PirzadaRUpper, regular(3, 2)), 2 + 2 * (std::sqrt(6.0) + s2), 1e-12);
    EXPECT_NEAR(value(BoundId::Thm41Upper, regular(3, 2)),
                std::sqrt(8 + 4 * s2) + 2 * std::sqrt(5 + 2 * s5), 1e-12);
    // k - n + 1 = 2, s = 5: 2 sqrt(1) + sqrt(6) + 3 sqrt(25/12 + 4 - 4)
    EXPECT_NEAR(value(BoundId::Thm43Lower, semiregular(5, 3, 2)), 2 + std::sqrt(6.0) + 3 * std::sqrt(25.0 / 12),
                1e-12);
}

TEST(EvaluateBound, CoefficientVanishesAtDegreeTwo)
{
    // n(r-2)/2 = 0 for cycles, so the repeated-eigenvalue term drops out.
    EXPECT_NEAR(value(BoundId::PirzadaRLower, regular(7, 2)), 7 * 2.0, 1e-12);
    EXPECT_NEAR(value(BoundId::PirzadaQLower, regular(7, 2)), 7 * 2.0, 1e-12);
}

TEST(EvaluateBound, Errors)
{
    EXPECT_THROW_CODE(evaluate_bound(BoundId::Thm31Upper, regular(4, 3)), Errc::MissingInput);
    EXPECT_THROW_CODE(evaluate_bound(BoundId::Thm33Lower, regular(4, 3)), Errc::MissingInput);
    EXPECT_THROW_CODE(evaluate_bound(BoundId::Thm35Lower, regular(4, 3)), Errc::NotApplicable);
    EXPECT_THROW_CODE(evaluate_bound(BoundId::Thm41Upper, semiregular(5, 3, 2)), Errc::NotApplicable);
    EXPECT_THROW_CODE(evaluate_bound(BoundId::Cor32Upper, regular(4, 1)), Errc::NotApplicable);
    EXPECT_THROW_CODE(evaluate_bound(BoundId::Thm43Lower, semiregular(3, 2, 1)), Errc::NotApplicable);
}

TEST(EvaluateBound, EqualityExpectedOnlyForCompleteBase)
{
    for (const auto& info : bound_registry()) {
        if (info.regime != Regime::Regular) {
            continue;
        }
        const auto at_k5 = evaluate_bound(info.id, regular(5, 4, 10.0));
        EXPECT_EQ(at_k5.equality_expected, info.equality_at_complete) << info.name;
        const auto at_c5 = evaluate_bound(info.id, regular(5, 2, 5.0));
        EXPECT_FALSE(at_c5.equality_expected) << info.name;
    }
    const std::set<BoundId> expected{BoundId::Lemma23Lower, BoundId::Lemma23Upper, BoundId::Thm31Upper,
                                     BoundId::Thm33Upper,   BoundId::Thm41Upper,   BoundId::Thm42Upper,
                                     BoundId::Cor32Upper,   BoundId::Cor34Upper};
    for (const auto& info : bound_registry()) {
        EXPECT_EQ(info.equality_at_complete, expected.count(info.id) == 1) << info.name;
    }
}

TEST(EvaluateBound, NegativeRadicandIsInapplicable)
{
    // No integer parameters drive a radicand negative, but a nonsense LEL(G) does.
    const auto res = evaluate_bound(BoundId::Thm31Upper, regular(4, 3, -100.0));
    EXPECT_FALSE(res.applicable);
    EXPECT_TRUE(std::isnan(res.value));
    EXPECT_NE(res.reason.find("negative"), std::string::npos);
}

TEST(Sandwich, HoldsOnSuite)
{
    for (const auto& [name, g] : fixtures::suite_graphs()) {
        SCOPED_TRACE(name);
        const auto cls = classify(g);
        std::optional<BoundParams> params;
        if (cls.is_regular()) {
            const auto r = std::get<Regular>(cls.kind).degree;
            params = BoundParams{BaseParams::regular(g.order(), g.size(), r), lel(laplacian_spectrum(g)).value};
        } else {
            const auto& s = std::get<Semiregular>(cls.kind);
            params = BoundParams{BaseParams::semiregular(g.order(), g.size(), s.r1, s.r2), std::nullopt};
        }
        for (auto t : {Target::BaseGraph, Target::RGraph, Target::QGraph, Target::LineGraph}) {
            for (auto inv : {InvariantName::LEL, InvariantName::IE}) {
                const auto ids = applicable_bounds(cls, t, inv);
                if (ids.empty()) {
                    continue;
                }
                const double x = exact(g, t, inv);
                for (auto id : ids) {
                    const auto res = evaluate_bound(id, *params);
                    ASSERT_TRUE(res.applicable) << to_string(id);
                    const double slack = res.side == Side::Upper ? res.value - x : x - res.value;
                    EXPECT_GE(slack, -1e-9) << to_string(id) << " bound " << res.value << " exact " << x;
                }
            }
        }
    }
}

TEST(Equality, AtCompleteGraphs)
{
    for (std::size_t n = 3; n <= 7; ++n) {
        const auto g = generate(family::Complete{n});
        const auto params = regular(n, n - 1, lel(laplacian_spectrum(g)).value);
        int checked = 0;
        for (const auto& info : bound_registry()) {
            if (info.regime != Regime::Regular) {
                continue;
            }
            const auto res = evaluate_bound(info.id, params);
            if (res.equality_expected) {
                EXPECT_NEAR(res.value, exact(g, info.target, info.invariant), 1e-8) << info.name << " n=" << n;
                ++checked;
            }
        }
        EXPECT_EQ(checked, 8);
    }
}

TEST(Equality, MissedAwayFromCompleteGraphs)
{
    // Petersen is not complete; the upper bounds are strict there.
    const auto g = generate(family::Petersen{});
    const auto params = regular(10, 3, lel(laplacian_spectrum(g)).value);
    for (auto id : {BoundId::Thm31Upper, BoundId::Thm33Upper, BoundId::Thm41Upper, BoundId::Thm42Upper}) {
        const auto& info = bound_info(id);
        EXPECT_GT(value(id, params) - exact(g, info.target, info.invariant), 1e-6) << info.name;
    }
}

TEST(Strictness, LowerBoundsAtCompleteGraphs)
{
    for (std::size_t n = 3; n <= 7; ++n) {
        const auto g = generate(family::Complete{n});
        const auto params = regular(n, n - 1, lel(laplacian_spectrum(g)).value);
        const double x = exact(g, Target::RGraph, InvariantName::LEL);
        EXPECT_GT(x - value(BoundId::Thm31Lower, params), 1e-9) << n;
        EXPECT_GT(x - value(BoundId::Cor32Lower, params), 1e-9) << n;
    }
}

TEST(Improvement, CorollariesBeatEarlierBounds)
{
    int cells = 0;
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t r = 2; r <= std::min<std::size_t>(n - 1, 6); ++r) {
            if (n * r % 2 != 0) {
                continue;
            }
            const auto p = regular(n, r);
            EXPECT_LE(value(BoundId::Cor32Upper, p), value(BoundId::PirzadaRUpper, p) + 1e-9) << n << "," << r;
            EXPECT_GE(value(BoundId::Cor32Lower, p), value(BoundId::PirzadaRLower, p) - 1e-9) << n << "," << r;
            EXPECT_LE(value(BoundId::Cor34Upper, p), value(BoundId::PirzadaQUpper, p) + 1e-9) << n << "," << r;
            EXPECT_GE(value(BoundId::Cor34Lower, p), value(BoundId::PirzadaQLower, p) - 1e-9) << n << "," << r;
            ++cells;
        }
    }
    EXPECT_GT(cells, 30);
    EXPECT_NEAR(value(BoundId::Cor32Upper, regular(3, 2)), 2 + 2 * std::sqrt(13.0), 1e-12);
}

TEST(Ozeki, EqualityInstance)
{
    const auto out = ozeki_check({{1, 2}, {2, 1}, 1, 2, 1, 2}, false);
    EXPECT_EQ(out.lhs, 9.0);
    EXPECT_EQ(out.rhs, 9.0);
    EXPECT_TRUE(out.holds);
}

TEST(Ozeki, ConstantTuples)
{
    const auto out = ozeki_check({{3, 3, 3}, {3, 3, 3}, 1, 4, 2, 5}, false);
    EXPECT_EQ(out.lhs, 0.0);
    EXPECT_TRUE(out.holds);
}

TEST(Ozeki, RandomInstances)
{
    SplitMix64 rng(2024);
    int refined_checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = 1 + rng.below(16);
        const double p = 0.01 + 5 * rng.uniform01();
        const double P = p + 10 * rng.uniform01();
        const double q = 0.01 + 5 * rng.uniform01();
        const double Q = q + 10 * rng.uniform01();
        OzekiInstance inst{{}, {}, p, P, q, Q};
        for (std::size_t i = 0; i < n; ++i) {
            inst.a.push_back(p + (P - p) * rng.uniform01());
            inst.b.push_back(q + (Q - q) * rng.uniform01());
        }
        const auto out = ozeki_check(inst, false);
        EXPECT_TRUE(out.holds) << trial << ": " << out.lhs << " > " << out.rhs;
        if (refinement_applies(p, P, q, Q)) {
            EXPECT_TRUE(ozeki_check(inst, true).holds);
            ++refined_checked;
        }
    }
    EXPECT_GT(refined_checked, 50);
}

TEST(Ozeki, RefinedWithZeroLowerBound)
{
    // The configuration used for the semiregular line-graph bound: a in
    // [0, sqrt(r1 + r2)], b = 1.
    const double P = std::sqrt(5.0);
    EXPECT_TRUE(refinement_applies(0, P, 1, 1));
    SplitMix64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        OzekiInstance inst{{}, {}, 0, P, 1, 1};
        for (std::size_t i = 0, n = 1 + rng.below(16); i < n; ++i) {
            inst.a.push_back(P * rng.uniform01());
            inst.b.push_back(1);
        }
        EXPECT_TRUE(ozeki_check(inst, true).holds);
    }
}

TEST(Ozeki, Errors)
{
    EXPECT_THROW_CODE(ozeki_check({{1, 3}, {1, 1}, 1, 2, 1, 2}, false), Errc::BoundsViolated);
    EXPECT_THROW_CODE(ozeki_check({{1, 2}, {0.5, 1}, 1, 2, 1, 2}, false), Errc::BoundsViolated);
    EXPECT_THROW_CODE(ozeki_check({{0, 1}, {1, 1}, 0, 2, 1, 1}, false), Errc::BoundsViolated);
    EXPECT_THROW_CODE(ozeki_check({{0, 1}, {0, 1}, 0, 2, 0, 2}, true), Errc::RefinementInapplicable);
    EXPECT_THROW_CODE(ozeki_check({{1}, {1, 1}, 1, 2, 1, 2}, false), Errc::InvalidArgument);
}
