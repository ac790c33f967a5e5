#include "denergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace denergy {

namespace {

using enum BoundId;
constexpr auto kLEL = InvariantName::LEL;
constexpr auto kIE = InvariantName::IE;

// clang-format off
constexpr BoundInfo kRegistry[] = {
    {Lemma23Lower, "LEMMA23_LOWER", kLEL, Target::BaseGraph, Side::Lower, Regime::Regular, false, true,
     "n*r/sqrt(r+1)"},
    {Lemma23Upper, "LEMMA23_UPPER", kLEL, Target::BaseGraph, Side::Upper, Regime::Regular, false, true,
     "sqrt(r+1) + sqrt((n-2)(n*r-r-1))"},
    {Thm31Upper, "THM31_UPPER", kLEL, Target::RGraph, Side::Upper, Regime::Regular, true, true,
     "c*sqrt(2) + sqrt(r+2) + (n-1)*sqrt(r+2 + n*r/(n-1) + 2*sqrt(3)/(n-1)*LEL(G))"},
    {Thm31Lower, "THM31_LOWER", kLEL, Target::RGraph, Side::Lower, Regime::Regular, true, false,
     "c*sqrt(2) + sqrt(r+2) + (n-1)*sqrt(3(r+2)/4 + n*r/(n-1) + 2*sqrt(3)/(n-1)*LEL(G))"},
    {Cor32Upper, "COR32_UPPER", kLEL, Target::RGraph, Side::Upper, Regime::Regular, false, true,
     "THM31_UPPER with LEL(G) replaced by LEMMA23_UPPER"},
    {Cor32Lower, "COR32_LOWER", kLEL, Target::RGraph, Side::Lower, Regime::Regular, false, false,
     "THM31_LOWER with LEL(G) replaced by LEMMA23_LOWER"},
    {PirzadaRLower, "PIRZADA_R_LOWER", kLEL, Target::RGraph, Side::Lower, Regime::Regular, false, false,
     "c*sqrt(2) + n*sqrt(r+2)"},
    {PirzadaRUpper, "PIRZADA_R_UPPER", kLEL, Target::RGraph, Side::Upper, Regime::Regular, false, false,
     "c*sqrt(2) + sqrt(r+2) + (n-1)(sqrt(3r) + sqrt(2))"},
    {Thm33Upper, "THM33_UPPER", kLEL, Target::QGraph, Side::Upper, Regime::Regular, true, true,
     "c*sqrt(2r+2) + sqrt(r+2) + (n-1)*sqrt(r+2 + n*r/(n-1) + 2*sqrt(r+1)/(n-1)*LEL(G))"},
    {Thm33Lower, "THM33_LOWER", kLEL, Target::QGraph, Side::Lower, Regime::Regular, true, false,
     "c*sqrt(2r+2) + sqrt(r+2) + (n-1)*sqrt(r+2 + n*r/(n-1) - 3r/4 + 2*sqrt(r+1)/(n-1)*LEL(G))"},
    {Cor34Upper, "COR34_UPPER", kLEL, Target::QGraph, Side::Upper, Regime::Regular, false, true,
     "THM33_UPPER with LEL(G) replaced by LEMMA23_UPPER"},
    {Cor34Lower, "COR34_LOWER", kLEL, Target::QGraph, Side::Lower, Regime::Regular, false, false,
     "c*sqrt(2r+2) + sqrt(r+2) + (n-1)*sqrt((3n/(n-1) + 1/4)*r + 2)"},
    {PirzadaQLower, "PIRZADA_Q_LOWER", kLEL, Target::QGraph, Side::Lower, Regime::Regular, false, false,
     "c*sqrt(2r+2) + n*sqrt(r+2)"},
    {PirzadaQUpper, "PIRZADA_Q_UPPER", kLEL, Target::QGraph, Side::Upper, Regime::Regular, false, false,
     "(n-1)*sqrt(r) + sqrt(r+2) + (n*r-2)*sqrt(2r+2)/2"},
    {PirzadaLineUpper, "PIRZADA_LINE_UPPER", kLEL, Target::LineGraph, Side::Upper, Regime::Semiregular, false, false,
     "(k-n+1)*sqrt(s) + (n-2)*sqrt((n-1)/(n-2)*s - 2n*r1*r2/((n-2)s))"},
    {Thm35Lower, "THM35_LOWER", kLEL, Target::LineGraph, Side::Lower, Regime::Semiregular, false, false,
     "(k-n+1)*sqrt(s) + (n-2)*sqrt((3n-2)/(4n-8)*s - 2n*r1*r2/((n-2)s))"},
    {Thm41Upper, "THM41_UPPER", kIE, Target::RGraph, Side::Upper, Regime::Regular, false, true,
     "c*sqrt(2) + sqrt(3r+2+4*sqrt(r)) + (n-1)*sqrt((2n-3)/(n-1)*r + 2*sqrt((3n-4)/(n-1)*r) + 2)"},
    {Thm41Lower, "THM41_LOWER", kIE, Target::RGraph, Side::Lower, Regime::Regular, false, false,
     "c*sqrt(2) + sqrt(3r+2+4*sqrt(r)) + (n-1)*sqrt(((2n-3)/(n-1) - (2-sqrt(3))/2)*r"
     " + 2*sqrt(((3n-4)/(n-1) - (3-2*sqrt(2))/2)*r) + 2)"},
    {Thm42Upper, "THM42_UPPER", kIE, Target::QGraph, Side::Upper, Regime::Regular, false, true,
     "c*sqrt(2r-2) + sqrt(5r-2+4*sqrt(r(r-1))) + (n-1)*sqrt((4n-5)/(n-1)*r + 2*sqrt((3n-4)/(n-1)*r(r-1)) - 2)"},
    {Thm42Lower, "THM42_LOWER", kIE, Target::QGraph, Side::Lower, Regime::Regular, false, false,
     "c*sqrt(2r-2) + sqrt(5r-2+4*sqrt(r(r-1))) + (n-1)*sqrt(((4n-5)/(n-1) - 1/4)*r"
     " + 2*sqrt(((3n-4)/(n-1) - (3-2*sqrt(2))/2)*r(r-1)) - 2)"},
    {WangYangLineUpper, "WANGYANG_LINE_UPPER", kIE, Target::LineGraph, Side::Upper, Regime::Semiregular, false, false,
     "(k-n+1)*sqrt(s-4) + sqrt(2s-4) + (n-2)*sqrt((n-3)/(n-2)*s + 2n*r1*r2/((n-2)s) - 4)"},
    {Thm43Lower, "THM43_LOWER", kIE, Target::LineGraph, Side::Lower, Regime::Semiregular, false, false,
     "(k-n+1)*sqrt(s-4) + sqrt(2s-4) + (n-2)*sqrt((3n-10)/(4n-8)*s + 2n*r1*r2/((n-2)s) - 4)"},
};
// clang-format on

// Records the first negative radicand instead of producing NaN.
struct Radicals {
    bool ok = true;
    std::string reason;

    double operator()(double x, const char* what)
    {
        if (x < 0.0) {
            if (x > -1e-12) {
                return 0.0;
            }
            if (ok) {
                ok = false;
                char buf[96];
                std::snprintf(buf, sizeof buf, "radicand %s is negative (%.6g)", what, x);
                reason = buf;
            }
            return std::numeric_limits<double>::quiet_NaN();
        }
        return std::sqrt(x);
    }
};

double lemma23_lower(double n, double r)
{
    return n * r / std::sqrt(r + 1);
}

double lemma23_upper(double n, double r)
{
    return std::sqrt(r + 1) + std::sqrt((n - 2) * (n * r - r - 1));
}

double regular_value(BoundId id, double n, double r, double lel, Radicals& rt)
{
    const double c = n * (r - 2) / 2; // m - n
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);

    auto thm31 = [&](double lead, double lel_g) {
        return c * s2 + rt(r + 2, "r+2") +
               (n - 1) * rt(lead + n * r / (n - 1) + 2 * s3 / (n - 1) * lel_g, "R-graph LEL block");
    };
    auto thm33 = [&](double extra, double lel_g) {
        return c * rt(2 * r + 2, "2r+2") + rt(r + 2, "r+2") +
               (n - 1) * rt(r + 2 + n * r / (n - 1) + extra + 2 * rt(r + 1, "r+1") / (n - 1) * lel_g,
                            "Q-graph LEL block");
    };

    switch (id) {
    case Lemma23Lower: return lemma23_lower(n, r);
    case Lemma23Upper: return rt(r + 1, "r+1") + rt((n - 2) * (n * r - r - 1), "(n-2)(nr-r-1)");
    case Thm31Upper: return thm31(r + 2, lel);
    case Thm31Lower: return thm31(0.75 * (r + 2), lel);
    case Cor32Upper: return thm31(r + 2, lemma23_upper(n, r));
    case Cor32Lower: return thm31(0.75 * (r + 2), lemma23_lower(n, r));
    case PirzadaRLower: return c * s2 + n * rt(r + 2, "r+2");
    case PirzadaRUpper: return c * s2 + rt(r + 2, "r+2") + (n - 1) * (rt(3 * r, "3r") + s2);
    case Thm33Upper: return thm33(0.0, lel);
    case Thm33Lower: return thm33(-0.75 * r, lel);
    case Cor34Upper: return thm33(0.0, lemma23_upper(n, r));
    case Cor34Lower:
        return c * rt(2 * r + 2, "2r+2") + rt(r + 2, "r+2") +
               (n - 1) * rt((3 * n / (n - 1) + 0.25) * r + 2, "Q-graph LEL block");
    case PirzadaQLower: return c * rt(2 * r + 2, "2r+2") + n * rt(r + 2, "r+2");
    case PirzadaQUpper:
        return (n - 1) * rt(r, "r") + rt(r + 2, "r+2") + (n * r - 2) * rt(2 * r + 2, "2r+2") / 2;
    case Thm41Upper:
        return c * s2 + rt(3 * r + 2 + 4 * std::sqrt(r), "3r+2+4sqrt(r)") +
               (n - 1) * rt((2 * n - 3) / (n - 1) * r + 2 * rt((3 * n - 4) / (n - 1) * r, "inner") + 2,
                            "R-graph IE block");
    case Thm41Lower:
        return c * s2 + rt(3 * r + 2 + 4 * std::sqrt(r), "3r+2+4sqrt(r)") +
               (n - 1) * rt(((2 * n - 3) / (n - 1) - (2 - s3) / 2) * r +
                                2 * rt(((3 * n - 4) / (n - 1) - (3 - 2 * s2) / 2) * r, "inner") + 2,
                            "R-graph IE block");
    case Thm42Upper:
        return c * rt(2 * r - 2, "2r-2") + rt(5 * r - 2 + 4 * std::sqrt(r * (r - 1)), "5r-2+4sqrt(r(r-1))") +
               (n - 1) * rt((4 * n - 5) / (n - 1) * r + 2 * rt((3 * n - 4) / (n - 1) * r * (r - 1), "inner") - 2,
                            "Q-graph IE block");
    case Thm42Lower:
        return c * rt(2 * r - 2, "2r-2") + rt(5 * r - 2 + 4 * std::sqrt(r * (r - 1)), "5r-2+4sqrt(r(r-1))") +
               (n - 1) * rt(((4 * n - 5) / (n - 1) - 0.25) * r +
                                2 * rt(((3 * n - 4) / (n - 1) - (3 - 2 * s2) / 2) * r * (r - 1), "inner") - 2,
                            "Q-graph IE block");
    default: break;
    }
    throw Error(Errc::NotApplicable, std::string(to_string(id)) + " is not a regular-graph bound");
}

double semiregular_value(BoundId id, double n, double r1, double r2, Radicals& rt)
{
    const double s = r1 + r2;
    const double k = n * r1 * r2 / s; // number of edges of G
    const double cross = 2 * n * r1 * r2 / ((n - 2) * s);

    switch (id) {
    case PirzadaLineUpper:
        return (k - n + 1) * rt(s, "s") + (n - 2) * rt((n - 1) / (n - 2) * s - cross, "line LEL block");
    case Thm35Lower:
        return (k - n + 1) * rt(s, "s") + (n - 2) * rt((3 * n - 2) / (4 * n - 8) * s - cross, "line LEL block");
    case WangYangLineUpper:
        return (k - n + 1) * rt(s - 4, "s-4") + rt(2 * s - 4, "2s-4") +
               (n - 2) * rt((n - 3) / (n - 2) * s + cross - 4, "line IE block");
    case Thm43Lower:
        return (k - n + 1) * rt(s - 4, "s-4") + rt(2 * s - 4, "2s-4") +
               (n - 2) * rt((3 * n - 10) / (4 * n - 8) * s + cross - 4, "line IE block");
    default: break;
    }
    throw Error(Errc::NotApplicable, std::string(to_string(id)) + " is not a semiregular-graph bound");
}

} // namespace

std::span<const BoundInfo> bound_registry() noexcept
{
    return kRegistry;
}

const BoundInfo& bound_info(BoundId id)
{
    for (const auto& info : kRegistry) {
        if (info.id == id) {
            return info;
        }
    }
    throw Error(Errc::InvalidArgument, "unknown bound id");
}

std::string_view to_string(BoundId id)
{
    return bound_info(id).name;
}

std::optional<BoundId> bound_id_from_string(std::string_view name)
{
    for (const auto& info : kRegistry) {
        if (info.name == name) {
            return info.id;
        }
    }
    return std::nullopt;
}

BoundResult evaluate_bound(BoundId id, const BoundParams& params)
{
    const auto& info = bound_info(id);
    const auto& base = params.base;
    const auto n = static_cast<double>(base.n());

    Radicals rt;
    double value = 0.0;
    bool complete = false;

    if (info.regime == Regime::Regular) {
        if (!base.is_regular()) {
            throw Error(Errc::NotApplicable, std::string(info.name) + " needs a regular base graph");
        }
        if (base.r() < 2) {
            throw Error(Errc::NotApplicable, std::string(info.name) + " needs r >= 2");
        }
        if (info.needs_lel_base && !params.lel_base) {
            throw Error(Errc::MissingInput, std::string(info.name) + " needs LEL of the base graph");
        }
        complete = base.r() + 1 == base.n();
        value = regular_value(id, n, static_cast<double>(base.r()), params.lel_base.value_or(0.0), rt);
    } else {
        if (!base.is_semiregular()) {
            throw Error(Errc::NotApplicable, std::string(info.name) + " needs a semiregular base graph");
        }
        const auto [r1, r2] = base.r1_r2();
        if (r1 + r2 < 4) {
            throw Error(Errc::NotApplicable, std::string(info.name) + " needs r1 + r2 >= 4");
        }
        value = semiregular_value(id, n, static_cast<double>(r1), static_cast<double>(r2), rt);
    }

    BoundResult out{id, value, info.side, rt.ok, rt.reason, complete && info.equality_at_complete};
    if (rt.ok && !std::isfinite(value)) {
        out.applicable = false;
        out.reason = "value is not finite";
    }
    if (!out.applicable) {
        out.value = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

std::vector<BoundId> applicable_bounds(const RegularityClass& cls, Target target, InvariantName invariant)
{
    std::vector<BoundId> out;
    std::optional<Regime> regime;
    if (cls.is_regular()) {
        regime = Regime::Regular;
    } else if (cls.is_semiregular()) {
        regime = Regime::Semiregular;
    }
    if (!regime) {
        return out;
    }
    for (const auto& info : kRegistry) {
        if (info.regime == *regime && info.target == target && info.invariant == invariant) {
            out.push_back(info.id);
        }
    }
    return out;
}

bool refinement_applies(double a_min, double a_max, double b_min, double b_max)
{
    return (1 + a_min / a_max) * (1 + b_min / b_max) >= 2.0;
}

OzekiOutcome ozeki_check(const OzekiInstance& inst, bool refined, double tol)
{
    const auto& [a, b, p, P, q, Q] = inst;
    if (a.size() != b.size()) {
        throw Error(Errc::InvalidArgument, "tuples have different lengths");
    }
    if (p > P || q > Q) {
        throw Error(Errc::InvalidArgument, "empty box");
    }
    if (refined) {
        if (p < 0 || q < 0 || P * Q == 0) {
            throw Error(Errc::BoundsViolated, "refined form needs p, q >= 0 and PQ != 0");
        }
        if (!refinement_applies(p, P, q, Q)) {
            throw Error(Errc::RefinementInapplicable, "(1 + p/P)(1 + q/Q) < 2");
        }
    } else if (p <= 0 || q <= 0) {
        throw Error(Errc::BoundsViolated, "plain form needs p, q > 0");
    }

    double saa = 0, sbb = 0, sab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < p || a[i] > P || b[i] < q || b[i] > Q) {
            throw Error(Errc::BoundsViolated, "entry " + std::to_string(i) + " leaves its box");
        }
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
        sab += a[i] * b[i];
    }
    const double n = static_cast<double>(a.size());
    const double lhs = saa * sbb - sab * sab;
    const double gap = P * Q - p * q;
    const double rhs = 0.25 * n * n * gap * gap;
    return {lhs, rhs, lhs <= rhs + tol};
}

} // namespace denergy
