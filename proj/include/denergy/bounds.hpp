#pragma once

#include "denergy/closed_forms.hpp"
#include "denergy/graph.hpp"
#include "denergy/invariants.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace denergy {

/// Every bound the harness evaluates. Lemma/theorem/corollary members are the
/// new bounds; Pirzada* and WangYang* are the earlier bounds they are compared
/// against.
enum class BoundId {
    Lemma23Lower,
    Lemma23Upper,
    Thm31Upper,
    Thm31Lower,
    Cor32Upper,
    Cor32Lower,
    PirzadaRLower,
    PirzadaRUpper,
    Thm33Upper,
    Thm33Lower,
    Cor34Upper,
    Cor34Lower,
    PirzadaQLower,
    PirzadaQUpper,
    PirzadaLineUpper,
    Thm35Lower,
    Thm41Upper,
    Thm41Lower,
    Thm42Upper,
    Thm42Lower,
    WangYangLineUpper,
    Thm43Lower,
};

enum class Target { BaseGraph, RGraph, QGraph, LineGraph };
enum class Side { Upper, Lower };
enum class Regime { Regular, Semiregular };

constexpr std::string_view to_string(Target t) noexcept
{
    switch (t) {
    case Target::BaseGraph: return "base";
    case Target::RGraph: return "rgraph";
    case Target::QGraph: return "qgraph";
    case Target::LineGraph: return "line";
    }
    return "?";
}

constexpr std::string_view to_string(Side s) noexcept
{
    return s == Side::Upper ? "upper" : "lower";
}

struct BoundInfo {
    BoundId id;
    std::string_view name; // e.g. "THM31_UPPER"
    InvariantName invariant;
    Target target;
    Side side;
    Regime regime;
    bool needs_lel_base;
    /// Attained with equality exactly when the base graph is complete.
    bool equality_at_complete;
    std::string_view formula;
};

std::span<const BoundInfo> bound_registry() noexcept;
const BoundInfo& bound_info(BoundId id);
std::string_view to_string(BoundId id);
std::optional<BoundId> bound_id_from_string(std::string_view name);

struct BoundParams {
    BaseParams base;
    /// LEL of the base graph; THM31_* and THM33_* need it.
    std::optional<double> lel_base;
};

struct BoundResult {
    BoundId id;
    double value;
    Side side;
    /// False when the formula's radicand is negative, i.e. the bound is vacuous.
    bool applicable;
    std::string reason;
    bool equality_expected;
};

/// Evaluates the bound formula literally at params.
/// Throws MissingInput if lel_base is needed but absent, and NotApplicable if
/// the parameters are of the wrong regularity class or below r >= 2 /
/// r1 + r2 >= 4.
BoundResult evaluate_bound(BoundId id, const BoundParams& params);

/// Registry members for (class, target, invariant); empty for irregular graphs.
std::vector<BoundId> applicable_bounds(const RegularityClass& cls, Target target, InvariantName invariant);

// ---------------------------------------------------------------------------
// Ozeki's inequality and Izumino's refinement
//
//   sum a_i^2 * sum b_i^2 - (sum a_i b_i)^2 <= n^2 (PQ - pq)^2 / 4
//
// for p <= a_i <= P, q <= b_i <= Q. The plain form needs p, q > 0; the refined
// form allows p, q >= 0 with PQ != 0 provided (1 + p/P)(1 + q/Q) >= 2.

struct OzekiInstance {
    std::vector<double> a;
    std::vector<double> b;
    double a_min; // p
    double a_max; // P
    double b_min; // q
    double b_max; // Q
};

struct OzekiOutcome {
    double lhs;
    double rhs;
    bool holds;
};

/// Throws BoundsViolated when an entry leaves its box (or the plain form gets
/// a non-positive lower bound) and RefinementInapplicable when the refined
/// gate fails.
OzekiOutcome ozeki_check(const OzekiInstance& inst, bool refined, double tol = 1e-9);

/// Izumino's gate (1 + p/P)(1 + q/Q) >= 2.
bool refinement_applies(double a_min, double a_max, double b_min, double b_max);

} // namespace denergy
