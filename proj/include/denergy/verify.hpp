#pragma once

#include "denergy/bounds.hpp"
#include "denergy/family.hpp"
#include "denergy/graph.hpp"
#include "denergy/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace denergy {

enum class FindingKind { Violation, EqualityAchieved, EqualityMissed, Inapplicable, ConsistencyFailure };

std::string_view to_string(FindingKind kind) noexcept;

struct Finding {
    FindingKind kind;
    /// Bound id, map name or standing assumption the finding is about.
    std::string subject;
    std::string detail;
};

/// Slack is bound - exact for upper bounds and exact - bound for lower bounds,
/// so a negative slack always means the claimed inequality failed.
struct EvaluatedBound {
    BoundResult result;
    double slack;
    bool equality_achieved;
};

struct ReportRow {
    Target target;
    InvariantName invariant;
    double exact_direct;
    /// Absent for the base-graph row, which has no closed-form route.
    std::optional<double> exact_closed;
    std::vector<EvaluatedBound> bounds;
};

struct BoundReport {
    std::string graph_label;
    RegularityClass cls;
    std::vector<ReportRow> rows;
    std::vector<Finding> findings;

    std::size_t count(FindingKind kind) const;
};

struct VerifyOptions {
    double tol = 1e-9;             // violation threshold on slack
    double equality_tol = 1e-8;    // |slack| at or below this counts as equality
    double consistency_tol = 1e-7; // direct vs closed-form invariant
    double map_tol = 1e-8;         // direct vs closed-form spectra
    double eigen_tol = kDefaultEigenTol;
};

BoundReport bound_report(const Graph& g, const std::string& label, const VerifyOptions& opts = {});

struct MapDeviation {
    std::string map; // rgraph_l, rgraph_q, qgraph_l, qgraph_q, line_l, line_q
    double max_deviation;
};

/// Closed-form vs eigensolver spectra of every derived-graph map that applies
/// to g: the four R/Q maps when g is regular, the two line-graph maps when g
/// is connected semiregular and not a star. Throws InapplicableMap otherwise.
std::vector<MapDeviation> consistency_check(const Graph& g, double eigen_tol = kDefaultEigenTol);

/// Largest elementwise gap between two multisets after sorting both.
/// Throws BadLength on a size mismatch.
double multiset_deviation(const DenseVector<double>& a, const DenseVector<double>& b);

struct SweepEntry {
    std::string label;
    std::optional<BoundReport> report;
    std::vector<MapDeviation> deviations;
    /// Generation or evaluation failure; the entry then has no report.
    std::optional<std::string> error;
};

struct SlackStats {
    std::size_t count = 0;
    double min = 0;
    double median = 0;
};

struct SweepSummary {
    std::size_t total_graphs = 0;
    std::size_t failed_specs = 0;
    std::size_t violations = 0;
    std::size_t equality_hits = 0;
    std::size_t equality_misses = 0;
    std::size_t consistency_failures = 0;
    std::size_t map_failures = 0;
    double max_map_deviation = 0;
    /// Keyed by bound name so serialisation order is fixed.
    std::map<std::string, SlackStats> slack;
    double runtime_seconds = 0;
};

struct SweepResult {
    std::vector<SweepEntry> entries; // sorted by label
    SweepSummary summary;

    bool passed() const noexcept;
};

/// Runs bound_report and consistency_check over every spec. Work is split
/// across threads by index, so the result does not depend on scheduling.
SweepResult sweep(const std::vector<FamilySpec>& specs, const VerifyOptions& opts = {}, unsigned threads = 1);

/// A family spec still to be generated, or a labelled graph already in hand
/// (e.g. read from a file).
using SweepItem = std::variant<FamilySpec, std::pair<std::string, Graph>>;

SweepResult sweep(const std::vector<SweepItem>& items, const VerifyOptions& opts = {}, unsigned threads = 1);

} // namespace denergy
