#include "denergy/verify.hpp"

#include "denergy/closed_forms.hpp"
#include "denergy/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <thread>

namespace denergy {

std::string_view to_string(FindingKind kind) noexcept
{
    switch (kind) {
    case FindingKind::Violation: return "Violation";
    case FindingKind::EqualityAchieved: return "EqualityAchieved";
    case FindingKind::EqualityMissed: return "EqualityMissed";
    case FindingKind::Inapplicable: return "Inapplicable";
    case FindingKind::ConsistencyFailure: return "ConsistencyFailure";
    }
    return "?";
}

std::size_t BoundReport::count(FindingKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [kind](const Finding& f) { return f.kind == kind; }));
}

bool SweepResult::passed() const noexcept
{
    return summary.violations == 0 && summary.consistency_failures == 0 && summary.map_failures == 0;
}

namespace {

std::string fmt(const char* pattern, double a, double b)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::string subject(Target target, InvariantName inv, std::string_view what)
{
    return std::string(to_string(target)) + "/" + std::string(to_string(inv)) + "/" + std::string(what);
}

class ReportBuilder {
public:
    ReportBuilder(BoundReport& report, const VerifyOptions& opts)
        : report_(report), opts_(opts)
    {
    }

    void add_row(Target target, InvariantName inv, double direct, std::optional<double> closed,
                 const BoundParams& params)
    {
        ReportRow row{target, inv, direct, closed, {}};
        if (closed && !(std::abs(*closed - direct) <= opts_.consistency_tol)) {
            report_.findings.push_back({FindingKind::ConsistencyFailure, subject(target, inv, "closed_form"),
                                        fmt("direct %.12g vs closed form %.12g", direct, *closed)});
        }
        for (auto id : applicable_bounds(report_.cls, target, inv)) {
            const auto result = evaluate_bound(id, params);
            const auto name = subject(target, inv, to_string(id));
            EvaluatedBound eb{result, std::numeric_limits<double>::quiet_NaN(), false};
            if (!result.applicable) {
                report_.findings.push_back({FindingKind::Inapplicable, name, result.reason});
            } else {
                eb.slack = result.side == Side::Upper ? result.value - direct : direct - result.value;
                eb.equality_achieved = std::abs(eb.slack) <= opts_.equality_tol;
                if (eb.slack < -opts_.tol) {
                    report_.findings.push_back(
                        {FindingKind::Violation, name, fmt("bound %.12g, exact %.12g", result.value, direct)});
                }
            }
            if (result.equality_expected) {
                report_.findings.push_back({eb.equality_achieved ? FindingKind::EqualityAchieved
                                                                 : FindingKind::EqualityMissed,
                                            name, fmt("bound %.12g, exact %.12g", result.value, direct)});
            }
            row.bounds.push_back(std::move(eb));
        }
        report_.rows.push_back(std::move(row));
    }

    void inapplicable(std::string what, std::string detail)
    {
        report_.findings.push_back({FindingKind::Inapplicable, std::move(what), std::move(detail)});
    }

private:
    BoundReport& report_;
    const VerifyOptions& opts_;
};

} // namespace

BoundReport bound_report(const Graph& g, const std::string& label, const VerifyOptions& opts)
{
    BoundReport report{label, classify(g), {}, {}};
    ReportBuilder builder(report, opts);
    const auto tol = opts.eigen_tol;

    if (const auto* reg = std::get_if<Regular>(&report.cls.kind)) {
        if (reg->degree < 2) {
            builder.inapplicable("r >= 2", "regular of degree " + std::to_string(reg->degree));
            return report;
        }
        const auto p = BaseParams::regular(g.order(), g.size(), reg->degree);
        const auto ls = laplacian_spectrum<double>(g, tol);
        const auto qs = signless_laplacian_spectrum<double>(g, tol);
        const double lel_g = lel(ls).value;
        const BoundParams params{p, lel_g};

        builder.add_row(Target::BaseGraph, InvariantName::LEL, lel_g, std::nullopt, params);

        const auto rg = r_graph(g);
        builder.add_row(Target::RGraph, InvariantName::LEL, lel(laplacian_spectrum<double>(rg, tol)).value,
                        lel(rgraph_l_spectrum(ls, p), ValueSource::ClosedForm).value, params);
        builder.add_row(Target::RGraph, InvariantName::IE, ie(signless_laplacian_spectrum<double>(rg, tol)).value,
                        ie(rgraph_q_spectrum(qs, p), ValueSource::ClosedForm).value, params);

        const auto qg = q_graph(g);
        builder.add_row(Target::QGraph, InvariantName::LEL, lel(laplacian_spectrum<double>(qg, tol)).value,
                        lel(qgraph_l_spectrum(ls, p), ValueSource::ClosedForm).value, params);
        builder.add_row(Target::QGraph, InvariantName::IE, ie(signless_laplacian_spectrum<double>(qg, tol)).value,
                        ie(qgraph_q_spectrum(qs, p), ValueSource::ClosedForm).value, params);
        return report;
    }

    if (const auto* semi = std::get_if<Semiregular>(&report.cls.kind)) {
        if (!report.cls.connected) {
            builder.inapplicable("connected", "semiregular but disconnected");
            return report;
        }
        if (semi->r1 + semi->r2 < 4) {
            builder.inapplicable("r1 + r2 >= 4", "degrees " + std::to_string(semi->r1) + "," + std::to_string(semi->r2));
            return report;
        }
        if (g.size() < g.order()) {
            builder.inapplicable("not a star", "line-graph spectra need m >= n");
            return report;
        }
        const auto p = BaseParams::semiregular(g.order(), g.size(), semi->r1, semi->r2);
        const BoundParams params{p, std::nullopt};
        const auto lg = line_graph(g);
        builder.add_row(Target::LineGraph, InvariantName::LEL, lel(laplacian_spectrum<double>(lg, tol)).value,
                        lel(line_l_spectrum(laplacian_spectrum<double>(g, tol), p), ValueSource::ClosedForm).value,
                        params);
        builder.add_row(
            Target::LineGraph, InvariantName::IE, ie(signless_laplacian_spectrum<double>(lg, tol)).value,
            ie(line_q_spectrum(signless_laplacian_spectrum<double>(g, tol), p), ValueSource::ClosedForm).value,
            params);
        return report;
    }

    builder.inapplicable("regularity", "no bounds apply to a " + describe(report.cls) + " graph");
    return report;
}

double multiset_deviation(const DenseVector<double>& a, const DenseVector<double>& b)
{
    if (a.size() != b.size()) {
        throw Error(Errc::BadLength, "multisets of size " + std::to_string(a.size()) + " and " +
                                         std::to_string(b.size()));
    }
    DenseVector<double> x = a;
    DenseVector<double> y = b;
    std::sort(x.data(), x.data() + x.size());
    std::sort(y.data(), y.data() + y.size());
    return x.size() == 0 ? 0.0 : (x - y).cwiseAbs().maxCoeff();
}

std::vector<MapDeviation> consistency_check(const Graph& g, double eigen_tol)
{
    std::vector<MapDeviation> out;
    if (const auto p = regular_params(g)) {
        const auto ls = laplacian_spectrum<double>(g, eigen_tol);
        const auto qs = signless_laplacian_spectrum<double>(g, eigen_tol);
        const auto rg = r_graph(g);
        const auto qg = q_graph(g);
        out.push_back({"rgraph_l", multiset_deviation(rgraph_l_spectrum(ls, *p).values,
                                                      laplacian_spectrum<double>(rg, eigen_tol).values)});
        out.push_back({"rgraph_q", multiset_deviation(rgraph_q_spectrum(qs, *p).values,
                                                      signless_laplacian_spectrum<double>(rg, eigen_tol).values)});
        out.push_back({"qgraph_l", multiset_deviation(qgraph_l_spectrum(ls, *p).values,
                                                      laplacian_spectrum<double>(qg, eigen_tol).values)});
        out.push_back({"qgraph_q", multiset_deviation(qgraph_q_spectrum(qs, *p).values,
                                                      signless_laplacian_spectrum<double>(qg, eigen_tol).values)});
        return out;
    }
    const auto p = semiregular_params(g);
    if (!p || !is_connected(g)) {
        throw Error(Errc::InapplicableMap, "no closed-form map applies to a " + describe(classify(g)) + " graph");
    }
    const auto lg = line_graph(g);
    out.push_back({"line_l", multiset_deviation(line_l_spectrum(laplacian_spectrum<double>(g, eigen_tol), *p).values,
                                                laplacian_spectrum<double>(lg, eigen_tol).values)});
    out.push_back(
        {"line_q", multiset_deviation(line_q_spectrum(signless_laplacian_spectrum<double>(g, eigen_tol), *p).values,
                                      signless_laplacian_spectrum<double>(lg, eigen_tol).values)});
    return out;
}

namespace {

using Job = std::function<std::pair<std::string, Graph>()>;

SweepEntry run_one(const Job& job, const VerifyOptions& opts)
{
    SweepEntry entry;
    try {
        auto [label, g] = job();
        entry.label = label;
        entry.report = bound_report(g, label, opts);
        try {
            entry.deviations = consistency_check(g, opts.eigen_tol);
        } catch (const Error& e) {
            if (e.code() != Errc::InapplicableMap) {
                throw;
            }
        }
    } catch (const Error& e) {
        entry.report.reset();
        entry.deviations.clear();
        entry.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    return entry;
}

double median_of(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const auto mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

SweepResult run_jobs(const std::vector<std::string>& labels, const std::vector<Job>& jobs,
                     const VerifyOptions& opts, unsigned threads)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<SweepEntry> entries(jobs.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < jobs.size(); i += workers) {
            entries[i] = run_one(jobs[i], opts);
            if (entries[i].label.empty()) {
                entries[i].label = labels[i];
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const SweepEntry& a, const SweepEntry& b) { return a.label < b.label; });

    SweepResult result{std::move(entries), {}};
    auto& s = result.summary;
    std::map<std::string, std::vector<double>> slacks;
    for (const auto& e : result.entries) {
        if (!e.report) {
            ++s.failed_specs;
            continue;
        }
        ++s.total_graphs;
        s.violations += e.report->count(FindingKind::Violation);
        s.equality_hits += e.report->count(FindingKind::EqualityAchieved);
        s.equality_misses += e.report->count(FindingKind::EqualityMissed);
        s.consistency_failures += e.report->count(FindingKind::ConsistencyFailure);
        for (const auto& row : e.report->rows) {
            for (const auto& b : row.bounds) {
                if (b.result.applicable) {
                    slacks[std::string(to_string(b.result.id))].push_back(b.slack);
                }
            }
        }
        for (const auto& d : e.deviations) {
            s.max_map_deviation = std::max(s.max_map_deviation, d.max_deviation);
            if (!(d.max_deviation < opts.map_tol)) {
                ++s.map_failures;
            }
        }
    }
    for (auto& [name, v] : slacks) {
        s.slack[name] = {v.size(), *std::min_element(v.begin(), v.end()), median_of(v)};
    }
    s.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace

SweepResult sweep(const std::vector<FamilySpec>& specs, const VerifyOptions& opts, unsigned threads)
{
    return sweep(std::vector<SweepItem>(specs.begin(), specs.end()), opts, threads);
}

SweepResult sweep(const std::vector<SweepItem>& items, const VerifyOptions& opts, unsigned threads)
{
    std::vector<std::string> labels;
    std::vector<Job> jobs;
    for (const auto& item : items) {
        if (const auto* spec = std::get_if<FamilySpec>(&item)) {
            labels.push_back(label(*spec));
            jobs.push_back([spec] { return std::pair{label(*spec), generate(*spec)}; });
        } else {
            const auto& given = std::get<std::pair<std::string, Graph>>(item);
            labels.push_back(given.first);
            jobs.push_back([&given] { return given; });
        }
    }
    return run_jobs(labels, jobs, opts, threads);
}

} // namespace denergy
