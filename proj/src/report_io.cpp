#include "denergy/report_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace denergy {

using nlohmann::ordered_json;

double round12(double x)
{
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;
}

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(x));
    return buf;
}

namespace {

ordered_json num(double x)
{
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return round12(x);
}

ordered_json num(const std::optional<double>& x)
{
    return x ? num(*x) : ordered_json(nullptr);
}

std::string csv_num(double x)
{
    return std::isfinite(x) ? format_number(x) : std::string();
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

ordered_json class_json(const RegularityClass& cls)
{
    ordered_json j;
    if (const auto* reg = std::get_if<Regular>(&cls.kind)) {
        j["type"] = "regular";
        j["degree"] = reg->degree;
    } else if (const auto* semi = std::get_if<Semiregular>(&cls.kind)) {
        j["type"] = "semiregular";
        j["r1"] = semi->r1;
        j["r2"] = semi->r2;
    } else {
        j["type"] = "irregular";
    }
    j["connected"] = cls.connected;
    return j;
}

ordered_json report_json(const BoundReport& report)
{
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json bounds = ordered_json::array();
        for (const auto& b : row.bounds) {
            bounds.push_back({
                {"id", to_string(b.result.id)},
                {"side", to_string(b.result.side)},
                {"value", num(b.result.value)},
                {"applicable", b.result.applicable},
                {"reason", b.result.reason},
                {"slack", num(b.slack)},
                {"equality_expected", b.result.equality_expected},
                {"equality_achieved", b.equality_achieved},
            });
        }
        rows.push_back({
            {"target", to_string(row.target)},
            {"invariant", to_string(row.invariant)},
            {"exact_direct", num(row.exact_direct)},
            {"exact_closed", num(row.exact_closed)},
            {"bounds", std::move(bounds)},
        });
    }
    ordered_json findings = ordered_json::array();
    for (const auto& f : report.findings) {
        findings.push_back({{"kind", to_string(f.kind)}, {"subject", f.subject}, {"detail", f.detail}});
    }
    return {
        {"graph", report.graph_label},
        {"class", class_json(report.cls)},
        {"rows", std::move(rows)},
        {"findings", std::move(findings)},
    };
}

ordered_json summary_json(const SweepSummary& s, bool include_runtime)
{
    ordered_json slack = ordered_json::object();
    for (const auto& [name, st] : s.slack) {
        slack[name] = {{"count", st.count}, {"min", num(st.min)}, {"median", num(st.median)}};
    }
    ordered_json j = {
        {"total_graphs", s.total_graphs},
        {"failed_specs", s.failed_specs},
        {"violations", s.violations},
        {"equality_hits", s.equality_hits},
        {"equality_misses", s.equality_misses},
        {"consistency_failures", s.consistency_failures},
        {"map_failures", s.map_failures},
        {"max_map_deviation", num(s.max_map_deviation)},
        {"slack", std::move(slack)},
    };
    if (include_runtime) {
        j["runtime_seconds"] = num(s.runtime_seconds);
    }
    return j;
}

void csv_rows(std::ostream& out, const BoundReport& report)
{
    for (const auto& row : report.rows) {
        for (const auto& b : row.bounds) {
            out << csv_field(report.graph_label) << ',' << to_string(row.target) << ',' << to_string(row.invariant)
                << ',' << csv_num(row.exact_direct) << ',' << (row.exact_closed ? csv_num(*row.exact_closed) : "")
                << ',' << to_string(b.result.id) << ',' << to_string(b.result.side) << ','
                << csv_num(b.result.value) << ',' << csv_num(b.slack) << ','
                << (b.result.equality_expected ? "true" : "false") << ','
                << (b.equality_achieved ? "true" : "false") << '\n';
        }
    }
}

std::string pad(std::string s, std::size_t width)
{
    s.append(s.size() < width ? width - s.size() : 1, ' ');
    return s;
}

void table_report(std::ostream& out, const BoundReport& report)
{
    out << report.graph_label << "  [" << describe(report.cls) << "]\n";
    for (const auto& row : report.rows) {
        out << "  " << to_string(row.target) << " " << to_string(row.invariant)
            << "  exact " << format_number(row.exact_direct);
        if (row.exact_closed) {
            out << "  closed form " << format_number(*row.exact_closed);
        }
        out << '\n';
        for (const auto& b : row.bounds) {
            out << "    " << pad(std::string(to_string(b.result.id)), 22);
            if (b.result.applicable) {
                out << pad(format_number(b.result.value), 18) << "slack " << pad(format_number(b.slack), 18);
                if (b.equality_achieved) {
                    out << "equality";
                }
            } else {
                out << "inapplicable: " << b.result.reason;
            }
            out << '\n';
        }
    }
    for (const auto& f : report.findings) {
        if (f.kind != FindingKind::EqualityAchieved) {
            out << "  " << to_string(f.kind) << " " << f.subject << ": " << f.detail << '\n';
        }
    }
}

std::string dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

} // namespace

std::string render(const SpectrumDoc& doc, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json: {
        ordered_json values = ordered_json::array();
        for (double v : doc.values) {
            values.push_back(num(v));
        }
        return dump({{"kind", "spectrum"},
                     {"graph", doc.graph},
                     {"derived", doc.derived},
                     {"matrix", doc.matrix},
                     {"values", std::move(values)}});
    }
    case Format::Csv:
        out << "index,value\n";
        for (std::size_t i = 0; i < doc.values.size(); ++i) {
            out << i << ',' << csv_num(doc.values[i]) << '\n';
        }
        break;
    case Format::Table:
        out << doc.graph << " (" << doc.derived << ") " << doc.matrix << " spectrum\n";
        // Group equal values as "value x multiplicity".
        for (std::size_t i = 0; i < doc.values.size();) {
            std::size_t j = i;
            while (j < doc.values.size() && format_number(doc.values[j]) == format_number(doc.values[i])) {
                ++j;
            }
            out << "  " << pad(format_number(doc.values[i]), 18) << "x" << (j - i) << '\n';
            i = j;
        }
        break;
    }
    return out.str();
}

std::string render(const InvariantsDoc& doc, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json: {
        ordered_json values = ordered_json::array();
        for (const auto& v : doc.values) {
            values.push_back({{"name", to_string(v.name)}, {"source", to_string(v.source)}, {"value", num(v.value)}});
        }
        return dump({{"kind", "invariants"},
                     {"graph", doc.graph},
                     {"derived", doc.derived},
                     {"values", std::move(values)}});
    }
    case Format::Csv:
        out << "name,source,value\n";
        for (const auto& v : doc.values) {
            out << to_string(v.name) << ',' << to_string(v.source) << ',' << csv_num(v.value) << '\n';
        }
        break;
    case Format::Table:
        out << doc.graph << " (" << doc.derived << ")\n";
        for (const auto& v : doc.values) {
            out << "  " << pad(std::string(to_string(v.name)), 5) << pad(std::string(to_string(v.source)), 13)
                << format_number(v.value) << '\n';
        }
        break;
    }
    return out.str();
}

std::string render(const BoundReport& report, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json: {
        auto j = report_json(report);
        j.erase("graph");
        ordered_json doc = {{"kind", "bound_report"}, {"graph", report.graph_label}};
        doc.update(j);
        return dump(doc);
    }
    case Format::Csv:
        out << kCsvHeader << '\n';
        csv_rows(out, report);
        break;
    case Format::Table: table_report(out, report); break;
    }
    return out.str();
}

std::string render(const SweepResult& result, Format format, bool include_runtime)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json: {
        ordered_json graphs = ordered_json::array();
        for (const auto& e : result.entries) {
            ordered_json consistency = ordered_json::array();
            for (const auto& d : e.deviations) {
                consistency.push_back({{"map", d.map}, {"max_deviation", num(d.max_deviation)}});
            }
            graphs.push_back({
                {"label", e.label},
                {"error", e.error ? ordered_json(*e.error) : ordered_json(nullptr)},
                {"report", e.report ? report_json(*e.report) : ordered_json(nullptr)},
                {"consistency", std::move(consistency)},
            });
        }
        return dump({{"kind", "sweep"},
                     {"passed", result.passed()},
                     {"graphs", std::move(graphs)},
                     {"summary", summary_json(result.summary, include_runtime)}});
    }
    case Format::Csv:
        out << kCsvHeader << '\n';
        for (const auto& e : result.entries) {
            if (e.report) {
                csv_rows(out, *e.report);
            }
        }
        break;
    case Format::Table: {
        for (const auto& e : result.entries) {
            if (e.report) {
                table_report(out, *e.report);
            } else {
                out << e.label << "  error: " << e.error.value_or("") << '\n';
            }
        }
        const auto& s = result.summary;
        out << "\ngraphs " << s.total_graphs << ", failed specs " << s.failed_specs << ", violations "
            << s.violations << ", equality " << s.equality_hits << " hit / " << s.equality_misses
            << " missed, consistency failures " << s.consistency_failures << ", map failures " << s.map_failures
            << ", max map deviation " << format_number(s.max_map_deviation) << '\n';
        for (const auto& [name, st] : s.slack) {
            out << "  " << pad(name, 22) << "n=" << pad(std::to_string(st.count), 5) << "min "
                << pad(format_number(st.min), 18) << "median " << format_number(st.median) << '\n';
        }
        if (include_runtime) {
            out << "runtime " << format_number(s.runtime_seconds) << " s\n";
        }
        break;
    }
    }
    return out.str();
}

} // namespace denergy
