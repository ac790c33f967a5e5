#include "denergy/cli.hpp"

#include "denergy/closed_forms.hpp"
#include "denergy/edge_list.hpp"
#include "denergy/family.hpp"
#include "denergy/invariants.hpp"
#include "denergy/report_io.hpp"
#include "denergy/spectral.hpp"
#include "denergy/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace denergy {

namespace {

constexpr const char* kFamilyHelp = R"(Family specs:
  complete:N  cycle:N  petersen  complete_bipartite:A,B
  random_regular:n=N,r=R[,seed=S]  random_biregular:n1=..,n2=..,r1=..,r2=..[,seed=S]
  standard  (the built-in verification suite)
Any integer may be a range lo..hi, e.g. complete:3..7. Join items with ';'.
Exit status: 0 ok, 1 bound violations or consistency failures, 2 usage or input error.)";

enum class Derived { Base, Line, RGraph, QGraph };
enum class Matrix { Laplacian, Signless, Incidence };

struct Config {
    std::vector<std::string> inputs;
    std::vector<std::string> families;
    Derived derived = Derived::Base;
    Matrix matrix = Matrix::Laplacian;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    Format format = Format::Json;
    std::string output;
    bool timing = false;
    unsigned threads = 1;
};

// Thrown for bad invocations that get past CLI11, e.g. two graphs where one is needed.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view derived_name(Derived d)
{
    switch (d) {
    case Derived::Base: return "base";
    case Derived::Line: return "line";
    case Derived::RGraph: return "rgraph";
    case Derived::QGraph: return "qgraph";
    }
    return "?";
}

std::vector<std::pair<std::string, Graph>> load_graphs(const Config& cfg)
{
    std::vector<std::pair<std::string, Graph>> out;
    for (const auto& path : cfg.inputs) {
        out.emplace_back(path, read_edge_list_file(path));
    }
    for (const auto& text : cfg.families) {
        for (const auto& spec : parse_family_specs(text, cfg.seed)) {
            out.emplace_back(label(spec), generate(spec));
        }
    }
    return out;
}

std::pair<std::string, Graph> load_single(const Config& cfg)
{
    auto graphs = load_graphs(cfg);
    if (graphs.size() != 1) {
        throw UsageError("this command takes exactly one graph, got " + std::to_string(graphs.size()) +
                         "; pass one --input or a --family without ranges");
    }
    return std::move(graphs.front());
}

// Rejects graphs outside the standing assumptions of the requested derived
// graph, naming the assumption.
std::optional<BaseParams> derived_params(const Graph& g, Derived d)
{
    if (d == Derived::Base) {
        return std::nullopt;
    }
    const auto cls = classify(g);
    if (d == Derived::Line) {
        const auto p = semiregular_params(g);
        if (!p || !is_connected(g)) {
            throw Error(Errc::InapplicableMap, "--derived line assumes G is connected (r1,r2)-semiregular; got " +
                                                   describe(cls));
        }
        const auto [r1, r2] = p->r1_r2();
        if (r1 + r2 < 4) {
            throw Error(Errc::InapplicableMap, "--derived line assumes r1 + r2 >= 4; got r1 + r2 = " +
                                                   std::to_string(r1 + r2));
        }
        if (p->m() < p->n()) {
            throw Error(Errc::InapplicableMap, "--derived line assumes G is not a star");
        }
        return p;
    }
    const auto p = regular_params(g);
    if (!p) {
        throw Error(Errc::InapplicableMap, "--derived " + std::string(derived_name(d)) +
                                               " assumes G is r-regular with r >= 2; got " + describe(cls));
    }
    if (p->r() < 2) {
        throw Error(Errc::InapplicableMap, "--derived " + std::string(derived_name(d)) +
                                               " assumes r >= 2; got r = " + std::to_string(p->r()));
    }
    return p;
}

Graph derive(const Graph& g, Derived d)
{
    switch (d) {
    case Derived::Base: return g;
    case Derived::Line: return line_graph(g);
    case Derived::RGraph: return r_graph(g);
    case Derived::QGraph: return q_graph(g);
    }
    return g;
}

std::string cmd_spectrum(const Config& cfg)
{
    const auto [name, g] = load_single(cfg);
    derived_params(g, cfg.derived);
    const auto h = derive(g, cfg.derived);
    SpectrumDoc doc{name, std::string(derived_name(cfg.derived)), "", {}};
    DenseVector<double> values;
    switch (cfg.matrix) {
    case Matrix::Laplacian:
        doc.matrix = "laplacian";
        values = laplacian_spectrum<double>(h).values;
        break;
    case Matrix::Signless:
        doc.matrix = "signless";
        values = signless_laplacian_spectrum<double>(h).values;
        break;
    case Matrix::Incidence:
        doc.matrix = "incidence";
        values = singular_values(incidence<double>(h));
        break;
    }
    doc.values.assign(values.data(), values.data() + values.size());
    return render(doc, cfg.format);
}

std::string cmd_invariants(const Config& cfg)
{
    const auto [name, g] = load_single(cfg);
    const auto p = derived_params(g, cfg.derived);
    const auto h = derive(g, cfg.derived);
    InvariantsDoc doc{name, std::string(derived_name(cfg.derived)), {}};
    doc.values.push_back(lel(laplacian_spectrum<double>(h)));
    doc.values.push_back(ie(signless_laplacian_spectrum<double>(h)));
    if (p) {
        const auto ls = laplacian_spectrum<double>(g);
        const auto qs = signless_laplacian_spectrum<double>(g);
        constexpr auto cf = ValueSource::ClosedForm;
        switch (cfg.derived) {
        case Derived::Line:
            doc.values.push_back(lel(line_l_spectrum(ls, *p), cf));
            doc.values.push_back(ie(line_q_spectrum(qs, *p), cf));
            break;
        case Derived::RGraph:
            doc.values.push_back(lel(rgraph_l_spectrum(ls, *p), cf));
            doc.values.push_back(ie(rgraph_q_spectrum(qs, *p), cf));
            break;
        case Derived::QGraph:
            doc.values.push_back(lel(qgraph_l_spectrum(ls, *p), cf));
            doc.values.push_back(ie(qgraph_q_spectrum(qs, *p), cf));
            break;
        case Derived::Base: break;
        }
    }
    return render(doc, cfg.format);
}

VerifyOptions verify_options(const Config& cfg)
{
    VerifyOptions opts;
    opts.tol = cfg.tol;
    return opts;
}

std::string cmd_bounds(const Config& cfg, int& status)
{
    const auto [name, g] = load_single(cfg);
    const auto report = bound_report(g, name, verify_options(cfg));
    if (report.count(FindingKind::Violation) + report.count(FindingKind::ConsistencyFailure) > 0) {
        status = kExitViolations;
    }
    return render(report, cfg.format);
}

std::string cmd_verify(const Config& cfg, int& status)
{
    if (cfg.inputs.empty() && cfg.families.empty()) {
        throw UsageError("verify needs at least one --input or --family");
    }
    std::vector<SweepItem> items;
    for (const auto& path : cfg.inputs) {
        items.emplace_back(std::pair{path, read_edge_list_file(path)});
    }
    for (const auto& text : cfg.families) {
        for (const auto& spec : parse_family_specs(text, cfg.seed)) {
            items.emplace_back(spec);
        }
    }
    const auto result = sweep(items, verify_options(cfg), cfg.threads);
    if (!result.passed()) {
        status = kExitViolations;
    } else if (result.summary.failed_specs > 0) {
        status = kExitUsage;
    }
    return render(result, cfg.format, cfg.timing);
}

std::string cmd_generate(const Config& cfg)
{
    const auto [name, g] = load_single(cfg);
    derived_params(g, cfg.derived);
    std::ostringstream out;
    const auto comment = cfg.derived == Derived::Base ? name : std::string(derived_name(cfg.derived)) + " of " + name;
    write_edge_list(out, derive(g, cfg.derived), comment);
    return out.str();
}

void emit(const Config& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open " + cfg.output + " for writing");
    }
    file << text;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Spectral invariants of R-, Q- and line graphs and checks of their bounds", "denergy"};
    app.footer(kFamilyHelp);
    app.require_subcommand(1, 1);

    const std::map<std::string, Derived> derived_map{
        {"base", Derived::Base}, {"line", Derived::Line}, {"rgraph", Derived::RGraph}, {"qgraph", Derived::QGraph}};
    const std::map<std::string, Matrix> matrix_map{
        {"laplacian", Matrix::Laplacian}, {"signless", Matrix::Signless}, {"incidence", Matrix::Incidence}};
    const std::map<std::string, Format> format_map{
        {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};

    auto add_common = [&](CLI::App* sub, bool many) {
        sub->add_option("--input", cfg.inputs, "edge-list file")->check(CLI::ExistingFile);
        sub->add_option("--family", cfg.families, "family spec, e.g. complete:3..7");
        sub->add_option("--seed", cfg.seed, "default seed for random families")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "violation tolerance on slack")->capture_default_str();
        sub->add_option("--format", cfg.format, "json, csv or table")
            ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
        sub->add_option("--output", cfg.output, "write the report here instead of standard output");
        if (!many) {
            sub->get_option("--input")->expected(0, 1);
        }
    };
    auto add_derived = [&](CLI::App* sub) {
        sub->add_option("--derived", cfg.derived, "base, line, rgraph or qgraph")
            ->transform(CLI::CheckedTransformer(derived_map, CLI::ignore_case));
    };

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of one graph or its derived graph");
    add_common(spectrum, false);
    add_derived(spectrum);
    spectrum->add_option("--matrix", cfg.matrix, "laplacian, signless or incidence (singular values)")
        ->transform(CLI::CheckedTransformer(matrix_map, CLI::ignore_case));

    auto* invariants = app.add_subcommand("invariants", "LEL and IE, by eigensolver and by closed form");
    add_common(invariants, false);
    add_derived(invariants);

    auto* bounds = app.add_subcommand("bounds", "every applicable bound for one graph");
    add_common(bounds, false);

    auto* verify = app.add_subcommand("verify", "bound reports and consistency checks over many graphs");
    add_common(verify, true);
    verify->add_flag("--timing", cfg.timing, "include the sweep runtime in the report");
    verify->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));

    auto* generate_cmd = app.add_subcommand("generate", "write a family member as an edge list");
    add_common(generate_cmd, false);
    add_derived(generate_cmd);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("denergy");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    int status = kExitOk;
    try {
        std::string text;
        if (spectrum->parsed()) {
            text = cmd_spectrum(cfg);
        } else if (invariants->parsed()) {
            text = cmd_invariants(cfg);
        } else if (bounds->parsed()) {
            text = cmd_bounds(cfg, status);
        } else if (verify->parsed()) {
            text = cmd_verify(cfg, status);
        } else {
            text = cmd_generate(cfg);
        }
        emit(cfg, text, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return status;
}

} // namespace denergy
