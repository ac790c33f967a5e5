#pragma once

#include "denergy/invariants.hpp"
#include "denergy/verify.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace denergy {

enum class Format { Json, Csv, Table };

/// Rounds to 12 significant digits, the precision every report carries.
/// -0 becomes 0.
double round12(double x);

/// "%.12g" of round12(x); "nan" for NaN.
std::string format_number(double x);

inline constexpr std::string_view kCsvHeader =
    "graph,target,invariant,exact_direct,exact_closed,bound_id,side,value,slack,equality_expected,equality_achieved";

struct SpectrumDoc {
    std::string graph;
    std::string derived;
    std::string matrix; // laplacian, signless or incidence
    std::vector<double> values;
};

struct InvariantsDoc {
    std::string graph;
    std::string derived;
    std::vector<InvariantValue<double>> values;
};

std::string render(const SpectrumDoc& doc, Format format);
std::string render(const InvariantsDoc& doc, Format format);
std::string render(const BoundReport& report, Format format);
/// Runtime is left out unless asked for, so two identical sweeps serialise to
/// identical bytes.
std::string render(const SweepResult& result, Format format, bool include_runtime = false);

} // namespace denergy
