#pragma once

#include "denergy/error.hpp"
#include "denergy/spectral.hpp"

#include <cmath>
#include <string>
#include <string_view>

namespace denergy {

enum class InvariantName { LEL, IE };
enum class ValueSource { DirectEigen, ClosedForm };

constexpr std::string_view to_string(InvariantName name) noexcept
{
    return name == InvariantName::LEL ? "LEL" : "IE";
}

constexpr std::string_view to_string(ValueSource source) noexcept
{
    return source == ValueSource::DirectEigen ? "direct" : "closed_form";
}

template <typename Scalar = double>
struct InvariantValue {
    InvariantName name;
    Scalar value;
    ValueSource source;
};

namespace detail {

template <typename Scalar>
Scalar clamped_sqrt(Scalar x)
{
    using std::sqrt;
    if (x < Scalar(0)) {
        if (x <= -Scalar(kZeroSnap)) {
            throw Error(Errc::NegativeEigenvalue, "eigenvalue " + std::to_string(static_cast<double>(x)));
        }
        return Scalar(0);
    }
    return sqrt(x);
}

} // namespace detail

/// Laplacian-energy-like invariant: sum of sqrt(mu) over all but the single
/// smallest Laplacian eigenvalue.
template <typename Scalar>
InvariantValue<Scalar> lel(const Spectrum<Scalar>& sp, ValueSource source = ValueSource::DirectEigen)
{
    if (sp.kind != SpectrumKind::Laplacian) {
        throw Error(Errc::KindMismatch, "LEL needs a Laplacian spectrum");
    }
    Scalar total(0);
    Eigen::Index smallest = 0;
    for (Eigen::Index i = 1; i < sp.size(); ++i) {
        if (sp[i] < sp[smallest]) {
            smallest = i;
        }
    }
    for (Eigen::Index i = 0; i < sp.size(); ++i) {
        if (i != smallest) {
            total += detail::clamped_sqrt(sp[i]);
        }
    }
    return {InvariantName::LEL, total, source};
}

/// Incidence energy: sum of sqrt(q) over every signless Laplacian eigenvalue.
template <typename Scalar>
InvariantValue<Scalar> ie(const Spectrum<Scalar>& sp, ValueSource source = ValueSource::DirectEigen)
{
    if (sp.kind != SpectrumKind::SignlessLaplacian) {
        throw Error(Errc::KindMismatch, "IE needs a signless Laplacian spectrum");
    }
    Scalar total(0);
    for (Eigen::Index i = 0; i < sp.size(); ++i) {
        total += detail::clamped_sqrt(sp[i]);
    }
    return {InvariantName::IE, total, source};
}

} // namespace denergy
