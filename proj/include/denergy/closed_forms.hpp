#pragma once

// Spectra of line graphs of semiregular graphs and of R-/Q-graphs of regular
// graphs, computed from the base graph's spectrum without building the
// derived graph.

#include "denergy/error.hpp"
#include "denergy/graph.hpp"
#include "denergy/spectral.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>

namespace denergy {

struct RegularDegree {
    std::size_t r;
};

struct SemiregularDegrees {
    std::size_t r1;
    std::size_t r2;
};

/// n, m and the degree data of a regular or semiregular base graph.
class BaseParams {
public:
    /// Requires 2m = n r.
    static BaseParams regular(std::size_t n, std::size_t m, std::size_t r);
    /// Requires m (r1 + r2) = n r1 r2.
    static BaseParams semiregular(std::size_t n, std::size_t m, std::size_t r1, std::size_t r2);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }

    bool is_regular() const noexcept { return std::holds_alternative<RegularDegree>(degrees_); }
    bool is_semiregular() const noexcept { return std::holds_alternative<SemiregularDegrees>(degrees_); }

    /// Throws InapplicableMap when the parameters are of the other kind.
    std::size_t r() const;
    SemiregularDegrees r1_r2() const;

private:
    BaseParams(std::size_t n, std::size_t m, std::variant<RegularDegree, SemiregularDegrees> d)
        : n_(n), m_(m), degrees_(d)
    {
    }

    std::size_t n_;
    std::size_t m_;
    std::variant<RegularDegree, SemiregularDegrees> degrees_;
};

inline BaseParams BaseParams::regular(std::size_t n, std::size_t m, std::size_t r)
{
    if (2 * m != n * r) {
        throw Error(Errc::InvalidArgument, "regular parameters need 2m = n r");
    }
    return BaseParams(n, m, RegularDegree{r});
}

inline BaseParams BaseParams::semiregular(std::size_t n, std::size_t m, std::size_t r1, std::size_t r2)
{
    if (m * (r1 + r2) != n * r1 * r2) {
        throw Error(Errc::InvalidArgument, "semiregular parameters need m (r1 + r2) = n r1 r2");
    }
    return BaseParams(n, m, SemiregularDegrees{r1, r2});
}

inline std::size_t BaseParams::r() const
{
    if (const auto* d = std::get_if<RegularDegree>(&degrees_)) {
        return d->r;
    }
    throw Error(Errc::InapplicableMap, "map needs a regular base graph");
}

inline SemiregularDegrees BaseParams::r1_r2() const
{
    if (const auto* d = std::get_if<SemiregularDegrees>(&degrees_)) {
        return *d;
    }
    throw Error(Errc::InapplicableMap, "map needs a semiregular base graph");
}

inline std::optional<BaseParams> regular_params(const Graph& g)
{
    const auto cls = classify(g);
    if (const auto* reg = std::get_if<Regular>(&cls.kind)) {
        return BaseParams::regular(g.order(), g.size(), reg->degree);
    }
    return std::nullopt;
}

/// Also succeeds for regular bipartite graphs, which are (r,r)-semiregular.
inline std::optional<BaseParams> semiregular_params(const Graph& g)
{
    if (const auto semi = semiregular_structure(g)) {
        return BaseParams::semiregular(g.order(), g.size(), semi->r1, semi->r2);
    }
    return std::nullopt;
}

inline constexpr double kDiscriminantClamp = 1e-9;

namespace detail {

template <typename Scalar>
void require(const Spectrum<Scalar>& sp, SpectrumKind kind, const BaseParams& p)
{
    if (sp.kind != kind) {
        throw Error(Errc::KindMismatch, std::string("expected a ") + std::string(to_string(kind)) + " spectrum");
    }
    if (static_cast<std::size_t>(sp.size()) != p.n()) {
        throw Error(Errc::BadLength, "spectrum has " + std::to_string(sp.size()) + " values, base graph has " +
                                         std::to_string(p.n()) + " vertices");
    }
}

inline std::size_t extra_multiplicity(const BaseParams& p)
{
    if (p.m() < p.n()) {
        throw Error(Errc::InapplicableMap, "m < n (" + std::to_string(p.m()) + " < " + std::to_string(p.n()) +
                                               "): repeated-eigenvalue multiplicity m - n would be negative");
    }
    return p.m() - p.n();
}

/// Both roots of x^2 - sum x + product; `disc` is the discriminant in the form
/// the caller's lemma states it. The smaller root is product / larger root.
template <typename Scalar>
std::pair<Scalar, Scalar> root_pair(Scalar sum, Scalar product, Scalar disc)
{
    using std::sqrt;
    if (disc < Scalar(0)) {
        if (disc <= -Scalar(kDiscriminantClamp)) {
            throw Error(Errc::NegativeDiscriminant, "discriminant " + std::to_string(static_cast<double>(disc)));
        }
        disc = Scalar(0);
    }
    const Scalar hi = (sum + sqrt(disc)) / Scalar(2);
    const Scalar lo = hi == Scalar(0) ? Scalar(0) : product / hi;
    return {hi, lo};
}

} // namespace detail

/// Laplacian spectrum of the line graph of a semiregular graph:
/// (r1+r2) repeated m-n times, and r1+r2-mu_i for every base eigenvalue.
template <typename Scalar>
Spectrum<Scalar> line_l_spectrum(const Spectrum<Scalar>& sp, const BaseParams& p)
{
    detail::require(sp, SpectrumKind::Laplacian, p);
    const auto [r1, r2] = p.r1_r2();
    const auto extra = detail::extra_multiplicity(p);
    const auto s = static_cast<Scalar>(r1 + r2);

    DenseVector<Scalar> out(static_cast<Eigen::Index>(p.m()));
    out.head(static_cast<Eigen::Index>(extra)).setConstant(s);
    out.tail(sp.size()) = (s - sp.values.array()).matrix();
    return make_spectrum(SpectrumKind::Laplacian, std::move(out));
}

/// Signless Laplacian spectrum of the line graph of a semiregular graph:
/// (r1+r2-4) repeated m-n times, and r1+r2-4+q_i.
template <typename Scalar>
Spectrum<Scalar> line_q_spectrum(const Spectrum<Scalar>& sp, const BaseParams& p)
{
    detail::require(sp, SpectrumKind::SignlessLaplacian, p);
    const auto [r1, r2] = p.r1_r2();
    const auto extra = detail::extra_multiplicity(p);
    const Scalar shift = static_cast<Scalar>(r1 + r2) - Scalar(4);

    DenseVector<Scalar> out(static_cast<Eigen::Index>(p.m()));
    out.head(static_cast<Eigen::Index>(extra)).setConstant(shift);
    out.tail(sp.size()) = (sp.values.array() + shift).matrix();
    return make_spectrum(SpectrumKind::SignlessLaplacian, std::move(out));
}

namespace detail {

// Shared shape of the four R/Q-graph maps: `repeated` m-n times, then one root
// pair per base eigenvalue from pair(lambda) -> (sum, product, discriminant).
template <typename Scalar, typename PairFn>
Spectrum<Scalar> pair_map(const Spectrum<Scalar>& sp, const BaseParams& p, SpectrumKind in, Scalar repeated,
                          PairFn pair)
{
    require(sp, in, p);
    if (p.r() < 2) {
        throw Error(Errc::InapplicableMap, "regular maps need r >= 2");
    }
    const auto extra = static_cast<Eigen::Index>(extra_multiplicity(p));
    const Eigen::Index n = sp.size();

    DenseVector<Scalar> out(extra + 2 * n);
    out.head(extra).setConstant(repeated);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto [sum, product, disc] = pair(sp[i]);
        const auto [hi, lo] = root_pair<Scalar>(sum, product, disc);
        out(extra + 2 * i) = hi;
        out(extra + 2 * i + 1) = lo;
    }
    return make_spectrum(in, std::move(out));
}

} // namespace detail

/// L-spectrum of R(G), G r-regular: 2 repeated m-n times and
/// ((r+2+mu) +- sqrt((r+2+mu)^2 - 12 mu)) / 2 for each mu.
template <typename Scalar>
Spectrum<Scalar> rgraph_l_spectrum(const Spectrum<Scalar>& sp, const BaseParams& p)
{
    const auto r = static_cast<Scalar>(p.r());
    return detail::pair_map<Scalar>(sp, p, SpectrumKind::Laplacian, Scalar(2), [r](Scalar mu) {
        const Scalar s = r + Scalar(2) + mu;
        return std::tuple{s, Scalar(3) * mu, s * s - Scalar(12) * mu};
    });
}

/// Q-spectrum of R(G): 2 repeated m-n times and
/// ((r+2+q) +- sqrt((r+2+q)^2 - 4(2r+q))) / 2.
template <typename Scalar>
Spectrum<Scalar> rgraph_q_spectrum(const Spectrum<Scalar>& sp, const BaseParams& p)
{
    const auto r = static_cast<Scalar>(p.r());
    return detail::pair_map<Scalar>(sp, p, SpectrumKind::SignlessLaplacian, Scalar(2), [r](Scalar q) {
        const Scalar s = r + Scalar(2) + q;
        const Scalar prod = Scalar(2) * r + q;
        return std::tuple{s, prod, s * s - Scalar(4) * prod};
    });
}

/// L-spectrum of Q(G): 2r+2 repeated m-n times and
/// ((r+2+mu) +- sqrt((r+2+mu)^2 - 4 mu (r+1))) / 2.
template <typename Scalar>
Spectrum<Scalar> qgraph_l_spectrum(const Spectrum<Scalar>& sp, const BaseParams& p)
{
    const auto r = static_cast<Scalar>(p.r());
    return detail::pair_map<Scalar>(sp, p, SpectrumKind::Laplacian, Scalar(2) * r + Scalar(2), [r](Scalar mu) {
        const Scalar s = r + Scalar(2) + mu;
        const Scalar prod = mu * (r + Scalar(1));
        return std::tuple{s, prod, s * s - Scalar(4) * prod};
    });
}

/// Q-spectrum of Q(G): 2r-2 repeated m-n times and
/// ((3r-2+q) +- sqrt((3r-2+q)^2 - 4r(2r-2+q) + 4q)) / 2.
template <typename Scalar>
Spectrum<Scalar> qgraph_q_spectrum(const Spectrum<Scalar>& sp, const BaseParams& p)
{
    const auto r = static_cast<Scalar>(p.r());
    return detail::pair_map<Scalar>(sp, p, SpectrumKind::SignlessLaplacian, Scalar(2) * r - Scalar(2), [r](Scalar q) {
        const Scalar s = Scalar(3) * r - Scalar(2) + q;
        const Scalar prod = r * (Scalar(2) * r - Scalar(2) + q) - q;
        return std::tuple{s, prod, s * s - Scalar(4) * r * (Scalar(2) * r - Scalar(2) + q) + Scalar(4) * q};
    });
}

// ---------------------------------------------------------------------------
// Characteristic polynomials in product form

enum class CharPolyKind {
    LaplacianOfRGraph,
    SignlessOfRGraph,
    LaplacianOfQGraph,
    SignlessOfQGraph,
};

constexpr std::string_view to_string(CharPolyKind kind) noexcept
{
    switch (kind) {
    case CharPolyKind::LaplacianOfRGraph: return "L(R)";
    case CharPolyKind::SignlessOfRGraph: return "Q(R)";
    case CharPolyKind::LaplacianOfQGraph: return "L(Q)";
    case CharPolyKind::SignlessOfQGraph: return "Q(Q)";
    }
    return "?";
}

/// det(xI - M) for the derived-graph matrix named by `kind`, evaluated from
/// the factored form over the base spectrum (sorted descending; L forms skip
/// the smallest mu, Q forms skip q_1 = 2r).
///
///   L(R):  x (x-2)^(m-n) (x-r-2)     prod_{i<n}  [(x-2)(x-r-mu_i) - 2r + mu_i]
///   Q(R):  (x-2)^(m-n) (x^2-(2+3r)x+4r) prod_{i>1} [(x-2)(x-r-q_i) - q_i]
///   L(Q):  x (x-2r-2)^(m-n) (x-r-2)  prod_{i<n}  [(x-r)(x-2-mu_i) - 2r + mu_i]
///   Q(Q):  (x-2r+2)^(m-n) [(x-r)(x-4r+2)-2r] prod_{i>1} [(x-r)(x-2r+2-q_i) - q_i]
///
/// The (x-r-2) factor of L(R) carries exponent 1: a printed exponent of n
/// would give degree 2n+m-1 instead of n+m and contradict the L(R) spectrum.
template <typename Scalar>
Scalar char_poly_eval(CharPolyKind kind, Scalar x, const Spectrum<Scalar>& sp, const BaseParams& p)
{
    using std::pow;
    const bool laplacian_form = kind == CharPolyKind::LaplacianOfRGraph || kind == CharPolyKind::LaplacianOfQGraph;
    detail::require(sp, laplacian_form ? SpectrumKind::Laplacian : SpectrumKind::SignlessLaplacian, p);
    const auto r = static_cast<Scalar>(p.r());
    const auto extra = static_cast<int>(detail::extra_multiplicity(p));
    const Eigen::Index n = sp.size();

    Scalar value(1);
    switch (kind) {
    case CharPolyKind::LaplacianOfRGraph:
        value = x * pow(x - Scalar(2), extra) * (x - r - Scalar(2));
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            const Scalar mu = sp[i];
            value *= (x - Scalar(2)) * (x - r - mu) - Scalar(2) * r + mu;
        }
        break;
    case CharPolyKind::SignlessOfRGraph:
        value = pow(x - Scalar(2), extra) * (x * x - (Scalar(2) + Scalar(3) * r) * x + Scalar(4) * r);
        for (Eigen::Index i = 1; i < n; ++i) {
            const Scalar q = sp[i];
            value *= (x - Scalar(2)) * (x - r - q) - q;
        }
        break;
    case CharPolyKind::LaplacianOfQGraph:
        value = x * pow(x - Scalar(2) * r - Scalar(2), extra) * (x - r - Scalar(2));
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            const Scalar mu = sp[i];
            value *= (x - r) * (x - Scalar(2) - mu) - Scalar(2) * r + mu;
        }
        break;
    case CharPolyKind::SignlessOfQGraph:
        value = pow(x - Scalar(2) * r + Scalar(2), extra) *
                ((x - r) * (x - Scalar(4) * r + Scalar(2)) - Scalar(2) * r);
        for (Eigen::Index i = 1; i < n; ++i) {
            const Scalar q = sp[i];
            value *= (x - r) * (x - Scalar(2) * r + Scalar(2) - q) - q;
        }
        break;
    }
    return value;
}

} // namespace denergy
