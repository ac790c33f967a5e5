#pragma once

#include "denergy/error.hpp"
#include "denergy/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <string_view>

namespace denergy {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class SpectrumKind { Laplacian, SignlessLaplacian };

constexpr std::string_view to_string(SpectrumKind kind) noexcept
{
    return kind == SpectrumKind::Laplacian ? "laplacian" : "signless_laplacian";
}

/// Jacobi stops once the off-diagonal Frobenius norm drops below tol * ||M||_F.
inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;
/// Computed eigenvalues with |x| below this are reported as exactly 0;
/// anything at or below -kZeroSnap is a NumericalAnomaly.
inline constexpr double kZeroSnap = 1e-9;

// ---------------------------------------------------------------------------
// Matrix assembly

template <typename Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const Graph& g)
{
    const auto n = static_cast<Eigen::Index>(g.order());
    DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
    for (const auto& e : g.edges()) {
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        a(u, v) = Scalar(1);
        a(v, u) = Scalar(1);
    }
    return a;
}

template <typename Scalar = double>
DenseVector<Scalar> degree_vector(const Graph& g)
{
    DenseVector<Scalar> d(static_cast<Eigen::Index>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        d(static_cast<Eigen::Index>(v)) = static_cast<Scalar>(g.degree(v));
    }
    return d;
}

/// L = D - A.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const Graph& g)
{
    DenseMatrix<Scalar> l = -adjacency_matrix<Scalar>(g);
    l.diagonal() = degree_vector<Scalar>(g);
    return l;
}

/// Q = D + A.
template <typename Scalar = double>
DenseMatrix<Scalar> signless_laplacian(const Graph& g)
{
    DenseMatrix<Scalar> q = adjacency_matrix<Scalar>(g);
    q.diagonal() = degree_vector<Scalar>(g);
    return q;
}

/// n x m vertex-edge incidence matrix; column i has ones at both endpoints of edge i.
template <typename Scalar = double>
DenseMatrix<Scalar> incidence(const Graph& g)
{
    const auto edges = g.edges();
    DenseMatrix<Scalar> b =
        DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(g.order()), static_cast<Eigen::Index>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto col = static_cast<Eigen::Index>(i);
        b(static_cast<Eigen::Index>(edges[i].u), col) = Scalar(1);
        b(static_cast<Eigen::Index>(edges[i].v), col) = Scalar(1);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Spectra

/// Eigenvalue multiset of L or Q, sorted descending with multiplicities repeated.
template <typename Scalar = double>
struct Spectrum {
    SpectrumKind kind = SpectrumKind::Laplacian;
    DenseVector<Scalar> values;

    Eigen::Index size() const noexcept { return values.size(); }
    Scalar operator[](Eigen::Index i) const { return values(i); }
};

namespace detail {

template <typename Scalar>
void sort_descending(DenseVector<Scalar>& v)
{
    std::sort(v.data(), v.data() + v.size(), std::greater<Scalar>());
}

template <typename Scalar>
void snap_zeros(DenseVector<Scalar>& v, Scalar snap)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) <= -snap) {
            throw Error(Errc::NumericalAnomaly, "eigenvalue " + std::to_string(static_cast<double>(v(i))) +
                                                    " is below the clamp window");
        }
        if (std::abs(v(i)) < snap) {
            v(i) = Scalar(0);
        }
    }
}

} // namespace detail

/// Sorts descending and snaps values within kZeroSnap of zero to exactly 0.
template <typename Scalar>
Spectrum<Scalar> make_spectrum(SpectrumKind kind, DenseVector<Scalar> values, Scalar snap = Scalar(kZeroSnap))
{
    detail::snap_zeros(values, snap);
    detail::sort_descending(values);
    return Spectrum<Scalar>{kind, std::move(values)};
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Each sweep visits every (p, q), p < q, once in row order.
template <typename Derived>
DenseVector<typename Derived::Scalar> jacobi_eigenvalues(const Eigen::MatrixBase<Derived>& mtx,
                                                         typename Derived::Scalar tol = kDefaultEigenTol,
                                                         int max_sweeps = kMaxJacobiSweeps)
{
    using Scalar = typename Derived::Scalar;
    using std::abs;
    using std::sqrt;

    if (mtx.rows() != mtx.cols()) {
        throw Error(Errc::InvalidArgument, "eigenvalues of a non-square matrix");
    }
    if (!(mtx.derived() == mtx.derived().transpose())) {
        throw Error(Errc::InvalidArgument, "matrix is not exactly symmetric");
    }

    DenseMatrix<Scalar> a = mtx;
    const Eigen::Index n = a.rows();
    const Scalar scale = a.norm();
    const Scalar target = tol * scale;

    auto off_norm = [&] {
        Scalar s(0);
        for (Eigen::Index q = 1; q < n; ++q) {
            s += a.col(q).head(q).squaredNorm();
        }
        return sqrt(Scalar(2) * s);
    };

    int sweep = 0;
    for (; off_norm() > target; ++sweep) {
        if (sweep == max_sweeps) {
            throw Error(Errc::NoConvergence, "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (apq == Scalar(0)) {
                    continue;
                }
                // Rotation angle that zeroes a(p,q); t = tan(angle), smaller root.
                const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
                Scalar t;
                if (abs(theta) > Scalar(1e150)) {
                    t = Scalar(1) / (Scalar(2) * theta);
                } else {
                    t = Scalar(1) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
                    if (theta < Scalar(0)) {
                        t = -t;
                    }
                }
                const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
                const Scalar s = t * c;

                const DenseVector<Scalar> colp = a.col(p);
                a.col(p) = c * colp - s * a.col(q);
                a.col(q) = s * colp + c * a.col(q);
                const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> rowp = a.row(p);
                a.row(p) = c * rowp - s * a.row(q);
                a.row(q) = s * rowp + c * a.row(q);
                a(p, q) = Scalar(0);
                a(q, p) = Scalar(0);
            }
        }
    }

    DenseVector<Scalar> values = a.diagonal();
    const Scalar trace = mtx.trace();
    const Scalar slack = Scalar(10) * tol * static_cast<Scalar>(std::max<Eigen::Index>(n, 1)) *
                         std::max(Scalar(1), scale);
    if (abs(values.sum() - trace) > slack) {
        throw Error(Errc::NumericalAnomaly, "eigenvalue sum drifted from the trace");
    }
    detail::sort_descending(values);
    return values;
}

template <typename Derived>
Spectrum<typename Derived::Scalar> eigenvalues(const Eigen::MatrixBase<Derived>& mtx, SpectrumKind kind,
                                               typename Derived::Scalar tol = kDefaultEigenTol)
{
    return make_spectrum(kind, jacobi_eigenvalues(mtx, tol));
}

template <typename Scalar = double>
Spectrum<Scalar> laplacian_spectrum(const Graph& g, Scalar tol = Scalar(kDefaultEigenTol))
{
    return eigenvalues(laplacian<Scalar>(g), SpectrumKind::Laplacian, tol);
}

template <typename Scalar = double>
Spectrum<Scalar> signless_laplacian_spectrum(const Graph& g, Scalar tol = Scalar(kDefaultEigenTol))
{
    return eigenvalues(signless_laplacian<Scalar>(g), SpectrumKind::SignlessLaplacian, tol);
}

/// Singular values, descending: square roots of the eigenvalues of the smaller
/// Gram matrix (B B^T when rows <= cols, else B^T B).
template <typename Derived>
DenseVector<typename Derived::Scalar> singular_values(const Eigen::MatrixBase<Derived>& b,
                                                      typename Derived::Scalar tol = kDefaultEigenTol)
{
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> gram =
        b.rows() <= b.cols() ? DenseMatrix<Scalar>(b * b.transpose()) : DenseMatrix<Scalar>(b.transpose() * b);
    // The product kernel need not round (i,j) and (j,i) identically.
    gram = (Scalar(0.5) * (gram + gram.transpose())).eval();
    DenseVector<Scalar> values = jacobi_eigenvalues(gram, tol);
    detail::snap_zeros(values, Scalar(kZeroSnap));
    return values.cwiseSqrt();
}

} // namespace denergy
