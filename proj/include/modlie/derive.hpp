#pragma once

// Derivations Der(g), inner derivations Inn(g), the outer derivation algebra
// Out(g) = Der(g)/Inn(g), and the centroid.

#include <string>
#include <vector>

#include "modlie/lie.hpp"

namespace modlie {

/// Matrix of the linear system whose kernel is Der(g). Unknown D[r][c] has
/// index r*n + c; one block of n rows per basis pair i < j.
inline Mat derivation_system(const LieAlgebra& g) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
    Mat m(ctx, pairs * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row) {
                // D[e_i,e_j]_k - [D e_i, e_j]_k - [e_i, D e_j]_k
                for (std::size_t l = 0; l < n; ++l) m.add_to(row, k * n + l, g.sc(i, j, l));
                for (std::size_t r = 0; r < n; ++r) {
                    m.add_to(row, r * n + i, ctx.neg(g.sc(r, j, k)));
                    m.add_to(row, r * n + j, ctx.neg(g.sc(i, r, k)));
                }
            }
    return m;
}

inline bool is_derivation(const LieAlgebra& g, const Mat& d) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec lhs = d * g.bracket_basis(i, j);
            Vec rhs = g.bracket(d.col(i), unit_vec(g.ctx(), n, j));
            axpy(g.ctx(), rhs, g.ctx().one(), g.bracket(unit_vec(g.ctx(), n, i), d.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

struct DerAlgebra {
    LieAlgebra base;
    std::vector<Mat> der_basis;   // canonical basis of the kernel
    std::vector<Mat> inn_basis;   // canonical basis of span{ad e_i}
    std::vector<Mat> complement;  // derivations completing inn_basis
    /// Der(g) on the basis inn_basis ++ complement.
    LieAlgebra der;
    /// Out(g) on the images of the complement.
    LieAlgebra out;
    CoordinateSystem coords;  // over flattened inn_basis ++ complement

    std::size_t der_dim() const { return der_basis.size(); }
    std::size_t inn_dim() const { return inn_basis.size(); }
    std::size_t out_dim() const { return complement.size(); }

    /// Coordinates of a derivation in the (inn, complement) basis.
    Vec proj(const Mat& d) const { return coords.coordinates(d.flatten()); }
    /// Derivation with the given (inn, complement) coordinates.
    Mat from_coordinates(const Vec& c) const {
        const std::size_t n = base.dim();
        Mat m(base.ctx(), n, n);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            const Mat& b = i < inn_dim() ? inn_basis[i] : complement[i - inn_dim()];
            m = m + b.scaled(c[i]);
        }
        return m;
    }
};

inline DerAlgebra derivations(const LieAlgebra& g) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    DerAlgebra d;
    d.base = g;
    const Subspace der = kernel(derivation_system(g));
    for (const auto& v : der.basis_vectors()) d.der_basis.push_back(Mat::unflatten(ctx, v, n, n));
    for (const auto& m : d.der_basis) ensure(is_derivation(g, m), "kernel vector is not a derivation");

    std::vector<Vec> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i).flatten());
    const Subspace inn = Subspace::span(ctx, n * n, ads);
    for (const auto& v : inn.basis_vectors()) d.inn_basis.push_back(Mat::unflatten(ctx, v, n, n));

    Subspace acc = inn;
    for (const auto& v : der.basis_vectors()) {
        if (acc.contains(v)) continue;
        d.complement.push_back(Mat::unflatten(ctx, v, n, n));
        acc = acc + Subspace::span(ctx, n * n, {v});
    }
    ensure(acc.dim() == der.dim(), "Inn is not contained in Der");

    std::vector<Vec> basis;
    for (const auto& m : d.inn_basis) basis.push_back(m.flatten());
    for (const auto& m : d.complement) basis.push_back(m.flatten());
    d.coords = CoordinateSystem(ctx, n * n, basis);

    const std::size_t r = d.inn_dim(), N = d.der_dim();
    auto at = [&](std::size_t i) -> const Mat& { return i < r ? d.inn_basis[i] : d.complement[i - r]; };
    d.der = LieAlgebra(ctx, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) d.der.set_bracket(i, j, d.proj(at(i).commutator(at(j))));
    d.out = LieAlgebra(ctx, N - r);
    for (std::size_t a = 0; a < N - r; ++a)
        for (std::size_t b = a + 1; b < N - r; ++b) {
            Vec v(N - r);
            for (std::size_t c = 0; c < N - r; ++c) v[c] = d.der.sc(r + a, r + b, r + c);
            d.out.set_bracket(a, b, v);
        }
    // Inn is an ideal: brackets with inner derivations have no complement part.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t c = r; c < N; ++c) ensure(d.der.sc(i, j, c).is_zero(), "Inn is not an ideal of Der");
    ensure(validate(d.out).ok, "Out structure constants fail validation");
    return d;
}

/// Inn(g) as a subspace of the Der algebra's coordinates (the first inn_dim axes).
inline Subspace inn_in_der(const DerAlgebra& d) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < d.inn_dim(); ++i) v.push_back(unit_vec(d.base.ctx(), d.der_dim(), i));
    return Subspace::span(d.base.ctx(), d.der_dim(), v);
}

inline SeriesReport out_solvability(const DerAlgebra& d) { return series(d.out, SeriesKind::Derived); }

struct HeisenbergProfile {
    std::size_t derived_dim = 0;                  // dim Out^(1)
    std::optional<std::size_t> nilpotency_class;  // of Out^(1), absent if dim 0 or not nilpotent
    std::optional<std::size_t> center_dim;        // of Out^(1), absent if dim 0

    bool is_heisenberg3() const { return derived_dim == 3 && nilpotency_class == 2 && center_dim == 1; }
};

inline HeisenbergProfile out_heisenberg_profile(const DerAlgebra& d) {
    HeisenbergProfile prof;
    const Subspace d1 = product_space(d.out, whole(d.out), whole(d.out));
    prof.derived_dim = d1.dim();
    if (d1.is_zero()) return prof;
    const LieAlgebra h = subalgebra(d.out, d1);
    prof.nilpotency_class = series(h, SeriesKind::LowerCentral).length;
    prof.center_dim = center(h).dim();
    return prof;
}

struct Centroid {
    std::vector<Mat> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Linear maps commuting with every ad(e_j).
inline Centroid centroid(const LieAlgebra& g) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    Mat m(ctx, n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const Mat a = g.ad(j);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l, ++row)
                for (std::size_t r = 0; r < n; ++r) {
                    // (phi a)[k][l] - (a phi)[k][l]
                    m.add_to(row, k * n + r, a.at(r, l));
                    m.add_to(row, r * n + l, ctx.neg(a.at(k, r)));
                }
    }
    Centroid c;
    for (const auto& v : kernel(m).basis_vectors()) c.basis.push_back(Mat::unflatten(ctx, v, n, n));
    return c;
}

inline bool is_central_simple(const LieAlgebra& g) {
    return is_simple(g).verdict == Simplicity::Simple && centroid(g).dim() == 1;
}

}  // namespace modlie
