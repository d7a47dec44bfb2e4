#pragma once

// Named constructors: gl, sl, psl, Jacobson-Witt W(m;1), Hamiltonian H(2;1)^(2)
// and a few fixed tables.

#include <string>
#include <vector>

#include "modlie/lie.hpp"

namespace modlie {

/// Truncated polynomial algebra O(m;1) = F_p[x_1..x_m]/(x_i^p). Monomials are
/// indexed with x_1's exponent most significant.
struct TruncatedPolyAlgebra {
    unsigned p = 0;
    unsigned m = 0;

    std::size_t dim() const {
        std::size_t d = 1;
        for (unsigned i = 0; i < m; ++i) d *= p;
        return d;
    }
    std::vector<unsigned> exponents(std::size_t idx) const {
        std::vector<unsigned> a(m);
        for (unsigned i = m; i-- > 0;) {
            a[i] = static_cast<unsigned>(idx % p);
            idx /= p;
        }
        return a;
    }
    /// Index of x^a, or nullopt when some exponent reaches p.
    std::optional<std::size_t> index(const std::vector<int>& a) const {
        std::size_t idx = 0;
        for (unsigned i = 0; i < m; ++i) {
            if (a[i] < 0 || a[i] >= static_cast<int>(p)) return std::nullopt;
            idx = idx * p + static_cast<unsigned>(a[i]);
        }
        return idx;
    }
    std::string monomial(std::size_t idx) const {
        const auto a = exponents(idx);
        std::string s;
        for (unsigned i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += m == 1 ? std::string("x") : "x" + std::to_string(i + 1);
            if (a[i] > 1) s += "^" + std::to_string(a[i]);
        }
        return s.empty() ? "1" : s;
    }
};

namespace detail {

/// Lie algebra spanned by the given matrices, assumed closed under commutators.
inline LieAlgebra matrix_algebra(const FieldCtx& ctx, const std::vector<Mat>& basis) {
    const std::size_t n = basis.size();
    const std::size_t N = basis.empty() ? 0 : basis[0].rows() * basis[0].cols();
    std::vector<Vec> flat;
    for (const auto& b : basis) flat.push_back(b.flatten());
    const CoordinateSystem cs(ctx, N, flat);
    LieAlgebra g(ctx, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_bracket(i, j, cs.coordinates(basis[i].commutator(basis[j]).flatten()));
    return g;
}

inline Mat matrix_unit(const FieldCtx& ctx, std::size_t n, std::size_t i, std::size_t j) {
    Mat m(ctx, n, n);
    m.set(i, j, ctx.one());
    return m;
}

}  // namespace detail

/// gl(n): basis E_ij in row-major order.
inline LieAlgebra gl(std::size_t n, const FieldCtx& ctx) {
    require(n >= 1, "gl: n must be at least 1");
    std::vector<Mat> basis;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis.push_back(detail::matrix_unit(ctx, n, i, j));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    LieAlgebra g = detail::matrix_algebra(ctx, basis);
    g.set_labels(std::move(labels));
    g.set_name("gl(" + std::to_string(n) + ", F_" + std::to_string(ctx.q()) + ")");
    return g;
}

/// sl(n): off-diagonal E_ij in row-major order, then E_ii - E_{i+1,i+1}.
inline LieAlgebra sl(std::size_t n, const FieldCtx& ctx) {
    require(n >= 2, "sl: n must be at least 2");
    std::vector<Mat> basis;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            basis.push_back(detail::matrix_unit(ctx, n, i, j));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Mat h = detail::matrix_unit(ctx, n, i, i);
        h.set(i + 1, i + 1, ctx.neg(ctx.one()));
        basis.push_back(std::move(h));
        labels.push_back("H" + std::to_string(i + 1));
    }
    LieAlgebra g = detail::matrix_algebra(ctx, basis);
    g.set_labels(std::move(labels));
    g.set_name("sl(" + std::to_string(n) + ", F_" + std::to_string(ctx.q()) + ")");
    if (n % ctx.p() != 0 && !(n == 2 && ctx.p() == 2)) g.set_known_simple(true);
    return g;
}

/// psl(n) = sl(n) / center.
inline LieAlgebra psl(std::size_t n, const FieldCtx& ctx) {
    const LieAlgebra s = sl(n, ctx);
    LieAlgebra g = quotient(s, center(s)).algebra;
    g.set_name("psl(" + std::to_string(n) + ", F_" + std::to_string(ctx.q()) + ")");
    if (n >= 3 || ctx.p() != 2) g.set_known_simple(true);
    return g;
}

/// W(m;1) = Der O(m;1): basis x^a d_i at index i * p^m + index(a).
inline LieAlgebra jacobson_witt(unsigned m, const FieldCtx& ctx) {
    require(m >= 1, "jacobson_witt: m must be at least 1");
    require(ctx.is_prime_field(), "jacobson_witt: prime field required");
    const TruncatedPolyAlgebra O{ctx.p(), m};
    const std::size_t P = O.dim(), n = m * P;
    LieAlgebra g(ctx, n);
    // x^a d_i (x^b d_j) = b_i x^{a + b - eps_i} d_j
    auto apply = [&](std::size_t a, unsigned i, std::size_t b, unsigned j, FieldElem sign, Vec& out) {
        const auto ea = O.exponents(a), eb = O.exponents(b);
        if (eb[i] == 0) return;
        std::vector<int> c(m);
        for (unsigned k = 0; k < m; ++k) c[k] = static_cast<int>(ea[k] + eb[k]) - (k == i ? 1 : 0);
        const auto idx = O.index(c);
        if (!idx) return;
        const std::size_t t = j * P + *idx;
        out[t] = ctx.add(out[t], ctx.mul(sign, ctx.from_int(eb[i])));
    };
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const unsigned i = static_cast<unsigned>(u / P), j = static_cast<unsigned>(v / P);
            const std::size_t a = u % P, b = v % P;
            Vec out = zero_vec(ctx, n);
            apply(a, i, b, j, ctx.one(), out);
            apply(b, j, a, i, ctx.neg(ctx.one()), out);
            g.set_bracket(u, v, out);
        }
    std::vector<std::string> labels;
    for (std::size_t u = 0; u < n; ++u) {
        const std::string mono = O.monomial(u % P);
        const std::string d = m == 1 ? "d" : "d" + std::to_string(u / P + 1);
        labels.push_back(mono == "1" ? d : mono + "*" + d);
    }
    g.set_labels(std::move(labels));
    g.set_name("W(" + std::to_string(m) + ";1) over F_" + std::to_string(ctx.p()));
    if (!(ctx.p() == 2 && m == 1)) g.set_known_simple(true);
    return g;
}

/// H(2;1)^(2): Poisson bracket on O(2;1), modulo constants, second derived algebra.
inline LieAlgebra hamiltonian_p2(const FieldCtx& ctx) {
    require(ctx.is_prime_field(), "hamiltonian_p2: prime field required");
    require(ctx.p() >= 3, "hamiltonian_p2: characteristic 2 is not supported");
    const unsigned p = ctx.p();
    const TruncatedPolyAlgebra O{p, 2};
    const std::size_t N = O.dim();
    LieAlgebra poisson(ctx, N);
    for (std::size_t u = 0; u < N; ++u)
        for (std::size_t v = u + 1; v < N; ++v) {
            const auto ea = O.exponents(u), eb = O.exponents(v);
            const long long coef = static_cast<long long>(ea[0]) * eb[1] - static_cast<long long>(ea[1]) * eb[0];
            Vec out = zero_vec(ctx, N);
            if (coef % p != 0) {
                const auto idx = O.index({static_cast<int>(ea[0] + eb[0]) - 1, static_cast<int>(ea[1] + eb[1]) - 1});
                if (idx) out[*idx] = ctx.from_int(coef);
            }
            poisson.set_bracket(u, v, out);
        }
    std::vector<std::string> mono;
    for (std::size_t u = 0; u < N; ++u) mono.push_back(O.monomial(u));
    poisson.set_labels(mono);
    const Quotient q = quotient(poisson, Subspace::span(ctx, N, {unit_vec(ctx, N, 0)}));
    const auto ds = series(q.algebra, SeriesKind::Derived);
    // The series may stabilize before the second step; the last term is then g^(2).
    const Subspace& top = ds.terms[std::min<std::size_t>(2, ds.terms.size() - 1)];
    LieAlgebra h = subalgebra(q.algebra, top);
    std::vector<std::string> labels;
    for (const auto& v : top.basis_vectors()) {
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) ++nz, at = i;
        if (nz != 1 || v[at] != ctx.one()) {
            labels.clear();
            break;
        }
        labels.push_back(q.algebra.labels()[at]);
    }
    h.set_labels(std::move(labels));
    h.set_name("H(2;1)^(2) over F_" + std::to_string(p));
    h.set_known_simple(true);
    return h;
}

namespace detail {

struct TableEntry {
    std::size_t i, j;  // 1-based
    std::vector<std::pair<long long, std::size_t>> terms;  // (coefficient, 1-based index)
};

inline LieAlgebra from_table(const FieldCtx& ctx, std::size_t n, const std::vector<TableEntry>& table) {
    LieAlgebra g(ctx, n);
    for (const auto& e : table) {
        Vec v = zero_vec(ctx, n);
        for (auto [c, k] : e.terms) v[k - 1] = ctx.add(v[k - 1], ctx.from_int(c));
        g.set_bracket(e.i - 1, e.j - 1, v);
    }
    return g;
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"w3", "g6", "psl3f3-table"};
    return names;
}

/// Fixed tables: "w3" (3-dim simple over F_2, basis e, f, h), "g6" (6-dim over
/// F_2) and "psl3f3-table" (psl(3) over F_3 in the basis e1..e7).
inline LieAlgebra builtin(const std::string& name) {
    LieAlgebra g;
    if (name == "w3") {
        g = detail::from_table(FieldCtx::prime(2), 3, {{1, 2, {{1, 3}}}, {1, 3, {{1, 1}}}, {2, 3, {{1, 2}}}});
        g.set_labels({"e", "f", "h"});
        g.set_known_simple(true);
    } else if (name == "g6") {
        g = detail::from_table(FieldCtx::prime(2), 6,
                               {{1, 2, {{1, 3}}},
                                {1, 3, {{1, 4}}},
                                {1, 4, {{1, 5}}},
                                {1, 5, {{1, 2}, {1, 4}}},
                                {2, 3, {{1, 1}}},
                                {2, 5, {{1, 1}, {1, 6}}},
                                {2, 6, {{1, 3}, {1, 5}}},
                                {3, 4, {{1, 1}, {1, 6}}},
                                {3, 6, {{1, 2}}},
                                {4, 5, {{1, 6}}},
                                {4, 6, {{1, 3}}},
                                {5, 6, {{1, 4}}}});
        g.set_labels({"x1", "x2", "x3", "x4", "x5", "x6"});
        g.set_known_simple(true);
    } else if (name == "psl3f3-table") {
        g = detail::from_table(FieldCtx::prime(3), 7,
                               {{1, 3, {{1, 7}}},
                                {1, 4, {{1, 2}}},
                                {1, 5, {{-1, 6}}},
                                {1, 7, {{-2, 1}}},
                                {2, 3, {{-1, 4}}},
                                {2, 5, {{2, 7}}},
                                {2, 6, {{1, 1}}},
                                {2, 7, {{-1, 2}}},
                                {3, 6, {{-1, 5}}},
                                {3, 7, {{2, 3}}},
                                {4, 5, {{1, 3}}},
                                {4, 6, {{1, 7}}},
                                {4, 7, {{1, 4}}},
                                {5, 7, {{1, 5}}},
                                {6, 7, {{-1, 6}}}});
        g.set_labels({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
        g.set_known_simple(true);
    } else {
        throw InputError("unknown builtin algebra '" + name + "'");
    }
    g.set_name(name);
    validate_or_throw(g);
    return g;
}

}  // namespace modlie
