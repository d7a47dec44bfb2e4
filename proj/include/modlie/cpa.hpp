#pragma once

// CPA-structures: commutative products x.y on a Lie algebra with
//   [x,y].z = x.(y.z) - y.(x.z)   and   x.[y,z] = [x.y,z] + [y,x.z].
// Enumeration, classification, and the eigenspace analysis of inner structures.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modlie/derive.hpp"
#include "modlie/polysolve.hpp"

namespace modlie {

/// Symmetric bilinear product on the basis of a Lie algebra.
class SymProduct {
public:
    SymProduct() = default;
    SymProduct(FieldCtx ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n), t_(n * n * n, 0) {}

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t dim() const { return n_; }

    /// Sets e_i.e_j = e_j.e_i = v.
    void set(std::size_t i, std::size_t j, const Vec& v) {
        require(i < n_ && j < n_ && v.size() == n_, "product entry out of range");
        for (std::size_t k = 0; k < n_; ++k) t_[(i * n_ + j) * n_ + k] = t_[(j * n_ + i) * n_ + k] = v[k].code;
    }
    FieldElem coeff(std::size_t i, std::size_t j, std::size_t k) const { return FieldElem{t_[(i * n_ + j) * n_ + k]}; }
    Vec basis_product(std::size_t i, std::size_t j) const {
        Vec v(n_);
        for (std::size_t k = 0; k < n_; ++k) v[k] = coeff(i, j, k);
        return v;
    }
    Vec product(const Vec& x, const Vec& y) const {
        std::vector<std::uint16_t> acc(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                detail::axpy_codes(ctx_, acc.data(), t_.data() + (i * n_ + j) * n_, ctx_.mul(x[i], y[j]), n_);
            }
        }
        Vec r(n_);
        for (std::size_t k = 0; k < n_; ++k) r[k] = FieldElem{acc[k]};
        return r;
    }
    /// Left multiplication L(e_i): column j is e_i.e_j.
    Mat left(std::size_t i) const {
        Mat m(ctx_, n_, n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) m.set(k, j, coeff(i, j, k));
        return m;
    }
    bool is_zero() const {
        return std::all_of(t_.begin(), t_.end(), [](std::uint16_t c) { return c == 0; });
    }

    /// Number of independent coefficients: n * n(n+1)/2.
    static std::size_t coordinate_count(std::size_t n) { return n * n * (n + 1) / 2; }
    /// Index of the coefficient of e_k in e_i.e_j (i <= j): pairs in
    /// lexicographic order, then k.
    static std::size_t coordinate_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
        if (i > j) std::swap(i, j);
        const std::size_t pair = i * n - i * (i - 1) / 2 + (j - i);
        return pair * n + k;
    }
    Vec coordinates() const {
        Vec v(coordinate_count(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) v[coordinate_index(n_, i, j, k)] = coeff(i, j, k);
        return v;
    }
    static SymProduct from_coordinates(const FieldCtx& ctx, std::size_t n, const Vec& c) {
        require(c.size() == coordinate_count(n), "product coordinates have the wrong length");
        SymProduct p(ctx, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Vec v(n);
                for (std::size_t k = 0; k < n; ++k) v[k] = c[coordinate_index(n, i, j, k)];
                p.set(i, j, v);
            }
        return p;
    }

    friend bool operator==(const SymProduct& a, const SymProduct& b) {
        return a.n_ == b.n_ && a.ctx_ == b.ctx_ && a.t_ == b.t_;
    }

private:
    FieldCtx ctx_;
    std::size_t n_ = 0;
    std::vector<std::uint16_t> t_;
};

/// e_i.e_j = [e_i, e_j] for i < j and e_i.e_i = 0. This is the bracket itself
/// only in characteristic 2.
inline SymProduct adjoint_product(const LieAlgebra& g) {
    SymProduct p(g.ctx(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) p.set(i, j, g.bracket_basis(i, j));
    return p;
}

/// x.y = [phi(x), y] on basis vectors (not necessarily symmetric).
inline std::function<Vec(std::size_t, std::size_t)> inner_table(const LieAlgebra& g, const Mat& phi) {
    return [&g, phi](std::size_t i, std::size_t j) { return g.bracket(phi.col(i), unit_vec(g.ctx(), g.dim(), j)); };
}

struct CpaCheck {
    bool ok = true;
    int axiom = 0;  // 4 (commutativity), 5 or 6
    std::array<std::size_t, 3> triple{};  // 0-based basis indices
    std::string message;
};

/// Checks the three axioms for an arbitrary bilinear table on basis vectors.
inline CpaCheck check_cpa_table(const LieAlgebra& g, const std::function<Vec(std::size_t, std::size_t)>& prod) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    std::vector<Vec> P(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P[i * n + j] = prod(i, j);
    auto fail = [&](int ax, std::size_t a, std::size_t b, std::size_t c) {
        return CpaCheck{false, ax, {a, b, c},
                        "axiom (" + std::to_string(ax) + ") fails at (e" + std::to_string(a + 1) + ", e" + std::to_string(b + 1) +
                            (ax == 4 ? ")" : ", e" + std::to_string(c + 1) + ")")};
    };
    auto mul = [&](const Vec& x, const Vec& y) {
        Vec r = zero_vec(ctx, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!y[j].is_zero()) axpy(ctx, r, ctx.mul(x[i], y[j]), P[i * n + j]);
        }
        return r;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (P[i * n + j] != P[j * n + i]) return fail(4, i, j, 0);
    const FieldElem m1 = ctx.neg(ctx.one());
    // (5) [x,y].z = x.(y.z) - y.(x.z)
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Vec ex = unit_vec(ctx, n, x), ey = unit_vec(ctx, n, y);
                Vec lhs = mul(g.bracket_basis(x, y), unit_vec(ctx, n, z));
                axpy(ctx, lhs, m1, mul(ex, P[y * n + z]));
                axpy(ctx, lhs, ctx.one(), mul(ey, P[x * n + z]));
                if (!is_zero(lhs)) return fail(5, x, y, z);
            }
    // (6) x.[y,z] = [x.y,z] + [y,x.z]
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                Vec lhs = mul(unit_vec(ctx, n, x), g.bracket_basis(y, z));
                axpy(ctx, lhs, m1, g.bracket(P[x * n + y], unit_vec(ctx, n, z)));
                axpy(ctx, lhs, m1, g.bracket(unit_vec(ctx, n, y), P[x * n + z]));
                if (!is_zero(lhs)) return fail(6, x, y, z);
            }
    return {};
}

inline CpaCheck is_cpa(const LieAlgebra& g, const SymProduct& p) {
    require(p.dim() == g.dim() && p.ctx() == g.ctx(), "product does not match the algebra");
    return check_cpa_table(g, [&](std::size_t i, std::size_t j) { return p.basis_product(i, j); });
}

/// Products satisfying commutativity and x.[y,z] = [x.y,z] + [y,x.z], as a
/// subspace of product coordinates. Computed by writing L(e_i) in a basis of
/// Der(g) and imposing L(e_i)e_j = L(e_j)e_i.
inline Subspace cpa_linear_space(const LieAlgebra& g, const DerAlgebra& d) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim(), D = d.der_dim();
    const std::size_t nv = n * D;  // lambda_{i,s} at index i*D + s
    Mat sys(ctx, n * (n - (n ? 1 : 0)) / 2 * n, nv);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row)
                for (std::size_t s = 0; s < D; ++s) {
                    sys.add_to(row, i * D + s, d.der_basis[s].at(k, j));
                    sys.add_to(row, j * D + s, ctx.neg(d.der_basis[s].at(k, i)));
                }
    const Subspace lam = kernel(sys);
    std::vector<Vec> prods;
    for (const auto& l : lam.basis_vectors()) {
        Vec c = zero_vec(ctx, SymProduct::coordinate_count(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < D; ++s) {
                const FieldElem a = l[i * D + s];
                if (a.is_zero()) continue;
                for (std::size_t j = i; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        const std::size_t idx = SymProduct::coordinate_index(n, i, j, k);
                        c[idx] = ctx.add(c[idx], ctx.mul(a, d.der_basis[s].at(k, j)));
                    }
            }
        prods.push_back(std::move(c));
    }
    return Subspace::span(ctx, SymProduct::coordinate_count(n), prods);
}

inline Subspace cpa_linear_space(const LieAlgebra& g) { return cpa_linear_space(g, derivations(g)); }

inline constexpr std::size_t kMaxCpaLinearDim = 24;

struct CpaResult {
    std::vector<SymProduct> products;  // in canonical order of their coordinates
    bool complete = true;
    std::size_t linear_dim = 0;
    std::size_t equations = 0;
    unsigned long long nodes = 0;
};

/// Quadratic system for the coefficients u_1..u_k of P = sum u_t B_t over a
/// basis B_t of the linear space, from [x,y].z = x.(y.z) - y.(x.z).
inline PolySystem cpa_quadratic_system(const LieAlgebra& g, const std::vector<SymProduct>& basis) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim(), k = basis.size();
    PolySystem sys{ctx, k, {}, {}};
    for (std::size_t t = 0; t < k; ++t) sys.names.push_back("u" + std::to_string(t + 1));
    std::vector<Mat> L;  // L[t*n + i] = left multiplication by e_i in B_t
    for (const auto& b : basis)
        for (std::size_t i = 0; i < n; ++i) L.push_back(b.left(i));
    const FieldElem m1 = ctx.neg(ctx.one());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::vector<std::vector<Term>> eq(n);
                const Vec xy = g.bracket_basis(x, y);
                for (std::size_t t = 0; t < k; ++t) {
                    const Vec lin = basis[t].product(xy, unit_vec(ctx, n, z));
                    for (std::size_t c = 0; c < n; ++c)
                        if (!lin[c].is_zero()) eq[c].push_back({Monomial(1, static_cast<char16_t>(t)), lin[c]});
                }
                for (std::size_t t = 0; t < k; ++t)
                    for (std::size_t s = 0; s < k; ++s) {
                        // u_t u_s (B_t(e_x, B_s(e_y, e_z)) - B_t(e_y, B_s(e_x, e_z)))
                        Vec v = L[t * n + x] * basis[s].basis_product(y, z);
                        axpy(ctx, v, m1, L[t * n + y] * basis[s].basis_product(x, z));
                        Monomial mono{static_cast<char16_t>(std::min(t, s)), static_cast<char16_t>(std::max(t, s))};
                        for (std::size_t c = 0; c < n; ++c)
                            if (!v[c].is_zero()) eq[c].push_back({mono, ctx.neg(v[c])});
                    }
                for (auto& terms : eq)
                    if (!terms.empty()) sys.add(MultiPoly(ctx, k, std::move(terms)));
            }
    sys.normalize();
    return sys;
}

/// All CPA-structures on g. Throws BudgetExceeded when the linear stage leaves
/// more than max_linear_dim unknowns.
inline CpaResult cpa_all(const LieAlgebra& g, unsigned long long budget = kDefaultSolverBudget,
                         std::size_t max_linear_dim = kMaxCpaLinearDim) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    CpaResult res;
    const Subspace lin = cpa_linear_space(g);
    res.linear_dim = lin.dim();
    if (lin.dim() > max_linear_dim)
        throw BudgetExceeded("cpa_all: linear stage leaves " + std::to_string(lin.dim()) + " unknowns (limit " +
                             std::to_string(max_linear_dim) + ")");
    std::vector<SymProduct> basis;
    for (const auto& v : lin.basis_vectors()) basis.push_back(SymProduct::from_coordinates(ctx, n, v));
    const PolySystem sys = cpa_quadratic_system(g, basis);
    res.equations = sys.equations.size();
    const SolutionSet sol = solve_all(sys, budget);
    res.complete = sol.complete;
    res.nodes = sol.nodes;
    for (const auto& pt : sol.points) {
        Vec c = zero_vec(ctx, SymProduct::coordinate_count(n));
        for (std::size_t t = 0; t < basis.size(); ++t) axpy(ctx, c, pt[t], lin.basis_vector(t));
        SymProduct p = SymProduct::from_coordinates(ctx, n, c);
        ensure(is_cpa(g, p).ok, "enumerated product fails the CPA axioms");
        res.products.push_back(std::move(p));
    }
    std::sort(res.products.begin(), res.products.end(), [](const SymProduct& a, const SymProduct& b) {
        const Vec x = a.coordinates(), y = b.coordinates();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    return res;
}

enum class CpaTag { Trivial, Adjoint, InnerNontrivial, Other };

inline const char* to_string(CpaTag t) {
    switch (t) {
        case CpaTag::Trivial: return "trivial";
        case CpaTag::Adjoint: return "adjoint";
        case CpaTag::InnerNontrivial: return "inner";
        default: return "other";
    }
}

struct CpaClassification {
    CpaTag tag = CpaTag::Other;
    std::optional<Mat> phi;  // x.y = [phi(x), y]
    std::vector<std::string> notes;
};

inline bool is_endomorphism(const LieAlgebra& g, const Mat& phi) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            if (phi * g.bracket_basis(i, j) != g.bracket(phi.col(i), phi.col(j))) return false;
    return true;
}

inline CpaClassification classify(const LieAlgebra& g, const SymProduct& p) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    CpaClassification c;
    if (p.is_zero()) {
        c.tag = CpaTag::Trivial;
        c.phi = Mat(ctx, n, n);
        return c;
    }
    if (ctx.p() == 2 && p == adjoint_product(g)) {
        c.tag = CpaTag::Adjoint;
        c.phi = Mat::identity(ctx, n);
        return c;
    }
    if (!center(g).is_zero()) {
        c.notes.push_back("center is nonzero; no inner endomorphism recovered");
        return c;
    }
    // phi(e_i) = v with [v, e_j] = e_i.e_j for all j
    Mat sys(ctx, n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) sys.set(j * n + k, l, g.sc(l, j, k));
    Mat phi(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec rhs(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) rhs[j * n + k] = p.coeff(i, j, k);
        const auto v = solve(sys, rhs);
        if (!v) {
            c.notes.push_back("left multiplication by e" + std::to_string(i + 1) + " is not an inner derivation");
            return c;
        }
        phi.set_col(i, *v);
    }
    ensure(is_endomorphism(g, phi), "recovered phi is not an endomorphism");
    c.tag = CpaTag::InnerNontrivial;
    c.phi = std::move(phi);
    return c;
}

struct EigenDecomposition {
    FieldCtx field;        // splitting field of charpoly(phi)
    Embedding embedding;   // base field -> field
    LieAlgebra algebra;    // g over field
    Mat phi;               // phi over field
    UniPoly charpoly;      // over the base field
    std::vector<std::pair<FieldElem, Subspace>> spaces;  // eigenvalue -> generalized eigenspace
    Subspace n, h;

    /// Generalized eigenspace for a (zero space if a is not an eigenvalue).
    Subspace space(FieldElem a) const {
        for (const auto& [v, s] : spaces)
            if (v == a) return s;
        return Subspace::zero(field, algebra.dim());
    }
};

inline EigenDecomposition eigen_decompose(const LieAlgebra& g, const Mat& phi) {
    const std::size_t n = g.dim();
    require(phi.rows() == n && phi.cols() == n, "eigen_decompose: phi has the wrong shape");
    EigenDecomposition e;
    e.charpoly = charpoly(phi);
    const SplittingField sf = splitting_extension(e.charpoly);
    e.field = sf.field;
    e.embedding = sf.embedding;
    e.algebra = extend_scalars(g, sf.embedding);
    e.phi = map_matrix(phi, sf.embedding);
    const FieldCtx& F = e.field;
    std::size_t total = 0;
    Subspace sum = Subspace::zero(F, n);
    for (const auto& r : poly_roots(sf.embedding.map(e.charpoly))) {
        Subspace s = gen_eigenspace(e.phi, r.value);
        ensure(s.dim() == r.multiplicity, "generalized eigenspace dimension differs from root multiplicity");
        total += s.dim();
        sum = sum + s;
        e.spaces.emplace_back(r.value, std::move(s));
    }
    ensure(total == n && sum.is_full(), "generalized eigenspaces do not form a direct sum decomposition");
    for (const auto& [a, sa] : e.spaces)
        for (const auto& [b, sb] : e.spaces) {
            const Subspace prod = product_space(e.algebra, sa, sb);
            if (prod.is_zero()) continue;
            const Subspace target = intersection(intersection(e.space(F.neg(F.mul(a, a))), e.space(F.mul(a, b))),
                                                 e.space(F.neg(F.mul(b, b))));
            if (!target.contains(prod))
                throw InputError("eigenspace bracket containment fails for eigenvalues " + F.format(a) + " and " + F.format(b) +
                                 "; phi does not define an inner CPA-structure");
            if (!F.add(a, b).is_zero())
                throw InputError("nonzero bracket between eigenspaces whose eigenvalues do not sum to zero");
        }
    e.n = e.space(F.zero());
    e.h = Subspace::zero(F, n);
    for (const auto& [a, s] : e.spaces)
        if (!a.is_zero()) e.h = e.h + s;
    ensure(is_ideal(e.algebra, e.n) && is_ideal(e.algebra, e.h), "n or h is not an ideal");
    return e;
}

struct NhReport {
    bool componentwise = false;        // n.h = 0, n.n in n, h.h in h
    bool n_inf_annihilates_n = false;  // n^oo . n = 0
    std::optional<bool> h_metabelian;  // p != 2: [[h,h],[h,h]] = 0
    std::optional<bool> h_adjoint;     // p == 2: v.w = [v,w] for v in [h,[h,h]], w in h
    bool all() const {
        return componentwise && n_inf_annihilates_n && h_metabelian.value_or(true) && h_adjoint.value_or(true);
    }
};

inline NhReport nh_properties(const EigenDecomposition& e) {
    const LieAlgebra& g = e.algebra;
    auto prod = [&](const Vec& x, const Vec& y) { return g.bracket(e.phi * x, y); };
    auto products_in = [&](const Subspace& a, const Subspace& b, const Subspace& target) {
        for (const auto& x : a.basis_vectors())
            for (const auto& y : b.basis_vectors())
                if (!target.contains(prod(x, y)) || !target.contains(prod(y, x))) return false;
        return true;
    };
    const Subspace zero = Subspace::zero(g.ctx(), g.dim());
    NhReport r;
    r.componentwise = products_in(e.n, e.h, zero) && products_in(e.n, e.n, e.n) && products_in(e.h, e.h, e.h);
    const Subspace n_inf = series(g, SeriesKind::LowerCentral, e.n).limit();
    r.n_inf_annihilates_n = products_in(n_inf, e.n, zero);
    const Subspace hh = product_space(g, e.h, e.h);
    if (g.ctx().p() != 2) {
        r.h_metabelian = product_space(g, hh, hh).is_zero();
    } else {
        const Subspace hhh = product_space(g, e.h, hh);
        bool ok = true;
        for (const auto& v : hhh.basis_vectors())
            for (const auto& w : e.h.basis_vectors()) ok = ok && prod(v, w) == g.bracket(v, w);
        r.h_adjoint = ok;
    }
    return r;
}

inline NhReport nh_properties(const LieAlgebra& g, const Mat& phi) { return nh_properties(eigen_decompose(g, phi)); }

/// f(1) = 1, f(n+1) = 2 f(n) + 1, i.e. f(n) = 2^n - 1.
inline unsigned long long commutator_exponent(unsigned n) { return (1ULL << n) - 1; }

struct CommutatorDepth {
    unsigned depth = 0;
    unsigned long long tuples = 0;
    bool plus = true;   // left = +right on every tested tuple
    bool minus = true;  // left = -right on every tested tuple
    bool mixed_ok = true;  // each tuple matched one of the signs
    std::string sign() const { return plus && minus ? "+/-" : plus ? "+" : minus ? "-" : mixed_ok ? "mixed" : "none"; }
};

struct CommutatorReport {
    bool ok = true;
    std::vector<CommutatorDepth> depths;
    std::optional<std::vector<std::size_t>> counterexample;  // x_1..x_n, y (0-based)
};

/// Checks [x_1,...,x_n].y = +-[[x_1,...,x_n], phi^f(n)(y)] with right-normed
/// brackets [x_1,[x_2,...]] on basis tuples, exhaustively when there are at
/// most max_tuples of them and on a fixed pseudo-random sample otherwise.
inline CommutatorReport commutator_formula_check(const LieAlgebra& g, const Mat& phi, unsigned depth = 4,
                                                 unsigned long long max_tuples = 20000, std::uint64_t seed = 7) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    CommutatorReport rep;
    std::mt19937_64 rng(seed);
    for (unsigned d = 1; d <= depth; ++d) {
        CommutatorDepth cd;
        cd.depth = d;
        const Mat pw = phi.pow(static_cast<unsigned>(commutator_exponent(d)));
        unsigned long long total = 1;
        bool exhaustive = true;
        for (unsigned i = 0; i <= d; ++i) {
            if (total > max_tuples / std::max<std::size_t>(n, 1)) exhaustive = false;
            total *= n;
        }
        const unsigned long long count = exhaustive ? total : max_tuples;
        std::vector<std::size_t> idx(d + 1);
        for (unsigned long long c = 0; c < count; ++c) {
            if (exhaustive) {
                unsigned long long x = c;
                for (unsigned i = d + 1; i-- > 0;) {
                    idx[i] = x % n;
                    x /= n;
                }
            } else {
                for (auto& v : idx) v = rng() % n;
            }
            Vec b = unit_vec(ctx, n, idx[d - 1]);
            for (unsigned i = d - 1; i-- > 0;) b = g.bracket(unit_vec(ctx, n, idx[i]), b);
            const Vec y = unit_vec(ctx, n, idx[d]);
            const Vec left = g.bracket(phi * b, y);
            const Vec right = g.bracket(b, pw * y);
            Vec neg = right;
            for (auto& v : neg) v = ctx.neg(v);
            const bool p = left == right, m = left == neg;
            cd.plus = cd.plus && p;
            cd.minus = cd.minus && m;
            if (!p && !m) {
                cd.mixed_ok = false;
                rep.ok = false;
                if (!rep.counterexample) rep.counterexample = idx;
            }
            ++cd.tuples;
        }
        rep.depths.push_back(cd);
    }
    return rep;
}

}  // namespace modlie
