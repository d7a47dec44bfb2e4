#pragma once

// Lie algebras given by structure constants: validation, brackets, series,
// center, ideals, quotients, subalgebras, direct sums, change of scalars and
// simplicity testing.

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/matrix.hpp"
#include "modlie/poly.hpp"

namespace modlie {

class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Abelian algebra of dimension n; brackets are filled in with set_bracket.
    LieAlgebra(FieldCtx ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n), sc_(n * n * n, 0) {}

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t dim() const { return n_; }

    /// Sets [e_i, e_j] = v and [e_j, e_i] = -v. Requires i != j.
    void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
        require(i < n_ && j < n_ && i != j, "bracket key out of range or diagonal");
        require(v.size() == n_, "bracket value has wrong length");
        for (std::size_t k = 0; k < n_; ++k) {
            sc_[idx(i, j, k)] = v[k].code;
            sc_[idx(j, i, k)] = ctx_.neg(v[k]).code;
        }
    }

    FieldElem sc(std::size_t i, std::size_t j, std::size_t k) const { return FieldElem{sc_[idx(i, j, k)]}; }

    /// [e_i, e_j] as a coordinate vector.
    Vec bracket_basis(std::size_t i, std::size_t j) const {
        Vec v(n_);
        for (std::size_t k = 0; k < n_; ++k) v[k] = sc(i, j, k);
        return v;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        require(x.size() == n_ && y.size() == n_, "bracket: dimension mismatch");
        std::vector<std::uint16_t> acc(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero() || i == j) continue;
                detail::axpy_codes(ctx_, acc.data(), sc_.data() + idx(i, j, 0), ctx_.mul(x[i], y[j]), n_);
            }
        }
        Vec r(n_);
        for (std::size_t k = 0; k < n_; ++k) r[k] = FieldElem{acc[k]};
        return r;
    }

    /// Matrix of ad(e_i): column j is [e_i, e_j].
    Mat ad(std::size_t i) const {
        Mat m(ctx_, n_, n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) m.set(k, j, sc(i, j, k));
        return m;
    }
    Mat ad(const Vec& x) const {
        Mat m(ctx_, n_, n_);
        for (std::size_t j = 0; j < n_; ++j) m.set_col(j, bracket(x, unit_vec(ctx_, n_, j)));
        return m;
    }

    bool is_abelian() const {
        return std::all_of(sc_.begin(), sc_.end(), [](std::uint16_t c) { return c == 0; });
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) {
        require(l.empty() || l.size() == n_, "label count mismatch");
        labels_ = std::move(l);
    }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Constructor-supplied simplicity claim; reported next to computed verdicts.
    std::optional<bool> known_simple() const { return known_simple_; }
    void set_known_simple(std::optional<bool> v) { known_simple_ = v; }

    /// Exact equality of field and structure constants.
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.n_ == b.n_ && a.ctx_ == b.ctx_ && a.sc_ == b.sc_;
    }

private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

    FieldCtx ctx_;
    std::size_t n_ = 0;
    std::vector<std::uint16_t> sc_;
    std::vector<std::string> labels_;
    std::string name_;
    std::optional<bool> known_simple_;
};

struct ValidationReport {
    bool ok = true;
    std::optional<std::array<std::size_t, 3>> triple;  // 0-based, first failing Jacobi triple
    std::string message;
};

/// Checks the Jacobi identity on all basis triples i < j < k. Alternation is
/// enforced by storage.
inline ValidationReport validate(const LieAlgebra& g) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.sc(i, j, k) != ctx.neg(g.sc(j, i, k)) || (i == j && !g.sc(i, i, k).is_zero()))
                    return {false, std::array<std::size_t, 3>{i, j, k}, "bracket table is not alternating"};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec ei = unit_vec(ctx, n, i), ej = unit_vec(ctx, n, j), ek = unit_vec(ctx, n, k);
                Vec s = g.bracket(ei, g.bracket_basis(j, k));
                const Vec t = g.bracket(ej, g.bracket_basis(k, i));
                const Vec u = g.bracket(ek, g.bracket_basis(i, j));
                for (std::size_t l = 0; l < n; ++l) s[l] = ctx.add(s[l], ctx.add(t[l], u[l]));
                if (!is_zero(s)) {
                    return {false, std::array<std::size_t, 3>{i, j, k},
                            "Jacobi identity fails for (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                ", e" + std::to_string(k + 1) + ")"};
                }
            }
    return {};
}

inline void validate_or_throw(const LieAlgebra& g) {
    const auto r = validate(g);
    if (!r.ok) throw InputError(r.message);
}

/// Span of [a, b] over basis vectors a of A and b of B.
inline Subspace product_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> vecs;
    const auto av = a.basis_vectors();
    const auto bv = b.basis_vectors();
    for (const auto& x : av)
        for (const auto& y : bv) {
            Vec v = g.bracket(x, y);
            if (!is_zero(v)) vecs.push_back(std::move(v));
        }
    return Subspace::span(g.ctx(), g.dim(), vecs);
}

inline Subspace whole(const LieAlgebra& g) { return Subspace::full(g.ctx(), g.dim()); }

enum class SeriesKind { Derived, LowerCentral };

struct SeriesReport {
    SeriesKind kind = SeriesKind::Derived;
    std::vector<Subspace> terms;  // terms[0] = g, strictly decreasing
    bool stabilized = false;      // last term is a nonzero fixed point
    /// Number of steps to reach 0 (derived length, or nilpotency class for the
    /// lower central series); absent when the series stabilizes above 0.
    std::optional<std::size_t> length;

    const Subspace& limit() const { return terms.back(); }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& t : terms) d.push_back(t.dim());
        return d;
    }
};

/// Series starting at the subspace `start` (default: all of g). For the lower
/// central series the next term is [start, current].
inline SeriesReport series(const LieAlgebra& g, SeriesKind kind, std::optional<Subspace> start = std::nullopt) {
    SeriesReport r;
    r.kind = kind;
    const Subspace base = start ? *start : whole(g);
    r.terms.push_back(base);
    for (;;) {
        const Subspace& cur = r.terms.back();
        if (cur.is_zero()) {
            r.length = r.terms.size() - 1;
            return r;
        }
        Subspace next = kind == SeriesKind::Derived ? product_space(g, cur, cur) : product_space(g, base, cur);
        if (next == cur) {
            r.stabilized = true;
            return r;
        }
        r.terms.push_back(std::move(next));
    }
}

inline std::optional<std::size_t> derived_length(const LieAlgebra& g) { return series(g, SeriesKind::Derived).length; }
/// g^(oo)
inline Subspace g_inf_derived(const LieAlgebra& g) { return series(g, SeriesKind::Derived).limit(); }
/// g^oo
inline Subspace g_inf_lower(const LieAlgebra& g) { return series(g, SeriesKind::LowerCentral).limit(); }
inline bool is_perfect(const LieAlgebra& g) { return product_space(g, whole(g), whole(g)).is_full(); }
inline bool is_solvable(const LieAlgebra& g) { return derived_length(g).has_value(); }

/// {x : [x, e_i] = 0 for all i}
inline Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // Row (i, k): sum_j x_j c_{j i}^k = 0.
    Mat m(g.ctx(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m.set(i * n + k, j, g.sc(j, i, k));
    return kernel(m);
}

/// Upper central series 0 = Z_0 <= Z_1 = Z(g) <= ... up to its stable term Z_oo.
inline std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Subspace> terms{Subspace::zero(g.ctx(), n)};
    for (;;) {
        const Subspace& z = terms.back();
        // x with [x, e_i] in Z for all i: the residues of [x, e_i] modulo Z vanish.
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Vec> cols;
            for (std::size_t j = 0; j < n; ++j) cols.push_back(z.reduce(g.bracket_basis(j, i)));
            for (std::size_t k = 0; k < n; ++k) {
                Vec r(n);
                for (std::size_t j = 0; j < n; ++j) r[j] = cols[j][k];
                rows.push_back(std::move(r));
            }
        }
        Subspace next = kernel(Mat::from_rows(g.ctx(), rows, n));
        if (next == z) return terms;
        terms.push_back(std::move(next));
    }
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& s) { return s.contains(product_space(g, whole(g), s)); }

/// Smallest ideal containing s: s <- s + [g, s] until stable (at most n steps).
inline Subspace ideal_closure(const LieAlgebra& g, const Subspace& s) {
    Subspace cur = s;
    const Subspace all = whole(g);
    for (std::size_t step = 0; step <= g.dim(); ++step) {
        Subspace next = cur + product_space(g, all, cur);
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
    throw InternalError("ideal closure did not stabilize");
}

struct Quotient {
    LieAlgebra algebra;
    Mat projection;                    // (n - dim I) x n
    std::vector<std::size_t> complement;  // kept coordinates of g
};

/// g / I on the basis of non-pivot coordinates of I's canonical basis.
inline Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
    require(is_ideal(g, ideal), "quotient: subspace is not an ideal");
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    std::vector<bool> pivot(n, false);
    for (auto c : ideal.pivots()) pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) keep.push_back(i);
    const std::size_t m = keep.size();
    auto project = [&](const Vec& v) {
        const Vec r = ideal.reduce(v);
        Vec out(m);
        for (std::size_t a = 0; a < m; ++a) out[a] = r[keep[a]];
        return out;
    };
    Mat proj(ctx, m, n);
    for (std::size_t j = 0; j < n; ++j) proj.set_col(j, project(unit_vec(ctx, n, j)));
    LieAlgebra q(ctx, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) q.set_bracket(a, b, project(g.bracket_basis(keep[a], keep[b])));
    if (!g.labels().empty()) {
        std::vector<std::string> l;
        for (auto i : keep) l.push_back(g.labels()[i]);
        q.set_labels(std::move(l));
    }
    return {std::move(q), std::move(proj), std::move(keep)};
}

/// The subalgebra spanned by s, on s's canonical basis.
inline LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
    const std::size_t m = s.dim();
    LieAlgebra h(g.ctx(), m);
    const auto basis = s.basis_vectors();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const Vec v = g.bracket(basis[a], basis[b]);
            require(s.contains(v), "subalgebra: subspace is not closed under the bracket");
            h.set_bracket(a, b, s.coordinates(v));
        }
    return h;
}

inline LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
    require(g.ctx() == h.ctx(), "direct_sum: field mismatch");
    const std::size_t n = g.dim(), m = h.dim();
    LieAlgebra s(g.ctx(), n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = zero_vec(g.ctx(), n + m);
            for (std::size_t k = 0; k < n; ++k) v[k] = g.sc(i, j, k);
            s.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec v = zero_vec(g.ctx(), n + m);
            for (std::size_t k = 0; k < m; ++k) v[n + k] = h.sc(i, j, k);
            s.set_bracket(n + i, n + j, v);
        }
    return s;
}

/// Same structure constants over a larger field, via an embedding.
inline LieAlgebra extend_scalars(const LieAlgebra& g, const Embedding& e) {
    require(e.from() == g.ctx(), "extend_scalars: embedding source differs from the algebra's field");
    const std::size_t n = g.dim();
    LieAlgebra h(e.to(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v(n);
            for (std::size_t k = 0; k < n; ++k) v[k] = e(g.sc(i, j, k));
            h.set_bracket(i, j, v);
        }
    h.set_labels(g.labels());
    return h;
}

/// g over F_q  ->  g over F_{q^k} (canonical modulus for the larger field).
inline LieAlgebra extend_scalars(const LieAlgebra& g, unsigned k) {
    require(k >= 1, "extend_scalars: degree must be at least 1");
    if (k == 1) return g;
    const FieldCtx big = FieldCtx::make(g.ctx().p(), g.ctx().k() * k);
    return extend_scalars(g, Embedding::between(g.ctx(), big));
}

/// g over F_{p^k} viewed over F_p: basis t^s e_i at index i*k + s.
inline LieAlgebra restrict_scalars(const LieAlgebra& g) {
    const FieldCtx& ctx = g.ctx();
    const unsigned k = ctx.k();
    if (k == 1) return g;
    const FieldCtx fp = FieldCtx::prime(ctx.p());
    const std::size_t n = g.dim(), N = n * k;
    LieAlgebra h(fp, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t r = 0; r < k; ++r) {
                    const std::size_t a = i * k + s, b = j * k + r;
                    if (a >= b) continue;
                    const FieldElem scalar = ctx.pow(ctx.gen(), static_cast<long long>(s + r));
                    Vec v = zero_vec(fp, N);
                    for (std::size_t l = 0; l < n; ++l) {
                        const auto digits = ctx.coeffs(ctx.mul(scalar, g.sc(i, j, l)));
                        for (std::size_t u = 0; u < k; ++u) v[l * k + u] = fp.from_int(digits[u]);
                    }
                    h.set_bracket(a, b, v);
                }
    return h;
}

enum class Simplicity { Simple, NotSimple, Unknown };

inline const char* to_string(Simplicity s) {
    switch (s) {
        case Simplicity::Simple: return "Simple";
        case Simplicity::NotSimple: return "NotSimple";
        default: return "Unknown";
    }
}

struct SimplicityReport {
    Simplicity verdict = Simplicity::Unknown;
    std::optional<Subspace> witness;  // proper nonzero ideal when NotSimple
    std::string method;               // "abelian", "exhaustive", "basis", "norton", "sample"
    unsigned long long closures_checked = 0;
    std::optional<bool> certificate;  // constructor claim, surfaced alongside
};

struct SimplicityOptions {
    unsigned long long exhaustion_budget = 1ULL << 21;
    unsigned norton_tries = 64;
    unsigned samples = 256;
    std::uint64_t seed = 0x5eed'1a7e'0000'0001ULL;
};

namespace detail {

inline Mat eval_poly_at(const UniPoly& f, const Mat& m) {
    Mat r(m.ctx(), m.rows(), m.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        r = r * m + Mat::identity(m.ctx(), m.rows()).scaled(f.coeffs()[i]);
    return r;
}

/// Smallest subspace containing s and stable under every matrix in gens.
inline Subspace spin(const std::vector<Mat>& gens, Subspace s) {
    for (;;) {
        std::vector<Vec> vecs = s.basis_vectors();
        for (const auto& v : s.basis_vectors())
            for (const auto& a : gens) vecs.push_back(a * v);
        Subspace next = Subspace::span(s.ctx(), s.ambient(), vecs);
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

/// Monic irreducible polynomials of degree d over ctx, in canonical order.
inline std::vector<UniPoly> monic_irreducibles(const FieldCtx& ctx, unsigned d) {
    std::vector<UniPoly> out;
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= ctx.q();
    for (unsigned long long idx = 0; idx < count; ++idx) {
        UniPoly f = monic_from_index(ctx, d, idx);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

/// Norton's irreducibility test on the adjoint module. Returns Simple when a
/// random element theta of the multiplication algebra has an irreducible factor
/// r with dim ker r(theta) = deg r and both spinning tests succeed, NotSimple
/// with a witness when a spin is proper, nullopt when no usable theta was found.
inline std::optional<SimplicityReport> norton_test(const LieAlgebra& g, const SimplicityOptions& opt) {
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    std::vector<Mat> gens, gens_t;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(g.ad(i));
        gens_t.push_back(gens.back().transpose());
    }
    std::mt19937_64 rng(opt.seed);
    auto rand_elem = [&] { return ctx.element(static_cast<unsigned>(rng() % ctx.q())); };
    auto rand_comb = [&] {
        Mat m(ctx, n, n);
        for (const auto& a : gens) m = m + a.scaled(rand_elem());
        return m;
    };
    unsigned max_deg = 1;
    for (unsigned long long c = ctx.q(); max_deg < 3 && c * ctx.q() <= 100000; c *= ctx.q()) ++max_deg;
    std::vector<std::vector<UniPoly>> irreducibles(max_deg + 1);
    for (unsigned d = 1; d <= max_deg; ++d) irreducibles[d] = monic_irreducibles(ctx, d);
    for (unsigned attempt = 0; attempt < opt.norton_tries; ++attempt) {
        const Mat a = rand_comb(), b = rand_comb(), c = rand_comb();
        const Mat theta = a + b * c + Mat::identity(ctx, n).scaled(rand_elem());
        const UniPoly cp = charpoly(theta);
        for (unsigned d = 1; d <= max_deg; ++d)
            for (const auto& r : irreducibles[d]) {
                if (!(cp % r).is_zero()) continue;
                const Subspace nul = kernel(eval_poly_at(r, theta));
                if (nul.dim() != d) continue;
                SimplicityReport rep;
                rep.method = "norton";
                const Subspace up = ideal_closure(g, Subspace::span(ctx, n, {nul.basis_vector(0)}));
                ++rep.closures_checked;
                if (!up.is_full()) {
                    rep.verdict = Simplicity::NotSimple;
                    rep.witness = up;
                    return rep;
                }
                const Subspace nul_t = kernel(eval_poly_at(r, theta.transpose()));
                const Subspace dual = spin(gens_t, Subspace::span(ctx, n, {nul_t.basis_vector(0)}));
                if (!dual.is_full()) {
                    rep.verdict = Simplicity::NotSimple;
                    rep.witness = annihilator(dual);
                    return rep;
                }
                rep.verdict = Simplicity::Simple;
                return rep;
            }
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides simplicity. Small algebras (q^n - 1 <= budget) are decided by
/// computing the ideal generated by every nonzero vector in canonical order.
/// Larger ones try basis vectors, then Norton's irreducibility test, then a
/// fixed pseudo-random sample, and report Unknown if nothing decides.
inline SimplicityReport is_simple(const LieAlgebra& g, const SimplicityOptions& opt = {}) {
    SimplicityReport rep;
    rep.certificate = g.known_simple();
    const FieldCtx& ctx = g.ctx();
    const std::size_t n = g.dim();
    if (n == 0 || g.is_abelian()) {
        rep.verdict = Simplicity::NotSimple;
        rep.method = "abelian";
        if (n >= 2) rep.witness = Subspace::span(ctx, n, {unit_vec(ctx, n, 0)});
        return rep;
    }
    auto closure_of = [&](const Vec& v) {
        ++rep.closures_checked;
        return ideal_closure(g, Subspace::span(ctx, n, {v}));
    };
    unsigned long long total = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
        if (total > (opt.exhaustion_budget + 1) / ctx.q()) small = false;
        total *= ctx.q();
    }
    if (small && total - 1 <= opt.exhaustion_budget) {
        rep.method = "exhaustive";
        Vec v = zero_vec(ctx, n);
        for (unsigned long long idx = 1; idx < total; ++idx) {
            unsigned long long x = idx;
            for (std::size_t i = n; i-- > 0;) {
                v[i] = ctx.element(static_cast<unsigned>(x % ctx.q()));
                x /= ctx.q();
            }
            Subspace c = closure_of(v);
            if (!c.is_full()) {
                rep.verdict = Simplicity::NotSimple;
                rep.witness = std::move(c);
                return rep;
            }
        }
        rep.verdict = Simplicity::Simple;
        return rep;
    }
    rep.method = "basis";
    for (std::size_t i = 0; i < n; ++i) {
        Subspace c = closure_of(unit_vec(ctx, n, i));
        if (!c.is_full()) {
            rep.verdict = Simplicity::NotSimple;
            rep.witness = std::move(c);
            return rep;
        }
    }
    if (auto nt = detail::norton_test(g, opt)) {
        nt->closures_checked += rep.closures_checked;
        nt->certificate = rep.certificate;
        return *nt;
    }
    rep.method = "sample";
    std::mt19937_64 rng(opt.seed);
    for (unsigned s = 0; s < opt.samples; ++s) {
        Vec v(n);
        for (auto& c : v) c = ctx.element(static_cast<unsigned>(rng() % ctx.q()));
        if (is_zero(v)) continue;
        Subspace c = closure_of(v);
        if (!c.is_full()) {
            rep.verdict = Simplicity::NotSimple;
            rep.witness = std::move(c);
            return rep;
        }
    }
    rep.verdict = Simplicity::Unknown;
    return rep;
}

}  // namespace modlie
