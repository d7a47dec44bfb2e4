#pragma once

// Tautness: every homomorphism g -> Der(g) lands in Inn(g). Decided through a
// chain of sufficient criteria and, when g is simple with dim Out(g) = dim g,
// an exhaustive search for a Lie algebra section Out(g) -> Der(g).

#include <optional>
#include <string>
#include <vector>

#include "modlie/derive.hpp"
#include "modlie/polysolve.hpp"

namespace modlie {

/// Polynomial system for the unknown block A (inn_dim x out_dim) of a section
/// s(o_j) = sum_i A_ij I_i + C_j. Variable A_ij has index j*r + i and name a_<i+1>_<j+1>.
inline PolySystem split_section_system(const DerAlgebra& d) {
    const FieldCtx& ctx = d.base.ctx();
    const std::size_t r = d.inn_dim(), m = d.out_dim(), nv = r * m;
    const LieAlgebra& D = d.der;
    PolySystem s{ctx, nv, {}, {}};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < r; ++i) s.names.push_back("a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    auto var = [&](std::size_t i, std::size_t j) { return static_cast<std::uint16_t>(j * r + i); };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const std::size_t ca = r + a, cb = r + b;
            for (std::size_t l = 0; l < r; ++l) {
                std::vector<Term> t;
                for (std::size_t c = 0; c < m; ++c) {
                    const FieldElem o = d.out.sc(a, b, c);
                    if (!o.is_zero()) t.push_back({{var(l, c)}, o});
                }
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t k = 0; k < r; ++k) {
                        const FieldElem v = D.sc(i, k, l);
                        if (v.is_zero()) continue;
                        Monomial mono{var(i, a), var(k, b)};
                        std::sort(mono.begin(), mono.end());
                        t.push_back({std::move(mono), ctx.neg(v)});
                    }
                    const FieldElem u = D.sc(i, cb, l);
                    if (!u.is_zero()) t.push_back({{var(i, a)}, ctx.neg(u)});
                    const FieldElem w = D.sc(ca, i, l);
                    if (!w.is_zero()) t.push_back({{var(i, b)}, ctx.neg(w)});
                }
                const FieldElem z = D.sc(ca, cb, l);
                if (!z.is_zero()) t.push_back({{}, ctx.neg(z)});
                s.add(MultiPoly(ctx, nv, std::move(t)));
            }
        }
    return s;
}

struct SectionWitness {
    Mat A;                   // inn_dim x out_dim
    std::vector<Mat> images;  // s(o_j) as n x n matrices
    /// Homomorphism g -> Der(g), e_i -> s(theta(e_i)), when theta was supplied.
    std::optional<std::vector<Mat>> homomorphism;
};

enum class SplitStatus { Found, None, Inconclusive };

inline const char* to_string(SplitStatus s) {
    switch (s) {
        case SplitStatus::Found: return "found";
        case SplitStatus::None: return "none";
        default: return "inconclusive";
    }
}

struct SplitSearchResult {
    SplitStatus status = SplitStatus::Inconclusive;
    std::optional<SectionWitness> section;
    unsigned long long nodes = 0;
    std::size_t variables = 0;
    std::size_t equations = 0;
    bool complete() const { return status != SplitStatus::Inconclusive; }
};

/// Checks pi(s(o_j)) = o_j and s([o_a, o_b]) = [s(o_a), s(o_b)] with matrices.
inline bool verify_section(const DerAlgebra& d, const std::vector<Mat>& images) {
    const std::size_t r = d.inn_dim(), m = d.out_dim();
    if (images.size() != m) return false;
    for (std::size_t j = 0; j < m; ++j) {
        if (!is_derivation(d.base, images[j])) return false;
        const Vec c = d.proj(images[j]);
        for (std::size_t k = 0; k < m; ++k)
            if (c[r + k] != (k == j ? d.base.ctx().one() : d.base.ctx().zero())) return false;
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Mat lhs(d.base.ctx(), d.base.dim(), d.base.dim());
            for (std::size_t c = 0; c < m; ++c) lhs = lhs + images[c].scaled(d.out.sc(a, b, c));
            if (!(lhs == images[a].commutator(images[b]))) return false;
        }
    return true;
}

inline SectionWitness section_from_point(const DerAlgebra& d, const Vec& point) {
    const FieldCtx& ctx = d.base.ctx();
    const std::size_t r = d.inn_dim(), m = d.out_dim();
    SectionWitness w{Mat(ctx, r, m), {}, std::nullopt};
    for (std::size_t j = 0; j < m; ++j) {
        Vec c = zero_vec(ctx, r + m);
        for (std::size_t i = 0; i < r; ++i) {
            w.A.set(i, j, point[j * r + i]);
            c[i] = point[j * r + i];
        }
        c[r + j] = ctx.one();
        w.images.push_back(d.from_coordinates(c));
    }
    return w;
}

/// Searches for a section of Der(g) -> Out(g) that is a Lie algebra
/// homomorphism. Stops at the first solution the solver reaches.
inline SplitSearchResult split_section_search(const DerAlgebra& d, unsigned long long budget = kDefaultSolverBudget) {
    SplitSearchResult res;
    const PolySystem sys = split_section_system(d);
    res.variables = sys.nvars;
    res.equations = sys.equations.size();
    SolveOptions opt;
    opt.budget = budget;
    opt.max_solutions = 1;
    const SolutionSet sol = solve_all(sys, opt);
    res.nodes = sol.nodes;
    if (!sol.points.empty()) {
        res.status = SplitStatus::Found;
        res.section = section_from_point(d, sol.points.front());
        ensure(verify_section(d, res.section->images), "split section failed independent verification");
    } else {
        res.status = sol.complete ? SplitStatus::None : SplitStatus::Inconclusive;
    }
    return res;
}

enum class TautTag { Taut, NotTaut, Unknown };
enum class TautReason { OutZero, OutSolvablePerfect, OutSmallerSimple, NoSplitSection, SplitSectionFound, InsufficientCriteria };

inline const char* to_string(TautTag t) {
    switch (t) {
        case TautTag::Taut: return "Taut";
        case TautTag::NotTaut: return "NotTaut";
        default: return "Unknown";
    }
}

inline const char* to_string(TautReason r) {
    switch (r) {
        case TautReason::OutZero: return "OutZero";
        case TautReason::OutSolvablePerfect: return "OutSolvablePerfect";
        case TautReason::OutSmallerSimple: return "OutSmallerSimple";
        case TautReason::NoSplitSection: return "NoSplitSection";
        case TautReason::SplitSectionFound: return "SplitSectionFound";
        default: return "InsufficientCriteria";
    }
}

struct TautOptions {
    unsigned long long budget = kDefaultSolverBudget;
    /// Caller asserts g is isomorphic to Out(g); skips the simplicity check on Out.
    bool assert_out_iso = false;
    /// Isomorphism g -> Out(g) as an out_dim x n matrix; lets a found section
    /// become a NotTaut witness.
    std::optional<Mat> theta;
};

struct TautVerdict {
    TautTag tag = TautTag::Unknown;
    TautReason reason = TautReason::InsufficientCriteria;
    std::optional<SectionWitness> witness;
    std::optional<SplitSearchResult> search;
    bool complete = true;  // false only when the split search ran out of budget
    std::size_t der_dim = 0, inn_dim = 0, out_dim = 0;
    std::vector<std::string> notes;
};

namespace detail {

inline bool is_lie_isomorphism(const LieAlgebra& g, const LieAlgebra& h, const Mat& theta) {
    if (theta.rows() != h.dim() || theta.cols() != g.dim() || rank(theta) != g.dim()) return false;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            if (theta * g.bracket_basis(i, j) != h.bracket(theta.col(i), theta.col(j))) return false;
    return true;
}

}  // namespace detail

inline TautVerdict is_taut(const LieAlgebra& g, const TautOptions& opt = {}) {
    TautVerdict v;
    const DerAlgebra d = derivations(g);
    v.der_dim = d.der_dim();
    v.inn_dim = d.inn_dim();
    v.out_dim = d.out_dim();
    auto verdict = [&](TautTag t, TautReason r) {
        v.tag = t;
        v.reason = r;
        return v;
    };
    if (d.out_dim() == 0) return verdict(TautTag::Taut, TautReason::OutZero);

    const bool perfect = is_perfect(g);
    if (perfect && out_solvability(d).length) {
        // phi(g) = phi(g^(oo)) lies in Der^(oo), which must sit inside Inn.
        ensure(inn_in_der(d).contains(g_inf_derived(d.der)), "Der^(oo) is not contained in Inn");
        return verdict(TautTag::Taut, TautReason::OutSolvablePerfect);
    }

    const bool simple = is_simple(g).verdict == Simplicity::Simple;
    if (simple && d.out_dim() < g.dim()) return verdict(TautTag::Taut, TautReason::OutSmallerSimple);

    if (simple && d.out_dim() == g.dim()) {
        bool out_simple = opt.assert_out_iso;
        if (opt.assert_out_iso)
            v.notes.push_back("Out(g) asserted isomorphic to g; simplicity of Out not checked");
        else
            out_simple = is_simple(d.out).verdict == Simplicity::Simple;
        if (out_simple) {
            SplitSearchResult s = split_section_search(d, opt.budget);
            v.search = s;
            if (s.status == SplitStatus::None) return verdict(TautTag::Taut, TautReason::NoSplitSection);
            if (s.status == SplitStatus::Inconclusive) {
                v.complete = false;
                v.notes.push_back("split-section search exhausted its budget of " + std::to_string(opt.budget) + " nodes");
                return verdict(TautTag::Unknown, TautReason::InsufficientCriteria);
            }
            v.witness = s.section;
            if (opt.theta) {
                require(detail::is_lie_isomorphism(g, d.out, *opt.theta), "supplied map g -> Out(g) is not an isomorphism");
                std::vector<Mat> hom;
                for (std::size_t i = 0; i < g.dim(); ++i) {
                    Mat m(g.ctx(), g.dim(), g.dim());
                    for (std::size_t j = 0; j < d.out_dim(); ++j) m = m + s.section->images[j].scaled(opt.theta->at(j, i));
                    hom.push_back(std::move(m));
                }
                bool outside = false;
                for (std::size_t i = 0; i < g.dim(); ++i) {
                    for (std::size_t j = i + 1; j < g.dim(); ++j) {
                        Mat lhs(g.ctx(), g.dim(), g.dim());
                        const Vec b = g.bracket_basis(i, j);
                        for (std::size_t k = 0; k < g.dim(); ++k) lhs = lhs + hom[k].scaled(b[k]);
                        ensure(lhs == hom[i].commutator(hom[j]), "composed witness is not a homomorphism");
                    }
                    const Vec c = d.proj(hom[i]);
                    for (std::size_t k = d.inn_dim(); k < c.size(); ++k) outside = outside || !c[k].is_zero();
                }
                ensure(outside, "composed witness lands in Inn");
                v.witness->homomorphism = std::move(hom);
                return verdict(TautTag::NotTaut, TautReason::SplitSectionFound);
            }
            v.notes.push_back("a split section exists; without an isomorphism g -> Out(g) no verdict is drawn");
            return verdict(TautTag::Unknown, TautReason::SplitSectionFound);
        }
    }
    return verdict(TautTag::Unknown, TautReason::InsufficientCriteria);
}

}  // namespace modlie
