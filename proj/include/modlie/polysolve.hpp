#pragma once

// Sparse multivariate polynomials over F_q and an exhaustive solver for
// polynomial systems: linear elimination plus branch-and-propagate.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

/// A monomial is the sorted multiset of its variable indices: x0^2*x3 is {0,0,3}.
/// Stored as a 16-bit string so that low-degree monomials stay inline.
using Monomial = std::u16string;

/// Graded lexicographic order with x0 > x1 > ...
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct Term {
    Monomial mono;
    FieldElem coef;
    friend bool operator==(const Term&, const Term&) = default;
};

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(FieldCtx ctx, std::size_t nvars) : ctx_(std::move(ctx)), nvars_(nvars) {
        require(nvars <= 65535, "too many variables");
    }
    MultiPoly(FieldCtx ctx, std::size_t nvars, std::vector<Term> terms)
        : ctx_(std::move(ctx)), nvars_(nvars), terms_(std::move(terms)) {
        normalize();
    }

    static MultiPoly constant(const FieldCtx& ctx, std::size_t nvars, FieldElem c) {
        return MultiPoly(ctx, nvars, {{{}, c}});
    }
    static MultiPoly variable(const FieldCtx& ctx, std::size_t nvars, std::size_t v) {
        require(v < nvars, "variable index out of range");
        return MultiPoly(ctx, nvars, {{Monomial(1, static_cast<char16_t>(v)), ctx.one()}});
    }

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t nvars() const { return nvars_; }
    /// Terms in decreasing graded lexicographic order.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.size()); }
    bool is_constant() const { return degree() <= 0; }
    FieldElem constant_term() const {
        return !terms_.empty() && terms_.back().mono.empty() ? terms_.back().coef : ctx_.zero();
    }
    /// Coefficient of the linear monomial x_v.
    FieldElem linear_coeff(std::size_t v) const {
        for (const auto& t : terms_)
            if (t.mono.size() == 1 && t.mono[0] == v) return t.coef;
        return ctx_.zero();
    }

    bool contains(std::size_t v) const {
        for (const auto& t : terms_)
            if (std::find(t.mono.begin(), t.mono.end(), v) != t.mono.end()) return true;
        return false;
    }

    /// Sorted list of variables that occur.
    std::vector<std::uint16_t> variables() const {
        std::vector<std::uint16_t> v;
        v.reserve(8);
        for (const auto& t : terms_) v.insert(v.end(), t.mono.begin(), t.mono.end());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        std::vector<Term> t = terms_;
        t.insert(t.end(), o.terms_.begin(), o.terms_.end());
        return MultiPoly(ctx_, nvars_, std::move(t));
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + o.scaled(ctx_.neg(ctx_.one())); }
    MultiPoly operator*(const MultiPoly& o) const {
        std::vector<Term> t;
        t.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m;
                m.reserve(a.mono.size() + b.mono.size());
                std::merge(a.mono.begin(), a.mono.end(), b.mono.begin(), b.mono.end(), std::back_inserter(m));
                t.push_back({std::move(m), ctx_.mul(a.coef, b.coef)});
            }
        return MultiPoly(ctx_, nvars_, std::move(t));
    }
    MultiPoly scaled(FieldElem c) const {
        if (c.is_zero()) return MultiPoly(ctx_, nvars_);
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coef = ctx_.mul(t.coef, c);
        return r;
    }
    /// Leading coefficient scaled to 1.
    MultiPoly monic() const {
        MultiPoly r = *this;
        r.make_monic();
        return r;
    }
    void make_monic() {
        if (is_zero() || terms_.front().coef == ctx_.one()) return;
        const FieldElem c = ctx_.inv(terms_.front().coef);
        for (auto& t : terms_) t.coef = ctx_.mul(t.coef, c);
    }

    FieldElem eval(const Vec& point) const {
        require(point.size() == nvars_, "eval: point has wrong length");
        FieldElem s = ctx_.zero();
        for (const auto& t : terms_) {
            FieldElem v = t.coef;
            for (auto x : t.mono) v = ctx_.mul(v, point[x]);
            s = ctx_.add(s, v);
        }
        return s;
    }

    MultiPoly substitute(std::size_t var, FieldElem value) const {
        return substitute(var, constant(ctx_, nvars_, value));
    }
    /// Replaces x_var by expr everywhere.
    MultiPoly substitute(std::size_t var, const MultiPoly& expr) const {
        require(var < nvars_, "substitute: variable out of range");
        std::vector<MultiPoly> powers;  // powers[k] = expr^(k+1)
        std::vector<Term> out;
        out.reserve(terms_.size() + expr.terms_.size());
        for (const auto& t : terms_) {
            const auto e = static_cast<std::size_t>(std::count(t.mono.begin(), t.mono.end(), var));
            if (e == 0) {
                out.push_back(t);
                continue;
            }
            if (powers.empty()) powers.push_back(expr);
            while (powers.size() < e) powers.push_back(powers.back() * expr);
            Monomial rest;
            for (auto x : t.mono)
                if (x != var) rest.push_back(x);
            for (const auto& s : powers[e - 1].terms_) {
                Monomial m;
                std::merge(rest.begin(), rest.end(), s.mono.begin(), s.mono.end(), std::back_inserter(m));
                out.push_back({std::move(m), ctx_.mul(t.coef, s.coef)});
            }
        }
        return MultiPoly(ctx_, nvars_, std::move(out));
    }

    /// Uses x^q = x, valid on F_q-rational points.
    MultiPoly reduce_field_exponents() const {
        MultiPoly r = *this;
        r.reduce_field_exponents_in_place();
        return r;
    }
    void reduce_field_exponents_in_place() {
        const std::size_t q = ctx_.q();
        // sorted, so some exponent reaches q iff m[i] == m[i + q - 1] for some i
        auto too_high = [&](const Monomial& m) {
            for (std::size_t i = 0; i + q - 1 < m.size(); ++i)
                if (m[i] == m[i + q - 1]) return true;
            return false;
        };
        bool changed = false;
        for (auto& t : terms_) {
            if (!too_high(t.mono)) continue;
            changed = true;
            Monomial m;
            for (std::size_t i = 0; i < t.mono.size();) {
                std::size_t j = i;
                while (j < t.mono.size() && t.mono[j] == t.mono[i]) ++j;
                std::size_t e = j - i;
                if (e >= q) e = (e - 1) % (q - 1) + 1;
                m.insert(m.end(), e, t.mono[i]);
                i = j;
            }
            t.mono = std::move(m);
        }
        if (changed) normalize();
    }

    /// e.g. "2*x0^2*x3 + x1 + 1"; names default to x<i>.
    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            std::string c = ctx_.format(t.coef);
            if (c.find('+') != std::string::npos) c = "(" + c + ")";
            std::string m;
            for (std::size_t i = 0; i < t.mono.size();) {
                std::size_t j = i;
                while (j < t.mono.size() && t.mono[j] == t.mono[i]) ++j;
                if (!m.empty()) m += "*";
                m += t.mono[i] < names.size() ? names[t.mono[i]] : "x" + std::to_string(t.mono[i]);
                if (j - i > 1) m += "^" + std::to_string(j - i);
                i = j;
            }
            if (m.empty())
                out += c;
            else if (c == "1")
                out += m;
            else
                out += c + "*" + m;
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.mono != y.mono) return grlex_less(y.mono, x.mono);
            if (x.coef != y.coef) return x.coef < y.coef;
        }
        return false;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coef = ctx_.add(out.back().coef, t.coef);
            else
                out.push_back(std::move(t));
            if (out.back().coef.is_zero()) out.pop_back();
        }
        terms_ = std::move(out);
    }

    FieldCtx ctx_;
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

struct PolySystem {
    FieldCtx ctx;
    std::size_t nvars = 0;
    std::vector<MultiPoly> equations;  // each = 0
    std::vector<std::string> names;    // optional variable names

    void add(MultiPoly p) {
        require(p.nvars() == nvars && p.ctx() == ctx, "equation does not match the system");
        equations.push_back(std::move(p));
    }
    bool satisfied_by(const Vec& point) const {
        return std::all_of(equations.begin(), equations.end(), [&](const MultiPoly& e) { return e.eval(point).is_zero(); });
    }
    /// Monic, nonzero, deduplicated and canonically sorted equations.
    void normalize() {
        std::vector<MultiPoly> out;
        out.reserve(equations.size());
        for (auto& e : equations) {
            e.reduce_field_exponents_in_place();
            e.make_monic();
            if (!e.is_zero()) out.push_back(std::move(e));
        }
        std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) { return canonical_less(a, b); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        equations = std::move(out);
    }
    std::string to_string() const {
        std::string s;
        for (const auto& e : equations) s += e.to_string(names) + " = 0\n";
        return s;
    }
};

struct LinearReduction {
    PolySystem reduced;
    /// Eliminated variables in elimination order; each expression only involves
    /// variables eliminated later or never.
    std::vector<std::pair<std::size_t, MultiPoly>> eliminated;
    /// Values known after back-substitution (variables whose expression is constant).
    std::vector<std::optional<FieldElem>> assignment;
    bool inconsistent = false;
};

namespace detail {

/// Eliminates linear equations in place. Returns false on a contradiction.
inline bool linear_reduce_in_place(PolySystem& s, std::vector<std::pair<std::size_t, MultiPoly>>& elim) {
    s.normalize();
    for (;;) {
        // canonically least equation of degree <= 1
        const MultiPoly* pick = nullptr;
        for (const auto& e : s.equations)
            if (e.degree() <= 1 && (!pick || canonical_less(e, *pick))) pick = &e;
        if (!pick) break;
        if (pick->degree() == 0) return false;
        const MultiPoly e = *pick;
        s.equations.erase(s.equations.begin() + (pick - s.equations.data()));
        const std::size_t v = e.variables().front();
        // x_v = -(e - c x_v) / c
        const FieldElem c = e.linear_coeff(v);
        const MultiPoly expr = (e - MultiPoly::variable(s.ctx, s.nvars, v).scaled(c)).scaled(s.ctx.neg(s.ctx.inv(c)));
        std::vector<MultiPoly> next;
        next.reserve(s.equations.size());
        for (auto& q : s.equations) {
            if (!q.contains(v)) {
                next.push_back(std::move(q));
                continue;
            }
            MultiPoly r = q.substitute(v, expr);
            r.reduce_field_exponents_in_place();
            r.make_monic();
            if (!r.is_zero()) next.push_back(std::move(r));
        }
        s.equations = std::move(next);
        for (auto& [w, x] : elim)
            if (x.contains(v)) x = x.substitute(v, expr);
        elim.emplace_back(v, expr);
    }
    s.normalize();
    return true;
}

inline std::vector<std::optional<FieldElem>> back_substitute(const FieldCtx& ctx, std::size_t nvars,
                                                             const std::vector<std::pair<std::size_t, MultiPoly>>& elim) {
    std::vector<std::optional<FieldElem>> a(nvars);
    for (const auto& [v, x] : elim)
        if (x.is_constant()) a[v] = x.is_zero() ? ctx.zero() : x.constant_term();
    return a;
}

}  // namespace detail

inline LinearReduction linear_reduce(const PolySystem& s) {
    LinearReduction r;
    r.reduced = s;
    r.inconsistent = !detail::linear_reduce_in_place(r.reduced, r.eliminated);
    r.assignment = detail::back_substitute(s.ctx, s.nvars, r.eliminated);
    return r;
}

struct SolutionSet {
    bool complete = true;
    std::vector<Vec> points;  // sorted lexicographically by codes, x0 most significant
    unsigned long long nodes = 0;
};

inline constexpr unsigned long long kDefaultSolverBudget = 10'000'000ULL;

struct SolveOptions {
    unsigned long long budget = kDefaultSolverBudget;
    /// Stop after this many solutions (0 = no limit); the result is then incomplete
    /// unless the search happened to finish.
    std::size_t max_solutions = 0;
};

namespace detail {

class Solver {
public:
    Solver(const PolySystem& original, const SolveOptions& opt) : orig_(original), opt_(opt) {}

    SolutionSet run() {
        PolySystem s = orig_;
        std::vector<std::pair<std::size_t, MultiPoly>> elim;
        recurse(std::move(s), std::move(elim));
        std::sort(out_.points.begin(), out_.points.end(), [](const Vec& a, const Vec& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        out_.points.erase(std::unique(out_.points.begin(), out_.points.end()), out_.points.end());
        return out_;
    }

private:
    bool charge() {
        if (stopped_) return false;
        if (out_.nodes >= opt_.budget) {
            out_.complete = false;
            stopped_ = true;
            return false;
        }
        ++out_.nodes;
        return true;
    }

    void emit(Vec point) {
        ensure(orig_.satisfied_by(point), "solver produced a point that fails an original equation");
        out_.points.push_back(std::move(point));
        if (opt_.max_solutions && out_.points.size() >= opt_.max_solutions) {
            stopped_ = true;
            out_.complete = false;
        }
    }

    void leaf(const std::vector<std::pair<std::size_t, MultiPoly>>& elim) {
        const FieldCtx& ctx = orig_.ctx;
        std::vector<bool> bound(orig_.nvars, false);
        for (const auto& [v, x] : elim) bound[v] = true;
        std::vector<std::size_t> free;
        for (std::size_t v = 0; v < orig_.nvars; ++v)
            if (!bound[v]) free.push_back(v);
        Vec point = zero_vec(ctx, orig_.nvars);
        std::vector<unsigned> digits(free.size(), 0);
        for (;;) {
            if (!charge()) return;
            for (std::size_t i = 0; i < free.size(); ++i) point[free[i]] = ctx.element(digits[i]);
            for (std::size_t i = elim.size(); i-- > 0;) point[elim[i].first] = elim[i].second.eval(point);
            emit(point);
            if (stopped_) return;
            // next assignment, last free variable fastest
            std::size_t i = free.size();
            while (i > 0 && ++digits[i - 1] == ctx.q()) digits[--i] = 0;
            if (i == 0) return;
        }
    }

    void recurse(PolySystem s, std::vector<std::pair<std::size_t, MultiPoly>> elim) {
        if (!charge()) return;
        if (!linear_reduce_in_place(s, elim)) return;
        if (s.equations.empty()) {
            leaf(elim);
            return;
        }
        // minimal degree, then minimal size; equations are canonically sorted
        const MultiPoly* best = &s.equations.front();
        for (const auto& e : s.equations)
            if (e.degree() < best->degree() || (e.degree() == best->degree() && e.terms().size() < best->terms().size()))
                best = &e;
        const std::size_t v = best->variables().front();
        const FieldCtx& ctx = orig_.ctx;
        for (unsigned c = 0; c < ctx.q() && !stopped_; ++c) {
            const FieldElem a = ctx.element(c);
            const MultiPoly val = MultiPoly::constant(ctx, orig_.nvars, a);
            PolySystem t = s;
            for (auto& e : t.equations)
                if (e.contains(v)) e = e.substitute(v, a);
            auto el = elim;
            for (auto& [w, x] : el)
                if (x.contains(v)) x = x.substitute(v, val);
            el.emplace_back(v, val);
            recurse(std::move(t), std::move(el));
        }
    }

    const PolySystem& orig_;
    SolveOptions opt_;
    SolutionSet out_;
    bool stopped_ = false;
};

}  // namespace detail

/// All F_q-points of the system (or a budget-truncated subset, complete=false).
inline SolutionSet solve_all(const PolySystem& s, const SolveOptions& opt = {}) {
    require(opt.budget >= 1, "solve_all: budget must be positive");
    return detail::Solver(s, opt).run();
}

inline SolutionSet solve_all(const PolySystem& s, unsigned long long budget) {
    SolveOptions o;
    o.budget = budget;
    return solve_all(s, o);
}

}  // namespace modlie
