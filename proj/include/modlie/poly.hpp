#pragma once

// Univariate polynomials over a FieldCtx, exhaustive root finding,
// trial-division factorization, splitting fields and field embeddings.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    /// Coefficients low degree first.
    UniPoly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

    static UniPoly from_ints(const FieldCtx& ctx, const std::vector<long long>& coeffs) {
        std::vector<FieldElem> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(ctx.from_int(v));
        return UniPoly(ctx, std::move(c));
    }
    static UniPoly constant(const FieldCtx& ctx, FieldElem a) { return UniPoly(ctx, {a}); }
    static UniPoly x(const FieldCtx& ctx) { return UniPoly(ctx, {ctx.zero(), ctx.one()}); }
    /// X - a
    static UniPoly linear(const FieldCtx& ctx, FieldElem a) { return UniPoly(ctx, {ctx.neg(a), ctx.one()}); }

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElem lead() const { return c_.empty() ? ctx_.zero() : c_.back(); }
    FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_.zero(); }

    FieldElem eval(FieldElem a) const {
        FieldElem r = ctx_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = ctx_.add(ctx_.mul(r, a), *it);
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_.add(coeff(i), o.coeff(i));
        return UniPoly(ctx_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + o.scaled(ctx_.neg(ctx_.one())); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly(ctx_);
        std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, ctx_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = ctx_.add(r[i + j], ctx_.mul(c_[i], o.c_[j]));
        }
        return UniPoly(ctx_, std::move(r));
    }
    UniPoly scaled(FieldElem a) const {
        std::vector<FieldElem> r(c_);
        for (auto& v : r) v = ctx_.mul(v, a);
        return UniPoly(ctx_, std::move(r));
    }
    UniPoly monic() const { return is_zero() ? *this : scaled(ctx_.inv(lead())); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        require(!d.is_zero(), "polynomial division by zero");
        std::vector<FieldElem> r(c_);
        if (r.size() < d.c_.size()) return {UniPoly(ctx_), *this};
        std::vector<FieldElem> quo(r.size() - d.c_.size() + 1, ctx_.zero());
        const FieldElem inv_lead = ctx_.inv(d.lead());
        for (std::size_t s = quo.size(); s-- > 0;) {
            const FieldElem c = ctx_.mul(r[s + d.c_.size() - 1], inv_lead);
            quo[s] = c;
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < d.c_.size(); ++i) r[s + i] = ctx_.sub(r[s + i], ctx_.mul(c, d.c_[i]));
        }
        return {UniPoly(ctx_, std::move(quo)), UniPoly(ctx_, std::move(r))};
    }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    UniPoly pow(unsigned e) const {
        UniPoly r = constant(ctx_, ctx_.one()), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Order used for deterministic factor lists: degree, then coefficient
    /// codes compared from the constant term up.
    friend bool canonical_less(const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::string format(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string c = ctx_.format(c_[i]);
            if (c.find('+') != std::string::npos) c = "(" + c + ")";
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += c;
                continue;
            }
            if (c != "1") out += c + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtx ctx_;
    std::vector<FieldElem> c_;
};

struct Root {
    FieldElem value;
    unsigned multiplicity = 0;
    friend bool operator==(const Root&, const Root&) = default;
};

/// All roots in F_q by exhaustive evaluation, in code order, with multiplicities.
inline std::vector<Root> poly_roots(const UniPoly& f) {
    require(!f.is_zero(), "poly_roots: zero polynomial");
    const FieldCtx& ctx = f.ctx();
    std::vector<Root> out;
    for (unsigned i = 0; i < ctx.q(); ++i) {
        const FieldElem a = ctx.element(i);
        if (!f.eval(a).is_zero()) continue;
        unsigned mult = 0;
        UniPoly g = f;
        const UniPoly lin = UniPoly::linear(ctx, a);
        for (;;) {
            auto [quo, rem] = g.divmod(lin);
            if (!rem.is_zero()) break;
            ++mult;
            g = quo;
        }
        out.push_back({a, mult});
    }
    return out;
}

struct Factor {
    UniPoly poly;  // monic irreducible
    unsigned multiplicity = 0;
};

struct Factorization {
    FieldElem unit;  // leading coefficient
    std::vector<Factor> factors;

    UniPoly product() const {
        const FieldCtx& ctx = factors.empty() ? FieldCtx() : factors.front().poly.ctx();
        UniPoly r = UniPoly::constant(ctx, unit);
        for (const auto& f : factors) r = r * f.poly.pow(f.multiplicity);
        return r;
    }
};

inline constexpr unsigned long long kDefaultFactorBudget = 10'000'000ULL;

namespace detail {

inline unsigned long long checked_pow(unsigned long long b, unsigned e, unsigned long long cap) {
    unsigned long long r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

/// Monic polynomial of degree d whose low coefficients are the base-q digits
/// of idx, most significant digit on the constant term.
inline UniPoly monic_from_index(const FieldCtx& ctx, unsigned d, unsigned long long idx) {
    std::vector<FieldElem> c(d + 1);
    c[d] = ctx.one();
    for (unsigned i = d; i-- > 0;) {
        c[i] = ctx.element(static_cast<unsigned>(idx % ctx.q()));
        idx /= ctx.q();
    }
    return UniPoly(ctx, std::move(c));
}

}  // namespace detail

/// Factorization into monic irreducibles by trial division against monic
/// polynomials of ascending degree. Throws BudgetExceeded when a degree level
/// would need more than `budget` candidates.
inline Factorization poly_factor(const UniPoly& f, unsigned long long budget = kDefaultFactorBudget) {
    require(!f.is_zero(), "poly_factor: zero polynomial");
    const FieldCtx& ctx = f.ctx();
    Factorization out{f.lead(), {}};
    UniPoly rest = f.monic();
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(std::max(rest.degree(), 0)); ++d) {
        const unsigned long long count = detail::checked_pow(ctx.q(), d, budget);
        if (count > budget)
            throw BudgetExceeded("poly_factor: trial division at degree " + std::to_string(d) + " over F_" +
                                 std::to_string(ctx.q()) + " exceeds budget");
        for (unsigned long long idx = 0; idx < count && 2 * d <= static_cast<unsigned>(rest.degree()); ++idx) {
            const UniPoly g = detail::monic_from_index(ctx, d, idx);
            unsigned mult = 0;
            for (;;) {
                auto [quo, rem] = rest.divmod(g);
                if (!rem.is_zero()) break;
                rest = quo;
                ++mult;
            }
            if (mult) out.factors.push_back({g, mult});
        }
    }
    if (rest.degree() > 0) {
        auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const Factor& fa) { return fa.poly == rest; });
        if (it != out.factors.end())
            ++it->multiplicity;
        else
            out.factors.push_back({rest, 1});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    return out;
}

inline bool is_irreducible(const UniPoly& f, unsigned long long budget = kDefaultFactorBudget) {
    if (f.degree() < 1) return false;
    auto fac = poly_factor(f, budget);
    return fac.factors.size() == 1 && fac.factors.front().multiplicity == 1;
}

/// Field embedding F_{p^a} -> F_{p^b} (a | b), tabulated.
class Embedding {
public:
    Embedding() = default;

    /// Identity on ctx.
    static Embedding identity(const FieldCtx& ctx) {
        Embedding e;
        e.from_ = e.to_ = ctx;
        e.table_ = elements(ctx);
        return e;
    }

    /// Sends the generator of `from` to the least (by code) root of its modulus in `to`.
    static Embedding between(const FieldCtx& from, const FieldCtx& to) {
        require(from.p() == to.p() && to.k() % from.k() == 0, "no embedding between these fields");
        Embedding e;
        e.from_ = from;
        e.to_ = to;
        if (from == to) return identity(from);
        FieldElem image = to.zero();
        if (from.k() == 1) {
            e.table_.resize(from.q());
            for (unsigned i = 0; i < from.q(); ++i) e.table_[i] = to.element(i);
            return e;
        }
        std::vector<FieldElem> mod;
        for (unsigned c : from.modulus()) mod.push_back(to.from_int(c));
        const UniPoly m(to, mod);
        bool found = false;
        for (unsigned i = 0; i < to.q() && !found; ++i) {
            if (m.eval(to.element(i)).is_zero()) {
                image = to.element(i);
                found = true;
            }
        }
        ensure(found, "modulus has no root in the larger field");
        e.gen_image_ = image;
        e.table_.resize(from.q());
        for (unsigned i = 0; i < from.q(); ++i) {
            const auto c = from.coeffs(from.element(i));
            FieldElem v = to.zero(), pw = to.one();
            for (unsigned j = 0; j < c.size(); ++j) {
                v = to.add(v, to.mul(to.from_int(c[j]), pw));
                pw = to.mul(pw, image);
            }
            e.table_[i] = v;
        }
        return e;
    }

    const FieldCtx& from() const { return from_; }
    const FieldCtx& to() const { return to_; }
    FieldElem operator()(FieldElem a) const { return table_[a.code]; }
    FieldElem generator_image() const { return gen_image_; }

    UniPoly map(const UniPoly& f) const {
        std::vector<FieldElem> c;
        for (auto v : f.coeffs()) c.push_back((*this)(v));
        return UniPoly(to_, std::move(c));
    }

private:
    FieldCtx from_, to_;
    std::vector<FieldElem> table_;
    FieldElem gen_image_{};
};

struct SplittingField {
    FieldCtx field;
    Embedding embedding;
    unsigned degree = 1;  // [result : ctx]
};

/// Smallest extension F_{q^m} over which f splits into linear factors.
inline SplittingField splitting_extension(const UniPoly& f, unsigned long long budget = kDefaultFactorBudget) {
    const FieldCtx& ctx = f.ctx();
    const auto fac = poly_factor(f, budget);
    unsigned m = 1;
    for (const auto& fa : fac.factors) m = std::lcm(m, static_cast<unsigned>(fa.poly.degree()));
    if (m == 1) return {ctx, Embedding::identity(ctx), 1};
    const FieldCtx big = FieldCtx::make(ctx.p(), ctx.k() * m);
    return {big, Embedding::between(ctx, big), m};
}

}  // namespace modlie
