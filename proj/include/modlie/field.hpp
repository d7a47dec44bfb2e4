#pragma once

// Exact arithmetic in F_p and F_{p^k}.
//
// Elements are stored as a single integer code: the coefficient vector
// (c_0, ..., c_{k-1}) of c_0 + c_1 t + ... + c_{k-1} t^{k-1} read as base-p
// digits, low digit first. The code is canonical, so element equality is code
// equality and the prime subfield occupies codes 0..p-1.

#include <cctype>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modlie/error.hpp"

namespace modlie {

struct FieldElem {
    std::uint16_t code = 0;

    constexpr FieldElem() = default;
    constexpr explicit FieldElem(std::uint16_t c) : code(c) {}

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
    constexpr bool is_zero() const { return code == 0; }
};

/// Largest supported field size; codes must fit in 16 bits.
inline constexpr unsigned kMaxFieldSize = 65536;

namespace detail {

// Polynomials over F_p as low-first coefficient vectors, used while the field
// itself is being set up.
using PrimePoly = std::vector<unsigned>;

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline unsigned inv_mod(unsigned a, unsigned p) {
    // p is prime and small: Fermat.
    unsigned long long r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

/// Remainder of f modulo a nonzero g over F_p.
inline PrimePoly rem(PrimePoly f, PrimePoly g, unsigned p) {
    trim(f);
    trim(g);
    const std::size_t dg = g.size() - 1;
    const unsigned lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
        trim(f);
    }
    return f;
}

/// Irreducibility by trial division against every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(PrimePoly f, unsigned p) {
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        PrimePoly g(d + 1, 0);
        g[d] = 1;
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t x = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(x % p);
                x /= p;
            }
            if (rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

/// Lexicographically least monic irreducible of degree k over F_p, comparing
/// coefficient tuples (c_0, c_1, ..., c_{k-1}) from the constant term up.
inline PrimePoly least_irreducible(unsigned p, unsigned k) {
    std::size_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    PrimePoly f(k + 1, 0);
    f[k] = 1;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t x = idx;
        for (unsigned i = k; i-- > 0;) {
            f[i] = static_cast<unsigned>(x % p);
            x /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw InternalError("no irreducible polynomial found");
}

struct FieldData {
    unsigned p = 0;
    unsigned k = 1;
    unsigned q = 0;
    PrimePoly modulus;  // monic, degree k, empty when k == 1
    std::vector<std::uint32_t> pow_p;
    std::vector<std::uint16_t> neg, inv, log, exp;
    std::vector<std::uint16_t> add_tab;  // q*q, only for small extension fields

    unsigned digit(unsigned code, unsigned i) const { return code / pow_p[i] % p; }

    unsigned add_digits(unsigned a, unsigned b) const {
        unsigned r = 0;
        for (unsigned i = 0; i < k; ++i) {
            unsigned s = digit(a, i) + digit(b, i);
            if (s >= p) s -= p;
            r += s * pow_p[i];
        }
        return r;
    }

    unsigned mul_poly(unsigned a, unsigned b) const {
        std::vector<unsigned> prod(2 * k, 0);
        for (unsigned i = 0; i < k; ++i) {
            const unsigned ai = digit(a, i);
            if (!ai) continue;
            for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ai * digit(b, j)) % p;
        }
        for (unsigned d = 2 * k - 1; d >= k; --d) {
            const unsigned c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < k; ++i)
                prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
        }
        unsigned r = 0;
        for (unsigned i = 0; i < k; ++i) r += prod[i] * pow_p[i];
        return r;
    }
};

}  // namespace detail

/// Immutable, shareable handle to a finite field F_{p^k}.
class FieldCtx {
public:
    FieldCtx() = default;

    /// Builds F_{p^k}. Without a modulus, the least monic irreducible of
    /// degree k is used so that element codes are reproducible.
    static FieldCtx make(unsigned p, unsigned k = 1, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
        require(detail::is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
        require(k >= 1, "extension degree must be at least 1");
        unsigned long long q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > kMaxFieldSize) throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds supported size 65536");
        }
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->k = k;
        d->q = static_cast<unsigned>(q);
        d->pow_p.resize(k + 1);
        d->pow_p[0] = 1;
        for (unsigned i = 1; i <= k; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
        if (modulus) {
            detail::PrimePoly m = *modulus;
            for (auto& c : m) c %= p;
            detail::trim(m);
            require(m.size() == k + 1 || (k == 1 && m.empty()), "modulus has wrong degree for extension degree " + std::to_string(k));
            if (!m.empty()) {
                require(m.back() == 1, "modulus must be monic");
                require(detail::is_irreducible(m, p), "modulus is reducible over F_" + std::to_string(p));
            }
            if (k > 1) d->modulus = m;
        } else if (k > 1) {
            d->modulus = detail::least_irreducible(p, k);
        }
        build_tables(*d);
        FieldCtx ctx;
        ctx.d_ = std::move(d);
        return ctx;
    }

    static FieldCtx prime(unsigned p) { return make(p, 1); }

    bool valid() const { return static_cast<bool>(d_); }
    unsigned p() const { return d_->p; }
    unsigned k() const { return d_->k; }
    unsigned q() const { return d_->q; }
    bool is_prime_field() const { return d_->k == 1; }
    /// Monic modulus over F_p, low-first; empty for prime fields.
    const std::vector<unsigned>& modulus() const { return d_->modulus; }

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }
    /// The generator t of an extension field (the class of X modulo the modulus).
    FieldElem gen() const {
        require(d_->k > 1, "prime field has no extension generator");
        return FieldElem{static_cast<std::uint16_t>(d_->p)};
    }
    FieldElem element(unsigned idx) const { return FieldElem{static_cast<std::uint16_t>(idx)}; }

    FieldElem from_int(long long v) const {
        long long r = v % static_cast<long long>(d_->p);
        if (r < 0) r += d_->p;
        return FieldElem{static_cast<std::uint16_t>(r)};
    }

    FieldElem from_coeffs(const std::vector<unsigned>& coeffs) const {
        require(coeffs.size() <= d_->k, "too many coefficients for field element");
        unsigned code = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) code += (coeffs[i] % d_->p) * d_->pow_p[i];
        return FieldElem{static_cast<std::uint16_t>(code)};
    }

    std::vector<unsigned> coeffs(FieldElem a) const {
        std::vector<unsigned> c(d_->k);
        for (unsigned i = 0; i < d_->k; ++i) c[i] = d_->digit(a.code, i);
        return c;
    }

    FieldElem add(FieldElem a, FieldElem b) const {
        if (d_->k == 1) {
            unsigned s = a.code + b.code;
            if (s >= d_->p) s -= d_->p;
            return FieldElem{static_cast<std::uint16_t>(s)};
        }
        if (!d_->add_tab.empty()) return FieldElem{d_->add_tab[a.code * d_->q + b.code]};
        return FieldElem{static_cast<std::uint16_t>(d_->add_digits(a.code, b.code))};
    }
    FieldElem neg(FieldElem a) const { return FieldElem{d_->neg[a.code]}; }
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.code == 0 || b.code == 0) return FieldElem{0};
        if (d_->k == 1) return FieldElem{static_cast<std::uint16_t>(static_cast<unsigned>(a.code) * b.code % d_->p)};
        return FieldElem{d_->exp[d_->log[a.code] + d_->log[b.code]]};
    }

    FieldElem inv(FieldElem a) const {
        if (a.code == 0) throw InputError("inversion of zero");
        return FieldElem{d_->inv[a.code]};
    }
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    FieldElem pow(FieldElem a, long long e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        FieldElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Text literal: an integer for prime fields, a polynomial in t otherwise
    /// (highest degree first, e.g. "t^2+2*t+1").
    std::string format(FieldElem a) const {
        if (d_->k == 1) return std::to_string(a.code);
        if (a.code == 0) return "0";
        std::string out;
        for (unsigned i = d_->k; i-- > 0;) {
            const unsigned c = d_->digit(a.code, i);
            if (!c) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c);
                continue;
            }
            if (c != 1) out += std::to_string(c) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    /// Parses a literal produced by format(); also accepts signs, spaces and
    /// integers outside [0, p).
    FieldElem parse(std::string_view text) const {
        std::string s;
        for (char ch : text)
            if (ch != ' ' && ch != '\t') s += ch;
        require(!s.empty(), "empty field literal");
        if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        FieldElem acc = zero();
        std::size_t pos = 0;
        bool first = true;
        while (pos < s.size()) {
            bool negative = false;
            if (s[pos] == '+' || s[pos] == '-') {
                negative = s[pos] == '-';
                ++pos;
            } else {
                require(first, "bad field literal '" + std::string(text) + "'");
            }
            first = false;
            long long coeff = 1;
            bool have_coeff = false;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::size_t end = pos;
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                coeff = std::stoll(s.substr(pos, end - pos));
                have_coeff = true;
                pos = end;
                if (pos < s.size() && s[pos] == '*') ++pos;
            }
            unsigned power = 0;
            if (pos < s.size() && s[pos] == 't') {
                require(d_->k > 1, "prime field literal cannot contain t");
                ++pos;
                power = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::size_t end = pos;
                    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                    require(end > pos, "bad exponent in field literal '" + std::string(text) + "'");
                    power = static_cast<unsigned>(std::stoul(s.substr(pos, end - pos)));
                    pos = end;
                }
            } else {
                require(have_coeff, "bad field literal '" + std::string(text) + "'");
            }
            FieldElem term = mul(from_int(coeff), power ? pow(gen(), power) : one());
            acc = negative ? sub(acc, term) : add(acc, term);
        }
        return acc;
    }

    /// "3" or "2^2 t^2+t+1".
    std::string describe() const {
        if (d_->k == 1) return std::to_string(d_->p);
        std::string m;
        for (unsigned i = d_->k + 1; i-- > 0;) {
            const unsigned c = d_->modulus[i];
            if (!c) continue;
            if (!m.empty()) m += "+";
            if (i == 0) {
                m += std::to_string(c);
                continue;
            }
            if (c != 1) m += std::to_string(c) + "*";
            m += "t";
            if (i > 1) m += "^" + std::to_string(i);
        }
        return std::to_string(d_->p) + "^" + std::to_string(d_->k) + " " + m;
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->p == b.d_->p && a.d_->k == b.d_->k && a.d_->modulus == b.d_->modulus;
    }

    const detail::FieldData& data() const { return *d_; }

private:
    static void build_tables(detail::FieldData& d) {
        const unsigned q = d.q;
        d.neg.resize(q);
        d.inv.assign(q, 0);
        for (unsigned a = 0; a < q; ++a) {
            unsigned r = 0;
            for (unsigned i = 0; i < d.k; ++i) r += ((d.p - d.digit(a, i)) % d.p) * d.pow_p[i];
            d.neg[a] = static_cast<std::uint16_t>(r);
        }
        if (d.k == 1) {
            for (unsigned a = 1; a < q; ++a) d.inv[a] = static_cast<std::uint16_t>(detail::inv_mod(a, d.p));
            return;
        }
        if (q <= 1024) {
            d.add_tab.resize(static_cast<std::size_t>(q) * q);
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b) d.add_tab[a * q + b] = static_cast<std::uint16_t>(d.add_digits(a, b));
        }
        // Primitive element by direct order computation.
        d.log.assign(q, 0);
        d.exp.assign(2 * q, 0);
        for (unsigned g = 2; g < q; ++g) {
            unsigned x = 1, order = 0;
            do {
                d.exp[order++] = static_cast<std::uint16_t>(x);
                x = d.mul_poly(x, g);
            } while (x != 1 && order < q);
            if (order != q - 1) continue;
            for (unsigned i = 0; i < q - 1; ++i) d.log[d.exp[i]] = static_cast<std::uint16_t>(i);
            for (unsigned i = q - 1; i < 2 * q; ++i) d.exp[i] = d.exp[i - (q - 1)];
            for (unsigned a = 1; a < q; ++a) d.inv[a] = d.exp[(q - 1 - d.log[a]) % (q - 1)];
            return;
        }
        throw InternalError("no primitive element found");
    }

    std::shared_ptr<const detail::FieldData> d_;
};

/// All field elements in canonical (code) order.
inline std::vector<FieldElem> elements(const FieldCtx& ctx) {
    std::vector<FieldElem> out(ctx.q());
    for (unsigned i = 0; i < ctx.q(); ++i) out[i] = ctx.element(i);
    return out;
}

/// Parses "3", "2^2" (default modulus) or "2^2 t^2+t+1".
inline FieldCtx parse_field_spec(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    s = s.substr(i);
    require(!s.empty(), "empty field description");
    const auto space = s.find_first_of(" \t");
    std::string head = s.substr(0, space);
    std::string poly = space == std::string::npos ? std::string() : s.substr(space + 1);
    unsigned p = 0, k = 1;
    const auto caret = head.find('^');
    try {
        p = static_cast<unsigned>(std::stoul(head.substr(0, caret)));
        if (caret != std::string::npos) k = static_cast<unsigned>(std::stoul(head.substr(caret + 1)));
    } catch (const std::exception&) {
        throw InputError("bad field description '" + s + "'");
    }
    if (poly.find_first_not_of(" \t") == std::string::npos) return FieldCtx::make(p, k);
    require(k > 1, "prime field takes no modulus");
    // Parse the modulus with a throwaway context that knows t but has no relation
    // of degree <= k: read coefficients directly.
    std::vector<unsigned> coeffs(k + 1, 0);
    std::string body;
    for (char ch : poly)
        if (ch != ' ' && ch != '\t') body += ch;
    std::size_t pos = 0;
    bool first = true;
    while (pos < body.size()) {
        bool negative = false;
        if (body[pos] == '+' || body[pos] == '-') {
            negative = body[pos] == '-';
            ++pos;
        } else {
            require(first, "bad modulus '" + poly + "'");
        }
        first = false;
        long long c = 1;
        bool have = false;
        std::size_t end = pos;
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
        if (end > pos) {
            c = std::stoll(body.substr(pos, end - pos));
            have = true;
            pos = end;
            if (pos < body.size() && body[pos] == '*') ++pos;
        }
        unsigned e = 0;
        if (pos < body.size() && body[pos] == 't') {
            ++pos;
            e = 1;
            if (pos < body.size() && body[pos] == '^') {
                ++pos;
                end = pos;
                while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
                require(end > pos, "bad exponent in modulus '" + poly + "'");
                e = static_cast<unsigned>(std::stoul(body.substr(pos, end - pos)));
                pos = end;
            }
        } else {
            require(have, "bad modulus '" + poly + "'");
        }
        require(e <= k, "modulus degree exceeds extension degree");
        long long r = (negative ? -c : c) % static_cast<long long>(p);
        if (r < 0) r += p;
        coeffs[e] = static_cast<unsigned>((coeffs[e] + r) % p);
    }
    return FieldCtx::make(p, k, coeffs);
}

}  // namespace modlie
