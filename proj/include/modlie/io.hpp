#pragma once

// Text formats.
//
// .lie files, one statement per line, '#' starts a comment:
//   field 3                      or   field 2^2 t^2+t+1
//   dim 7
//   [1,3] = e7
//   [1,5] = -e6
//   [2,5] = 2*e7 + (t+1)*e3
// Indices are 1-based with i < j; omitted pairs have zero bracket.
//
// .prod files use the same header and lines "e1.e2 = ..." (or "x1.x2 = ...");
// keys are unordered and diagonal keys are allowed.

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modlie/cpa.hpp"
#include "modlie/lie.hpp"

namespace modlie {

namespace detail {

inline std::string strip(std::string s) {
    const auto h = s.find('#');
    if (h != std::string::npos) s.erase(h);
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void line_error(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

/// Parses "c*e3 + (t+1)*e2 - e1" (also x<k>, or a bare "0") into a coordinate vector.
inline Vec parse_sum(const FieldCtx& ctx, std::size_t n, const std::string& text, std::size_t line) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) line_error(line, "empty right-hand side");
    Vec v = zero_vec(ctx, n);
    if (s == "0") return v;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            line_error(line, "expected '+' or '-' in '" + text + "'");
        }
        first = false;
        FieldElem c = ctx.one();
        // coefficient: "(...)" or a literal up to '*'
        if (pos < s.size() && s[pos] == '(') {
            const auto close = s.find(')', pos);
            if (close == std::string::npos) line_error(line, "unbalanced parenthesis in '" + text + "'");
            try {
                c = ctx.parse(s.substr(pos + 1, close - pos - 1));
            } catch (const InputError& e) {
                line_error(line, e.what());
            }
            pos = close + 1;
            if (pos >= s.size() || s[pos] != '*') line_error(line, "expected '*' after coefficient in '" + text + "'");
            ++pos;
        } else if (pos < s.size() && s[pos] != 'e' && s[pos] != 'x') {
            const auto star = s.find('*', pos);
            if (star == std::string::npos) line_error(line, "expected a basis vector in '" + text + "'");
            try {
                c = ctx.parse(s.substr(pos, star - pos));
            } catch (const InputError& e) {
                line_error(line, e.what());
            }
            pos = star + 1;
        }
        if (pos >= s.size() || (s[pos] != 'e' && s[pos] != 'x')) line_error(line, "expected e<k> in '" + text + "'");
        ++pos;
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) line_error(line, "missing basis index in '" + text + "'");
        const std::size_t k = std::stoul(s.substr(pos, end - pos));
        if (k < 1 || k > n) line_error(line, "basis index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
        pos = end;
        v[k - 1] = negative ? ctx.sub(v[k - 1], c) : ctx.add(v[k - 1], c);
    }
    return v;
}

inline std::string format_coeff(const FieldCtx& ctx, FieldElem c) {
    std::string s = ctx.format(c);
    if (s.find_first_of("+*") != std::string::npos) s = "(" + s + ")";
    return s;
}

struct Header {
    std::optional<FieldCtx> ctx;
    std::optional<std::size_t> n;
};

/// Handles "field" and "dim" lines; returns false for other lines.
inline bool header_line(Header& h, const std::string& s, std::size_t line) {
    if (s.rfind("field", 0) == 0 && (s.size() == 5 || std::isspace(static_cast<unsigned char>(s[5])))) {
        if (h.ctx) line_error(line, "duplicate field line");
        try {
            h.ctx = parse_field_spec(s.substr(5));
        } catch (const InputError& e) {
            line_error(line, e.what());
        }
        return true;
    }
    if (s.rfind("dim", 0) == 0 && (s.size() == 3 || std::isspace(static_cast<unsigned char>(s[3])))) {
        if (h.n) line_error(line, "duplicate dim line");
        const std::string rest = strip(s.substr(3));
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            line_error(line, "bad dimension '" + rest + "'");
        h.n = std::stoul(rest);
        return true;
    }
    return false;
}

inline std::size_t parse_index(const std::string& t, std::size_t n, std::size_t line) {
    std::string s = strip(t);
    if (!s.empty() && (s[0] == 'e' || s[0] == 'x')) s = s.substr(1);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) line_error(line, "bad index '" + t + "'");
    const std::size_t k = std::stoul(s);
    if (k < 1 || k > n) line_error(line, "index " + s + " out of range 1.." + std::to_string(n));
    return k - 1;
}

}  // namespace detail

inline LieAlgebra parse_lie(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    detail::Header h;
    std::optional<LieAlgebra> g;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = detail::strip(raw);
        if (s.empty()) continue;
        if (detail::header_line(h, s, line)) continue;
        if (s[0] != '[') detail::line_error(line, "unrecognized statement '" + s + "'");
        if (!h.ctx || !h.n) detail::line_error(line, "bracket before field and dim lines");
        if (!g) g = LieAlgebra(*h.ctx, *h.n);
        const auto close = s.find(']');
        const auto comma = s.find(',');
        const auto eq = s.find('=', close == std::string::npos ? 0 : close);
        if (close == std::string::npos || comma == std::string::npos || comma > close || eq == std::string::npos)
            detail::line_error(line, "expected '[i,j] = ...'");
        if (detail::strip(s.substr(close + 1, eq - close - 1)) != "") detail::line_error(line, "unexpected text before '='");
        const std::size_t i = detail::parse_index(s.substr(1, comma - 1), *h.n, line);
        const std::size_t j = detail::parse_index(s.substr(comma + 1, close - comma - 1), *h.n, line);
        if (i >= j)
            detail::line_error(line, "bracket keys must satisfy i < j (got [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "])");
        if (!seen.insert({i, j}).second) detail::line_error(line, "duplicate bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
        g->set_bracket(i, j, detail::parse_sum(*h.ctx, *h.n, s.substr(eq + 1), line));
    }
    if (!h.ctx) throw InputError("missing field line");
    if (!h.n) throw InputError("missing dim line");
    if (!g) g = LieAlgebra(*h.ctx, *h.n);
    const ValidationReport rep = validate(*g);
    if (!rep.ok) throw InputError(rep.message);
    return *g;
}

inline std::string format_vec(const FieldCtx& ctx, const Vec& v, char var = 'e') {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string c = detail::format_coeff(ctx, v[k]);
        if (c != "1") out += c + "*";
        out += var + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

inline std::string print_lie(const LieAlgebra& g) {
    std::string out;
    if (!g.name().empty()) out += "# " + g.name() + "\n";
    if (!g.labels().empty()) {
        out += "# basis:";
        for (std::size_t i = 0; i < g.dim(); ++i) out += " e" + std::to_string(i + 1) + "=" + g.labels()[i];
        out += "\n";
    }
    out += "field " + g.ctx().describe() + "\n";
    out += "dim " + std::to_string(g.dim()) + "\n";
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const Vec v = g.bracket_basis(i, j);
            if (is_zero(v)) continue;
            out += "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " + format_vec(g.ctx(), v) + "\n";
        }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline LieAlgebra load_lie(const std::string& path) { return parse_lie(read_file(path)); }

/// Parses a .prod file; the header must match g's field and dimension.
inline SymProduct parse_prod(const std::string& text, const LieAlgebra& g) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    detail::Header h;
    SymProduct p(g.ctx(), g.dim());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = detail::strip(raw);
        if (s.empty()) continue;
        if (detail::header_line(h, s, line)) {
            if (h.ctx && !(*h.ctx == g.ctx())) detail::line_error(line, "field differs from the algebra's field");
            if (h.n && *h.n != g.dim()) detail::line_error(line, "dimension differs from the algebra's dimension");
            continue;
        }
        const auto eq = s.find('=');
        const auto dot = s.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq) detail::line_error(line, "expected 'ei.ej = ...'");
        std::size_t i = detail::parse_index(s.substr(0, dot), g.dim(), line);
        std::size_t j = detail::parse_index(s.substr(dot + 1, eq - dot - 1), g.dim(), line);
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second)
            detail::line_error(line, "duplicate product e" + std::to_string(i + 1) + ".e" + std::to_string(j + 1));
        p.set(i, j, detail::parse_sum(g.ctx(), g.dim(), s.substr(eq + 1), line));
    }
    return p;
}

/// Lines "x1.x2 = a*x3 + b*x5" for nonzero products with i <= j.
inline std::string print_prod(const SymProduct& p, char var = 'e', bool header = true) {
    std::string out;
    if (header) out += "field " + p.ctx().describe() + "\ndim " + std::to_string(p.dim()) + "\n";
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i; j < p.dim(); ++j) {
            const Vec v = p.basis_product(i, j);
            if (is_zero(v)) continue;
            out += var + std::to_string(i + 1) + "." + var + std::to_string(j + 1) + " = " + format_vec(p.ctx(), v, var) + "\n";
        }
    return out;
}

}  // namespace modlie
