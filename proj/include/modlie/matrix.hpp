#pragma once

// Dense exact linear algebra over a FieldCtx.
//
// Entries are stored as raw 16-bit element codes in row-major order. Row
// operations go through a small kernel layer that uses compile-time moduli
// for p in {2, 3, 5, 7} so the inner loops vectorize; all other fields fall
// back to table arithmetic.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/poly.hpp"

namespace modlie {

using Vec = std::vector<FieldElem>;

inline Vec zero_vec(const FieldCtx& ctx, std::size_t n) { return Vec(n, ctx.zero()); }

inline Vec unit_vec(const FieldCtx& ctx, std::size_t n, std::size_t i) {
    Vec v(n, ctx.zero());
    v[i] = ctx.one();
    return v;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElem a) { return a.is_zero(); });
}

inline void axpy(const FieldCtx& ctx, Vec& y, FieldElem a, const Vec& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] = ctx.add(y[i], ctx.mul(a, x[i]));
}

namespace detail {

template <unsigned P>
inline void axpy_prime(std::uint16_t* dst, const std::uint16_t* src, unsigned f, std::size_t n) {
    if constexpr (P == 2) {
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    } else {
        const std::uint16_t ff = static_cast<std::uint16_t>(f);
        for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint16_t>((dst[i] + ff * src[i]) % P);
    }
}

inline void axpy_generic_prime(std::uint16_t* dst, const std::uint16_t* src, unsigned f, unsigned p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint16_t>((dst[i] + static_cast<std::uint64_t>(f) * src[i]) % p);
}

/// dst += f * src over ctx, for n entries.
inline void axpy_codes(const FieldCtx& ctx, std::uint16_t* dst, const std::uint16_t* src, FieldElem f, std::size_t n) {
    if (f.is_zero()) return;
    if (ctx.is_prime_field()) {
        switch (ctx.p()) {
            case 2: axpy_prime<2>(dst, src, f.code, n); return;
            case 3: axpy_prime<3>(dst, src, f.code, n); return;
            case 5: axpy_prime<5>(dst, src, f.code, n); return;
            case 7: axpy_prime<7>(dst, src, f.code, n); return;
            default: axpy_generic_prime(dst, src, f.code, ctx.p(), n); return;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (src[i]) dst[i] = ctx.add(FieldElem{dst[i]}, ctx.mul(f, FieldElem{src[i]})).code;
}

inline void scale_codes(const FieldCtx& ctx, std::uint16_t* row, FieldElem f, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (row[i]) row[i] = ctx.mul(f, FieldElem{row[i]}).code;
}

}  // namespace detail

class Mat {
public:
    Mat() = default;
    Mat(FieldCtx ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Mat identity(const FieldCtx& ctx, std::size_t n) {
        Mat m(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
        return m;
    }
    static Mat from_rows(const FieldCtx& ctx, const std::vector<Vec>& rows, std::size_t cols) {
        Mat m(ctx, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, "row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }
    static Mat from_ints(const FieldCtx& ctx, const std::vector<std::vector<long long>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Mat m(ctx, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, ctx.from_int(rows[i][j]));
        return m;
    }
    /// Matrix whose columns are the given vectors.
    static Mat from_columns(const FieldCtx& ctx, const std::vector<Vec>& cols, std::size_t rows) {
        Mat m(ctx, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
        return m;
    }

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    FieldElem at(std::size_t i, std::size_t j) const { return FieldElem{data_[i * cols_ + j]}; }
    void set(std::size_t i, std::size_t j, FieldElem v) { data_[i * cols_ + j] = v.code; }
    void add_to(std::size_t i, std::size_t j, FieldElem v) { set(i, j, ctx_.add(at(i, j), v)); }

    std::uint16_t* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const std::uint16_t* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(std::size_t j, const Vec& v) {
        for (std::size_t i = 0; i < rows_; ++i) set(i, j, v[i]);
    }
    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    /// Row-major vectorization (length rows*cols).
    Vec flatten() const {
        Vec v(data_.size());
        for (std::size_t i = 0; i < data_.size(); ++i) v[i] = FieldElem{data_[i]};
        return v;
    }
    static Mat unflatten(const FieldCtx& ctx, const Vec& v, std::size_t rows, std::size_t cols) {
        require(v.size() == rows * cols, "unflatten: size mismatch");
        Mat m(ctx, rows, cols);
        for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i].code;
        return m;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](std::uint16_t c) { return c == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row_ptr(a), row_ptr(a) + cols_, row_ptr(b));
    }
    /// row[dst] += f * row[src], starting at column `from`.
    void row_axpy(std::size_t dst, std::size_t src, FieldElem f, std::size_t from = 0) {
        detail::axpy_codes(ctx_, row_ptr(dst) + from, row_ptr(src) + from, f, cols_ - from);
    }
    void row_scale(std::size_t r, FieldElem f, std::size_t from = 0) {
        detail::scale_codes(ctx_, row_ptr(r) + from, f, cols_ - from);
    }

    Mat transpose() const {
        Mat t(ctx_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
        return t;
    }

    Mat operator*(const Mat& o) const {
        require(cols_ == o.rows_, "matrix product: dimension mismatch");
        Mat r(ctx_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t l = 0; l < cols_; ++l) {
                const FieldElem a = at(i, l);
                if (a.is_zero()) continue;
                detail::axpy_codes(ctx_, r.row_ptr(i), o.row_ptr(l), a, o.cols_);
            }
        return r;
    }
    Vec operator*(const Vec& v) const {
        require(v.size() == cols_, "matrix-vector product: dimension mismatch");
        Vec r(rows_, ctx_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            FieldElem s = ctx_.zero();
            for (std::size_t j = 0; j < cols_; ++j) {
                const std::uint16_t a = data_[i * cols_ + j];
                if (a && !v[j].is_zero()) s = ctx_.add(s, ctx_.mul(FieldElem{a}, v[j]));
            }
            r[i] = s;
        }
        return r;
    }
    Mat operator+(const Mat& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: dimension mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < rows_; ++i) detail::axpy_codes(ctx_, r.row_ptr(i), o.row_ptr(i), ctx_.one(), cols_);
        return r;
    }
    Mat operator-(const Mat& o) const { return *this + o.scaled(ctx_.neg(ctx_.one())); }
    Mat scaled(FieldElem f) const {
        Mat r = *this;
        for (auto& c : r.data_)
            if (c) c = ctx_.mul(f, FieldElem{c}).code;
        return r;
    }
    /// this*o - o*this
    Mat commutator(const Mat& o) const { return (*this) * o - o * (*this); }

    Mat pow(unsigned e) const {
        require(square(), "matrix power of non-square matrix");
        Mat r = identity(ctx_, rows_), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string format() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += " ";
                out += ctx_.format(at(i, j));
            }
            out += "]\n";
        }
        return out;
    }

private:
    FieldCtx ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint16_t> data_;
};

struct RrefResult {
    Mat form;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduction to the unique reduced row echelon form.
inline RrefResult rref(Mat m) {
    const FieldCtx& ctx = m.ctx();
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(rank, piv);
        m.row_scale(rank, ctx.inv(m.at(rank, c)), c);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            const FieldElem e = m.at(r, c);
            if (!e.is_zero()) m.row_axpy(r, rank, ctx.neg(e), c);
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

/// Row space of a matrix given by a canonical RREF basis, plus helpers for
/// membership, reduction and coordinates.
class Subspace {
public:
    Subspace() = default;
    Subspace(FieldCtx ctx, std::size_t ambient) : ctx_(std::move(ctx)), ambient_(ambient), basis_(ctx_, 0, ambient) {}

    /// Span of the rows of m.
    static Subspace row_space(const Mat& m) {
        auto r = rref(m);
        Subspace s(m.ctx(), m.cols());
        Mat b(m.ctx(), r.rank, m.cols());
        for (std::size_t i = 0; i < r.rank; ++i)
            std::copy(r.form.row_ptr(i), r.form.row_ptr(i) + m.cols(), b.row_ptr(i));
        s.basis_ = std::move(b);
        s.pivots_ = std::move(r.pivots);
        return s;
    }
    static Subspace span(const FieldCtx& ctx, std::size_t ambient, const std::vector<Vec>& vecs) {
        return row_space(Mat::from_rows(ctx, vecs, ambient));
    }
    static Subspace zero(const FieldCtx& ctx, std::size_t ambient) { return Subspace(ctx, ambient); }
    static Subspace full(const FieldCtx& ctx, std::size_t ambient) { return row_space(Mat::identity(ctx, ambient)); }

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the pivot coordinates; zero iff v is in the span.
    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < dim(); ++i) {
            const FieldElem c = v[pivots_[i]];
            if (c.is_zero()) continue;
            const FieldElem f = ctx_.neg(c);
            for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
                const FieldElem b = basis_.at(i, j);
                if (!b.is_zero()) v[j] = ctx_.add(v[j], ctx_.mul(f, b));
            }
        }
        return v;
    }
    bool contains(const Vec& v) const { return modlie::is_zero(reduce(v)); }
    bool contains(const Subspace& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }
    /// Coordinates of a member of the span w.r.t. the RREF basis: the entries at
    /// the pivot columns.
    Vec coordinates(const Vec& v) const {
        Vec c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }
    Vec from_coordinates(const Vec& c) const {
        Vec v = zero_vec(ctx_, ambient_);
        for (std::size_t i = 0; i < dim(); ++i) axpy(ctx_, v, c[i], basis_vector(i));
        return v;
    }

    Subspace operator+(const Subspace& o) const {
        require(ambient_ == o.ambient_, "subspace sum: ambient mismatch");
        auto vecs = basis_vectors();
        for (auto& v : o.basis_vectors()) vecs.push_back(v);
        return span(ctx_, ambient_, vecs);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    FieldCtx ctx_;
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
inline Subspace kernel(const Mat& m) {
    const FieldCtx& ctx = m.ctx();
    const auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(ctx, m.cols());
        v[f] = ctx.one();
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = ctx.neg(r.form.at(i, f));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(ctx, m.cols(), vecs);
}

/// Annihilator {w : <w, s> = 0 for all s in S}.
inline Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

inline Subspace intersection(const Subspace& a, const Subspace& b) {
    require(a.ambient() == b.ambient(), "intersection: ambient mismatch");
    return annihilator(annihilator(a) + annihilator(b));
}

/// One solution of m x = b, if any.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    const FieldCtx& ctx = m.ctx();
    require(b.size() == m.rows(), "solve: dimension mismatch");
    Mat aug(ctx, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols(), b[i]);
    }
    const auto r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(ctx, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form.at(i, m.cols());
    return x;
}

/// Expresses vectors in a fixed (not necessarily canonical) ordered basis.
class CoordinateSystem {
public:
    CoordinateSystem() = default;
    CoordinateSystem(const FieldCtx& ctx, std::size_t ambient, const std::vector<Vec>& basis)
        : ctx_(ctx), ambient_(ambient), n_(basis.size()) {
        // Reduce [B | I]; rows of the result pair an echelon vector with the
        // combination of basis vectors producing it.
        Mat aug(ctx, n_, ambient + n_);
        for (std::size_t i = 0; i < n_; ++i) {
            require(basis[i].size() == ambient, "coordinate basis: length mismatch");
            for (std::size_t j = 0; j < ambient; ++j) aug.set(i, j, basis[i][j]);
            aug.set(i, ambient + i, ctx.one());
        }
        auto r = rref(aug);
        require(r.rank == n_ && (n_ == 0 || r.pivots.back() < ambient), "coordinate basis is linearly dependent");
        form_ = std::move(r.form);
        pivots_ = std::move(r.pivots);
    }

    std::size_t size() const { return n_; }

    /// Coordinates of v, or nullopt if v is outside the span.
    std::optional<Vec> try_coordinates(Vec v) const {
        Vec c = zero_vec(ctx_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const FieldElem a = v[pivots_[i]];
            if (a.is_zero()) continue;
            const FieldElem f = ctx_.neg(a);
            for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
                const FieldElem b = form_.at(i, j);
                if (!b.is_zero()) v[j] = ctx_.add(v[j], ctx_.mul(f, b));
            }
            for (std::size_t j = 0; j < n_; ++j) {
                const FieldElem b = form_.at(i, ambient_ + j);
                if (!b.is_zero()) c[j] = ctx_.add(c[j], ctx_.mul(a, b));
            }
        }
        if (!modlie::is_zero(v)) return std::nullopt;
        return c;
    }
    Vec coordinates(const Vec& v) const {
        auto c = try_coordinates(v);
        require(c.has_value(), "vector is not in the span of the coordinate basis");
        return *c;
    }

private:
    FieldCtx ctx_;
    std::size_t ambient_ = 0, n_ = 0;
    Mat form_;
    std::vector<std::size_t> pivots_;
};

/// Monic characteristic polynomial det(X I - m) by Berkowitz's division-free
/// recurrence.
inline UniPoly charpoly(const Mat& m) {
    require(m.square(), "charpoly: matrix is not square");
    const FieldCtx& ctx = m.ctx();
    const std::size_t n = m.rows();
    // Coefficients highest degree first.
    std::vector<FieldElem> poly{ctx.one()};
    for (std::size_t k = 0; k < n; ++k) {
        // A_k = leading (k+1)x(k+1) block = [[A, C], [R, a]].
        const FieldElem a = m.at(k, k);
        std::vector<FieldElem> toeplitz(k + 2, ctx.zero());
        toeplitz[0] = ctx.one();
        toeplitz[1] = ctx.neg(a);
        // v = C, then v <- A v; entries R A^i C.
        Vec v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = m.at(i, k);
        for (std::size_t i = 2; i < k + 2; ++i) {
            FieldElem s = ctx.zero();
            for (std::size_t j = 0; j < k; ++j) s = ctx.add(s, ctx.mul(m.at(k, j), v[j]));
            toeplitz[i] = ctx.neg(s);
            Vec w(k, ctx.zero());
            for (std::size_t r = 0; r < k; ++r) {
                FieldElem t = ctx.zero();
                for (std::size_t j = 0; j < k; ++j) t = ctx.add(t, ctx.mul(m.at(r, j), v[j]));
                w[r] = t;
            }
            v = std::move(w);
        }
        std::vector<FieldElem> next(k + 2, ctx.zero());
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
                next[i] = ctx.add(next[i], ctx.mul(toeplitz[i - j], poly[j]));
        poly = std::move(next);
    }
    std::reverse(poly.begin(), poly.end());
    return UniPoly(ctx, std::move(poly));
}

/// ker (m - alpha I)^n.
inline Subspace gen_eigenspace(const Mat& m, FieldElem alpha) {
    require(m.square(), "gen_eigenspace: matrix is not square");
    const Mat shifted = m - Mat::identity(m.ctx(), m.rows()).scaled(alpha);
    return kernel(shifted.pow(static_cast<unsigned>(m.rows())));
}

/// Entrywise image of a matrix under a field embedding.
inline Mat map_matrix(const Mat& m, const Embedding& e) {
    Mat r(e.to(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, e(m.at(i, j)));
    return r;
}

}  // namespace modlie
