#include <gtest/gtest.h>

#include <random>

#include "modlie/construct.hpp"
#include "modlie/lie.hpp"

using namespace modlie;

namespace {

LieAlgebra two_dim_nonabelian(const FieldCtx& f) {
    LieAlgebra g(f, 2);
    g.set_bracket(0, 1, Vec{f.zero(), f.one()});
    return g;
}

Vec random_vec(const FieldCtx& f, std::size_t n, std::mt19937& rng) {
    Vec v(n);
    for (auto& x : v) x = f.element(rng() % f.q());
    return v;
}

}  // namespace

TEST(Lie, ValidateAcceptsBuiltinTables) {
    EXPECT_TRUE(validate(builtin("psl3f3-table")).ok);
    EXPECT_TRUE(validate(builtin("g6")).ok);
    EXPECT_TRUE(validate(builtin("w3")).ok);
}

TEST(Lie, ValidateReportsTriple) {
    const FieldCtx f = FieldCtx::prime(5);
    LieAlgebra g = sl(2, f);
    // sl(2): e1 = E12, e2 = E21, e3 = H; corrupt [e1,e2] = H into a multiple of e1
    g.set_bracket(0, 1, Vec{f.one(), f.zero(), f.zero()});
    const auto r = validate(g);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.triple.has_value());
    EXPECT_EQ(*r.triple, (std::array<std::size_t, 3>{0, 1, 2}));
    EXPECT_THROW(validate_or_throw(g), InputError);
}

TEST(Lie, BracketExamples) {
    const LieAlgebra w3 = builtin("w3");
    const FieldCtx& f2 = w3.ctx();
    EXPECT_EQ(w3.bracket(unit_vec(f2, 3, 0), unit_vec(f2, 3, 1)), unit_vec(f2, 3, 2));
    const LieAlgebra t = builtin("psl3f3-table");
    EXPECT_EQ(t.bracket(unit_vec(t.ctx(), 7, 0), unit_vec(t.ctx(), 7, 3)), unit_vec(t.ctx(), 7, 1));
    std::mt19937 rng(1);
    const Vec x = random_vec(t.ctx(), 7, rng);
    EXPECT_TRUE(is_zero(t.bracket(x, x)));
    EXPECT_THROW(t.bracket(x, Vec(3, t.ctx().zero())), InputError);
}

TEST(Lie, JacobiOnRandomTriples) {
    std::mt19937 rng(17);
    for (const LieAlgebra& g : {builtin("psl3f3-table"), builtin("g6"), jacobson_witt(1, FieldCtx::prime(5)), sl(3, FieldCtx::prime(3))}) {
        const FieldCtx& f = g.ctx();
        for (int t = 0; t < 30; ++t) {
            const Vec x = random_vec(f, g.dim(), rng), y = random_vec(f, g.dim(), rng), z = random_vec(f, g.dim(), rng);
            Vec s = g.bracket(x, g.bracket(y, z));
            axpy(f, s, f.one(), g.bracket(y, g.bracket(z, x)));
            axpy(f, s, f.one(), g.bracket(z, g.bracket(x, y)));
            EXPECT_TRUE(is_zero(s));
            // antisymmetry from bilinearity
            Vec a = g.bracket(x, y);
            axpy(f, a, f.one(), g.bracket(y, x));
            EXPECT_TRUE(is_zero(a));
        }
    }
}

TEST(Lie, ProductSpaceExamples) {
    const LieAlgebra t = builtin("psl3f3-table");
    EXPECT_TRUE(product_space(t, whole(t), whole(t)).is_full());
    const LieAlgebra s3 = sl(3, FieldCtx::prime(3));
    EXPECT_TRUE(product_space(s3, center(s3), whole(s3)).is_zero());
    const LieAlgebra w3 = builtin("w3");
    EXPECT_TRUE(product_space(w3, whole(w3), whole(w3)).is_full());
}

TEST(Lie, SeriesExamples) {
    const auto ds = series(builtin("psl3f3-table"), SeriesKind::Derived);
    EXPECT_TRUE(ds.stabilized);
    EXPECT_FALSE(ds.length.has_value());
    EXPECT_EQ(ds.dims(), (std::vector<std::size_t>{7}));
    const FieldCtx f3 = FieldCtx::prime(3);
    EXPECT_EQ(derived_length(LieAlgebra(f3, 4)), 1u);
    EXPECT_EQ(derived_length(two_dim_nonabelian(f3)), 2u);
    EXPECT_EQ(series(two_dim_nonabelian(f3), SeriesKind::Derived).dims(), (std::vector<std::size_t>{2, 1, 0}));
    // the lower central series of the 2-dim algebra stabilizes at span{e2}
    const auto lc = series(two_dim_nonabelian(f3), SeriesKind::LowerCentral);
    EXPECT_FALSE(lc.length.has_value());
    EXPECT_EQ(g_inf_lower(two_dim_nonabelian(f3)).dim(), 1u);
}

TEST(Lie, SeriesTermsAreIdealsWithAbelianQuotients) {
    for (const LieAlgebra& g : {two_dim_nonabelian(FieldCtx::prime(3)), gl(2, FieldCtx::prime(2)), gl(3, FieldCtx::prime(3)),
                                jacobson_witt(1, FieldCtx::prime(2)), hamiltonian_p2(FieldCtx::prime(5))}) {
        for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral}) {
            const auto s = series(g, kind);
            for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
                EXPECT_LT(s.terms[i + 1].dim(), s.terms[i].dim());
                EXPECT_TRUE(is_ideal(g, s.terms[i + 1]));
                EXPECT_TRUE(s.terms[i].contains(s.terms[i + 1]));
                if (kind == SeriesKind::Derived) {
                    EXPECT_TRUE(s.terms[i + 1].contains(product_space(g, s.terms[i], s.terms[i])));
                }
            }
        }
    }
}

TEST(Lie, CenterExamples) {
    const LieAlgebra s3 = sl(3, FieldCtx::prime(3));
    const Subspace z = center(s3);
    EXPECT_EQ(z.dim(), 1u);
    // identity matrix = H1 - H2 over F_3 in the basis (off-diagonals, H1, H2)
    Vec id = zero_vec(s3.ctx(), 8);
    id[6] = s3.ctx().one();
    id[7] = s3.ctx().from_int(-1);
    EXPECT_TRUE(z.contains(id));
    EXPECT_TRUE(center(sl(2, FieldCtx::prime(5))).is_zero());
    EXPECT_TRUE(center(LieAlgebra(FieldCtx::prime(2), 3)).is_full());
}

TEST(Lie, UpperCentralSeries) {
    // Heisenberg algebra over F_5: [e1,e2] = e3
    const FieldCtx f = FieldCtx::prime(5);
    LieAlgebra h(f, 3);
    h.set_bracket(0, 1, unit_vec(f, 3, 2));
    const auto u = upper_central_series(h);
    ASSERT_GE(u.size(), 2u);
    EXPECT_EQ(u[0].dim(), 0u);
    EXPECT_EQ(u[1].dim(), 1u);
    EXPECT_EQ(u.back().dim(), 3u);
    EXPECT_EQ(upper_central_series(builtin("w3")).back().dim(), 0u);
}

TEST(Lie, IdealClosureExamples) {
    const LieAlgebra t = builtin("psl3f3-table");
    EXPECT_TRUE(ideal_closure(t, Subspace::span(t.ctx(), 7, {unit_vec(t.ctx(), 7, 0)})).is_full());
    const LieAlgebra s3 = sl(3, FieldCtx::prime(3));
    EXPECT_EQ(ideal_closure(s3, center(s3)), center(s3));
    const LieAlgebra g = gl(2, FieldCtx::prime(2));
    EXPECT_EQ(ideal_closure(g, center(g)), center(g));
}

TEST(Lie, QuotientExamples) {
    const LieAlgebra s3 = sl(3, FieldCtx::prime(3));
    const Quotient q = quotient(s3, center(s3));
    EXPECT_EQ(q.algebra.dim(), 7u);
    EXPECT_TRUE(validate(q.algebra).ok);
    // projection is a homomorphism
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            EXPECT_EQ(q.projection * s3.bracket_basis(i, j),
                      q.algebra.bracket(q.projection.col(i), q.projection.col(j)));
    const LieAlgebra w3 = builtin("w3");
    const Quotient same = quotient(w3, Subspace::zero(w3.ctx(), 3));
    EXPECT_EQ(same.algebra.dim(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(same.algebra.bracket_basis(i, j), w3.bracket_basis(i, j));
    EXPECT_THROW(quotient(w3, Subspace::span(w3.ctx(), 3, {unit_vec(w3.ctx(), 3, 0)})), InputError);
}

TEST(Lie, QuotientsValidate) {
    for (const LieAlgebra& g : {gl(3, FieldCtx::prime(3)), gl(2, FieldCtx::prime(5)), jacobson_witt(1, FieldCtx::prime(2))}) {
        const auto ds = series(g, SeriesKind::Derived);
        for (const auto& term : ds.terms) EXPECT_TRUE(validate(quotient(g, term).algebra).ok);
        EXPECT_TRUE(validate(quotient(g, center(g)).algebra).ok);
    }
}

TEST(Lie, DirectSum) {
    const LieAlgebra w3 = builtin("w3");
    const LieAlgebra d = direct_sum(w3, w3);
    EXPECT_EQ(d.dim(), 6u);
    EXPECT_TRUE(validate(d).ok);
    const FieldCtx& f = w3.ctx();
    const Subspace first = Subspace::span(f, 6, {unit_vec(f, 6, 0), unit_vec(f, 6, 1), unit_vec(f, 6, 2)});
    const Subspace second = Subspace::span(f, 6, {unit_vec(f, 6, 3), unit_vec(f, 6, 4), unit_vec(f, 6, 5)});
    EXPECT_TRUE(is_ideal(d, first));
    EXPECT_TRUE(is_ideal(d, second));
    EXPECT_EQ(is_simple(d).verdict, Simplicity::NotSimple);
    const LieAlgebra same = direct_sum(w3, LieAlgebra(f, 0));
    EXPECT_EQ(same.dim(), 3u);
    EXPECT_THROW(direct_sum(w3, sl(2, FieldCtx::prime(3))), InputError);
}

TEST(Lie, ScalarExtensionAndRestriction) {
    const LieAlgebra w3 = builtin("w3");
    const LieAlgebra e1 = extend_scalars(w3, 1);
    EXPECT_EQ(e1.ctx(), w3.ctx());
    const LieAlgebra e2 = extend_scalars(w3, 2);
    EXPECT_EQ(e2.ctx().q(), 4u);
    EXPECT_TRUE(validate(e2).ok);
    const LieAlgebra r = restrict_scalars(e2);
    EXPECT_EQ(r.dim(), 6u);
    EXPECT_EQ(r.ctx().q(), 2u);
    EXPECT_TRUE(validate(r).ok);
    const FieldCtx f3 = FieldCtx::prime(3);
    for (const LieAlgebra& g : {two_dim_nonabelian(f3), gl(2, f3), jacobson_witt(1, f3)}) {
        const LieAlgebra ext = extend_scalars(g, 2);
        EXPECT_EQ(derived_length(ext), derived_length(g));
        const LieAlgebra res = restrict_scalars(ext);
        EXPECT_EQ(res.dim(), 2 * g.dim());
        EXPECT_EQ(is_solvable(res), is_solvable(g));
    }
}

TEST(Lie, SimplicityExamples) {
    const auto p = is_simple(builtin("psl3f3-table"));
    EXPECT_EQ(p.verdict, Simplicity::Simple);
    EXPECT_EQ(p.method, "exhaustive");
    EXPECT_EQ(p.closures_checked, 2186u);
    EXPECT_EQ(is_simple(builtin("w3")).verdict, Simplicity::Simple);
    const LieAlgebra s3 = sl(3, FieldCtx::prime(3));
    const auto ns = is_simple(s3);
    EXPECT_EQ(ns.verdict, Simplicity::NotSimple);
    ASSERT_TRUE(ns.witness.has_value());
    EXPECT_TRUE(is_ideal(s3, *ns.witness));
    EXPECT_GT(ns.witness->dim(), 0u);
    EXPECT_LT(ns.witness->dim(), 8u);
    EXPECT_EQ(is_simple(LieAlgebra(FieldCtx::prime(2), 1)).verdict, Simplicity::NotSimple);
}

TEST(Lie, SimpleImpliesCenterlessAndPerfect) {
    for (const LieAlgebra& g : {builtin("w3"), builtin("g6"), builtin("psl3f3-table"), sl(2, FieldCtx::prime(5)),
                                jacobson_witt(1, FieldCtx::prime(5)), jacobson_witt(1, FieldCtx::prime(2)),
                                gl(2, FieldCtx::prime(3)), hamiltonian_p2(FieldCtx::prime(3))}) {
        if (is_simple(g).verdict != Simplicity::Simple) continue;
        EXPECT_TRUE(center(g).is_zero());
        EXPECT_TRUE(is_perfect(g));
    }
}

TEST(Lie, LargeAlgebraFallsBackWithoutExhaustion) {
    // 3^23 vectors is far beyond exhaustion; basis closures plus the Norton test decide
    const LieAlgebra h = hamiltonian_p2(FieldCtx::prime(5));
    const auto r = is_simple(h);
    EXPECT_NE(r.method, "exhaustive");
    EXPECT_EQ(r.verdict, Simplicity::Simple);
}
