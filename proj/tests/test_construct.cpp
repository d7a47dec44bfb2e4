#include <gtest/gtest.h>

#include "modlie/construct.hpp"
#include "modlie/derive.hpp"

using namespace modlie;

TEST(Construct, GlSl) {
    const LieAlgebra s2 = sl(2, FieldCtx::prime(5));
    EXPECT_EQ(s2.dim(), 3u);
    EXPECT_EQ(is_simple(s2).verdict, Simplicity::Simple);
    EXPECT_TRUE(center(s2).is_zero());
    const LieAlgebra s3 = sl(3, FieldCtx::prime(3));
    EXPECT_EQ(s3.dim(), 8u);
    EXPECT_EQ(center(s3).dim(), 1u);
    const LieAlgebra g2 = gl(2, FieldCtx::prime(2));
    EXPECT_EQ(g2.dim(), 4u);
    EXPECT_FALSE(is_perfect(g2));
    EXPECT_THROW(sl(1, FieldCtx::prime(3)), InputError);
}

TEST(Construct, Psl) {
    const LieAlgebra p3 = psl(3, FieldCtx::prime(3));
    EXPECT_EQ(p3.dim(), 7u);
    EXPECT_TRUE(center(p3).is_zero());
    const LieAlgebra p2 = psl(2, FieldCtx::prime(5));
    const LieAlgebra s2 = sl(2, FieldCtx::prime(5));
    ASSERT_EQ(p2.dim(), s2.dim());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p2.bracket_basis(i, j), s2.bracket_basis(i, j));
    EXPECT_EQ(p3.known_simple(), std::optional<bool>(true));
}

TEST(Construct, PslMatchesBuiltinTableExactly) {
    const LieAlgebra q = psl(3, FieldCtx::prime(3));
    const LieAlgebra t = builtin("psl3f3-table");
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(q.bracket_basis(i, j), t.bracket_basis(i, j)) << i << "," << j;
}

TEST(Construct, DimensionFormulas) {
    for (unsigned p : {2u, 3u, 5u})
        for (std::size_t n = 2; n <= 4; ++n) {
            const LieAlgebra g = psl(n, FieldCtx::prime(p));
            EXPECT_EQ(g.dim(), n * n - 1 - (n % p == 0 ? 1 : 0)) << "n=" << n << " p=" << p;
        }
    EXPECT_EQ(jacobson_witt(1, FieldCtx::prime(5)).dim(), 5u);
    EXPECT_EQ(jacobson_witt(1, FieldCtx::prime(2)).dim(), 2u);
    EXPECT_EQ(jacobson_witt(2, FieldCtx::prime(3)).dim(), 18u);
    EXPECT_EQ(jacobson_witt(2, FieldCtx::prime(2)).dim(), 8u);
    EXPECT_EQ(hamiltonian_p2(FieldCtx::prime(3)).dim(), 7u);
    EXPECT_EQ(hamiltonian_p2(FieldCtx::prime(5)).dim(), 23u);
    EXPECT_EQ(hamiltonian_p2(FieldCtx::prime(7)).dim(), 47u);
}

TEST(Construct, WittSimplicity) {
    EXPECT_EQ(is_simple(jacobson_witt(1, FieldCtx::prime(2))).verdict, Simplicity::NotSimple);
    EXPECT_EQ(is_simple(jacobson_witt(1, FieldCtx::prime(5))).verdict, Simplicity::Simple);
    EXPECT_EQ(is_simple(jacobson_witt(1, FieldCtx::prime(3))).verdict, Simplicity::Simple);
    EXPECT_EQ(is_simple(jacobson_witt(2, FieldCtx::prime(2))).verdict, Simplicity::Simple);
}

TEST(Construct, Preconditions) {
    EXPECT_THROW(hamiltonian_p2(FieldCtx::prime(2)), InputError);
    EXPECT_THROW(jacobson_witt(1, FieldCtx::make(2, 2)), InputError);
    EXPECT_THROW(jacobson_witt(0, FieldCtx::prime(3)), InputError);
    EXPECT_THROW(builtin("e8"), InputError);
}

TEST(Construct, EveryConstructorValidates) {
    std::vector<LieAlgebra> all;
    for (unsigned p : {2u, 3u, 5u})
        for (std::size_t n = 2; n <= 4; ++n) {
            all.push_back(gl(n, FieldCtx::prime(p)));
            all.push_back(sl(n, FieldCtx::prime(p)));
            all.push_back(psl(n, FieldCtx::prime(p)));
        }
    all.push_back(sl(2, FieldCtx::make(2, 2)));
    all.push_back(psl(3, FieldCtx::make(3, 2)));
    for (unsigned p : {2u, 3u, 5u, 7u}) all.push_back(jacobson_witt(1, FieldCtx::prime(p)));
    all.push_back(jacobson_witt(2, FieldCtx::prime(2)));
    all.push_back(jacobson_witt(2, FieldCtx::prime(3)));
    for (unsigned p : {3u, 5u, 7u}) all.push_back(hamiltonian_p2(FieldCtx::prime(p)));
    for (const auto& name : builtin_names()) all.push_back(builtin(name));
    for (const auto& g : all) EXPECT_TRUE(validate(g).ok) << g.name();
}

TEST(Construct, BuiltinTables) {
    const LieAlgebra w3 = builtin("w3");
    EXPECT_EQ(w3.dim(), 3u);
    EXPECT_EQ(w3.ctx().q(), 2u);
    EXPECT_EQ(w3.bracket_basis(0, 1), unit_vec(w3.ctx(), 3, 2));
    const LieAlgebra g6 = builtin("g6");
    const FieldCtx& f2 = g6.ctx();
    Vec x1x6 = zero_vec(f2, 6);
    x1x6[0] = x1x6[5] = f2.one();
    EXPECT_EQ(g6.bracket_basis(1, 4), x1x6);
    const LieAlgebra t = builtin("psl3f3-table");
    EXPECT_EQ(t.bracket_basis(1, 4), Vec({t.ctx().zero(), t.ctx().zero(), t.ctx().zero(), t.ctx().zero(), t.ctx().zero(),
                                          t.ctx().zero(), t.ctx().from_int(2)}));
}

// Invariant profile: dims of derived series, Der, Out and centroid.
TEST(Construct, G6ProfileMatchesRestrictedExtension) {
    const LieAlgebra g6 = builtin("g6");
    const LieAlgebra r = restrict_scalars(extend_scalars(builtin("w3"), 2));
    EXPECT_EQ(r.dim(), 6u);
    EXPECT_EQ(series(g6, SeriesKind::Derived).dims(), series(r, SeriesKind::Derived).dims());
    EXPECT_EQ(series(g6, SeriesKind::LowerCentral).dims(), series(r, SeriesKind::LowerCentral).dims());
    const DerAlgebra a = derivations(g6), b = derivations(r);
    EXPECT_EQ(a.der_dim(), b.der_dim());
    EXPECT_EQ(a.out_dim(), b.out_dim());
    EXPECT_EQ(centroid(g6).dim(), centroid(r).dim());
    EXPECT_EQ(is_simple(g6).verdict, is_simple(r).verdict);
}

TEST(Construct, HamiltonianF3ProfileMatchesPsl3) {
    const LieAlgebra h = hamiltonian_p2(FieldCtx::prime(3));
    const LieAlgebra p = psl(3, FieldCtx::prime(3));
    EXPECT_EQ(h.dim(), p.dim());
    EXPECT_EQ(series(h, SeriesKind::Derived).dims(), series(p, SeriesKind::Derived).dims());
    const DerAlgebra a = derivations(h), b = derivations(p);
    EXPECT_EQ(a.der_dim(), b.der_dim());
    EXPECT_EQ(a.inn_dim(), b.inn_dim());
    EXPECT_EQ(a.out_dim(), b.out_dim());
    EXPECT_EQ(is_simple(h).verdict, Simplicity::Simple);
}

TEST(Construct, TruncatedPolyAlgebra) {
    const TruncatedPolyAlgebra a{3, 2};
    EXPECT_EQ(a.dim(), 9u);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto e = a.exponents(i);
        EXPECT_EQ(a.index(std::vector<int>(e.begin(), e.end())), i);
    }
    EXPECT_FALSE(a.index({3, 0}).has_value());
    EXPECT_FALSE(a.index({-1, 0}).has_value());
}
