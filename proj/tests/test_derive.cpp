#include <gtest/gtest.h>

#include "modlie/construct.hpp"
#include "modlie/derive.hpp"

using namespace modlie;

namespace {

// Leibniz check written out independently of is_derivation.
bool leibniz(const LieAlgebra& g, const Mat& d) {
    const FieldCtx& f = g.ctx();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vec lhs = d * g.bracket_basis(i, j);
            Vec rhs = g.bracket(d.col(i), unit_vec(f, g.dim(), j));
            axpy(f, rhs, f.one(), g.bracket(unit_vec(f, g.dim(), i), d.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

void check_invariants(const LieAlgebra& g) {
    const DerAlgebra d = derivations(g);
    for (const auto& m : d.der_basis) EXPECT_TRUE(leibniz(g, m));
    EXPECT_EQ(d.inn_dim(), g.dim() - center(g).dim());
    EXPECT_EQ(d.out_dim(), d.der_dim() - g.dim() + center(g).dim());
    EXPECT_TRUE(validate(d.out).ok);
    EXPECT_TRUE(validate(d.der).ok);
    // [D, ad x] = ad(Dx)
    for (const auto& m : d.der_basis)
        for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_EQ(m.commutator(g.ad(i)), g.ad(m.col(i)));
    EXPECT_TRUE(is_ideal(d.der, inn_in_der(d)));
}

}  // namespace

TEST(Derive, Psl3Dimensions) {
    const DerAlgebra d = derivations(psl(3, FieldCtx::prime(3)));
    EXPECT_EQ(d.der_dim(), 14u);
    EXPECT_EQ(d.inn_dim(), 7u);
    EXPECT_EQ(d.out_dim(), 7u);
}

TEST(Derive, AbelianDerIsEverything) {
    const DerAlgebra d = derivations(LieAlgebra(FieldCtx::prime(3), 3));
    EXPECT_EQ(d.der_dim(), 9u);
    EXPECT_EQ(d.inn_dim(), 0u);
    EXPECT_EQ(d.out_dim(), 9u);
}

TEST(Derive, Invariants) {
    for (const LieAlgebra& g : {builtin("w3"), builtin("g6"), builtin("psl3f3-table"), sl(2, FieldCtx::prime(5)),
                                sl(3, FieldCtx::prime(3)), gl(2, FieldCtx::prime(2)), jacobson_witt(1, FieldCtx::prime(5)),
                                jacobson_witt(1, FieldCtx::prime(2)), hamiltonian_p2(FieldCtx::prime(3))})
        check_invariants(g);
}

TEST(Derive, IsDerivation) {
    const LieAlgebra g = builtin("w3");
    EXPECT_TRUE(is_derivation(g, g.ad(0)));
    EXPECT_FALSE(is_derivation(g, Mat::identity(g.ctx(), 3)));
}

TEST(Derive, OutSolvability) {
    const DerAlgebra p3 = derivations(psl(3, FieldCtx::prime(3)));
    const auto s = out_solvability(p3);
    EXPECT_FALSE(s.length.has_value());
    EXPECT_EQ(s.dims(), (std::vector<std::size_t>{7}));
    EXPECT_EQ(is_simple(p3.out).verdict, Simplicity::Simple);
    const DerAlgebra w = derivations(jacobson_witt(1, FieldCtx::prime(5)));
    ASSERT_TRUE(out_solvability(w).length.has_value());
    EXPECT_LE(*out_solvability(w).length, 1u);
}

TEST(Derive, HamiltonianOut) {
    const DerAlgebra d = derivations(hamiltonian_p2(FieldCtx::prime(5)));
    EXPECT_EQ(d.der_dim(), 27u);
    EXPECT_EQ(d.out_dim(), 4u);
    EXPECT_EQ(out_solvability(d).length, std::optional<std::size_t>(3));
    const HeisenbergProfile prof = out_heisenberg_profile(d);
    EXPECT_EQ(prof.derived_dim, 3u);
    EXPECT_EQ(prof.nilpotency_class, std::optional<std::size_t>(2));
    EXPECT_EQ(prof.center_dim, std::optional<std::size_t>(1));
    EXPECT_TRUE(prof.is_heisenberg3());
}

TEST(Derive, AbelianOutProfile) {
    const DerAlgebra d = derivations(jacobson_witt(1, FieldCtx::prime(5)));
    const auto prof = out_heisenberg_profile(d);
    EXPECT_EQ(prof.derived_dim, 0u);
    EXPECT_FALSE(prof.nilpotency_class.has_value());
    EXPECT_FALSE(prof.center_dim.has_value());
}

TEST(Derive, CentroidExamples) {
    const LieAlgebra w3 = builtin("w3");
    EXPECT_EQ(centroid(w3).dim(), 1u);
    EXPECT_TRUE(is_central_simple(w3));
    const LieAlgebra g6 = builtin("g6");
    EXPECT_EQ(centroid(g6).dim(), 2u);
    EXPECT_EQ(is_simple(g6).verdict, Simplicity::Simple);
    EXPECT_FALSE(is_central_simple(g6));
}

TEST(Derive, CentroidContainsIdentityAndCommutes) {
    for (const LieAlgebra& g : {builtin("w3"), builtin("g6"), sl(3, FieldCtx::prime(3)), gl(2, FieldCtx::prime(3))}) {
        const Centroid c = centroid(g);
        std::vector<Vec> flat;
        for (const auto& m : c.basis) flat.push_back(m.flatten());
        const Subspace span = Subspace::span(g.ctx(), g.dim() * g.dim(), flat);
        EXPECT_TRUE(span.contains(Mat::identity(g.ctx(), g.dim()).flatten()));
        for (const auto& m : c.basis)
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j)
                    EXPECT_EQ(m * g.bracket_basis(i, j), g.bracket(m.col(i), unit_vec(g.ctx(), g.dim(), j)));
    }
}

// The centroid of a simple algebra is a field: closed under products, inverses exist.
TEST(Derive, CentroidOfSimpleIsField) {
    for (const LieAlgebra& g : {builtin("w3"), builtin("g6"), extend_scalars(builtin("w3"), 2)}) {
        const Centroid c = centroid(g);
        ASSERT_LE(c.dim(), 2u);
        ASSERT_LE(g.ctx().q(), 4u);
        const FieldCtx& f = g.ctx();
        std::vector<Mat> elems;
        std::vector<Vec> flat;
        for (const auto& m : c.basis) flat.push_back(m.flatten());
        const Subspace span = Subspace::span(f, g.dim() * g.dim(), flat);
        unsigned long long count = 1;
        for (std::size_t i = 0; i < c.dim(); ++i) count *= f.q();
        for (unsigned long long idx = 0; idx < count; ++idx) {
            Mat m(f, g.dim(), g.dim());
            unsigned long long r = idx;
            for (std::size_t i = 0; i < c.dim(); ++i, r /= f.q()) m = m + c.basis[i].scaled(f.element(r % f.q()));
            elems.push_back(m);
        }
        for (const auto& a : elems) {
            bool has_inverse = a.is_zero();
            for (const auto& b : elems) {
                EXPECT_TRUE(span.contains((a * b).flatten()));
                if (a * b == Mat::identity(f, g.dim())) has_inverse = true;
            }
            EXPECT_TRUE(has_inverse);
        }
    }
}

// Out is solvable of derived length at most three for simple algebras with p > 3.
TEST(Derive, OutSolvableForSimpleLargeCharacteristic) {
    for (const LieAlgebra& g : {sl(2, FieldCtx::prime(5)), sl(3, FieldCtx::prime(5)), jacobson_witt(1, FieldCtx::prime(5)),
                                jacobson_witt(1, FieldCtx::prime(7)), hamiltonian_p2(FieldCtx::prime(5))}) {
        ASSERT_EQ(is_simple(g).verdict, Simplicity::Simple);
        const auto s = out_solvability(derivations(g));
        ASSERT_TRUE(s.length.has_value());
        EXPECT_LE(*s.length, 3u);
    }
}

TEST(Derive, SystemShape) {
    const LieAlgebra g = builtin("w3");
    const Mat s = derivation_system(g);
    EXPECT_EQ(s.cols(), 9u);
    EXPECT_EQ(kernel(s).dim(), derivations(g).der_dim());
}
