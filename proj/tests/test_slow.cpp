#include <gtest/gtest.h>

#include "modlie/construct.hpp"
#include "modlie/derive.hpp"

using namespace modlie;

// psl(6,F_3): sl(6) has dim 35 and its center is the scalars, so dim 34; one outer derivation.
TEST(Slow, Psl6F3) {
    const LieAlgebra g = psl(6, FieldCtx::prime(3));
    ASSERT_EQ(g.dim(), 34u);
    const DerAlgebra d = derivations(g);
    EXPECT_EQ(d.out_dim(), 1u);
}
