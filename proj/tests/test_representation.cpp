#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "superosc/representation.hpp"

using namespace superosc;
using namespace superosc::representation;

TEST(Parity, Flags) {
    EXPECT_EQ(parity(0).even, 1);
    EXPECT_EQ(parity(0).odd, 0);
    EXPECT_EQ(parity(3).even, 0);
    EXPECT_EQ(parity(3).odd, 1);
    EXPECT_EQ(parity(-2).even, 1);
    EXPECT_EQ(parity(-3).odd, 1);
    for (int n = -7; n <= 7; ++n) EXPECT_EQ(parity(n).even + parity(n).odd, 1);
}

TEST(Generators, ParityClassification) {
    EXPECT_EQ(parity_of(Generator::Fplus), Parity::Odd);
    EXPECT_EQ(parity_of(Generator::Gminus), Parity::Odd);
    EXPECT_EQ(parity_of(Generator::H), Parity::Even);
    EXPECT_EQ(parity_of(Generator::Z), Parity::Even);
}

TEST(Generators, GMinusLowersTopStateOfSpinOne) {
    const RealMatrix gm = generator_matrix(Generator::Gminus, 1);
    const BasisConvention b{1};
    EXPECT_EQ(gm(b.row(0), b.row(1)), -1.0);
}

TEST(Generators, CartanIsHalfTheLabel) {
    for (int j = 0; j <= 6; ++j) {
        const RealMatrix h = generator_matrix(Generator::H, j);
        for (int r = 0; r <= 2 * j; ++r) EXPECT_EQ(h(r, r), (j - r) / 2.0);
        EXPECT_EQ((h - RealMatrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(Generators, FPlusAnnihilatesTopState) {
    for (int j = 0; j <= 6; ++j) {
        const RealMatrix fp = generator_matrix(Generator::Fplus, j);
        EXPECT_EQ(fp.col(0).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(Generators, ZEigenvalues) {
    for (int j = 0; j <= 6; ++j) {
        const RealMatrix z = generator_matrix(Generator::Z, j);
        for (int m = -j; m <= j; ++m) {
            const int r = j - m;
            EXPECT_EQ(z(r, r), ((j - m) % 2 == 0) ? -j / 2.0 : -(j + 1) / 2.0);
        }
    }
}

TEST(Generators, SpinOneMatrices) {
    // rows/columns ordered |1,1>, |1,0>, |1,-1>
    const RealMatrix fp = generator_matrix(Generator::Fplus, 1);
    const RealMatrix gp = generator_matrix(Generator::Gplus, 1);
    // F+|1,0> = sqrt(1) |1,1>;  G+|1,-1> = sqrt(2/2) |1,0>
    EXPECT_DOUBLE_EQ(fp(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(gp(1, 2), 1.0);
    EXPECT_EQ(fp.cwiseAbs().sum(), 1.0);
    EXPECT_EQ(gp.cwiseAbs().sum(), 1.0);
    // E+|1,-1> = 1/2 sqrt(2*2) |1,1>
    EXPECT_DOUBLE_EQ(generator_matrix(Generator::Eplus, 1)(0, 2), 1.0);
}

TEST(Generators, NegativeLabelRejected) {
    EXPECT_THROW(generator_matrix(Generator::H, -1), std::domain_error);
}

TEST(Superbracket, Basics) {
    const RealMatrix a = generator_matrix(Generator::Fplus, 3) + generator_matrix(Generator::Gminus, 3);
    EXPECT_EQ((superbracket(a, a, Parity::Odd, Parity::Odd) - 2.0 * a * a).cwiseAbs().maxCoeff(), 0.0);
    const RealMatrix id = RealMatrix::Identity(7, 7);
    EXPECT_EQ(superbracket(id, a, Parity::Even, Parity::Even).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_THROW(superbracket(id, RealMatrix::Identity(5, 5), Parity::Even, Parity::Even),
                 std::invalid_argument);
}

TEST(Superbracket, FPlusGMinusGivesZMinusH) {
    for (int j = 0; j <= 10; ++j) {
        const GeneratorSet gs(j);
        const RealMatrix lhs = superbracket(gs[Generator::Fplus], gs[Generator::Gminus], Parity::Odd, Parity::Odd);
        EXPECT_LE((lhs - (gs[Generator::Z] - gs[Generator::H])).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Superalgebra, AllRelationsHold) {
    for (int j = 0; j <= 10; ++j) {
        const auto report = verify_superalgebra(j, 1e-12);
        EXPECT_TRUE(report.passed()) << "j=" << j;
        EXPECT_EQ(report.checks().size(), 32u);
    }
}

TEST(Superalgebra, SpecificResiduals) {
    EXPECT_EQ(verify_superalgebra(0, 1e-12).max_residual(""), 0.0);
    EXPECT_EQ(verify_superalgebra(3, 1e-12).max_residual("{F+,F+}"), 0.0);
    EXPECT_LE(verify_superalgebra(5, 1e-12).max_residual("[E+,E-]"), 1e-12);
}

TEST(Superalgebra, DetectsABrokenRelation) {
    // Verifying with a negative tolerance cannot pass: the report reflects residuals honestly.
    EXPECT_FALSE(verify_superalgebra(2, -1.0).passed());
}

TEST(Star, ConditionsHold) {
    for (int j = 0; j <= 10; ++j) EXPECT_TRUE(verify_star(j, 1e-12).passed()) << "j=" << j;
    const auto r4 = verify_star(4, 1e-12);
    EXPECT_EQ(r4.max_residual("H^dag"), 0.0);
    EXPECT_LE(r4.max_residual("(F+)^dag"), 1e-12);
    EXPECT_LE(r4.max_residual("(E+)^dag"), 1e-12);
}
