// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include "nuceft/models.hpp"

using namespace nuceft;

TEST(Parameters, HoppingMatchesTabulatedValues) {
    EXPECT_NEAR(hopping_h(1.4) / 10.58, 1.0, 0.005);
    EXPECT_NEAR(hopping_h(2.2) / 4.29, 1.0, 0.005);
}

TEST(Parameters, PionlessCouplings) {
    const auto p = PionlessParams::tabulated(1.4);
    EXPECT_DOUBLE_EQ(p.C, -98.23);
    EXPECT_DOUBLE_EQ(p.D, 127.84);
    EXPECT_THROW(PionlessParams::tabulated(1.9), domain_error);
}

TEST(Parameters, ContactLecsAtFittingSpacing) {
    const auto p = OpeParams::from_lecs(2.2, 3);
    EXPECT_NEAR(p.C, -51.9425, 1e-3);
    EXPECT_NEAR(p.C_I2, 1.7325, 1e-3);
    EXPECT_EQ(p.ell_sites, 3);
}

TEST(Parameters, PionFieldCoefficientsGuard) {
    const double a = convert_length(2.2);
    EXPECT_GT(pion_A(a), 0.0);
    EXPECT_GT(pion_B(a), 0.0);
    EXPECT_NEAR(pion_A(a), 0.007443, 1e-5);
    EXPECT_THROW(require_positive_AB(convert_length(0.5)), domain_error);
}

TEST(Hamiltonians, BuildersAreHermitian) {
    const auto lat = LatticeSpec(2, 2, 1);
    EXPECT_TRUE(build_pionless(lat, PionlessParams::tabulated(2.2)).is_hermitian());
    const auto ope = OpeParams::from_lecs(2.2, 1);
    EXPECT_TRUE(build_ope_contact(lat, ope.C).is_hermitian());
    EXPECT_TRUE(build_ope_isospin_contact(lat, ope.C_I2).is_hermitian());
    EXPECT_TRUE(build_ope_long_range(lat, ope).is_hermitian());
    EXPECT_FALSE(build_ope_long_range(lat, ope).empty());
}

TEST(Hamiltonians, LongRangeVanishesWithoutCutoff) {
    const auto lat = LatticeSpec(2, 1, 1);
    EXPECT_TRUE(build_ope_long_range(lat, OpeParams::from_lecs(2.2, 0)).empty());
}

TEST(Hamiltonians, LayersSumToHamiltonian) {
    const auto lat = LatticeSpec(2, 2, 1);
    const auto par = PionlessParams::tabulated(1.4);
    const auto layers = pionless_layers(lat, par);
    ASSERT_EQ(layers.size(), 7u);
    FermionSum sum;
    for (const auto& l : layers) sum += l;
    EXPECT_LT((sum - build_pionless(lat, par)).max_abs_weight(), 1e-9);
}

TEST(Hamiltonians, ContactIsDiagonalPerSite) {
    const auto lat = LatticeSpec(1, 1, 1);
    const auto H = build_pionless_contact(lat, -1.0, 0.5);
    for (const auto& [t, w] : H.terms()) {
        EXPECT_TRUE(t.cre.empty());
        EXPECT_TRUE(t.ann.empty());
    }
    // Two nucleons on one site: C; three: 3C + D; four: 6C + 4D.
    const auto m = fock_matrix(H, 4);
    EXPECT_NEAR(m(3, 3).real(), -1.0, 1e-12);
    EXPECT_NEAR(m(7, 7).real(), -3.0 + 0.5, 1e-12);
    EXPECT_NEAR(m(15, 15).real(), -6.0 + 2.0, 1e-12);
}

TEST(Hamiltonians, OpeKernelIsNonzeroForEachDisplacement) {
    const double a = convert_length(2.2);
    for (const auto& d : {std::array<int, 3>{1, 0, 0}, std::array<int, 3>{1, 1, 0}, std::array<int, 3>{0, 0, 0}}) {
        const auto G = ope_kernel(d, a);
        double norm = 0;
        for (const auto& g : G) norm += std::abs(g);
        EXPECT_GT(norm, 0.0);
    }
}

TEST(DynamicalPions, InventoryAndGuard) {
    const auto m = build_dynpi_descriptor(LatticeSpec(2, 1, 1), OpeParams::from_lecs(2.2, 0));
    ASSERT_EQ(m.bosons.size(), 5u);
    EXPECT_EQ(m.bosons[4].slots_per_site, 6);
    EXPECT_TRUE(m.fermions.is_hermitian());
    EXPECT_THROW(build_dynpi_descriptor(LatticeSpec(2, 1, 1), OpeParams::from_lecs(0.5, 0)), domain_error);
}
