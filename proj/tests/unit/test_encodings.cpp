// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include "nuceft/encodings.hpp"
#include "nuceft/verify.hpp"

using namespace nuceft;

TEST(Layout, QubitCounts) {
    const auto lat = LatticeSpec::cube(4);
    EXPECT_EQ(QubitLayout(Encoding::jw, lat).total_qubits(), 4u * 64);
    EXPECT_EQ(QubitLayout(Encoding::vc, lat).total_qubits(), 6u * 64);
    EXPECT_EQ(QubitLayout(Encoding::compact, lat).total_qubits(), 10u * 64);
}

TEST(Layout, QubitAssignmentIsInjective) {
    const auto lat = LatticeSpec(2, 3, 2);
    for (auto enc : {Encoding::jw, Encoding::vc, Encoding::compact}) {
        const QubitLayout lay(enc, lat);
        std::vector<int> used(lay.total_qubits(), 0);
        for (int s = 0; s < lat.n_sites(); ++s)
            for (int sp = 0; sp < kSpecies; ++sp) EXPECT_EQ(used[static_cast<std::size_t>(lay.species_qubit(s, sp))]++, 0);
    }
}

TEST(Encoding, NumberOperatorIsProjector) {
    const QubitLayout lay(Encoding::vc, LatticeSpec(2, 1, 1));
    const auto n = encode_number(lay, 1, down_n);
    EXPECT_TRUE((n * n - n).empty());
    const auto a = encode_ladder(lay, 1, down_n, Ladder::annihilate);
    EXPECT_TRUE((a.adjoint() * a - n).empty());
}

TEST(Encoding, VcAlongRasterMatchesJordanWigner) {
    const auto lat = LatticeSpec::cube(2);
    const QubitLayout vc(Encoding::vc, lat);
    for (const auto& b : lat.bonds())
        if (lat.bond_axis(b[0], b[1]) == Axis::x) {
            PauliSum direct = encode_ladder(vc, b[0], 0, Ladder::create) * encode_ladder(vc, b[1], 0, Ladder::annihilate);
            direct += direct.adjoint();
            EXPECT_TRUE((encode_hopping(vc, b[0], b[1], 0) - direct).empty());
        }
}

TEST(Encoding, CompactRejectsRawLadders) {
    const QubitLayout cp(Encoding::compact, LatticeSpec::cube(2));
    EXPECT_THROW(encode_ladder(cp, 0, 0, Ladder::create), unsupported_error);
    EXPECT_THROW(vc_stabilizers(cp), unsupported_error);
    EXPECT_THROW(compact_vertex(QubitLayout(Encoding::vc, LatticeSpec::cube(2)), 0, 0), unsupported_error);
}

TEST(Encoding, NonNeighbourHopThrows) {
    const QubitLayout vc(Encoding::vc, LatticeSpec::cube(3));
    EXPECT_THROW(encode_hopping(vc, 0, 2, 0), geometry_error);
}

TEST(Encoding, JsonCarriesHexMasks) {
    PauliSum s(3);
    s.add(0.5, PauliString::from_str("XIZ"));
    const auto j = to_json(s);
    EXPECT_EQ(j["n_qubits"], 3);
    ASSERT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["x"], "0000000000000001");
    EXPECT_EQ(j["terms"][0]["z"], "0000000000000004");
}

TEST(EncodingSuite, AllChecksPass) {
    for (const auto& c : verify::encodings_suite()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
