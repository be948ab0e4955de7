// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <random>

#include "nuceft/lattice.hpp"
#include "nuceft/encodings.hpp"
#include "nuceft/pauli.hpp"
#include "nuceft/verify.hpp"
#include "oracle.hpp"

using namespace nuceft;

TEST(PauliString, SingleQubitProductTable) {
    const auto X = PauliString::from_str("X"), Y = PauliString::from_str("Y"), Z = PauliString::from_str("Z");
    EXPECT_EQ((X * Y).str(), PauliString::from_str("+iZ").str());
    EXPECT_EQ((Y * Z).str(), PauliString::from_str("+iX").str());
    EXPECT_EQ((Z * X).str(), PauliString::from_str("+iY").str());
    EXPECT_EQ((Y * X).str(), PauliString::from_str("-iZ").str());
    EXPECT_TRUE((X * X).is_identity());
    EXPECT_EQ((X * X).phase(), 0u);
}

TEST(PauliString, WeightAndSupport) {
    const auto p = PauliString::from_str("XIZYI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support().popcount(), 3u);
    EXPECT_EQ(p.get(1), 'I');
    EXPECT_EQ(p.get(3), 'Y');
}

TEST(PauliString, DenseMatchesKroneckerOracle) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 5);
        const auto p = verify::random_string(rng, n);
        std::string letters;
        for (std::size_t q = 0; q < n; ++q) letters += p.get(q);
        const oracle::M expect = oracle::pauli(letters) * phase_value(p.phase());
        EXPECT_TRUE(dense_matrix(PauliSum(1.0, p)).isApprox(expect, 1e-12)) << p.str();
    }
}

TEST(PauliString, AdjointInvertsPhase) {
    const auto p = PauliString::from_str("+iXY");
    EXPECT_TRUE((p * p.adjoint()).is_identity());
    EXPECT_EQ((p * p.adjoint()).phase(), 0u);
}

TEST(PauliSum, CommutatorOfAnticommutingPairIsTwiceProduct) {
    const PauliSum a(1.0, PauliString::from_str("XZ")), b(1.0, PauliString::from_str("ZZ"));
    const auto c = commutator_sum(a, b);
    const auto expect = (a * b) * 2.0;
    EXPECT_TRUE((c - expect).empty());
    EXPECT_TRUE(commutator_sum(a, PauliSum(1.0, PauliString::from_str("XI"))).empty());
}

TEST(PauliSum, CanonicalFormMergesAndCancels) {
    PauliSum s(2);
    s.add(1.0, PauliString::from_str("XY"));
    s.add(1.0, PauliString::from_str("+iXY"));
    s.add(cplx(-1, -1), PauliString::from_str("XY"));
    s.canonicalize();
    EXPECT_TRUE(s.empty());
    const PauliSum a(2.0, PauliString::from_str("ZZ"));
    EXPECT_TRUE(((a + a) - a * 2.0).empty());
}

TEST(PauliSum, DenseCapThrows) {
    EXPECT_THROW(dense_matrix(PauliSum::identity(kDenseQubitCap + 1)), size_error);
}

TEST(PauliSum, SparseAgreesWithDense) {
    PauliSum s(3);
    s.add(0.5, PauliString::from_str("XYZ"));
    s.add(cplx(0, 2), PauliString::from_str("ZIX"));
    const std::vector<std::pair<std::uint64_t, cplx>> v = {{1, 1.0}, {6, cplx(0, 1)}};
    Eigen::VectorXcd dv = Eigen::VectorXcd::Zero(8);
    for (const auto& [b, a] : v) dv(static_cast<Eigen::Index>(b)) = a;
    const Eigen::VectorXcd expect = dense_matrix(s) * dv;
    Eigen::VectorXcd got = Eigen::VectorXcd::Zero(8);
    for (const auto& [b, a] : apply_sparse(s, v)) got(static_cast<Eigen::Index>(b)) += a;
    EXPECT_TRUE(got.isApprox(expect, 1e-12));
}

TEST(Layering, LayersHaveDisjointSupport) {
    const auto lat = LatticeSpec::cube(2);
    const QubitLayout lay(Encoding::vc, lat);
    std::vector<PauliSum> terms;
    for (const auto& b : lat.bonds()) terms.push_back(encode_hopping(lay, b[0], b[1], 0));
    const auto layer = partition_commuting_layers(terms);
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (layer[i] == layer[j]) {
                EXPECT_TRUE(commutator_sum(terms[i], terms[j]).empty());
                const auto si = terms[i].support(), sj = terms[j].support();
                for (std::size_t w = 0; w < si.words().size(); ++w) EXPECT_EQ(si.words()[w] & sj.words()[w], 0u);
            }
}

TEST(Layering, BondGroupsAreSiteDisjoint) {
    const auto lat = LatticeSpec::cube(4);
    const auto groups = lat.bond_layers();
    std::size_t total = 0;
    for (const auto& g : groups) {
        std::vector<int> seen(static_cast<std::size_t>(lat.n_sites()), 0);
        for (const auto& b : g) {
            EXPECT_EQ(seen[static_cast<std::size_t>(b[0])]++, 0);
            EXPECT_EQ(seen[static_cast<std::size_t>(b[1])]++, 0);
        }
        total += g.size();
    }
    EXPECT_EQ(total, 3u * 4 * 4 * 3);
}

TEST(PauliSuite, AllChecksPass) {
    for (const auto& c : verify::pauli_suite(99)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
