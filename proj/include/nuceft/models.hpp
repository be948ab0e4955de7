// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "nuceft/errors.hpp"
#include "nuceft/fock.hpp"
#include "nuceft/lattice.hpp"

namespace nuceft {

struct PhysicalConstants {
    double M = 938.0;
    double m_pi = 135.0;
    double g_A = 1.26;
    double f_pi = 93.0;
    double hbar_c = 197.3269804;
};

inline constexpr PhysicalConstants kPhys{};

// fm -> MeV^-1
inline double convert_length(double a_fm, const PhysicalConstants& k = kPhys) {
    if (!(a_fm > 0)) throw domain_error("length must be positive");
    return a_fm / k.hbar_c;
}

inline double hopping_h(double a_fm, const PhysicalConstants& k = kPhys) {
    const double a = convert_length(a_fm, k);
    return 1.0 / (2.0 * k.M * a * a);
}

// g_A / (2 f_pi)
inline double axial_ratio(const PhysicalConstants& k = kPhys) { return k.g_A / (2.0 * k.f_pi); }

struct PionlessParams {
    double a_fm = 2.2;
    double h = 0.0;
    double C = 0.0;
    double D = 0.0;

    // Tabulated contact couplings; h is recomputed from the spacing.
    static PionlessParams tabulated(double a_fm) {
        PionlessParams p;
        p.a_fm = a_fm;
        p.h = hopping_h(a_fm);
        if (std::abs(a_fm - 1.4) < 1e-9) {
            p.C = -98.23;
            p.D = 127.84;
        } else if (std::abs(a_fm - 2.2) < 1e-9) {
            p.C = -40.19;
            p.D = 42.51;
        } else {
            throw domain_error("pionless couplings are tabulated only for a_L = 1.4 fm and 2.2 fm");
        }
        return p;
    }
};

struct ContactLecs {
    double C1 = -5.021e-5;  // isospin-1 channel, MeV^-2
    double C0 = -5.714e-5;  // isospin-0 channel, MeV^-2
    double a_ref = 0.01;    // spacing at which the LECs were fitted, MeV^-1
};

struct OpeParams {
    double a_fm = 2.2;
    double h = 0.0;
    double C = 0.0;
    double C_I2 = 0.0;
    int ell_sites = 1;  // cutoff length in units of a_L; 0 disables the long-range part

    // Couplings are evaluated at the fitting spacing, not at a_fm.
    static OpeParams from_lecs(double a_fm, int ell_sites, const ContactLecs& lec = {}) {
        OpeParams p;
        p.a_fm = a_fm;
        p.h = hopping_h(a_fm);
        const double a3 = lec.a_ref * lec.a_ref * lec.a_ref;
        p.C = (3.0 * lec.C1 + lec.C0) / (4.0 * a3);
        p.C_I2 = (lec.C1 - lec.C0) / (4.0 * a3);
        p.ell_sites = ell_sites;
        return p;
    }
};

inline double pion_A(double a, const PhysicalConstants& k = kPhys) {
    return k.m_pi * k.m_pi * a * a * a / 2.0 - 1.0 / (2.0 * k.f_pi * k.f_pi * a);
}
inline double pion_B(double a, const PhysicalConstants& k = kPhys) {
    return a * a * a / 2.0 - a / (2.0 * k.f_pi * k.f_pi);
}

inline void require_positive_AB(double a) {
    const double A = pion_A(a), B = pion_B(a);
    if (!(A > 0) || !(B > 0))
        throw domain_error("lattice spacing gives A = " + std::to_string(A) + ", B = " + std::to_string(B) +
                           "; the bosonic cutoff bound needs A > 0 and B > 0");
}

// ---- Pauli matrices for spin/isospin contractions ----

using Mat2 = std::array<std::array<cplx, 2>, 2>;

inline const std::array<Mat2, 3>& pauli_matrices() {
    using Row = std::array<cplx, 2>;
    static const std::array<Mat2, 3> s = {
        Mat2{Row{cplx(0, 0), cplx(1, 0)}, Row{cplx(1, 0), cplx(0, 0)}},
        Mat2{Row{cplx(0, 0), cplx(0, -1)}, Row{cplx(0, 1), cplx(0, 0)}},
        Mat2{Row{cplx(1, 0), cplx(0, 0)}, Row{cplx(0, 0), cplx(-1, 0)}},
    };
    return s;
}

// ---- builders ----

inline FermionSum build_free(const LatticeSpec& lat, double h) {
    FermionSum H;
    for (const auto& b : lat.bonds())
        for (int s = 0; s < kSpecies; ++s) H += FermionSum::hop(lat.mode(b[0], s), lat.mode(b[1], s), -h);
    for (int i = 0; i < lat.n_sites(); ++i)
        for (int s = 0; s < kSpecies; ++s) H.add(Npfo{{}, {}, {lat.mode(i, s)}}, 6.0 * h);
    return H.prune();
}

inline FermionSum build_pionless_contact(const LatticeSpec& lat, double C, double D) {
    FermionSum H;
    for (int i = 0; i < lat.n_sites(); ++i) {
        for (int s1 = 0; s1 < kSpecies; ++s1)
            for (int s2 = s1 + 1; s2 < kSpecies; ++s2) H.add(Npfo{{}, {}, {lat.mode(i, s1), lat.mode(i, s2)}}, C);
        for (int s1 = 0; s1 < kSpecies; ++s1)
            for (int s2 = s1 + 1; s2 < kSpecies; ++s2)
                for (int s3 = s2 + 1; s3 < kSpecies; ++s3)
                    H.add(Npfo{{}, {}, {lat.mode(i, s1), lat.mode(i, s2), lat.mode(i, s3)}}, D);
    }
    return H.prune();
}

inline FermionSum build_pionless(const LatticeSpec& lat, const PionlessParams& p) {
    return build_free(lat, p.h) + build_pionless_contact(lat, p.C, p.D);
}

// Trotter layers: six kinetic layers, then every on-site term together.
inline std::vector<FermionSum> pionless_layers(const LatticeSpec& lat, const PionlessParams& p) {
    std::vector<FermionSum> out;
    for (const auto& layer : lat.bond_layers()) {
        FermionSum K;
        for (const auto& b : layer)
            for (int s = 0; s < kSpecies; ++s) K += FermionSum::hop(lat.mode(b[0], s), lat.mode(b[1], s), -p.h);
        out.push_back(K);
    }
    FermionSum V = build_pionless_contact(lat, p.C, p.D);
    for (int i = 0; i < lat.n_sites(); ++i)
        for (int s = 0; s < kSpecies; ++s) V.add(Npfo{{}, {}, {lat.mode(i, s)}}, 6.0 * p.h);
    out.push_back(V.prune());
    return out;
}

// (C/2) sum_x :rho^2:
inline FermionSum build_ope_contact(const LatticeSpec& lat, double C) {
    FermionSum H;
    for (int i = 0; i < lat.n_sites(); ++i)
        for (int s1 = 0; s1 < kSpecies; ++s1)
            for (int s2 = 0; s2 < kSpecies; ++s2) {
                const int m1 = lat.mode(i, s1), m2 = lat.mode(i, s2);
                H += wick_normal({cre(m1), ann(m1), cre(m2), ann(m2)}, C / 2.0);
            }
    return H.prune();
}

// (C_I2/2) sum_x sum_I :rho_I^2: with rho_I = sum a+_{ab} [tau_I]_{bb'} a_{ab'}
inline FermionSum build_ope_isospin_contact(const LatticeSpec& lat, double C_I2) {
    const auto& tau = pauli_matrices();
    FermionSum H;
    for (int i = 0; i < lat.n_sites(); ++i)
        for (int I = 0; I < 3; ++I)
            for (int a1 = 0; a1 < 2; ++a1)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b1p = 0; b1p < 2; ++b1p) {
                        const cplx t1 = tau[I][b1][b1p];
                        if (t1 == 0.0) continue;
                        for (int a2 = 0; a2 < 2; ++a2)
                            for (int b2 = 0; b2 < 2; ++b2)
                                for (int b2p = 0; b2p < 2; ++b2p) {
                                    const cplx t2 = tau[I][b2][b2p];
                                    if (t2 == 0.0) continue;
                                    H += wick_normal({cre(lat.mode(i, species_of(a1, b1))), ann(lat.mode(i, species_of(a1, b1p))),
                                                      cre(lat.mode(i, species_of(a2, b2))), ann(lat.mode(i, species_of(a2, b2p)))},
                                                     C_I2 / 2.0 * t1 * t2);
                                }
                    }
    return H.prune();
}

// Radial factors of the one-pion-exchange kernel.
inline double ope_g1(double r, const PhysicalConstants& k = kPhys) {
    const double ar = axial_ratio(k);
    return ar * ar / (12.0 * std::numbers::pi) * k.m_pi * k.m_pi * std::exp(-k.m_pi * r) / r;
}
inline double ope_tensor_factor(double r, const PhysicalConstants& k = kPhys) {
    const double mr = k.m_pi * r;
    return 1.0 + 3.0 / mr + 3.0 / (mr * mr);
}

// Spin-isospin kernel for one ordered site pair; d is the displacement in lattice units.
// Returns coefficient of :a+(x,a'b') a(x,c'd') a+(y,ab) a(y,cd): indexed [a'][b'][c'][d'][a][b][c][d].
inline std::array<cplx, 256> ope_kernel(const std::array<int, 3>& d, double a, const PhysicalConstants& k = kPhys) {
    const auto& s = pauli_matrices();
    std::array<cplx, 256> G{};
    const double ar = axial_ratio(k);
    const double pref = ar * ar / (12.0 * std::numbers::pi);
    const double dist2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    const bool onsite = dist2 == 0;
    const double r = a * std::sqrt(dist2);
    Mat2 rs{};  // rhat . sigma
    if (!onsite)
        for (int S = 0; S < 3; ++S)
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v) rs[u][v] += (d[S] / std::sqrt(dist2)) * s[S][u][v];
    auto at = [](int ap, int bp, int cp, int dp, int a_, int b_, int c_, int d_) {
        return ((((((ap * 2 + bp) * 2 + cp) * 2 + dp) * 2 + a_) * 2 + b_) * 2 + c_) * 2 + d_;
    };
    for (int ap = 0; ap < 2; ++ap) for (int bp = 0; bp < 2; ++bp) for (int cp = 0; cp < 2; ++cp) for (int dp = 0; dp < 2; ++dp)
    for (int a_ = 0; a_ < 2; ++a_) for (int b_ = 0; b_ < 2; ++b_) for (int c_ = 0; c_ < 2; ++c_) for (int d_ = 0; d_ < 2; ++d_) {
        cplx iso = 0;
        for (int I = 0; I < 3; ++I) iso += s[I][bp][dp] * s[I][b_][d_];
        if (iso == 0.0) continue;
        cplx ss = 0;
        for (int S = 0; S < 3; ++S) ss += s[S][ap][cp] * s[S][a_][c_];
        cplx spin;
        if (onsite) {
            spin = -(4.0 * std::numbers::pi / 3.0) / (a * a * a) * ss;
        } else {
            const cplx s12 = 3.0 * rs[ap][cp] * rs[a_][c_] - ss;
            spin = k.m_pi * k.m_pi * std::exp(-k.m_pi * r) / r * (s12 * ope_tensor_factor(r, k) + ss);
        }
        G[static_cast<std::size_t>(at(ap, bp, cp, dp, a_, b_, c_, d_))] = pref * iso * spin;
    }
    return G;
}

// Long-range part truncated at |x - y| <= ell_sites * a_L, including the on-site delta piece.
inline FermionSum build_ope_long_range(const LatticeSpec& lat, const OpeParams& p, const PhysicalConstants& k = kPhys) {
    FermionSum H;
    if (p.ell_sites < 1) return H;
    const double a = convert_length(p.a_fm, k);
    for (int x = 0; x < lat.n_sites(); ++x)
        for (int y = 0; y < lat.n_sites(); ++y) {
            if (lat.distance_sq(x, y) > static_cast<double>(p.ell_sites) * p.ell_sites) continue;
            const Site sx = lat.site(x), sy = lat.site(y);
            const auto G = ope_kernel({sx.x - sy.x, sx.y - sy.y, sx.z - sy.z}, a, k);
            std::size_t idx = 0;
            for (int ap = 0; ap < 2; ++ap) for (int bp = 0; bp < 2; ++bp) for (int cp = 0; cp < 2; ++cp) for (int dp = 0; dp < 2; ++dp)
            for (int a_ = 0; a_ < 2; ++a_) for (int b_ = 0; b_ < 2; ++b_) for (int c_ = 0; c_ < 2; ++c_) for (int d_ = 0; d_ < 2; ++d_, ++idx) {
                if (G[idx] == 0.0) continue;
                H += wick_normal({cre(lat.mode(x, species_of(ap, bp))), ann(lat.mode(x, species_of(cp, dp))),
                                  cre(lat.mode(y, species_of(a_, b_))), ann(lat.mode(y, species_of(c_, d_)))},
                                 G[idx]);
            }
        }
    return H.prune();
}

inline FermionSum build_ope(const LatticeSpec& lat, const OpeParams& p) {
    return build_free(lat, p.h) + build_ope_contact(lat, p.C) + build_ope_isospin_contact(lat, p.C_I2) + build_ope_long_range(lat, p);
}

// Bosonic pieces are carried symbolically; only their inventories and prefactors matter for costing.
struct BosonTermInventory {
    std::string label;
    int slots_per_site;
    double coefficient;
};

struct DynPiModel {
    FermionSum fermions;
    double A = 0.0, B = 0.0;
    std::vector<BosonTermInventory> bosons;
};

inline std::vector<std::array<int, 3>> levi_civita_triples() {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (i != j && j != k && i != k) out.push_back({i, j, k});
    return out;
}

inline DynPiModel build_dynpi_descriptor(const LatticeSpec& lat, const OpeParams& p, const PhysicalConstants& k = kPhys) {
    const double a = convert_length(p.a_fm, k);
    require_positive_AB(a);
    DynPiModel m;
    m.A = pion_A(a, k);
    m.B = pion_B(a, k);
    m.fermions = build_free(lat, p.h) + build_ope_contact(lat, p.C) + build_ope_isospin_contact(lat, p.C_I2);
    const double a3 = a * a * a;
    // AV: 3 derivative directions x 3 isospin components x 4 nonzero spin-isospin bilinears.
    m.bosons = {
        {"pi^2", 3, a3 * k.m_pi * k.m_pi / 2.0},
        {"(grad pi)^2", 9, a3 / 2.0},
        {"Pi^2", 3, a3 / 2.0},
        {"AV", 3 * 3 * 4, axial_ratio(k)},
        {"WT", static_cast<int>(levi_civita_triples().size()), 1.0 / (4.0 * k.f_pi * k.f_pi)},
    };
    return m;
}

}  // namespace nuceft
