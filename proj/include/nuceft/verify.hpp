// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nuceft/encodings.hpp"
#include "nuceft/fock.hpp"
#include "nuceft/models.hpp"
#include "nuceft/pauli.hpp"
#include "nuceft/trotter_bounds.hpp"

namespace nuceft::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline bool all_passed(const std::vector<Check>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.passed; });
}

inline Check make_check(std::string name, std::size_t failures, std::size_t total, std::string extra = {}) {
    std::ostringstream os;
    os << (total - failures) << "/" << total << " ok";
    if (!extra.empty()) os << "; " << extra;
    return {std::move(name), failures == 0, os.str()};
}

// ---- Pauli algebra ----

inline PauliString random_string(std::mt19937_64& rng, std::size_t n) {
    static constexpr char kOps[] = "IXYZ";
    std::uniform_int_distribution<int> op(0, 3), ph(0, 3);
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) p.set(q, kOps[op(rng)]);
    p.set_phase(static_cast<unsigned>(ph(rng)));
    return p;
}

inline std::vector<Check> pauli_suite(std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    std::vector<Check> out;
    std::size_t bad_prod = 0, bad_comm = 0, bad_herm = 0;
    constexpr std::size_t kTrials = 200;
    for (std::size_t k = 0; k < kTrials; ++k) {
        const std::size_t n = 1 + k % 6;
        const auto a = random_string(rng, n), b = random_string(rng, n);
        const auto A = dense_matrix(PauliSum(1.0, a)), B = dense_matrix(PauliSum(1.0, b));
        if (!dense_matrix(PauliSum(1.0, a * b)).isApprox(A * B, 1e-12)) ++bad_prod;
        const bool dense_commute = (A * B - B * A).norm() < 1e-9;
        if (dense_commute != a.commutes_with(b)) ++bad_comm;
        PauliSum s(n);
        s.add(cplx(0.3, 0.1), a);
        s.add(cplx(-1.2, 0.4), b);
        const PauliSum h = s + s.adjoint();
        if (!h.is_hermitian() || !dense_matrix(h).isApprox(dense_matrix(h).adjoint(), 1e-12)) ++bad_herm;
    }
    out.push_back(make_check("pauli products match dense matrices", bad_prod, kTrials));
    out.push_back(make_check("symplectic commutation matches dense commutator", bad_comm, kTrials));
    out.push_back(make_check("hermitian parts are hermitian", bad_herm, kTrials));
    return out;
}

// ---- encodings ----

inline std::size_t car_failures(const QubitLayout& lay) {
    const LatticeSpec& lat = lay.lattice();
    const std::size_t nq = lay.total_qubits();
    std::vector<PauliSum> a, ad;
    for (int s = 0; s < lat.n_sites(); ++s)
        for (int sp = 0; sp < kSpecies; ++sp) {
            a.push_back(encode_ladder(lay, s, sp, Ladder::annihilate));
            ad.push_back(encode_ladder(lay, s, sp, Ladder::create));
        }
    std::size_t bad = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!anticommutator_sum(a[i], ad[j]).is_scalar(i == j ? 1.0 : 0.0, 1e-12)) ++bad;
            if (!anticommutator_sum(a[i], a[j]).is_scalar(0.0, 1e-12)) ++bad;
        }
    (void)nq;
    return bad;
}

struct AxisWeights {
    std::size_t x = 0, y = 0, z = 0;
};

inline AxisWeights max_hop_weights(const QubitLayout& lay) {
    AxisWeights w;
    const LatticeSpec& lat = lay.lattice();
    for (const auto& b : lat.bonds())
        for (int sp = 0; sp < kSpecies; ++sp) {
            const auto mw = encode_hopping(lay, b[0], b[1], sp).max_weight();
            switch (lat.bond_axis(b[0], b[1])) {
                case Axis::x: w.x = std::max(w.x, mw); break;
                case Axis::y: w.y = std::max(w.y, mw); break;
                case Axis::z: w.z = std::max(w.z, mw); break;
            }
        }
    return w;
}

inline std::vector<Check> encodings_suite() {
    std::vector<Check> out;
    const auto plane = LatticeSpec(2, 2, 1);
    const std::size_t pairs = 2 * static_cast<std::size_t>(plane.n_modes()) * static_cast<std::size_t>(plane.n_modes());
    out.push_back(make_check("jw canonical anticommutation, 2x2x1", car_failures(QubitLayout(Encoding::jw, plane)), pairs));
    out.push_back(make_check("vc canonical anticommutation, 2x2x1", car_failures(QubitLayout(Encoding::vc, plane)), pairs));

    // Stabilizers commute with each other and with every encoded hopping and number term.
    const auto box = LatticeSpec(2, 2, 2);
    const QubitLayout vc(Encoding::vc, box);
    const auto stab = vc_stabilizers(vc);
    std::size_t bad = 0, total = 0;
    for (std::size_t i = 0; i < stab.size(); ++i)
        for (std::size_t j = i + 1; j < stab.size(); ++j, ++total)
            if (!stab[i].commutes_with(stab[j])) ++bad;
    for (const auto& b : box.bonds())
        for (int sp = 0; sp < kSpecies; ++sp) {
            const auto h = encode_hopping(vc, b[0], b[1], sp);
            for (const auto& g : stab) {
                ++total;
                if (!commutator_sum(h, PauliSum(1.0, g)).empty()) ++bad;
            }
        }
    for (int s = 0; s < box.n_sites(); ++s)
        for (int sp = 0; sp < kSpecies; ++sp)
            for (const auto& g : stab) {
                ++total;
                if (!commutator_sum(encode_number(vc, s, sp), PauliSum(1.0, g)).empty()) ++bad;
            }
    out.push_back(make_check("vc stabilizers commute with encoded terms, 2x2x2", bad, total));

    for (int L : {2, 3}) {
        const auto w = max_hop_weights(QubitLayout(Encoding::vc, LatticeSpec::cube(L)));
        const bool ok = w.x == 7 && w.y == 10 && w.z == 12;
        std::ostringstream os;
        os << "x/y/z = " << w.x << "/" << w.y << "/" << w.z;
        out.push_back({"vc hopping weights 7/10/12, L=" + std::to_string(L), ok, os.str()});
    }

    // Compact: weight <= 4, edge/vertex algebra, and hopping Hermiticity on 3x3x3.
    const auto cube3 = LatticeSpec::cube(3);
    const QubitLayout cp(Encoding::compact, cube3);
    std::size_t heavy = 0, alg_bad = 0, alg_total = 0, herm_bad = 0;
    const auto bonds = cube3.bonds();
    std::size_t maxw = 0;
    for (const auto& b : bonds) {
        const auto h = encode_hopping(cp, b[0], b[1], 0);
        maxw = std::max(maxw, h.max_weight());
        if (h.max_weight() > 4) ++heavy;
        if (!h.is_hermitian()) ++herm_bad;
    }
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        const auto ei = compact_edge(cp, bonds[i][0], bonds[i][1], 0);
        for (std::size_t j = i + 1; j < bonds.size(); ++j) {
            const auto ej = compact_edge(cp, bonds[j][0], bonds[j][1], 0);
            int shared = 0;
            for (int u : bonds[i])
                for (int v : bonds[j]) shared += u == v;
            ++alg_total;
            if (ei.commutes_with(ej) != (shared != 1)) ++alg_bad;
        }
        for (int s = 0; s < cube3.n_sites(); ++s) {
            const bool touches = s == bonds[i][0] || s == bonds[i][1];
            ++alg_total;
            if (compact_vertex(cp, s, 0).commutes_with(ei) == touches) ++alg_bad;
        }
    }
    out.push_back(make_check("compact hopping weight <= 4, 3x3x3", heavy, bonds.size(), "max " + std::to_string(maxw)));
    out.push_back(make_check("compact edge/vertex algebra, 3x3x3", alg_bad, alg_total));
    out.push_back(make_check("compact hopping hermitian, 3x3x3", herm_bad, bonds.size()));

    // JW image of the contact Hamiltonian reproduces the Fock matrix.
    const auto pair = LatticeSpec(2, 1, 1);
    const auto H = build_pionless(pair, PionlessParams::tabulated(2.2));
    const auto Hq = encode_fermion_sum(QubitLayout(Encoding::jw, pair), H);
    const double diff = (dense_matrix(Hq) - fock_matrix(H, static_cast<std::size_t>(pair.n_modes()))).norm();
    out.push_back({"jw image equals Fock matrix, 2x1x1", diff < 1e-9, "frobenius diff " + std::to_string(diff)});
    return out;
}

// ---- seminorm ----

// Random Hermitian-or-not NPFO supported exactly on `modes`.
inline FermionSum random_npfo(std::mt19937_64& rng, std::vector<int> modes, cplx w) {
    std::shuffle(modes.begin(), modes.end(), rng);
    const int k = static_cast<int>(modes.size());
    std::uniform_int_distribution<int> pick(0, k / 2);
    const int c = pick(rng);
    Npfo t;
    for (int i = 0; i < c; ++i) t.cre.push_back(modes[static_cast<std::size_t>(i)]);
    for (int i = c; i < 2 * c; ++i) t.ann.push_back(modes[static_cast<std::size_t>(i)]);
    for (int i = 2 * c; i < k; ++i) t.num.push_back(modes[static_cast<std::size_t>(i)]);
    std::sort(t.cre.begin(), t.cre.end());
    std::sort(t.ann.begin(), t.ann.end());
    std::sort(t.num.begin(), t.num.end());
    return normal_order(t.word(), w);
}

inline std::vector<Check> seminorm_suite(std::uint64_t seed = 11, std::size_t instances = 200) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::size_t bad_norm = 0, bad_count = 0, bad_loc = 0, nonzero = 0;
    double worst = 0;
    for (std::size_t k = 0; k < instances; ++k) {
        const int n = 4 + static_cast<int>(rng() % 9);  // 4..12 modes
        std::vector<int> modes(static_cast<std::size_t>(n));
        std::iota(modes.begin(), modes.end(), 0);
        std::shuffle(modes.begin(), modes.end(), rng);
        FermionSum X;
        double jmax = 0;
        int kmin = 1 << 20;
        std::size_t tuples = 0;
        for (std::size_t pos = 0; pos < modes.size();) {
            const std::size_t len = std::min<std::size_t>(1 + rng() % 4, modes.size() - pos);
            if (rng() % 4 == 0) {  // leave some modes untouched
                pos += len;
                continue;
            }
            std::vector<int> tuple(modes.begin() + static_cast<long>(pos), modes.begin() + static_cast<long>(pos + len));
            pos += len;
            const cplx J(u(rng), u(rng));
            jmax = std::max(jmax, std::abs(J));
            kmin = std::min(kmin, static_cast<int>(len));
            X += random_npfo(rng, tuple, J);
            ++tuples;
        }
        if (tuples == 0) continue;
        const std::size_t eta = rng() % static_cast<std::size_t>(n + 1);
        const auto groups = static_cast<std::size_t>((kmin + 1) / 2);
        const double bound = jmax * static_cast<double>(std::min((eta + groups - 1) / groups, tuples));
        const double v = eta_seminorm(X, static_cast<std::size_t>(n), eta);
        worst = std::max(worst, bound > 0 ? v / bound : (v > 0 ? 1e9 : 0.0));
        if (v > bound * (1 + 1e-9) + 1e-12) ++bad_norm;
    }
    for (std::size_t k = 0; k < instances; ++k) {
        const int n = 3 + static_cast<int>(rng() % 6);
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        auto draw = [&] {
            std::shuffle(all.begin(), all.end(), rng);
            const std::size_t len = 1 + rng() % std::min<std::size_t>(4, all.size());
            return std::vector<int>(all.begin(), all.begin() + static_cast<long>(len));
        };
        const auto si = draw(), sj = draw();
        const FermionSum hi = random_npfo(rng, si, 1.0), hj = random_npfo(rng, sj, 1.0);
        const auto c = fermion_commutator(hi, hj).prune();
        if (c.empty()) continue;
        ++nonzero;
        const int ki = static_cast<int>(si.size()), kj = static_cast<int>(sj.size());
        const double cap = std::pow(2.0, 1.0 + std::min(ki, kj) / 2.0);
        if (static_cast<double>(c.size()) > cap) ++bad_count;
        for (const auto& [t, w] : c.terms())
            if (static_cast<int>(t.locality()) > ki + kj - 1) ++bad_loc;
    }
    std::ostringstream os;
    os << "max norm/bound " << worst;
    return {make_check("disjoint NPFO seminorm bound", bad_norm, instances, os.str()),
            make_check("NPFO commutator term count", bad_count, nonzero),
            make_check("NPFO commutator locality <= k_i + k_j - 1", bad_loc, nonzero)};
}

// ---- Trotter oracle dominance ----

struct DominanceGrid {
    std::vector<double> times{0.01, 0.05, 0.1};
    std::vector<std::size_t> etas{1, 2, 3};
    std::vector<int> orders{1, 2};
    std::vector<int> steps{1, 2, 4};
    std::vector<double> spacings{1.4, 2.2};
};

inline std::vector<Check> trotter_suite(const DominanceGrid& g = {}) {
    const auto lat = LatticeSpec(2, 1, 1);
    const auto n = static_cast<std::size_t>(lat.n_modes());
    std::size_t bad = 0, total = 0;
    double worst = 0;
    for (double a : g.spacings) {
        const auto par = PionlessParams::tabulated(a);
        const auto layers = pionless_layers(lat, par);
        for (int p : g.orders)
            for (std::size_t eta : g.etas) {
                const double coeff = p == 1 ? pionless_p1_report(eta, par).total() : pionless_p2_report(eta, par).total();
                for (double t : g.times)
                    for (int r : g.steps) {
                        const double exact = exact_evolution_error(layers, t, p, r, n, eta);
                        const double bound = total_trotter_error(p, t, coeff, r);
                        ++total;
                        worst = std::max(worst, exact / bound);
                        if (exact > bound) ++bad;
                    }
            }
    }
    std::ostringstream os;
    os << "max exact/bound " << worst;
    return {make_check("exact product-formula error below analytic bound, 2x1x1", bad, total, os.str())};
}

}  // namespace nuceft::verify
