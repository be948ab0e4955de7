// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "nuceft/fock.hpp"
#include "nuceft/lattice.hpp"
#include "nuceft/pauli.hpp"

namespace nuceft {

enum class Encoding { jw, vc, compact };

inline std::string to_string(Encoding e) {
    switch (e) {
        case Encoding::jw: return "jw";
        case Encoding::vc: return "vc";
        case Encoding::compact: return "compact";
    }
    return "?";
}

inline Encoding encoding_from_string(const std::string& s) {
    if (s == "jw") return Encoding::jw;
    if (s == "vc") return Encoding::vc;
    if (s == "compact") return Encoding::compact;
    throw domain_error("unknown encoding '" + s + "'");
}

// Auxiliary roles inside a VC site block.
inline constexpr int kVcMu = 4;
inline constexpr int kVcNu = 5;

// Qubit bookkeeping.
//   jw:      4 qubits per site, qubit = 4*site + species.
//   vc:      6 qubits per site, qubit = 6*site + role (4 species, then mu, nu).
//   compact: four stacked single-species codes; each block holds one vertex qubit
//            per site followed by checkerboard face qubits for xy, yz and xz faces.
class QubitLayout {
public:
    QubitLayout(Encoding enc, const LatticeSpec& lat) : enc_(enc), lat_(lat) {
        lat_.validate();
        if (enc == Encoding::compact) {
            const int n = lat.n_sites();
            // A face qubit is reserved at every lower corner of matching parity, including the
            // padding corners on the upper boundary, giving 1.5 L^3 per species for even L.
            for (int orient = 0; orient < 3; ++orient)
                for (int idx = 0; idx < n; ++idx)
                    if (face_parity_ok(orient, lat.site(idx))) face_index_.emplace(std::make_pair(orient, idx), face_count_++);
            block_ = n + face_count_;
        }
    }

    Encoding encoding() const { return enc_; }
    const LatticeSpec& lattice() const { return lat_; }

    int qubits_per_site() const {
        switch (enc_) {
            case Encoding::jw: return 4;
            case Encoding::vc: return 6;
            case Encoding::compact: return 10;
        }
        return 0;
    }

    std::size_t total_qubits() const {
        const auto n = static_cast<std::size_t>(lat_.n_sites());
        switch (enc_) {
            case Encoding::jw: return 4 * n;
            case Encoding::vc: return 6 * n;
            case Encoding::compact: return 4 * static_cast<std::size_t>(block_);
        }
        return 0;
    }

    // Qubit carrying the occupation of (site, species).
    int species_qubit(int site, int species) const {
        check(site, species);
        switch (enc_) {
            case Encoding::jw: return 4 * site + species;
            case Encoding::vc: return 6 * site + species;
            case Encoding::compact: return species * block_ + site;
        }
        return -1;
    }

    int aux_qubit(int site, int role) const {
        if (enc_ != Encoding::vc) throw unsupported_error("auxiliary qubits exist only in the VC layout");
        return 6 * site + role;
    }

    // Face qubit of a species block; orient 0 = xy, 1 = yz, 2 = xz; -1 when absent.
    int face_qubit(int species, int orient, const Site& lower) const {
        if (!lat_.contains(lower)) return -1;
        const auto it = face_index_.find({orient, lat_.raster(lower)});
        if (it == face_index_.end()) return -1;
        return species * block_ + lat_.n_sites() + it->second;
    }

    bool face_exists(int orient, const Site& lower) const {
        Site far = lower;
        if (orient == 0) { far.x += 1; far.y += 1; }
        if (orient == 1) { far.y += 1; far.z += 1; }
        if (orient == 2) { far.x += 1; far.z += 1; }
        return lat_.contains(lower) && lat_.contains(far) && face_parity_ok(orient, lower);
    }

    static bool face_parity_ok(int orient, const Site& s) {
        switch (orient) {
            case 0: return ((s.x + s.y) & 1) == 0;
            case 1: return ((s.y + s.z) & 1) == 0;
            default: return ((s.x + s.z) & 1) == 0;
        }
    }

private:
    void check(int site, int species) const {
        if (site < 0 || site >= lat_.n_sites() || species < 0 || species >= kSpecies)
            throw geometry_error("site/species out of range");
    }

    Encoding enc_;
    LatticeSpec lat_;
    int block_ = 0;
    int face_count_ = 0;
    std::map<std::pair<int, int>, int> face_index_;
};

namespace detail {

inline PauliString z_string_below(std::size_t n, int q) {
    PauliString p(n);
    for (int k = 0; k < q; ++k) p.set(static_cast<std::size_t>(k), 'Z');
    return p;
}

// Jordan-Wigner ladder on qubit q of an n-qubit register.
inline PauliSum jw_ladder(std::size_t n, int q, Ladder kind) {
    PauliString xs = z_string_below(n, q), ys = xs;
    xs.set(static_cast<std::size_t>(q), 'X');
    ys.set(static_cast<std::size_t>(q), 'Y');
    PauliSum r(n);
    r.add(0.5, xs);
    r.add(kind == Ladder::annihilate ? cplx(0, 0.5) : cplx(0, -0.5), ys);
    return r.canonicalize();
}

inline PauliString majorana(std::size_t n, int q, char op) {
    PauliString p = z_string_below(n, q);
    p.set(static_cast<std::size_t>(q), op);
    return p;
}

}  // namespace detail

inline PauliSum encode_ladder(const QubitLayout& lay, int site, int species, Ladder kind) {
    if (lay.encoding() == Encoding::compact)
        throw unsupported_error("compact encoding represents only parity-preserving composites, not raw ladders");
    return detail::jw_ladder(lay.total_qubits(), lay.species_qubit(site, species), kind);
}

inline PauliSum encode_number(const QubitLayout& lay, int site, int species) {
    const std::size_t n = lay.total_qubits();
    PauliSum r(n);
    r.add(0.5, PauliString(n));
    r.add(-0.5, PauliString::single(n, static_cast<std::size_t>(lay.species_qubit(site, species)), 'Z'));
    return r.canonicalize();
}

// Directed VC path edges as (from, to) site pairs. mu paths snake through x-y planes
// column by column; nu paths snake through y-z planes row by row.
inline std::vector<std::array<int, 2>> vc_path_edges(const LatticeSpec& lat, int role) {
    std::vector<std::array<int, 2>> edges;
    auto walk = [&](const std::vector<Site>& path) {
        for (std::size_t k = 0; k + 1 < path.size(); ++k) edges.push_back({lat.raster(path[k]), lat.raster(path[k + 1])});
    };
    if (role == kVcMu) {
        for (int z = 0; z < lat.Lz; ++z) {
            std::vector<Site> path;
            for (int x = 0; x < lat.Lx; ++x)
                for (int k = 0; k < lat.Ly; ++k) path.push_back({x, (x % 2 == 0) ? k : lat.Ly - 1 - k, z});
            walk(path);
        }
    } else {
        for (int x = 0; x < lat.Lx; ++x) {
            std::vector<Site> path;
            for (int y = 0; y < lat.Ly; ++y)
                for (int k = 0; k < lat.Lz; ++k) path.push_back({x, y, (y % 2 == 0) ? k : lat.Lz - 1 - k});
            walk(path);
        }
    }
    return edges;
}

// Auxiliary pair operator i mu_a mubar_b for a directed path edge a -> b.
inline PauliString vc_pair_operator(const QubitLayout& lay, int a, int b, int role) {
    const std::size_t n = lay.total_qubits();
    PauliString p = detail::majorana(n, lay.aux_qubit(a, role), 'X') * detail::majorana(n, lay.aux_qubit(b, role), 'Y');
    p.set_phase(p.phase() + 1);
    return p;
}

inline std::vector<PauliString> vc_stabilizers(const QubitLayout& lay) {
    if (lay.encoding() != Encoding::vc) throw unsupported_error("stabilizers are defined for the VC layout only");
    std::vector<PauliString> out;
    for (int role : {kVcMu, kVcNu})
        for (const auto& e : vc_path_edges(lay.lattice(), role)) out.push_back(vc_pair_operator(lay, e[0], e[1], role));
    return out;
}

namespace detail {

inline PauliSum jw_hop(const QubitLayout& lay, int i, int j, int species) {
    const std::size_t n = lay.total_qubits();
    const PauliSum ai = jw_ladder(n, lay.species_qubit(i, species), Ladder::annihilate);
    const PauliSum aj = jw_ladder(n, lay.species_qubit(j, species), Ladder::annihilate);
    return ai.adjoint() * aj + aj.adjoint() * ai;
}

// Oriented compact edge operator X_tail Y_head times its face Paulis.
inline PauliString compact_edge(const QubitLayout& lay, int i, int j, int species, int& tail, int& head) {
    const LatticeSpec& lat = lay.lattice();
    const auto ax = lat.bond_axis(i, j);
    Site lo = lat.site(i), hi = lat.site(j);
    if (lo.x + lo.y + lo.z > hi.x + hi.y + hi.z) std::swap(lo, hi);
    int sgn = 0;
    switch (ax) {
        case Axis::x: sgn = (lo.y + lo.z) & 1; break;
        case Axis::y: sgn = (lo.x + lo.z) & 1; break;
        case Axis::z: sgn = (lo.x + lo.y) & 1; break;
    }
    tail = lat.raster(sgn == 0 ? lo : hi);
    head = lat.raster(sgn == 0 ? hi : lo);

    const std::size_t n = lay.total_qubits();
    PauliString p(n);
    p.set(static_cast<std::size_t>(lay.species_qubit(tail, species)), 'X');
    p.set(static_cast<std::size_t>(lay.species_qubit(head, species)), 'Y');

    // Faces touching this edge: (orientation, lower corner, letter for this edge).
    struct FaceRef { int orient; Site corner; char op; };
    std::vector<FaceRef> faces;
    const Site c = lo;
    switch (ax) {
        case Axis::x:
            faces.push_back({0, c, 'X'});
            faces.push_back({0, {c.x, c.y - 1, c.z}, 'X'});
            faces.push_back({2, c, 'X'});
            faces.push_back({2, {c.x, c.y, c.z - 1}, 'X'});
            break;
        case Axis::y:
            faces.push_back({0, c, 'Y'});
            faces.push_back({0, {c.x - 1, c.y, c.z}, 'Y'});
            faces.push_back({1, c, 'X'});
            faces.push_back({1, {c.x, c.y, c.z - 1}, 'X'});
            break;
        case Axis::z:
            faces.push_back({1, c, 'Y'});
            faces.push_back({1, {c.x, c.y - 1, c.z}, 'Y'});
            faces.push_back({2, c, 'Y'});
            faces.push_back({2, {c.x - 1, c.y, c.z}, 'Y'});
            break;
    }
    for (const auto& f : faces) {
        if (!lay.face_exists(f.orient, f.corner)) continue;
        p.set(static_cast<std::size_t>(lay.face_qubit(species, f.orient, f.corner)), f.op);
    }
    return p;
}

}  // namespace detail

inline PauliString compact_vertex(const QubitLayout& lay, int site, int species) {
    if (lay.encoding() != Encoding::compact) throw unsupported_error("vertex operators belong to the compact layout");
    return PauliString::single(lay.total_qubits(), static_cast<std::size_t>(lay.species_qubit(site, species)), 'Z');
}

inline PauliString compact_edge(const QubitLayout& lay, int i, int j, int species) {
    if (lay.encoding() != Encoding::compact) throw unsupported_error("edge operators belong to the compact layout");
    int tail = 0, head = 0;
    return detail::compact_edge(lay, i, j, species, tail, head);
}

// Encoded a+_i a_j + a+_j a_i for one species on a nearest-neighbour bond.
inline PauliSum encode_hopping(const QubitLayout& lay, int i, int j, int species) {
    const LatticeSpec& lat = lay.lattice();
    const Axis ax = lat.bond_axis(i, j);
    const std::size_t n = lay.total_qubits();
    switch (lay.encoding()) {
        case Encoding::jw: return detail::jw_hop(lay, i, j, species);
        case Encoding::vc: {
            PauliSum h = detail::jw_hop(lay, i, j, species);
            if (ax == Axis::x) return h;
            const int role = ax == Axis::y ? kVcMu : kVcNu;
            for (const auto& e : vc_path_edges(lat, role))
                if ((e[0] == i && e[1] == j) || (e[0] == j && e[1] == i))
                    return h * PauliSum(1.0, vc_pair_operator(lay, e[0], e[1], role));
            throw geometry_error("bond missing from the auxiliary path");
        }
        case Encoding::compact: {
            int tail = 0, head = 0;
            const PauliString e = detail::compact_edge(lay, i, j, species, tail, head);
            const PauliString vt = compact_vertex(lay, tail, species);
            const PauliString vh = compact_vertex(lay, head, species);
            // (-i/2)(E V_head + V_tail E) = (X X + Y Y) F / 2
            PauliSum r(n);
            r.add(cplx(0, -0.5), e * vh);
            r.add(cplx(0, -0.5), vt * e);
            return r.canonicalize();
        }
    }
    return PauliSum(n);
}

// Generic image of a FermionSum through ladder products (jw and vc only).
inline PauliSum encode_fermion_sum(const QubitLayout& lay, const FermionSum& h) {
    const std::size_t n = lay.total_qubits();
    const LatticeSpec& lat = lay.lattice();
    PauliSum out(n);
    for (const auto& [t, w] : h.terms()) {
        PauliSum acc = PauliSum::identity(n, w);
        for (const auto& op : t.word()) {
            const int site = op.mode / kSpecies, sp = op.mode % kSpecies;
            if (site >= lat.n_sites()) throw dimension_error("mode outside the lattice");
            acc = acc * encode_ladder(lay, site, sp, op.kind);
        }
        out += acc;
    }
    return out;
}

inline nlohmann::json to_json(const PauliSum& p) {
    auto hex = [](const BitMask& m) {
        static constexpr char kDig[] = "0123456789abcdef";
        std::string s;
        for (auto it = m.words().rbegin(); it != m.words().rend(); ++it)
            for (int sh = 60; sh >= 0; sh -= 4) s += kDig[(*it >> sh) & 0xF];
        return s;
    };
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms())
        terms.push_back({{"re", t.coeff.real()}, {"im", t.coeff.imag()}, {"phase", t.str.phase()},
                         {"x", hex(t.str.x_mask())}, {"z", hex(t.str.z_mask())}});
    return {{"n_qubits", p.n_qubits()}, {"terms", terms}};
}

}  // namespace nuceft
