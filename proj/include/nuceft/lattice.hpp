// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "nuceft/errors.hpp"

namespace nuceft {

// Species order within a site: up-p, down-p, up-n, down-n; species = spin + 2*isospin.
enum Species : int { up_p = 0, down_p = 1, up_n = 2, down_n = 3 };
inline constexpr int kSpecies = 4;

inline constexpr int species_of(int spin, int isospin) { return spin + 2 * isospin; }
inline constexpr int spin_of(int species) { return species & 1; }
inline constexpr int isospin_of(int species) { return species >> 1; }

struct Site {
    int x = 0, y = 0, z = 0;
    friend bool operator==(const Site&, const Site&) = default;
};

enum class Axis { x = 0, y = 1, z = 2 };

// Open-boundary cubic lattice. Site ids follow the Jordan-Wigner raster: x-major
// boustrophedon inside each x-y plane, planes stacked along z.
struct LatticeSpec {
    int Lx = 1, Ly = 1, Lz = 1;
    double a_fm = 1.0;

    LatticeSpec() = default;
    LatticeSpec(int lx, int ly, int lz, double a = 1.0) : Lx(lx), Ly(ly), Lz(lz), a_fm(a) { validate(); }
    static LatticeSpec cube(int L, double a = 1.0) { return {L, L, L, a}; }

    void validate() const {
        if (Lx < 1 || Ly < 1 || Lz < 1) throw geometry_error("lattice extents must be >= 1");
        if (!(a_fm > 0)) throw geometry_error("lattice spacing must be positive");
    }

    int n_sites() const { return Lx * Ly * Lz; }
    int n_modes() const { return kSpecies * n_sites(); }

    bool contains(const Site& s) const { return s.x >= 0 && s.x < Lx && s.y >= 0 && s.y < Ly && s.z >= 0 && s.z < Lz; }

    int raster(const Site& s) const {
        if (!contains(s)) throw geometry_error("site outside lattice");
        const int xr = (s.y % 2 == 0) ? s.x : Lx - 1 - s.x;
        return s.z * Lx * Ly + s.y * Lx + xr;
    }

    Site site(int idx) const {
        if (idx < 0 || idx >= n_sites()) throw geometry_error("site index out of range");
        Site s;
        s.z = idx / (Lx * Ly);
        const int rem = idx % (Lx * Ly);
        s.y = rem / Lx;
        const int xr = rem % Lx;
        s.x = (s.y % 2 == 0) ? xr : Lx - 1 - xr;
        return s;
    }

    int mode(int site_idx, int species) const { return site_idx * kSpecies + species; }

    // Nearest-neighbour bond axis, or throws for non-neighbours.
    Axis bond_axis(int i, int j) const {
        const Site a = site(i), b = site(j);
        const int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y), dz = std::abs(a.z - b.z);
        if (dx + dy + dz != 1) throw geometry_error("sites " + std::to_string(i) + " and " + std::to_string(j) + " are not nearest neighbours");
        return dx ? Axis::x : (dy ? Axis::y : Axis::z);
    }

    // Bonds grouped into the six kinetic layers: (axis, parity of the lower coordinate).
    std::array<std::vector<std::array<int, 2>>, 6> bond_layers() const {
        std::array<std::vector<std::array<int, 2>>, 6> out;
        for (int ax = 0; ax < 3; ++ax)
            for (int idx = 0; idx < n_sites(); ++idx) {
                const Site s = site(idx);
                Site t = s;
                int c = 0;
                if (ax == 0) { t.x += 1; c = s.x; }
                if (ax == 1) { t.y += 1; c = s.y; }
                if (ax == 2) { t.z += 1; c = s.z; }
                if (!contains(t)) continue;
                out[static_cast<std::size_t>(2 * ax + (c & 1))].push_back({idx, raster(t)});
            }
        return out;
    }

    std::vector<std::array<int, 2>> bonds() const {
        std::vector<std::array<int, 2>> out;
        for (const auto& l : bond_layers()) out.insert(out.end(), l.begin(), l.end());
        return out;
    }

    double distance_sq(int i, int j) const {
        const Site a = site(i), b = site(j);
        const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
        return dx * dx + dy * dy + dz * dz;
    }
};

}  // namespace nuceft
