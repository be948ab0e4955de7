// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "nuceft/encodings.hpp"
#include "nuceft/errors.hpp"
#include "nuceft/trotter_bounds.hpp"
#include "nuceft/trunc_bounds.hpp"

namespace nuceft {

struct StepCost {
    double depth_2q = 0;
    double rz_count = 0;
    bool controlled = false;
    Encoding encoding = Encoding::vc;
    Model model = Model::pionless;
    int order = 1;
};

inline double cube(int L) { return static_cast<double>(L) * L * L; }

// Two-qubit depths of the individual circuit components.
namespace component {

struct Pair {
    std::int64_t plain, controlled;
    std::int64_t pick(bool c) const { return c ? controlled : plain; }
};

inline constexpr Pair vc_hop_x{16, 20};
inline constexpr Pair vc_hop_y{22, 26};
inline constexpr Pair vc_hop_z{26, 30};
inline constexpr Pair compact_hop{10, 14};
inline constexpr Pair contact{8, 22};
inline constexpr Pair ope_contact{6, 26};
inline constexpr Pair ope_isospin_contact{54, 98};
inline constexpr Pair long_range_pair{14336, 16384};

// Free hopping over the six bond layers, all four species.
inline std::int64_t vc_free(bool c) { return 2 * 4 * (vc_hop_x.pick(c) + vc_hop_y.pick(c) + vc_hop_z.pick(c)); }

inline std::int64_t half_up(std::int64_t n) { return (n + 1) / 2; }

inline std::int64_t pi_sq(std::int64_t n, bool c) {
    const std::int64_t base = 2 * half_up(n) + 2 * n - 4;
    return c ? n * n + 2 * half_up(n) + 3 * n - 4 : base;
}
inline std::int64_t grad_pi_sq(std::int64_t n, bool c) {
    return c ? 24 * n * n + 12 * half_up(n) + 36 * n - 24 : 12 * half_up(n) + 24 * n - 24;
}
inline std::int64_t Pi_sq(std::int64_t n, bool c) {
    return c ? 3 * n * n + 2 * half_up(n) + n - 4 : 2 * n * n + 2 * half_up(n) - 4;
}
inline std::int64_t axial_vector(std::int64_t n, bool c) { return c ? 1296 + 1728 * n : 1296 + 864 * n; }
inline std::int64_t weinberg_tomozawa(std::int64_t n, bool c) {
    return c ? 146 * n * n + 190 * n + 144 : 98 * n * n + 94 * n + 96;
}

}  // namespace component

inline StepCost pionless_step_cost(Encoding enc, int order, bool controlled, int L = 10) {
    if (order != 1 && order != 2) throw unsupported_error("pionless step costs exist for orders 1 and 2");
    if (enc == Encoding::jw) throw unsupported_error("no step-depth model for the Jordan-Wigner layout");
    using namespace component;
    std::int64_t p1 = 0, widest = 0;
    if (enc == Encoding::vc) {
        p1 = vc_free(controlled) + contact.pick(controlled);
        widest = std::max(vc_hop_z.pick(controlled), contact.pick(controlled));
    } else {
        p1 = 6 * compact_hop.pick(controlled) + contact.pick(controlled);
        widest = std::max(compact_hop.pick(controlled), contact.pick(controlled));
    }
    StepCost s;
    // Second order: every component twice, except one shared half-step of the widest component.
    s.depth_2q = static_cast<double>(order == 1 ? p1 : 2 * p1 - widest);
    s.rz_count = (controlled ? 84.0 : 42.0) * cube(L) * order;
    s.controlled = controlled;
    s.encoding = enc;
    s.model = Model::pionless;
    s.order = order;
    return s;
}

inline StepCost ope_step_cost(int ell_sites, int L, bool controlled) {
    if (ell_sites < 1) throw domain_error("cutoff must be at least one lattice spacing");
    using namespace component;
    const double R = static_cast<double>(interaction_types(ell_sites));
    StepCost s;
    const auto fixed = vc_free(controlled) + ope_contact.pick(controlled) + ope_isospin_contact.pick(controlled);
    s.depth_2q = static_cast<double>(fixed) + static_cast<double>(long_range_pair.pick(controlled)) * R;
    s.rz_count = (52.0 + 1024.0 * R) * cube(L) * (controlled ? 2 : 1);
    s.controlled = controlled;
    s.encoding = Encoding::vc;
    s.model = Model::ope;
    return s;
}

// `strict` selects the alternative closed-form coefficients instead of the component sums.
inline StepCost dynpi_step_cost(int n_b, int L, bool controlled, bool strict = false) {
    if (n_b < 1) throw domain_error("boson register needs at least one qubit");
    using namespace component;
    const std::int64_t n = n_b, c = half_up(n);
    std::int64_t d = 0;
    if (!strict) {
        const std::int64_t fermion = controlled ? 732 : 572;
        const std::int64_t boson = pi_sq(n, controlled) + grad_pi_sq(n, controlled) + Pi_sq(n, controlled);
        d = std::max(fermion, boson) + axial_vector(n, controlled) + weinberg_tomozawa(n, controlled);
    } else if (!controlled) {
        d = 97 * n * n + 959 * n + 1392 + std::max<std::int64_t>(572, n * n + 16 * c + 27 * n - 32);
    } else {
        d = 145 * n * n + 1919 * n + 1440 + std::max<std::int64_t>(732, 27 * n * n + 16 * c + 41 * n - 32);
    }
    const double nd = n_b;
    const double g = strict ? 45 * nd * nd + 114 * nd + 76 : 33 * nd * nd + 90 * nd + 64;
    StepCost s;
    s.depth_2q = static_cast<double>(d);
    s.rz_count = g * cube(L) * (controlled ? 2 : 1);
    s.controlled = controlled;
    s.encoding = Encoding::vc;
    s.model = Model::dynpi;
    return s;
}

// Expected T count for total_rz rotations sharing eps_syn_total equally.
inline double t_synthesis(double total_rz, double eps_syn_total) {
    if (!(total_rz >= 1)) throw domain_error("need at least one rotation");
    if (!(eps_syn_total > 0)) throw domain_error("synthesis budget must be positive");
    return total_rz * (1.15 * std::log2(2.0 * total_rz / eps_syn_total) + 9.2);
}

inline double qubit_count(Model model, Encoding enc, int L, int n_b, Task task) {
    const double V = cube(L);
    double q = 0;
    switch (model) {
        case Model::pionless:
        case Model::ope:
            if (enc == Encoding::vc) q = 6 * V;
            else if (enc == Encoding::compact) q = 10 * V;
            else q = 4 * V;
            if (model == Model::ope && enc != Encoding::vc) throw unsupported_error("long-range terms are costed in the VC layout only");
            break;
        case Model::dynpi:
            if (enc != Encoding::vc) throw unsupported_error("dynamical pions are costed in the VC layout only");
            if (n_b < 1) throw domain_error("boson register needs at least one qubit");
            q = 6 * V + 3 * V * n_b;
            break;
    }
    return task == Task::qpe ? q + 1 : q;
}

}  // namespace nuceft
