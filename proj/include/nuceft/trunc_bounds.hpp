// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>

#include "nuceft/errors.hpp"
#include "nuceft/models.hpp"

namespace nuceft {

// Number of integer points (i, j, k) with i^2 + j^2 + k^2 = r_sq.
inline std::int64_t shell_count(std::int64_t r_sq) {
    if (r_sq < 0) throw domain_error("negative squared radius");
    const auto R = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(r_sq)))) + 1;
    std::int64_t c = 0;
    for (std::int64_t i = -R; i <= R; ++i)
        for (std::int64_t j = -R; j <= R; ++j) {
            const std::int64_t rem = r_sq - i * i - j * j;
            if (rem < 0) continue;
            const auto k = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rem))));
            if (k * k == rem) c += (k == 0) ? 1 : 2;
        }
    return c;
}

// Occupied shells r^2 -> q(r) for 0 < r^2 <= max_r_sq.
class ShellTable {
public:
    explicit ShellTable(std::int64_t max_r_sq) {
        for (std::int64_t s = 1; s <= max_r_sq; ++s)
            if (auto q = shell_count(s); q > 0) q_.emplace(s, q);
    }
    const std::map<std::int64_t, std::int64_t>& shells() const { return q_; }
    std::int64_t cumulative() const {
        std::int64_t c = 1;
        for (const auto& [s, q] : q_) c += q;
        return c;
    }

private:
    std::map<std::int64_t, std::int64_t> q_;
};

// Interaction-type count R(ell) used for long-range circuit layering.
inline std::int64_t interaction_types(int ell_sites) {
    const double k = ell_sites + 1.0;
    return static_cast<std::int64_t>(std::ceil(4.0 * std::numbers::pi * k * k * k / 3.0 - 1e-9));
}

inline double ope_g2(double r, const PhysicalConstants& k = kPhys) { return ope_g1(r, k) * ope_tensor_factor(r, k); }

// Error rate (MeV) of truncating the long-range interaction at length ell (MeV^-1).
inline double ope_cutoff_error(double ell, std::size_t eta, double a, const PhysicalConstants& k = kPhys) {
    if (!(ell >= a * (1 - 1e-12))) throw domain_error("cutoff length must be at least one lattice spacing");
    if (eta == 0) return 0.0;
    const double r = ell + a;
    const double e = static_cast<double>(eta);
    const double many_body = e * e * (72.0 * ope_g1(r, k) + 648.0 * ope_g2(r, k));
    const double tail = 4.0 * std::numbers::pi * e / (k.m_pi * k.m_pi * a * a * a) * r * ope_g1(r, k) *
                        (720.0 * (k.m_pi * ell + k.m_pi * a + 1.0) + 3888.0);
    return std::min(many_body, tail);
}

inline constexpr int kMaxCutoffSites = 10000;

// Smallest integer k with t * error(k a) <= eps_trunc.
inline int choose_ope_cutoff(double eps_trunc, double t, std::size_t eta, double a, const PhysicalConstants& k = kPhys) {
    if (!(eps_trunc > 0)) throw domain_error("truncation budget must be positive");
    for (int s = 1; s <= kMaxCutoffSites; ++s)
        if (t * ope_cutoff_error(s * a, eta, a, k) <= eps_trunc) return s;
    throw domain_error("truncation budget unreachable within " + std::to_string(kMaxCutoffSites) + " lattice spacings");
}

struct DigitizationSpec {
    double pi_max = 0.0, Pi_max = 0.0;
    double delta_pi = 0.0, delta_Pi = 0.0;
    int n_b = 0;
    double pi_max_bound = 0.0, Pi_max_bound = 0.0;  // values before integer rounding
};

struct CutoffInputs {
    std::size_t eta = 0;
    double E = 140.0;  // energy ceiling of the evolved state, MeV
    double eps_cut = 1e-3;
    double a = 0.0;    // MeV^-1
    int L = 1;         // sites per axis
    double C = 0.0, C_I2 = 0.0;
};

inline DigitizationSpec boson_cutoffs(const CutoffInputs& in, const PhysicalConstants& k = kPhys) {
    if (!(in.eps_cut > 0)) throw domain_error("cutoff infidelity must be positive");
    const double a = in.a;
    const double A = pion_A(a, k), B = pion_B(a, k);
    if (!(A > 0) || !(B > 0)) require_positive_AB(a);
    const double e = static_cast<double>(in.eta);
    const double L3 = static_cast<double>(in.L) * in.L * in.L;
    const double pre = std::sqrt(3.0 * L3 / in.eps_cut) + 1.0;
    const double energy = in.E + 8.0 * e * std::abs(in.C) + 4.0 * e * std::abs(in.C_I2);
    const double av = 3.0 * k.g_A / (k.f_pi * a * A);
    const double grad = 6.0 * k.g_A / (k.m_pi * k.m_pi * k.f_pi * a * a * a * a);
    const double mass = 9.0 * e * k.m_pi * k.m_pi * a * a * a;
    const double av_b = 3.0 * k.g_A / (k.f_pi * a);

    DigitizationSpec d;
    d.pi_max_bound = pre * (av + std::sqrt(energy / A + 3.0 * e * av * av + mass / A * grad * grad));
    d.Pi_max_bound = pre * std::sqrt(energy / B + 3.0 * e / (A * B) * av_b * av_b + mass / B * grad * grad);

    const double a3 = a * a * a;
    const double arg = 2.0 * a3 / std::numbers::pi * d.Pi_max_bound * d.pi_max_bound + 1.0;
    d.n_b = std::max(1, static_cast<int>(std::ceil(std::log2(arg) - 1e-12)));
    // Hold Pi_max, inflate pi_max until the register width is exactly n_b.
    const double levels = std::ldexp(1.0, d.n_b) - 1.0;
    d.Pi_max = d.Pi_max_bound;
    d.pi_max = std::numbers::pi * levels / (2.0 * a3 * d.Pi_max);
    d.delta_pi = 2.0 * d.pi_max / levels;
    d.Pi_max = std::numbers::pi / (a3 * d.delta_pi);
    d.delta_Pi = 2.0 * std::numbers::pi / (a3 * d.delta_pi * (levels + 1.0));
    return d;
}

}  // namespace nuceft
