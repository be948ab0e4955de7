// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "nuceft/errors.hpp"
#include "nuceft/models.hpp"
#include "nuceft/trunc_bounds.hpp"

namespace nuceft {

// Per-class commutator contributions. For p=1 the bound is (t^2/2) * total(),
// for p=2 it is t^3 * total().
struct BoundReport {
    int order = 1;
    std::vector<std::pair<std::string, double>> classes;

    void add(std::string label, double v) {
        if (!(v >= 0)) throw contract_error("negative commutator contribution for " + label);
        classes.emplace_back(std::move(label), v);
    }
    double total() const {
        double s = 0.0;
        for (const auto& [k, v] : classes) s += v;
        return s;
    }
    double get(const std::string& label) const {
        for (const auto& [k, v] : classes)
            if (k == label) return v;
        throw domain_error("no class named " + label);
    }
    double bound(double t) const {
        if (order == 1) return t * t / 2.0 * total();
        return t * t * t * total();
    }
};

namespace detail {
inline double floor_div(std::size_t eta, int k) { return static_cast<double>(eta / static_cast<std::size_t>(k)); }
}  // namespace detail

inline BoundReport pionless_p1_report(std::size_t eta, const PionlessParams& p) {
    const double e = static_cast<double>(eta);
    const double C = p.C, D = p.D, h = p.h;
    const double A1 = 2 * std::abs(C);
    const double A2 = 2 * std::abs(3 * C + D) + std::abs(D);
    const double A3 = 2 * std::abs(6 * C + 4 * D) + 4 * std::abs(D);
    BoundReport r;
    r.order = 1;
    r.add("kinetic-kinetic", 30 * h * h * e);
    r.add("kinetic-contact2", 12 * h * A1 * detail::floor_div(eta, 2));
    r.add("kinetic-contact3", 12 * h * A2 * detail::floor_div(eta, 3));
    r.add("kinetic-contact4", 12 * h * A3 * detail::floor_div(eta, 4));
    return r;
}

inline double pionless_p1_bound(double t, std::size_t eta, const PionlessParams& p) {
    if (t < 0) throw domain_error("time must be nonnegative");
    return pionless_p1_report(eta, p).bound(t);
}

inline BoundReport pionless_p2_report(std::size_t eta, const PionlessParams& p) {
    const double e = static_cast<double>(eta);
    const double C = p.C, D = p.D, h = p.h;
    const double f2 = detail::floor_div(eta, 2), f3 = detail::floor_div(eta, 3), f4 = detail::floor_div(eta, 4);
    const double aC = std::abs(C), aD = std::abs(D);
    const double s3 = std::abs(3 * C + D), s4 = std::abs(6 * C + 4 * D);
    const double u3 = std::abs(C / 2 + D / 6), u4 = std::abs(C / 2 + D / 3);

    const double n = aC * f2 + s3 * f3 + s4 * f4;
    const double c = aD * f3 + 4 * aD * f4;
    const double w = 2 * aC * f2 + (aD + 2 * s3) * f3 + (4 * aD + 2 * s4) * f4;
    const double q = 2 * C * C * f2 + 4 * u3 * (12 * u3 + aD) * f3 + 24 * u4 * (6 * u4 + aD) * f4;
    const double qp = (8 * aD * u3 + 2.0 / 3.0 * D * D) * f3 + 8 * aD * (6 * u4 + aD) * f4;

    BoundReport r;
    r.order = 2;
    r.add("hhh", 125 * h * h * h * e / 12);
    r.add("hh-contact", 216 * h * h * (n + c) / 12);
    r.add("hh-mixed", 60 * h * h * w / 12);
    r.add("h-contact-contact", 12 * h * (2 * q + qp) / 12);
    return r;
}

inline double pionless_p2_bound(double t, std::size_t eta, const PionlessParams& p) {
    if (t < 0) throw domain_error("time must be nonnegative");
    return pionless_p2_report(eta, p).bound(t);
}

// First-order commutator sum for the contact + long-range nucleon Hamiltonian.
inline BoundReport ope_p1_report(std::size_t eta, const OpeParams& p, const PhysicalConstants& k = kPhys) {
    const double e = static_cast<double>(eta);
    const double h = p.h, aC = std::abs(p.C), aI = std::abs(p.C_I2);
    const double a = convert_length(p.a_fm, k);
    const double ia3 = 1.0 / (a * a * a);
    const double ar2 = std::pow(axial_ratio(k), 2), ar4 = ar2 * ar2;
    const double pi = std::numbers::pi;
    const double tw = 1.0 / (144.0 * pi * pi);  // (1/12pi)^2

    BoundReport r;
    r.order = 1;
    r.add("free-free", 30 * h * h * e);
    r.add("free-C", 18 * h * aC * e);
    r.add("free-CI2", 528 * h * aI * e);
    r.add("C-C", 0.0);
    r.add("C-CI2", 0.0);
    r.add("CI2-CI2", 60 * p.C_I2 * p.C_I2 * e);

    const bool long_range = p.ell_sites >= 1;
    r.add("free-LR0", long_range ? 131072.0 / 3 * ia3 * h * ar2 * e : 0.0);
    r.add("C-LR0", long_range ? 7168.0 / 3 * ia3 * aC * ar2 * e : 0.0);
    r.add("CI2-LR0", long_range ? 50176.0 / 9 * ia3 * aI * ar2 * e : 0.0);
    r.add("LR0-LR0", long_range ? 152320.0 / 27 * ia3 * ia3 * ar4 * e : 0.0);

    double fr = 0, cr = 0, ir = 0, zr = 0, same = 0, cross = 0;
    if (long_range) {
        const ShellTable shells(static_cast<std::int64_t>(p.ell_sites) * p.ell_sites);
        std::vector<double> F;  // q f (g+1) per shell
        for (const auto& [s, q] : shells.shells()) {
            const double rr = a * std::sqrt(static_cast<double>(s));
            const double f = k.m_pi * k.m_pi * std::exp(-k.m_pi * rr) / rr;
            const double g1 = ope_tensor_factor(rr, k) + 1.0;
            const double qd = static_cast<double>(q);
            F.push_back(qd * f * g1);
            fr += 98304.0 / pi * h * ar2 * qd * f * g1 * e;
            cr += 1024.0 * aC / pi * ar2 * qd * f * g1 * e;
            ir += 43008.0 * aI / (12 * pi) * ar2 * qd * f * g1 * e;
            zr += 458752.0 / (27 * pi) * ia3 * ar4 * qd * f * g1 * e;
            same += 3670016.0 * tw * ar4 * qd * (qd - 1) * f * f * g1 * g1 * e + 524288.0 * tw * ar4 * qd * f * f * g1 * g1 * e;
        }
        // Unordered pairs of distinct shells.
        double prefix = 0;
        for (double Fi : F) {
            cross += Fi * prefix;
            prefix += Fi;
        }
        cross *= 3670016.0 * tw * ar4 * e;
    }
    r.add("free-LR", fr);
    r.add("C-LR", cr);
    r.add("CI2-LR", ir);
    r.add("LR0-LR", zr);
    r.add("LR-LR-same", same);
    r.add("LR-LR-cross", cross);
    return r;
}

inline double ope_p1_bound(double t, std::size_t eta, const OpeParams& p) {
    if (t < 0) throw domain_error("time must be nonnegative");
    return ope_p1_report(eta, p).bound(t);
}

struct DynPiBoundInputs {
    double h = 0, C = 0, C_I2 = 0;
    double a = 0;        // MeV^-1
    double pi_max = 0, Pi_max = 0;
    double n_sites = 0;  // total lattice sites
};

inline BoundReport dynpi_p1_report(std::size_t eta, const DynPiBoundInputs& in, const PhysicalConstants& k = kPhys) {
    if (!(in.a > 0)) throw domain_error("lattice spacing must be positive");
    const double e = static_cast<double>(eta);
    const double h = in.h, aC = std::abs(in.C), aI = std::abs(in.C_I2);
    const double a = in.a, a3 = a * a * a;
    const double pm = in.pi_max, Pm = in.Pi_max;
    const double ar = axial_ratio(k);
    const double fpi2 = k.f_pi * k.f_pi;

    BoundReport r;
    r.order = 1;
    r.add("free-free", 30 * h * h * e);
    r.add("free-C", 18 * h * aC * e);
    r.add("free-CI2", 528 * h * aI * e);
    r.add("CI2-CI2", 60 * in.C_I2 * in.C_I2 * e);
    r.add("pp1-pp2", (36 / (a * a) + 3 * k.m_pi * k.m_pi) * a3 * pm * Pm * in.n_sites);
    r.add("free-AV", 2592 * ar / a * h * pm * e);
    r.add("AV-CI2", 6048 * ar / a * aI * pm * e);
    r.add("pp1-AV", 36 * ar / a * Pm * e);
    r.add("AV-AV", 20736 * ar * ar / (a * a) * pm * pm * e);
    r.add("free-WT", 432 * h / fpi2 * pm * Pm * e);
    r.add("CI2-WT", 504 * aI / fpi2 * pm * Pm * e);
    r.add("pp2-WT", 72 / fpi2 / (a * a) * pm * pm * e);
    r.add("AV-WT", k.g_A / (fpi2 * k.f_pi * a) * (72 / a3 + 216 * pm * Pm) * pm * e);
    const double wt = 1.0 / (4 * fpi2);
    r.add("WT-WT", 384 * wt * wt * (3 * pm * Pm + 2 / a3) * Pm * pm * e);
    return r;
}

// Nested-commutator bound for translation-invariant NPFO layers with disjoint support.
// localities[0] and weights[0] belong to the innermost layer.
inline double general_npfo_bound(int p, const std::vector<int>& localities, const std::vector<double>& weights, std::size_t eta) {
    if (p < 1) throw domain_error("order must be >= 1");
    if (localities.size() != static_cast<std::size_t>(p + 1) || weights.size() != localities.size())
        throw domain_error("need p+1 localities and weights");
    for (int k : localities)
        if (k < 1) throw domain_error("locality must be >= 1");
    double v = 1.0;
    for (double J : weights) v *= std::abs(J);
    double S = localities[0];
    for (int m = 2; m <= p + 1; ++m) {
        const double km = localities[static_cast<std::size_t>(m - 1)];
        const double a = S - (m - 2), b = S - (m - 1);
        v *= 2 * km * (km - 1) * a * b * std::pow(2.0, 1.0 + std::min(km, a) / 2.0);
        S += km;
    }
    const int kmin = *std::min_element(localities.begin(), localities.end());
    const std::size_t groups = static_cast<std::size_t>((kmin + 1) / 2);
    return v * static_cast<double>((eta + groups - 1) / groups);
}

struct NpfoLayer {
    int locality = 2;
    double weight = 0;
};

// t^2 coefficient of the first-order bound built from general_npfo_bound over all layer pairs.
inline double general_p1_coefficient(const std::vector<NpfoLayer>& layers, std::size_t eta) {
    double s = 0;
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (std::size_t j = i + 1; j < layers.size(); ++j)
            s += general_npfo_bound(1, {layers[i].locality, layers[j].locality}, {layers[i].weight, layers[j].weight}, eta);
    return s / 2.0;
}

// Layer structure of the contact Hamiltonian: six hopping layers and one on-site layer.
inline std::vector<NpfoLayer> pionless_npfo_layers(const PionlessParams& p) {
    std::vector<NpfoLayer> out(6, NpfoLayer{2, p.h});
    out.push_back({4, std::max(std::abs(p.C), std::abs(p.D))});
    return out;
}

inline double upsilon(int p) { return 2.0 * std::pow(5.0, p / 2.0 - 1.0); }

// Single-segment error for order p; p=1 and p=2 take the pionless-style coefficient directly.
inline double product_formula_error(int p, double t, double coeff) {
    if (t < 0) throw domain_error("time must be nonnegative");
    if (coeff < 0) throw domain_error("commutator coefficient must be nonnegative");
    if (p == 1) return t * t / 2.0 * coeff;
    if (p == 2) return t * t * t * coeff;
    if (p >= 4 && p % 2 == 0) {
        const double u = upsilon(p);
        return 2.0 * std::pow(u * t, p + 1) * coeff / (p + 1);
    }
    throw domain_error("unsupported product-formula order " + std::to_string(p));
}

inline double total_trotter_error(int p, double t, double coeff, double r) {
    return r * product_formula_error(p, t / r, coeff);
}

// Smallest r with r * err(t/r) <= budget. Returned as a real because the
// largest models need more steps than fit in 64-bit integers.
inline double steps_for_budget(int p, double t, double coeff, double budget) {
    if (!(budget > 0)) throw domain_error("Trotter budget must be positive");
    const double one = product_formula_error(p, t, coeff);
    if (one <= budget) return 1.0;
    double r = std::ceil(std::pow(one / budget, 1.0 / p));
    if (r < 9.0e15) {
        while (r > 1 && total_trotter_error(p, t, coeff, r - 1) <= budget) r -= 1;
        while (total_trotter_error(p, t, coeff, r) > budget) r += 1;
    }
    return r;
}

enum class Model { pionless, ope, dynpi };
enum class Task { evolve, qpe };
enum class Convention { near_term, fault_tolerant };

inline std::string to_string(Model m) {
    switch (m) {
        case Model::pionless: return "pionless";
        case Model::ope: return "ope";
        case Model::dynpi: return "dynpi";
    }
    return "?";
}
inline std::string to_string(Task t) { return t == Task::evolve ? "evolve" : "qpe"; }
inline std::string to_string(Convention c) { return c == Convention::near_term ? "near-term" : "fault-tolerant"; }

inline Model model_from_string(const std::string& s) {
    if (s == "pionless") return Model::pionless;
    if (s == "ope") return Model::ope;
    if (s == "dynpi") return Model::dynpi;
    throw domain_error("unknown model '" + s + "'");
}
inline Task task_from_string(const std::string& s) {
    if (s == "evolve") return Task::evolve;
    if (s == "qpe") return Task::qpe;
    throw domain_error("unknown task '" + s + "'");
}
inline Convention convention_from_string(const std::string& s) {
    if (s == "near-term") return Convention::near_term;
    if (s == "fault-tolerant") return Convention::fault_tolerant;
    throw domain_error("unknown convention '" + s + "'");
}

// Per-channel error allocations. cutoff is the channel value 2 sqrt(2 eps_cut).
struct ErrorLedger {
    double total = 0;
    double trotter = 0;
    double truncation = 0;
    double cutoff = 0;
    double eps_cut = 0;
    double synthesis = 0;
    int channels = 1;

    double sum() const { return trotter + truncation + cutoff + synthesis; }
};

// Largest channel total allowed for QPE at m bits.
inline double qpe_channel_total(int m) { return std::sqrt(3.0) * std::numbers::pi / std::ldexp(1.0, m); }

// Equal split of `total` over the channels that apply to this model and convention.
inline ErrorLedger compose_total_error(Model model, Convention conv, double total) {
    if (!(total > 0)) throw domain_error("total error must be positive");
    ErrorLedger l;
    l.total = total;
    const bool ft = conv == Convention::fault_tolerant;
    l.channels = 1 + (model != Model::pionless ? 1 : 0) + (ft ? 1 : 0);
    const double share = total / l.channels;
    l.trotter = share;
    if (ft) l.synthesis = share;
    if (model == Model::ope) l.truncation = share;
    if (model == Model::dynpi) {
        l.cutoff = share;
        l.eps_cut = share * share / 8.0;
    }
    return l;
}

inline ErrorLedger compose_total_error(Task task, Model model, Convention conv, double eps_or_bits) {
    if (task == Task::evolve) return compose_total_error(model, conv, eps_or_bits);
    const int m = static_cast<int>(eps_or_bits);
    if (m < 1 || m != eps_or_bits) throw domain_error("QPE ledger needs a positive integer bit count");
    return compose_total_error(model, conv, qpe_channel_total(m));
}

}  // namespace nuceft
