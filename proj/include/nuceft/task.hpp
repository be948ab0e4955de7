// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "nuceft/circuit_costs.hpp"
#include "nuceft/encodings.hpp"
#include "nuceft/errors.hpp"
#include "nuceft/models.hpp"
#include "nuceft/trotter_bounds.hpp"
#include "nuceft/trunc_bounds.hpp"

namespace nuceft {

struct TaskSpec {
    Task task = Task::evolve;
    Model model = Model::pionless;
    Encoding encoding = Encoding::vc;
    int order = 1;
    int L = 10;
    double a_fm = 2.2;
    std::size_t eta = 40;
    double E_kin = 10.0;     // MeV, evolution only
    double dE = 1.0;         // MeV, QPE precision
    double E_max = 140.0;    // MeV, energy ceiling
    double success = 0.3;    // QPE success probability
    double eps = 0.1;        // total evolution error
    Convention convention = Convention::fault_tolerant;
    bool strict = false;     // alternative closed-form coefficients for the dynamical-pion step
    std::optional<int> ell_sites;  // fixes the long-range cutoff instead of solving for it
    std::optional<int> n_b;        // fixes the boson register width

    void validate() const {
        if (L < 1) throw geometry_error("L must be >= 1");
        if (!(a_fm > 0)) throw geometry_error("a_L must be positive");
        if (!(eps > 0)) throw domain_error("eps must be positive");
        if (order < 1) throw domain_error("order must be >= 1");
        if (task == Task::evolve && !(E_kin > 0)) throw domain_error("E_kin must be positive");
        if (task == Task::qpe) {
            if (!(dE > 0)) throw domain_error("dE must be positive");
            if (!(success > 0 && success < 1)) throw domain_error("success probability must lie in (0, 1)");
            if (!(E_max > 0)) throw domain_error("E_max must be positive");
        }
        if (model != Model::pionless && order != 1) throw unsupported_error("only first-order bounds exist for " + to_string(model));
        if (model == Model::pionless && order > 2) throw unsupported_error("pionless step costs exist for orders 1 and 2");
        if (model != Model::pionless && encoding != Encoding::vc) throw unsupported_error(to_string(model) + " is costed in the VC layout only");
        if (encoding == Encoding::jw) throw unsupported_error("no step-depth model for the Jordan-Wigner layout");
    }
};

struct CostReport {
    TaskSpec spec;
    double t = 0;
    double r = 0;             // Trotter steps per evolution (per controlled-U for QPE)
    double steps_total = 0;
    double step_depth = 0;
    double step_rz = 0;
    double depth_total = 0;
    double rz_total = 0;
    std::optional<double> T_total;
    double qubits = 0;
    int ancillas = 0;
    ErrorLedger ledger;
    double coefficient = 0;   // zeta, Xi, or Theta
    std::optional<int> ell_sites;
    std::optional<int> n_b;
    std::optional<int> m, n;
    std::string notes;
};

inline double crossing_time(double a, int L, double E_kin, double M = kPhys.M) {
    if (!(a > 0) || L < 1 || !(E_kin > 0) || !(M > 0)) throw domain_error("crossing time needs positive inputs");
    return a * L * std::sqrt(M / (2.0 * E_kin));
}

inline int qpe_ancilla_bits(int m, double delta) {
    if (!(delta > 0 && delta < 1)) throw domain_error("delta must lie in (0, 1)");
    if (m < 0) throw domain_error("bit count must be nonnegative");
    return m + static_cast<int>(std::ceil(std::log2(1.0 / (2.0 * delta) + 0.5) - 1e-12));
}

// Bits of eigenvalue precision such that the quadrature error reaches dE / E_max.
inline int qpe_precision_bits(double dE, double E_max) {
    if (!(dE > 0)) throw precision_error("energy precision must be positive");
    if (dE >= E_max) throw precision_error("energy precision must be below the energy ceiling");
    return std::max(1, static_cast<int>(std::ceil(std::log2(E_max / dE) - 1e-12)));
}

namespace detail {

struct StepPlan {
    double coefficient = 0;
    double r = 0;
    StepCost step;
    std::optional<int> ell, n_b;
};

inline StepPlan plan_steps(const TaskSpec& s, double t, const ErrorLedger& led, bool controlled) {
    StepPlan p;
    const double a = convert_length(s.a_fm);
    switch (s.model) {
        case Model::pionless: {
            const auto par = PionlessParams::tabulated(s.a_fm);
            p.coefficient = s.order == 1 ? pionless_p1_report(s.eta, par).total() : pionless_p2_report(s.eta, par).total();
            p.step = pionless_step_cost(s.encoding, s.order, controlled, s.L);
            break;
        }
        case Model::ope: {
            const int ell = s.ell_sites ? *s.ell_sites : choose_ope_cutoff(led.truncation, t, s.eta, a);
            const auto par = OpeParams::from_lecs(s.a_fm, ell);
            p.coefficient = ope_p1_report(s.eta, par).total();
            p.step = ope_step_cost(ell, s.L, controlled);
            p.ell = ell;
            break;
        }
        case Model::dynpi: {
            require_positive_AB(a);
            const auto par = OpeParams::from_lecs(s.a_fm, 0);
            CutoffInputs ci;
            ci.eta = s.eta;
            ci.E = s.E_max;
            ci.eps_cut = led.eps_cut;
            ci.a = a;
            ci.L = s.L;
            ci.C = par.C;
            ci.C_I2 = par.C_I2;
            auto dig = boson_cutoffs(ci);
            if (s.n_b) {
                // Hold Pi_max and widen pi_max to fill the requested register.
                const double levels = std::ldexp(1.0, *s.n_b) - 1.0;
                dig.n_b = *s.n_b;
                dig.pi_max = std::numbers::pi * levels / (2.0 * a * a * a * dig.Pi_max);
            }
            DynPiBoundInputs in;
            in.h = par.h;
            in.C = par.C;
            in.C_I2 = par.C_I2;
            in.a = a;
            in.pi_max = dig.pi_max;
            in.Pi_max = dig.Pi_max;
            in.n_sites = cube(s.L);
            p.coefficient = dynpi_p1_report(s.eta, in).total();
            p.step = dynpi_step_cost(dig.n_b, s.L, controlled, s.strict);
            p.n_b = dig.n_b;
            break;
        }
    }
    p.r = steps_for_budget(s.order, t, p.coefficient, led.trotter);
    return p;
}

}  // namespace detail

inline CostReport estimate_evolution(const TaskSpec& spec) {
    spec.validate();
    CostReport rep;
    rep.spec = spec;
    rep.t = crossing_time(convert_length(spec.a_fm), spec.L, spec.E_kin);
    rep.ledger = compose_total_error(spec.model, spec.convention, spec.eps);
    const auto plan = detail::plan_steps(spec, rep.t, rep.ledger, false);
    rep.coefficient = plan.coefficient;
    rep.r = plan.r;
    rep.steps_total = plan.r;
    rep.step_depth = plan.step.depth_2q;
    rep.step_rz = plan.step.rz_count;
    rep.depth_total = rep.r * rep.step_depth;
    rep.rz_total = rep.r * rep.step_rz;
    rep.ell_sites = plan.ell;
    rep.n_b = plan.n_b;
    rep.qubits = qubit_count(spec.model, spec.encoding, spec.L, plan.n_b.value_or(1), Task::evolve);
    if (spec.convention == Convention::fault_tolerant) rep.T_total = t_synthesis(rep.rz_total, rep.ledger.synthesis);
    else rep.notes = "T count not applicable under near-term convention";
    return rep;
}

inline CostReport estimate_qpe(const TaskSpec& spec) {
    spec.validate();
    CostReport rep;
    rep.spec = spec;
    const int m = qpe_precision_bits(spec.dE, spec.E_max);
    const int n = qpe_ancilla_bits(m, 1.0 - spec.success);
    rep.m = m;
    rep.n = n;
    rep.t = 2.0 * std::numbers::pi / spec.E_max;
    rep.ledger = compose_total_error(Task::qpe, spec.model, spec.convention, m);
    const auto plan = detail::plan_steps(spec, rep.t, rep.ledger, true);
    const double uses = std::ldexp(1.0, n) - 1.0;  // controlled-U applications over all rounds
    rep.coefficient = plan.coefficient;
    rep.r = plan.r;
    rep.steps_total = uses * plan.r;
    rep.step_depth = plan.step.depth_2q;
    rep.step_rz = plan.step.rz_count;
    rep.depth_total = rep.steps_total * rep.step_depth;
    rep.rz_total = rep.steps_total * rep.step_rz;
    rep.ell_sites = plan.ell;
    rep.n_b = plan.n_b;
    rep.ancillas = 1;
    rep.qubits = qubit_count(spec.model, spec.encoding, spec.L, plan.n_b.value_or(1), Task::qpe);
    if (spec.convention == Convention::fault_tolerant)
        rep.T_total = uses * t_synthesis(plan.r * plan.step.rz_count, rep.ledger.synthesis);
    else rep.notes = "T count not applicable under near-term convention";
    return rep;
}

inline CostReport estimate(const TaskSpec& spec) {
    return spec.task == Task::evolve ? estimate_evolution(spec) : estimate_qpe(spec);
}

enum class SweepAxis { eta, L, epsilon, ell, n_b };

inline std::string to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::eta: return "eta";
        case SweepAxis::L: return "L";
        case SweepAxis::epsilon: return "epsilon";
        case SweepAxis::ell: return "ell";
        case SweepAxis::n_b: return "n_b";
    }
    return "?";
}

inline SweepAxis sweep_axis_from_string(const std::string& s) {
    if (s == "eta") return SweepAxis::eta;
    if (s == "L") return SweepAxis::L;
    if (s == "epsilon" || s == "eps") return SweepAxis::epsilon;
    if (s == "ell") return SweepAxis::ell;
    if (s == "n_b" || s == "nb") return SweepAxis::n_b;
    throw domain_error("unknown sweep axis '" + s + "'");
}

struct SweepRow {
    double value = 0;
    std::optional<CostReport> report;
    std::string error;
};

inline TaskSpec apply_axis(TaskSpec s, SweepAxis axis, double v) {
    const auto as_int = [&](const char* what) {
        if (v != std::floor(v) || v < 0) throw domain_error(std::string(what) + " must be a nonnegative integer");
        return static_cast<int>(v);
    };
    switch (axis) {
        case SweepAxis::eta: s.eta = static_cast<std::size_t>(as_int("eta")); break;
        case SweepAxis::L: s.L = as_int("L"); break;
        case SweepAxis::epsilon: s.eps = v; break;
        case SweepAxis::ell: s.ell_sites = as_int("ell"); break;
        case SweepAxis::n_b: s.n_b = as_int("n_b"); break;
    }
    return s;
}

// Points are evaluated independently; rows come back in grid order for any job count.
inline std::vector<SweepRow> sweep(const TaskSpec& tmpl, SweepAxis axis, const std::vector<double>& grid, unsigned jobs = 1) {
    if (grid.empty()) throw domain_error("sweep grid is empty");
    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            rows[i].value = grid[i];
            try {
                rows[i].report = estimate(apply_axis(tmpl, axis, grid[i]));
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return rows;
}

inline std::vector<double> linear_grid(double from, double to, double step) {
    if (!(step > 0)) throw domain_error("grid step must be positive");
    if (to < from) throw domain_error("grid end precedes start");
    std::vector<double> g;
    const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) g.push_back(from + static_cast<double>(i) * step);
    return g;
}

}  // namespace nuceft
