// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "nuceft/trotter_bounds.hpp"
#include "nuceft/verify.hpp"

using namespace nuceft;

namespace {

constexpr double kRel = 1e-10;

void expect_rel(double got, double want, double rel = kRel) {
    EXPECT_NEAR(got, want, rel * std::max(1.0, std::abs(want))) << "got " << got << " want " << want;
}

// Second-order pionless coefficient written as a single expression.
double p2_reference(std::size_t eta, double h, double C, double D) {
    const double e = static_cast<double>(eta);
    const double f2 = std::floor(e / 2), f3 = std::floor(e / 3), f4 = std::floor(e / 4);
    const double u3 = std::abs(C / 2 + D / 6), u4 = std::abs(C / 2 + D / 3);
    return (125 * std::pow(h, 3) * e +
            216 * h * h * (std::abs(C) * f2 + std::abs(3 * C + D) * f3 + std::abs(6 * C + 4 * D) * f4 + std::abs(D) * f3 + 4 * std::abs(D) * f4) +
            60 * h * h * (2 * std::abs(C) * f2 + (std::abs(D) + 2 * std::abs(3 * C + D)) * f3 + (4 * std::abs(D) + 2 * std::abs(6 * C + 4 * D)) * f4) +
            12 * h * (2 * (2 * C * C * f2 + 4 * u3 * (12 * u3 + std::abs(D)) * f3 + 24 * u4 * (6 * u4 + std::abs(D)) * f4) +
                      (8 * std::abs(D) * u3 + 2.0 / 3.0 * D * D) * f3 + 8 * std::abs(D) * (6 * u4 + std::abs(D)) * f4)) /
           12;
}

// Long-range coefficient summed over displacement vectors instead of shells.
double ope_reference(std::size_t eta, const OpeParams& p) {
    const auto& k = kPhys;
    const double e = static_cast<double>(eta);
    const double pi = std::numbers::pi;
    const double a = p.a_fm / k.hbar_c;
    const double ia3 = 1 / (a * a * a);
    const double ar2 = std::pow(k.g_A / (2 * k.f_pi), 2), ar4 = ar2 * ar2;
    const double tw = 1 / (144 * pi * pi);
    const double h = p.h, aC = std::abs(p.C), aI = std::abs(p.C_I2);
    double z = 30 * h * h * e + 18 * h * aC * e + 528 * h * aI * e + 60 * p.C_I2 * p.C_I2 * e;
    if (p.ell_sites < 1) return z;
    z += (131072.0 / 3 * h + 7168.0 / 3 * aC + 50176.0 / 9 * aI + 152320.0 / 27 * ia3 * ar2) * ia3 * ar2 * e;

    struct V { int s; double F; };
    std::vector<V> vs;
    const int l = p.ell_sites;
    for (int i = -l; i <= l; ++i)
        for (int j = -l; j <= l; ++j)
            for (int m = -l; m <= l; ++m) {
                const int s = i * i + j * j + m * m;
                if (s == 0 || s > l * l) continue;
                const double r = a * std::sqrt(s);
                const double mr = k.m_pi * r;
                const double F = k.m_pi * k.m_pi * std::exp(-mr) / r * (2 + 3 / mr + 3 / (mr * mr));
                vs.push_back({s, F});
            }
    double lin = 0, same = 0, cross = 0;
    for (const auto& v : vs) {
        lin += v.F;
        same += 524288.0 * tw * ar4 * v.F * v.F;
        for (const auto& w : vs) {
            if (&v == &w) continue;
            if (v.s == w.s) same += 3670016.0 * tw * ar4 * v.F * w.F;
            else if (v.s < w.s) cross += 3670016.0 * tw * ar4 * v.F * w.F;
        }
    }
    z += (98304.0 / pi * h + 1024.0 * aC / pi + 43008.0 * aI / (12 * pi) + 458752.0 / (27 * pi) * ia3 * ar2) * ar2 * lin * e;
    return z + (same + cross) * e;
}

double dynpi_reference(std::size_t eta, const DynPiBoundInputs& in) {
    const auto& k = kPhys;
    const double e = static_cast<double>(eta);
    const double a = in.a, a3 = a * a * a, p = in.pi_max, P = in.Pi_max;
    const double g = k.g_A / (2 * k.f_pi), f2 = k.f_pi * k.f_pi;
    const double h = in.h, C = std::abs(in.C), I = std::abs(in.C_I2);
    const double fermion = 30 * h * h + 18 * h * C + 528 * h * I + 60 * I * I;
    const double av = (2592 * h * p + 6048 * I * p + 36 * P + 20736 * g / a * p * p) * g / a;
    const double wt = (432 * h + 504 * I) * p * P / f2 + 72 * p * p / (f2 * a * a) +
                      k.g_A / (f2 * k.f_pi * a) * (72 / a3 + 216 * p * P) * p +
                      384 / (16 * f2 * f2) * (3 * p * P + 2 / a3) * P * p;
    return (fermion + av + wt) * e + (36 / (a * a) + 3 * k.m_pi * k.m_pi) * a3 * p * P * in.n_sites;
}

DynPiBoundInputs sample_dynpi() {
    DynPiBoundInputs in;
    in.h = 4.29;
    in.C = -50;
    in.C_I2 = 2;
    in.a = convert_length(2.2);
    in.pi_max = 1e-3;
    in.Pi_max = 2e4;
    in.n_sites = 1000;
    return in;
}

}  // namespace

TEST(PionlessBound, VanishesWithoutParticles) {
    const auto p = PionlessParams::tabulated(2.2);
    EXPECT_EQ(pionless_p1_report(0, p).total(), 0.0);
    EXPECT_EQ(pionless_p2_report(0, p).total(), 0.0);
}

TEST(PionlessBound, SingleParticleIsPurelyKinetic) {
    const auto p = PionlessParams::tabulated(1.4);
    const auto r = pionless_p1_report(1, p);
    expect_rel(r.total(), 30 * p.h * p.h);
    EXPECT_EQ(r.get("kinetic-contact2"), 0.0);
    expect_rel(pionless_p2_report(1, p).total(), 125 * std::pow(p.h, 3) / 12);
}

TEST(PionlessBound, FirstOrderMatchesIndependentSum) {
    for (double a : {1.4, 2.2}) {
        const auto p = PionlessParams::tabulated(a);
        for (std::size_t eta : {2u, 3u, 7u, 40u}) {
            const double e = static_cast<double>(eta);
            const double want = 30 * p.h * p.h * e + 12 * p.h *
                                (2 * std::abs(p.C) * std::floor(e / 2) +
                                 (2 * std::abs(3 * p.C + p.D) + std::abs(p.D)) * std::floor(e / 3) +
                                 (2 * std::abs(6 * p.C + 4 * p.D) + 4 * std::abs(p.D)) * std::floor(e / 4));
            expect_rel(pionless_p1_report(eta, p).total(), want);
        }
    }
}

TEST(PionlessBound, SecondOrderMatchesIndependentSum) {
    for (double a : {1.4, 2.2}) {
        const auto p = PionlessParams::tabulated(a);
        for (std::size_t eta : {1u, 2u, 5u, 12u, 40u}) expect_rel(pionless_p2_report(eta, p).total(), p2_reference(eta, p.h, p.C, p.D));
    }
}

TEST(PionlessBound, FrozenValues) {
    expect_rel(pionless_p1_report(40, PionlessParams::tabulated(1.4)).total(), 2244449.59142, 1e-9);
    expect_rel(pionless_p1_report(40, PionlessParams::tabulated(2.2)).total(), 398359.0712, 1e-9);
    expect_rel(pionless_p2_report(40, PionlessParams::tabulated(1.4)).total(), 84709406.1138, 1e-9);
    expect_rel(pionless_p2_report(40, PionlessParams::tabulated(2.2)).total(), 6399343.77318, 1e-9);
}

TEST(PionlessBound, BoundScalesWithTimePower) {
    const auto p = PionlessParams::tabulated(2.2);
    expect_rel(pionless_p1_bound(0.2, 10, p) / pionless_p1_bound(0.1, 10, p), 4.0);
    expect_rel(pionless_p2_bound(0.2, 10, p) / pionless_p2_bound(0.1, 10, p), 8.0);
    EXPECT_THROW(pionless_p1_bound(-1, 10, p), domain_error);
}

TEST(PionlessBound, MonotoneInParticleNumber) {
    const auto p = PionlessParams::tabulated(1.4);
    for (std::size_t eta = 0; eta < 60; ++eta) {
        EXPECT_LE(pionless_p1_report(eta, p).total(), pionless_p1_report(eta + 1, p).total());
        EXPECT_LE(pionless_p2_report(eta, p).total(), pionless_p2_report(eta + 1, p).total());
    }
}

TEST(BoundReport, RejectsNegativeContribution) {
    BoundReport r;
    EXPECT_THROW(r.add("x", -1.0), contract_error);
    EXPECT_THROW(r.add("x", std::nan("")), contract_error);
    EXPECT_THROW(r.get("missing"), domain_error);
}

TEST(OpeBound, MatchesVectorSum) {
    for (int ell : {0, 1, 2, 3, 5}) {
        const auto p = OpeParams::from_lecs(2.2, ell);
        for (std::size_t eta : {1u, 40u}) expect_rel(ope_p1_report(eta, p).total(), ope_reference(eta, p));
    }
    const auto q = OpeParams::from_lecs(1.4, 4);
    expect_rel(ope_p1_report(7, q).total(), ope_reference(7, q));
}

TEST(OpeBound, FrozenValue) {
    expect_rel(ope_p1_report(40, OpeParams::from_lecs(2.2, 3)).total(), 99574357090.1, 1e-9);
}

TEST(OpeBound, ContactCommutatorsVanishAndLongRangeOffAtZeroCutoff) {
    const auto r = ope_p1_report(40, OpeParams::from_lecs(2.2, 0));
    EXPECT_EQ(r.get("C-C"), 0.0);
    EXPECT_EQ(r.get("C-CI2"), 0.0);
    EXPECT_EQ(r.get("free-LR"), 0.0);
    EXPECT_EQ(r.get("LR-LR-cross"), 0.0);
    EXPECT_EQ(r.get("free-LR0"), 0.0);
}

TEST(OpeBound, GrowsWithCutoff) {
    double prev = 0;
    for (int ell = 0; ell <= 8; ++ell) {
        const double z = ope_p1_report(40, OpeParams::from_lecs(2.2, ell)).total();
        EXPECT_GE(z, prev);
        prev = z;
    }
}

TEST(DynPiBound, MatchesIndependentSum) {
    const auto in = sample_dynpi();
    for (std::size_t eta : {1u, 40u}) expect_rel(dynpi_p1_report(eta, in).total(), dynpi_reference(eta, in));
    expect_rel(dynpi_p1_report(40, in).total(), 17877394.921, 1e-9);
}

TEST(DynPiBound, BosonClassesVanishWithZeroFields) {
    auto in = sample_dynpi();
    in.pi_max = 0;
    in.Pi_max = 0;
    const auto r = dynpi_p1_report(40, in);
    for (const char* c : {"pp1-pp2", "free-AV", "AV-CI2", "pp1-AV", "AV-AV", "free-WT", "CI2-WT", "pp2-WT", "AV-WT", "WT-WT"})
        EXPECT_EQ(r.get(c), 0.0) << c;
    EXPECT_GT(r.total(), 0.0);
}

TEST(DynPiBound, WeinbergTomozawaSquaredScalesWithFieldProduct) {
    auto in = sample_dynpi();
    const double base = dynpi_p1_report(40, in).get("WT-WT");
    in.pi_max *= 2;
    in.Pi_max *= 2;
    const double ratio = dynpi_p1_report(40, in).get("WT-WT") / base;
    EXPECT_GE(ratio, 4.0);
    EXPECT_LE(ratio, 16.0);
}

TEST(DynPiBound, RejectsNonpositiveSpacing) {
    auto in = sample_dynpi();
    in.a = 0;
    EXPECT_THROW(dynpi_p1_report(1, in), domain_error);
}

TEST(GeneralBound, VanishesWithoutParticles) {
    EXPECT_EQ(general_npfo_bound(1, {2, 4}, {1.0, 1.0}, 0), 0.0);
}

TEST(GeneralBound, SinglePairClosedForm) {
    // p=1, k1=2, k2=4: 2*4*3*2*1*2^(1+1) per particle group.
    expect_rel(general_npfo_bound(1, {2, 4}, {1.0, 1.0}, 3), 2 * 4 * 3 * 2 * 1 * 4.0 * 3);
    expect_rel(general_npfo_bound(1, {4, 4}, {1.0, 1.0}, 4), 2 * 4 * 3 * 4 * 3 * 8.0 * 2);
}

TEST(GeneralBound, MonotoneInLocality) {
    for (int k = 2; k < 8; ++k) {
        EXPECT_LE(general_npfo_bound(1, {2, k}, {1.0, 1.0}, 12), general_npfo_bound(1, {2, k + 1}, {1.0, 1.0}, 12));
        EXPECT_LE(general_npfo_bound(2, {2, 2, k}, {1.0, 1.0, 1.0}, 12), general_npfo_bound(2, {2, 2, k + 1}, {1.0, 1.0, 1.0}, 12));
    }
}

TEST(GeneralBound, RejectsMalformedInput) {
    EXPECT_THROW(general_npfo_bound(0, {2}, {1.0}, 2), domain_error);
    EXPECT_THROW(general_npfo_bound(1, {2}, {1.0}, 2), domain_error);
    EXPECT_THROW(general_npfo_bound(1, {0, 2}, {1.0, 1.0}, 2), domain_error);
}

TEST(GeneralBound, ByHandComparison) {
    const auto p = PionlessParams::tabulated(1.4);
    const double general = general_p1_coefficient(pionless_npfo_layers(p), 2);
    const double manual = pionless_p1_report(2, p).total() / 2;
    EXPECT_GT(general, 2.7e6 / 2);
    EXPECT_LT(general, 2.7e6 * 2);
    EXPECT_GT(manual, 1.1e4 / 2);
    EXPECT_LT(manual, 1.1e4 * 2);
    EXPECT_GE(general / manual, 50.0);
    expect_rel(general, 1613392.39855, 1e-9);
    expect_rel(manual, 15846.9838713, 1e-9);
}

TEST(ProductFormula, Upsilon) {
    expect_rel(upsilon(2), 2.0);
    expect_rel(upsilon(4), 10.0);
}

TEST(ProductFormula, ErrorForms) {
    expect_rel(product_formula_error(1, 0.5, 8.0), 1.0);
    expect_rel(product_formula_error(2, 0.5, 8.0), 1.0);
    expect_rel(product_formula_error(4, 0.1, 5.0), 2 * std::pow(1.0, 5) * 5.0 / 5);
    EXPECT_THROW(product_formula_error(3, 1, 1), domain_error);
    EXPECT_THROW(product_formula_error(1, -1, 1), domain_error);
    EXPECT_THROW(product_formula_error(1, 1, -1), domain_error);
}

TEST(StepSolver, TightAtEveryOrder) {
    for (int p : {1, 2, 4})
        for (double budget : {1e-1, 1e-3, 1e-6}) {
            const double t = 3.0, c = 50.0;
            const double r = steps_for_budget(p, t, c, budget);
            EXPECT_LE(total_trotter_error(p, t, c, r), budget);
            if (r > 1) EXPECT_GT(total_trotter_error(p, t, c, r - 1), budget);
        }
}

TEST(StepSolver, SingleStepWhenBudgetCovers) {
    EXPECT_EQ(steps_for_budget(1, 1.0, 2.0, 1.0), 1.0);
    EXPECT_EQ(steps_for_budget(1, 0.0, 2.0, 1e-9), 1.0);
    EXPECT_THROW(steps_for_budget(1, 1.0, 2.0, 0.0), domain_error);
}

TEST(StepSolver, FirstOrderStepsScaleInverselyWithBudget) {
    const double r1 = steps_for_budget(1, 10.0, 1e4, 1e-3);
    const double r4 = steps_for_budget(1, 10.0, 1e4, 4e-3);
    EXPECT_NEAR(r1 / r4, 4.0, 1e-3);
    const double q1 = steps_for_budget(2, 10.0, 1e4, 1e-3);
    const double q4 = steps_for_budget(2, 10.0, 1e4, 4e-3);
    EXPECT_NEAR(q1 / q4, 2.0, 1e-3);
}

TEST(Ledger, EqualSplitPerConvention) {
    const auto a = compose_total_error(Model::pionless, Convention::near_term, 0.1);
    EXPECT_EQ(a.channels, 1);
    EXPECT_DOUBLE_EQ(a.trotter, 0.1);
    const auto b = compose_total_error(Model::pionless, Convention::fault_tolerant, 0.1);
    EXPECT_DOUBLE_EQ(b.trotter, 0.05);
    EXPECT_DOUBLE_EQ(b.synthesis, 0.05);
    const auto c = compose_total_error(Model::ope, Convention::fault_tolerant, 0.3);
    EXPECT_DOUBLE_EQ(c.truncation, 0.1);
    const auto d = compose_total_error(Model::dynpi, Convention::near_term, 0.1);
    EXPECT_DOUBLE_EQ(d.cutoff, 0.05);
    EXPECT_NEAR(d.eps_cut, 0.1 * 0.1 / 32, 1e-15);
    for (const auto& l : {a, b, c, d}) EXPECT_LE(l.sum(), l.total * (1 + 1e-12));
    EXPECT_THROW(compose_total_error(Model::ope, Convention::near_term, 0.0), domain_error);
}

TEST(Ledger, QpeChannelTotal) {
    const auto l = compose_total_error(Task::qpe, Model::pionless, Convention::fault_tolerant, 8);
    expect_rel(l.total, std::sqrt(3.0) * std::numbers::pi / 256);
    EXPECT_THROW(compose_total_error(Task::qpe, Model::pionless, Convention::fault_tolerant, 2.5), domain_error);
}

TEST(Names, RoundTrip) {
    for (auto m : {Model::pionless, Model::ope, Model::dynpi}) EXPECT_EQ(model_from_string(to_string(m)), m);
    for (auto c : {Convention::near_term, Convention::fault_tolerant}) EXPECT_EQ(convention_from_string(to_string(c)), c);
    for (auto t : {Task::evolve, Task::qpe}) EXPECT_EQ(task_from_string(to_string(t)), t);
    EXPECT_THROW(model_from_string("quarks"), domain_error);
}

TEST(Dominance, ExactErrorBelowBound) {
    for (const auto& c : verify::trotter_suite()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
