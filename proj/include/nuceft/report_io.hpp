// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nuceft/task.hpp"

namespace nuceft {

inline constexpr int kReportSchemaVersion = 1;

// Locale-independent %.12g.
inline std::string fmt_num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline nlohmann::json to_json(const ErrorLedger& l) {
    return {{"total", l.total}, {"trotter", l.trotter}, {"truncation", l.truncation}, {"cutoff", l.cutoff},
            {"eps_cut", l.eps_cut}, {"synthesis", l.synthesis}, {"channels", l.channels}};
}

inline nlohmann::json to_json(const TaskSpec& s) {
    nlohmann::json j = {{"task", to_string(s.task)}, {"model", to_string(s.model)}, {"encoding", to_string(s.encoding)},
                        {"order", s.order}, {"L", s.L}, {"aL_fm", s.a_fm}, {"eta", s.eta}, {"eps", s.eps},
                        {"convention", to_string(s.convention)}, {"strict", s.strict}};
    if (s.task == Task::evolve) j["Ekin_MeV"] = s.E_kin;
    else {
        j["dE_MeV"] = s.dE;
        j["success"] = s.success;
    }
    j["Emax_MeV"] = s.E_max;
    if (s.ell_sites) j["ell_sites"] = *s.ell_sites;
    if (s.n_b) j["n_b"] = *s.n_b;
    return j;
}

inline nlohmann::json to_json(const StepCost& c) {
    return {{"depth_2q", c.depth_2q}, {"rz_count", c.rz_count}, {"controlled", c.controlled},
            {"encoding", to_string(c.encoding)}, {"model", to_string(c.model)}, {"order", c.order}};
}

inline nlohmann::json to_json(const BoundReport& b) {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& [k, v] : b.classes) cls.push_back({{"class", k}, {"coefficient", v}});
    return {{"order", b.order}, {"total", b.total()}, {"classes", cls}};
}

inline std::string to_csv(const BoundReport& b) {
    std::string out = "class,coefficient\n";
    for (const auto& [k, v] : b.classes) out += csv_quote(k) + "," + fmt_num(v) + "\n";
    return out;
}

inline nlohmann::json to_json(const CostReport& r) {
    nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                        {"spec", to_json(r.spec)},
                        {"t_MeVinv", r.t},
                        {"r", r.r},
                        {"steps_total", r.steps_total},
                        {"step_depth", r.step_depth},
                        {"step_rz", r.step_rz},
                        {"depth_total", r.depth_total},
                        {"rz_total", r.rz_total},
                        {"T_total", r.T_total ? nlohmann::json(*r.T_total) : nlohmann::json(nullptr)},
                        {"qubits", r.qubits},
                        {"ancillas", r.ancillas},
                        {"coefficient", r.coefficient},
                        {"ledger", to_json(r.ledger)},
                        {"notes", r.notes}};
    if (r.ell_sites) j["ell_sites"] = *r.ell_sites;
    if (r.n_b) j["n_b"] = *r.n_b;
    if (r.m) j["m"] = *r.m;
    if (r.n) j["n"] = *r.n;
    return j;
}

inline const char* kSweepHeader = "axis,value,r,depth,rz,T,qubits,ell_or_nb,notes";

inline std::string to_csv(SweepAxis axis, const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << kSweepHeader << "\n";
    for (const auto& row : rows) {
        os << to_string(axis) << "," << fmt_num(row.value) << ",";
        if (!row.report) {
            os << ",,,,,," << csv_quote("error: " + row.error) << "\n";
            continue;
        }
        const auto& r = *row.report;
        std::string extra;
        if (r.ell_sites) extra = fmt_num(*r.ell_sites);
        else if (r.n_b) extra = fmt_num(*r.n_b);
        os << fmt_num(r.r) << "," << fmt_num(r.depth_total) << "," << fmt_num(r.rz_total) << ","
           << (r.T_total ? fmt_num(*r.T_total) : std::string()) << "," << fmt_num(r.qubits) << "," << extra << ","
           << csv_quote(r.notes) << "\n";
    }
    return os.str();
}

}  // namespace nuceft
