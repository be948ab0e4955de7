// SPDX-License-Identifier: MIT
// Command-line front end: estimate, sweep, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nuceft/report_io.hpp"
#include "nuceft/task.hpp"
#include "nuceft/verify.hpp"

using nlohmann::json;
using namespace nuceft;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { str, num, integer, boolean };

const std::map<std::string, Kind>& config_keys() {
    static const std::map<std::string, Kind> k = {
        {"task", Kind::str},       {"model", Kind::str},      {"encoding", Kind::str},   {"order", Kind::integer},
        {"L", Kind::integer},      {"aL_fm", Kind::num},      {"eta", Kind::integer},    {"Ekin_MeV", Kind::num},
        {"dE_MeV", Kind::num},     {"Emax_MeV", Kind::num},   {"success", Kind::num},    {"eps", Kind::num},
        {"convention", Kind::str}, {"strict", Kind::boolean}, {"ell_sites", Kind::integer}, {"n_b", Kind::integer},
        {"format", Kind::str},     {"output", Kind::str},     {"verbosity", Kind::integer}, {"axis", Kind::str},
        {"from", Kind::num},       {"to", Kind::num},         {"step", Kind::num},       {"scale", Kind::str},
        {"jobs", Kind::integer},
    };
    return k;
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line number.
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
        throw ConfigError(path + ":" + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError(path + ": top level must be an object");
    return j;
}

void check_types(const json& j) {
    for (const auto& [key, val] : j.items()) {
        const auto it = config_keys().find(key);
        if (it == config_keys().end()) throw ConfigError("unknown config field '" + key + "'");
        bool ok = false;
        switch (it->second) {
            case Kind::str: ok = val.is_string(); break;
            case Kind::num: ok = val.is_number(); break;
            case Kind::integer: ok = val.is_number_integer(); break;
            case Kind::boolean: ok = val.is_boolean(); break;
        }
        if (!ok) throw ConfigError("field '" + key + "' has the wrong type");
    }
}

template <class T>
T need(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ConfigError("missing required field '" + key + "'");
    return j.at(key).get<T>();
}

template <class F>
auto parse_enum(const json& j, const std::string& key, const std::string& def, F f) {
    const std::string s = j.value(key, def);
    try {
        return f(s);
    } catch (const domain_error&) {
        throw ConfigError("field '" + key + "' has invalid value '" + s + "'");
    }
}

TaskSpec spec_from(const json& j) {
    TaskSpec s;
    s.task = parse_enum(j, "task", "evolve", task_from_string);
    s.model = parse_enum(j, "model", "pionless", model_from_string);
    s.encoding = parse_enum(j, "encoding", "vc", encoding_from_string);
    s.convention = parse_enum(j, "convention", "fault-tolerant", convention_from_string);
    s.order = j.value("order", 1);
    s.L = need<int>(j, "L");
    s.a_fm = need<double>(j, "aL_fm");
    const auto eta = need<long long>(j, "eta");
    if (eta < 0) throw ConfigError("field 'eta' must be nonnegative");
    s.eta = static_cast<std::size_t>(eta);
    if (s.task == Task::evolve) {
        s.eps = need<double>(j, "eps");
        s.E_kin = need<double>(j, "Ekin_MeV");
    } else {
        s.eps = j.value("eps", s.eps);
        s.dE = need<double>(j, "dE_MeV");
        s.success = j.value("success", s.success);
    }
    s.E_max = j.value("Emax_MeV", s.E_max);
    s.strict = j.value("strict", false);
    if (j.contains("ell_sites")) s.ell_sites = j.at("ell_sites").get<int>();
    if (j.contains("n_b")) s.n_b = j.at("n_b").get<int>();
    return s;
}

void emit(const std::string& text, const json& j) {
    const std::string out = j.value("output", std::string());
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write output file '" + out + "'");
    f << text;
}

std::string report_csv(const CostReport& r) {
    std::ostringstream os;
    os << "field,value\n";
    const json j = to_json(r);
    for (const char* k : {"t_MeVinv", "r", "steps_total", "step_depth", "step_rz", "depth_total", "rz_total", "T_total", "qubits",
                          "ancillas", "coefficient", "ell_sites", "n_b", "m", "n"}) {
        if (!j.contains(k)) continue;
        os << k << "," << (j[k].is_null() ? std::string() : fmt_num(j[k].get<double>())) << "\n";
    }
    os << "notes," << csv_quote(r.notes) << "\n";
    return os.str();
}

unsigned default_jobs() {
    if (const char* env = std::getenv("NUCEFT_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw ConfigError("NUCEFT_JOBS must be a positive integer");
    }
    return 1;
}

// Flags shared by estimate and sweep; every flag that was given lands in `j`.
struct SpecFlags {
    std::string config;
    std::map<std::string, std::string> str;
    std::map<std::string, double> num;
    std::map<std::string, long long> ints;
    bool strict = false;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "JSON config file; flags override its fields");
        for (const auto& [flag, key] : std::map<std::string, std::string>{{"--task", "task"},
                                                                         {"--model", "model"},
                                                                         {"--encoding", "encoding"},
                                                                         {"--convention", "convention"},
                                                                         {"--format", "format"},
                                                                         {"--out", "output"}})
            app->add_option(flag, str[key]);
        for (const auto& [flag, key] : std::map<std::string, std::string>{{"--aL-fm", "aL_fm"},
                                                                         {"--Ekin-MeV", "Ekin_MeV"},
                                                                         {"--dE-MeV", "dE_MeV"},
                                                                         {"--Emax-MeV", "Emax_MeV"},
                                                                         {"--success", "success"},
                                                                         {"--eps", "eps"}})
            app->add_option(flag, num[key]);
        for (const auto& [flag, key] : std::map<std::string, std::string>{
                 {"--order", "order"}, {"--L", "L"}, {"--eta", "eta"}, {"--ell", "ell_sites"}, {"--nb", "n_b"}, {"--verbosity", "verbosity"}})
            app->add_option(flag, ints[key]);
        app->add_flag("--strict", strict, "use the alternative closed-form coefficients for the dynamical-pion step");
    }

    json merged(const CLI::App* app) const {
        json j = config.empty() ? json::object() : load_config(config);
        check_types(j);
        auto given = [&](const std::string& key) {
            for (const auto* o : app->get_options())
                if (o->count() > 0)
                    for (const auto& name : o->get_lnames())
                        if (key == name) return true;
            return false;
        };
        auto flag_of = [](std::string key) {
            static const std::map<std::string, std::string> alias = {{"output", "out"}, {"aL_fm", "aL-fm"}, {"Ekin_MeV", "Ekin-MeV"},
                                                                     {"dE_MeV", "dE-MeV"}, {"Emax_MeV", "Emax-MeV"},
                                                                     {"ell_sites", "ell"}, {"n_b", "nb"}};
            const auto it = alias.find(key);
            return it == alias.end() ? key : it->second;
        };
        for (const auto& [k, v] : str)
            if (given(flag_of(k))) j[k] = v;
        for (const auto& [k, v] : num)
            if (given(flag_of(k))) j[k] = v;
        for (const auto& [k, v] : ints)
            if (given(flag_of(k))) j[k] = v;
        if (strict) j["strict"] = true;
        return j;
    }
};

int run_estimate(const json& j) {
    const auto spec = spec_from(j);
    const auto rep = estimate(spec);
    const std::string format = j.value("format", std::string("json"));
    if (format == "json") emit(to_json(rep).dump(2) + "\n", j);
    else if (format == "csv") emit(report_csv(rep), j);
    else throw ConfigError("field 'format' must be json or csv");
    return kOk;
}

int run_sweep(const json& j, unsigned jobs) {
    const auto spec = spec_from(j);
    const SweepAxis axis = parse_enum(j, "axis", "", sweep_axis_from_string);
    const double from = need<double>(j, "from"), to = need<double>(j, "to"), step = need<double>(j, "step");
    std::vector<double> grid;
    const std::string scale = j.value("scale", std::string("linear"));
    if (scale == "linear") {
        if (!(step > 0) || to < from) throw ConfigError("empty sweep grid");
        grid = linear_grid(from, to, step);
    } else if (scale == "log") {
        if (!(from > 0) || !(step > 1) || to < from) throw ConfigError("empty sweep grid");
        for (double v = from; v <= to * (1 + 1e-12); v *= step) grid.push_back(v);
    } else {
        throw ConfigError("field 'scale' must be linear or log");
    }
    if (grid.empty()) throw ConfigError("empty sweep grid");
    emit(to_csv(axis, sweep(spec, axis, grid, jobs)), j);
    return kOk;
}

int run_verify(const std::string& suite) {
    using namespace nuceft::verify;
    std::vector<Check> checks;
    auto add = [&](std::vector<Check> c) { checks.insert(checks.end(), c.begin(), c.end()); };
    const bool all = suite == "all";
    if (all || suite == "pauli") add(pauli_suite());
    if (all || suite == "encodings") add(encodings_suite());
    if (all || suite == "seminorm") add(seminorm_suite());
    if (all || suite == "trotter") add(trotter_suite());
    if (checks.empty()) throw ConfigError("unknown verify suite '" + suite + "'");
    for (const auto& c : checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    std::cout << (all_passed(checks) ? "verify: all checks passed\n" : "verify: failures present\n");
    return all_passed(checks) ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resource estimates for lattice nuclear EFT simulation"};
    app.require_subcommand(1);

    SpecFlags est_flags, sweep_flags;
    auto* est = app.add_subcommand("estimate", "cost report for one task");
    est_flags.attach(est);

    auto* sw = app.add_subcommand("sweep", "CSV table over one parameter axis");
    sweep_flags.attach(sw);
    std::string axis;
    double from = 0, to = 0, step = 0;
    std::string scale;
    long long jobs_flag = 0;
    sw->add_option("--axis", axis, "eta, L, epsilon, ell or n_b");
    sw->add_option("--from", from);
    sw->add_option("--to", to);
    sw->add_option("--step", step, "increment, or ratio for --scale log");
    sw->add_option("--scale", scale, "linear or log");
    sw->add_option("--jobs", jobs_flag, "worker threads; defaults to NUCEFT_JOBS or 1");

    auto* ver = app.add_subcommand("verify", "run the invariant suites");
    std::string suite = "all";
    ver->add_option("suite", suite, "pauli, encodings, seminorm, trotter or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*est) return run_estimate(est_flags.merged(est));
        if (*sw) {
            json j = sweep_flags.merged(sw);
            if (sw->count("--axis")) j["axis"] = axis;
            if (sw->count("--from")) j["from"] = from;
            if (sw->count("--to")) j["to"] = to;
            if (sw->count("--step")) j["step"] = step;
            if (sw->count("--scale")) j["scale"] = scale;
            unsigned jobs = default_jobs();
            if (j.contains("jobs")) jobs = static_cast<unsigned>(std::max<long long>(1, j["jobs"].get<long long>()));
            if (sw->count("--jobs")) {
                if (jobs_flag < 1) throw ConfigError("--jobs must be positive");
                jobs = static_cast<unsigned>(jobs_flag);
            }
            return run_sweep(j, jobs);
        }
        if (*ver) return run_verify(suite);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const nuceft::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}
