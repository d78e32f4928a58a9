// dirac_abc: bound states, quantized frequencies and radial profiles of the
// planar Dirac oscillator in an Aharonov-Bohm-Coulomb background, with an
// independent grid-operator verifier. All inputs are in natural units
// (hbar = c = 1); machine-readable CSV/JSON on stdout or --out.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diracabc/core_model.hpp"
#include "diracabc/errors.hpp"
#include "diracabc/heun.hpp"
#include "diracabc/oracle.hpp"
#include "diracabc/oracle_json.hpp"
#include "diracabc/quantization.hpp"
#include "diracabc/wavefunction.hpp"

namespace {

using nlohmann::json;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw diracabc::ValidationError("cannot open output file " + out_path);
    f << text;
}

struct CommonOpts {
    diracabc::SystemParams params;
    double tol = 1e-12;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m0", o.params.m0, "rest mass m0 > 0 (natural units)")
        ->capture_default_str();
    cmd->add_option("--e", o.params.e_abs,
                    "charge magnitude |e| >= 0; the physical value is "
                    "|e| = sqrt(alpha) ~ 0.0854 with alpha the fine-structure constant")
        ->required();
    cmd->add_option("--Z", o.params.Z, "atomic number Z >= 0")->capture_default_str();
    cmd->add_option("--phi-ab", o.params.phi_ab, "flux parameter Phi_AB = Phi/(2 pi)")
        ->capture_default_str();
    cmd->add_option("--B", o.params.B, "homogeneous magnetic field strength B >= 0")
        ->capture_default_str();
    cmd->add_option("--tol", o.tol,
                    "solver/residual tolerance (env DIRAC_ABC_TOL overrides this default)")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write output to this path instead of stdout");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

struct StateRow {
    int n = 0;
    double ml = 0.0;
    int s = 0;
    int branch = 0;
    double E = 0.0;
    double omega = 0.0;
    double omega_bar = 0.0;
    double A_bar = 0.0;
    double gamma = 0.0;
    double kappa = 0.0;
};

StateRow row_from_state(const diracabc::BoundState& st) {
    return StateRow{st.qn.n,     st.qn.m_l,        st.qn.s,           st.qn.branch, st.energy,
                    st.omega,    st.omega_bar,     st.a_bar_root,     st.derived.gamma,
                    st.derived.kappa};
}

std::string rows_to_csv(const std::vector<StateRow>& rows) {
    std::string out = "n,ml,s,branch,E,omega,omega_bar,A_bar,gamma,kappa\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + g17(r.ml) + "," + std::to_string(r.s) + "," +
               std::to_string(r.branch) + "," + g17(r.E) + "," + g17(r.omega) + "," +
               g17(r.omega_bar) + "," + g17(r.A_bar) + "," + g17(r.gamma) + "," + g17(r.kappa) +
               "\n";
    return out;
}

json row_to_json(const StateRow& r) {
    return json{{"n", r.n},         {"ml", r.ml},
                {"s", r.s},         {"branch", r.branch},
                {"E", r.E},         {"omega", r.omega},
                {"omega_bar", r.omega_bar}, {"A_bar", r.A_bar},
                {"gamma", r.gamma}, {"kappa", r.kappa}};
}

std::string rows_to_output(const std::vector<StateRow>& rows, const std::string& format) {
    if (format == "csv") return rows_to_csv(rows);
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(row_to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<diracabc::BoundState> solve_states(const CommonOpts& o, int n, double ml, int s,
                                               int branch_filter, bool closed_form) {
    std::vector<diracabc::BoundState> states;
    if (closed_form) {
        if (n != 1 && n != 2)
            throw diracabc::ValidationError("--closed-form requires n = 1 or n = 2");
        auto set = n == 1 ? diracabc::solve_ground_state(o.params, ml, s)
                          : diracabc::solve_first_excited(o.params, ml, s);
        for (auto& st : set.states)
            if (branch_filter == 0 || st.qn.branch == branch_filter) states.push_back(st);
        return states;
    }
    for (int branch : {+1, -1}) {
        if (branch_filter != 0 && branch != branch_filter) continue;
        diracabc::SpectrumRequest req{o.params, {n, ml, s, branch}, o.tol};
        auto set = diracabc::solve(req);
        for (auto& st : set.states) states.push_back(st);
    }
    return states;
}

int cmd_solve(const CommonOpts& o, int n, double ml, int s, int branch_filter, bool closed_form) {
    auto states = solve_states(o, n, ml, s, branch_filter, closed_form);
    std::vector<StateRow> rows;
    for (const auto& st : states) rows.push_back(row_from_state(st));
    write_output(rows_to_output(rows, o.format), o.out);
    return 0;
}

int cmd_spectrum(CommonOpts o, double omega, bool omega_given, bool resonance, int n_min,
                 int n_max, std::vector<double> ml_list, int s_filter, int branch_filter) {
    o.params.validate();
    const double omega_c = diracabc::cyclotron_frequency(o.params);
    if (resonance) omega = 0.5 * omega_c;
    else if (!omega_given)
        throw diracabc::ValidationError(
            "spectrum requires --omega or --omega-equals-half-cyclotron");
    o.params.omega = omega;
    const double omega_bar = diracabc::effective_frequency(omega, omega_c);
    if (n_min < 1 || n_max < n_min)
        throw diracabc::ValidationError("need 1 <= n-min <= n-max");
    if (ml_list.empty()) ml_list = {0.5, -0.5};

    std::string csv = "n,ml,s,branch,E,omega,omega_bar,gamma,kappa\n";
    json arr = json::array();
    for (int n = n_min; n <= n_max; ++n)
        for (double ml : ml_list)
            for (int s : {+1, -1}) {
                if (s_filter != 0 && s != s_filter) continue;
                for (int branch : {+1, -1}) {
                    if (branch_filter != 0 && branch != branch_filter) continue;
                    diracabc::QuantumNumbers qn{n, ml, s, branch};
                    const double E = diracabc::energy_from_frequency(omega_bar, qn, o.params);
                    const double g = diracabc::compute_gamma(o.params, ml);
                    const double k = diracabc::kappa(n, g, s, ml, o.params.flux_coupling());
                    if (o.format == "csv")
                        csv += std::to_string(n) + "," + g17(ml) + "," + std::to_string(s) + "," +
                               std::to_string(branch) + "," + g17(E) + "," + g17(omega) + "," +
                               g17(omega_bar) + "," + g17(g) + "," + g17(k) + "\n";
                    else
                        arr.push_back(json{{"n", n},
                                           {"ml", ml},
                                           {"s", s},
                                           {"branch", branch},
                                           {"E", E},
                                           {"omega", omega},
                                           {"omega_bar", omega_bar},
                                           {"gamma", g},
                                           {"kappa", k}});
                }
            }
    write_output(o.format == "csv" ? csv : arr.dump(2) + "\n", o.out);
    return 0;
}

int cmd_wavefunction(CommonOpts o, int n, double ml, int s, int branch, bool omega_given,
                     double omega, double x_max, int samples, int state_index) {
    diracabc::BoundState state;
    if (omega_given) {
        o.params.omega = omega;
        state = diracabc::from_frequency(o.params, {n, ml, s, branch}, 1e-8);
    } else {
        diracabc::SpectrumRequest req{o.params, {n, ml, s, branch}, o.tol};
        auto set = diracabc::solve(req);
        if (state_index < 0 || static_cast<std::size_t>(state_index) >= set.states.size())
            throw diracabc::ValidationError("--state-index out of range: " +
                                            std::to_string(set.states.size()) +
                                            " state(s) available");
        state = set.states[static_cast<std::size_t>(state_index)];
    }
    auto rf = diracabc::normalize(diracabc::make_radial_function(state), o.tol);
    if (x_max <= 0.0) x_max = diracabc::profile_x_max(rf);
    const std::string csv = diracabc::profile_csv(rf, x_max, samples);
    if (o.format == "csv") {
        write_output(csv, o.out);
        return 0;
    }
    json arr = json::array();
    for (int i = 0; i < samples; ++i) {
        const double x = x_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double v = diracabc::radial_value(rf, x);
        arr.push_back(json{{"x", x}, {"phi", v}, {"phi_squared", v * v}});
    }
    write_output(arr.dump(2) + "\n", o.out);
    return 0;
}

int cmd_scan(CommonOpts o, const std::string& param, double from, double to, int steps, int n,
             double ml, bool ml_given, int s) {
    if (steps < 1) throw diracabc::ValidationError("--steps must be >= 1");
    if (param != "ml" && !ml_given)
        throw diracabc::ValidationError("--ml is required unless --param ml");
    std::string csv = "param_value,E_plus,E_minus,omega\n";
    json arr = json::array();
    int successes = 0;
    std::string last_error;
    for (int i = 0; i < steps; ++i) {
        const double v =
            steps == 1 ? from : from + (to - from) * static_cast<double>(i) / (steps - 1);
        diracabc::SystemParams p = o.params;
        double ml_v = ml;
        if (param == "Z") p.Z = v;
        else if (param == "phi-ab") p.phi_ab = v;
        else if (param == "B") p.B = v;
        else ml_v = v;
        double e_plus = std::nan(""), e_minus = std::nan(""), omega = std::nan("");
        try {
            diracabc::SpectrumRequest rp{p, {n, ml_v, s, +1}, o.tol};
            diracabc::SpectrumRequest rm{p, {n, ml_v, s, -1}, o.tol};
            const auto plus = diracabc::solve(rp);
            const auto minus = diracabc::solve(rm);
            e_plus = plus.states.front().energy;
            e_minus = minus.states.front().energy;
            omega = plus.states.front().omega;
            ++successes;
        } catch (const diracabc::Error& err) {
            last_error = std::string(err.name()) + ": " + err.what();
        }
        if (o.format == "csv")
            csv += g17(v) + "," + g17(e_plus) + "," + g17(e_minus) + "," + g17(omega) + "\n";
        else
            arr.push_back(json{{"param_value", v},
                               {"E_plus", e_plus},
                               {"E_minus", e_minus},
                               {"omega", omega}});
    }
    if (successes == 0)
        throw diracabc::NoBoundState("no sweep point produced a state (last: " + last_error + ")");
    write_output(o.format == "csv" ? csv : arr.dump(2) + "\n", o.out);
    return 0;
}

std::vector<StateRow> parse_rows(const std::string& text) {
    std::vector<StateRow> rows;
    // JSON input: an array of row objects
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        json arr = json::parse(text);
        if (arr.is_object()) arr = json::array({arr});
        for (const auto& jr : arr) {
            StateRow r;
            r.n = jr.at("n").get<int>();
            r.ml = jr.at("ml").get<double>();
            r.s = jr.at("s").get<int>();
            r.branch = jr.at("branch").get<int>();
            r.E = jr.at("E").get<double>();
            r.omega = jr.at("omega").get<double>();
            r.omega_bar = jr.at("omega_bar").get<double>();
            r.A_bar = jr.at("A_bar").get<double>();
            r.gamma = jr.at("gamma").get<double>();
            r.kappa = jr.at("kappa").get<double>();
            rows.push_back(r);
        }
        return rows;
    }
    // CSV input with the solve header
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw diracabc::ValidationError("empty input to verify");
    std::map<std::string, int> col;
    {
        std::istringstream hs(line);
        std::string name;
        int idx = 0;
        while (std::getline(hs, name, ',')) {
            if (!name.empty() && name.back() == '\r') name.pop_back();
            col[name] = idx++;
        }
    }
    for (const char* required : {"n", "ml", "s", "branch", "E", "omega", "omega_bar", "A_bar",
                                 "gamma", "kappa"})
        if (!col.count(required))
            throw diracabc::ValidationError(std::string("verify input lacks column ") + required);
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        auto get = [&](const char* name) { return std::stod(cells.at(col.at(name))); };
        StateRow r;
        r.n = static_cast<int>(get("n"));
        r.ml = get("ml");
        r.s = static_cast<int>(get("s"));
        r.branch = static_cast<int>(get("branch"));
        r.E = get("E");
        r.omega = get("omega");
        r.omega_bar = get("omega_bar");
        r.A_bar = get("A_bar");
        r.gamma = get("gamma");
        r.kappa = get("kappa");
        rows.push_back(r);
    }
    return rows;
}

diracabc::BoundState state_from_row(const StateRow& r) {
    diracabc::BoundState st;
    st.qn = {r.n, r.ml, r.s, r.branch};
    st.qn.validate();
    st.energy = r.E;
    st.omega = r.omega;
    st.omega_bar = r.omega_bar;
    st.a_bar_root = r.A_bar;
    st.derived.gamma = r.gamma;
    st.derived.delta_s = 2.0 * r.gamma + 1.0 - static_cast<double>(r.s);
    st.derived.kappa = r.kappa;
    st.derived.omega_c = 2.0 * (r.omega - r.omega_bar);
    st.derived.omega_bar = r.omega_bar;
    st.derived.a_bar = r.A_bar;
    st.derived.eps_s = 2.0 * r.n;
    if (r.omega_bar > 0.0) {
        auto seq = diracabc::coefficients(
            diracabc::HeunParams(r.A_bar, st.derived.delta_s, 2.0 * r.n), r.n);
        st.heun_coeffs = seq.coeffs;
    }
    return st;
}

int cmd_verify(const CommonOpts& o, const std::string& in_path, int n, double ml, int s,
               bool qn_given, int branch_filter, const diracabc::GridSpec& grid, int k,
               bool refine) {
    std::vector<diracabc::BoundState> states;
    if (!in_path.empty()) {
        std::string text;
        if (in_path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(in_path);
            if (!f) throw diracabc::ValidationError("cannot open input file " + in_path);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        for (const auto& row : parse_rows(text)) {
            if (branch_filter != 0 && row.branch != branch_filter) continue;
            states.push_back(state_from_row(row));
        }
    } else {
        if (!qn_given)
            throw diracabc::ValidationError("verify requires --in or (--n, --ml, --s)");
        states = solve_states(o, n, ml, s, branch_filter, false);
    }

    json arr = json::array();
    for (const auto& st : states) {
        json entry;
        entry["state"] = row_to_json(row_from_state(st));
        if (st.heun_coeffs.empty()) {
            entry["skipped_resonance"] = true;
        } else {
            const int kk = k > 0 ? k : st.qn.n + 3;
            const diracabc::OracleReport report = diracabc::discretized_eigenvalues(st, grid, kk);
            json jr = report;
            for (auto it = jr.begin(); it != jr.end(); ++it) entry[it.key()] = it.value();
            if (refine) {
                const double extrapolated = diracabc::refine_and_extrapolate(st, grid);
                entry["extrapolated_ebar"] = extrapolated;
                entry["extrapolated_error"] =
                    std::fabs(extrapolated - diracabc::analytic_ebar(st));
            }
        }
        arr.push_back(entry);
    }
    write_output(arr.dump(2) + "\n", o.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the planar Dirac oscillator in an "
                 "Aharonov-Bohm-Coulomb background (natural units)"};
    app.require_subcommand(1);

    // spectrum
    CommonOpts so;
    double sp_omega = 0.0;
    bool sp_resonance = false;
    int sp_nmin = 1, sp_nmax = 3, sp_s = 0, sp_branch = 0;
    std::vector<double> sp_ml;
    auto* spectrum = app.add_subcommand(
        "spectrum", "evaluate E(omega) over ranges of (n, ml, s) at a supplied frequency");
    add_common(spectrum, so);
    auto* sp_omega_opt =
        spectrum->add_option("--omega", sp_omega, "oscillator frequency omega >= 0");
    spectrum->add_flag("--omega-equals-half-cyclotron", sp_resonance,
                       "set omega = omega_c/2 exactly (resonance)");
    spectrum->add_option("--n-min", sp_nmin, "lowest n")->capture_default_str();
    spectrum->add_option("--n-max", sp_nmax, "highest n")->capture_default_str();
    spectrum->add_option("--ml", sp_ml, "ml values (repeatable; default 0.5 -0.5)");
    spectrum->add_option("--s", sp_s, "restrict to spin parameter +1 or -1")
        ->check(CLI::IsMember({-1, 1}));
    spectrum->add_option("--branch", sp_branch, "restrict to energy branch +1 or -1")
        ->check(CLI::IsMember({-1, 1}));

    // solve
    CommonOpts vo;
    int sv_n = 0, sv_s = 0, sv_branch = 0;
    double sv_ml = 0.0;
    bool sv_closed = false;
    auto* solve = app.add_subcommand(
        "solve", "solve the truncation conditions for (E, omega) at fixed quantum numbers");
    add_common(solve, vo);
    solve->add_option("--n", sv_n, "principal quantum number n >= 1")->required();
    solve->add_option("--ml", sv_ml, "orbital magnetic quantum number (half-odd-integer)")
        ->required();
    solve->add_option("--s", sv_s, "spin parameter")->check(CLI::IsMember({-1, 1}))->required();
    solve->add_option("--branch", sv_branch, "emit only this energy branch")
        ->check(CLI::IsMember({-1, 1}));
    solve->add_flag("--closed-form", sv_closed, "use the closed forms (n = 1, 2 only)");

    // wavefunction
    CommonOpts wo;
    int wf_n = 0, wf_s = 0, wf_branch = +1, wf_samples = 400, wf_index = 0;
    double wf_ml = 0.0, wf_omega = 0.0, wf_xmax = 0.0;
    auto* wavefunction = app.add_subcommand(
        "wavefunction", "export the normalized radial profile of one solved state");
    add_common(wavefunction, wo);
    wavefunction->add_option("--n", wf_n)->required();
    wavefunction->add_option("--ml", wf_ml)->required();
    wavefunction->add_option("--s", wf_s)->check(CLI::IsMember({-1, 1}))->required();
    wavefunction->add_option("--branch", wf_branch, "energy branch of the exported profile")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    auto* wf_omega_opt = wavefunction->add_option(
        "--omega", wf_omega, "use this frequency instead of solving (must satisfy truncation)");
    wavefunction->add_option("--x-max", wf_xmax, "sampling range (default: automatic)");
    wavefunction->add_option("--samples", wf_samples, "number of sample rows")
        ->capture_default_str();
    wavefunction->add_option("--state-index", wf_index,
                             "which state when several share the quantum numbers (sorted by "
                             "omega_bar)")
        ->capture_default_str();

    // scan
    CommonOpts co;
    std::string sc_param;
    double sc_from = 0.0, sc_to = 0.0, sc_ml = 0.0;
    int sc_steps = 0, sc_n = 0, sc_s = 0;
    auto* scan = app.add_subcommand("scan", "sweep one parameter and tabulate E and omega");
    add_common(scan, co);
    scan->add_option("--param", sc_param, "swept parameter")
        ->check(CLI::IsMember({"Z", "phi-ab", "B", "ml"}))
        ->required();
    scan->add_option("--from", sc_from, "first sweep value")->required();
    scan->add_option("--to", sc_to, "last sweep value")->required();
    scan->add_option("--steps", sc_steps, "number of sweep points")->required();
    scan->add_option("--n", sc_n)->required();
    auto* sc_ml_opt = scan->add_option("--ml", sc_ml, "ml (ignored when --param ml)");
    scan->add_option("--s", sc_s)->check(CLI::IsMember({-1, 1}))->required();

    // verify
    CommonOpts fo;
    std::string vf_in;
    int vf_n = 0, vf_s = 0, vf_branch = 0, vf_points = 4001, vf_k = 0;
    double vf_ml = 0.0, vf_xmin = 1e-4, vf_xmax = 12.0;
    auto* verify = app.add_subcommand(
        "verify", "verify solved states against the discretized radial operator");
    add_common(verify, fo);
    verify->add_option("--in", vf_in, "read solve output (CSV or JSON); '-' for stdin");
    auto* vf_n_opt = verify->add_option("--n", vf_n);
    auto* vf_ml_opt = verify->add_option("--ml", vf_ml);
    auto* vf_s_opt = verify->add_option("--s", vf_s)->check(CLI::IsMember({-1, 1}));
    verify->add_option("--branch", vf_branch)->check(CLI::IsMember({-1, 1}));
    verify->add_option("--points", vf_points, "grid points")->capture_default_str();
    verify->add_option("--x-min", vf_xmin, "grid start > 0")->capture_default_str();
    verify->add_option("--x-max", vf_xmax, "grid end")->capture_default_str();
    verify->add_option("--k", vf_k, "how many low eigenvalues (default n+3)");
    bool vf_refine = false;
    verify->add_flag("--refine", vf_refine,
                     "also run the h/2 refinement and report the Richardson-extrapolated "
                     "eigenvalue (fails when refinement does not converge)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        std::cerr << "error=ValidationError detail=" << e.what() << "\n";
        return 2;
    }

    // env override for the default tolerance; an explicit --tol still wins
    if (const char* env = std::getenv("DIRAC_ABC_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) {
            bool tol_given = false;
            for (CLI::App* cmd : app.get_subcommands())
                if (cmd->count("--tol") > 0) tol_given = true;
            if (!tol_given)
                for (CommonOpts* o : {&so, &vo, &wo, &co, &fo}) o->tol = v;
        }
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(so, sp_omega, sp_omega_opt->count() > 0, sp_resonance, sp_nmin,
                                sp_nmax, sp_ml, sp_s, sp_branch);
        if (solve->parsed()) return cmd_solve(vo, sv_n, sv_ml, sv_s, sv_branch, sv_closed);
        if (wavefunction->parsed())
            return cmd_wavefunction(wo, wf_n, wf_ml, wf_s, wf_branch, wf_omega_opt->count() > 0,
                                    wf_omega, wf_xmax, wf_samples, wf_index);
        if (scan->parsed())
            return cmd_scan(co, sc_param, sc_from, sc_to, sc_steps, sc_n, sc_ml,
                            sc_ml_opt->count() > 0, sc_s);
        if (verify->parsed()) {
            diracabc::GridSpec grid{vf_xmin, vf_xmax, vf_points};
            const bool qn_given =
                vf_n_opt->count() > 0 && vf_ml_opt->count() > 0 && vf_s_opt->count() > 0;
            return cmd_verify(fo, vf_in, vf_n, vf_ml, vf_s, qn_given, vf_branch, grid, vf_k,
                              vf_refine);
        }
    } catch (const diracabc::Error& e) {
        std::string detail = e.what();
        for (char& c : detail)
            if (c == '\n') c = ' ';
        std::cerr << "error=" << e.name() << " detail=" << detail << "\n";
        switch (e.category()) {
            case diracabc::ErrorCategory::validation: return 2;
            case diracabc::ErrorCategory::no_solution: return 3;
            case diracabc::ErrorCategory::numerical: return 4;
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error=InternalError detail=" << e.what() << "\n";
        return 1;
    }
    return 0;
}
