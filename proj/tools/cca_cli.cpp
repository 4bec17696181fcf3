// Command-line front end: figure-style sweeps, bound/resonant state export,
// spectrum/wavepacket verification runs, hardware mapping, and the full
// verification suite. Outputs are deterministic: the same flags and seed
// produce byte-identical files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cca/hardware.hpp"
#include "cca/io.hpp"
#include "cca/lattice.hpp"
#include "cca/oracle.hpp"
#include "cca/scattering.hpp"
#include "cca/spectral.hpp"
#include "cca/verify.hpp"

namespace {

// exit codes (also listed in the README)
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadParams = 3;
constexpr int kExitIncompleteRun = 4;
constexpr int kExitIo = 5;

using cca::io::format_double;

struct CommonOpts {
    double omega_c = 1.0;
    double hopping = 0.01;
    std::string output;   // empty = stdout
    std::string format;   // "csv" or "json"; default depends on command
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--omega-c", opts.omega_c, "base cavity frequency (default 1)");
    cmd->add_option("--hopping,-J", opts.hopping, "nearest-neighbor hopping J (default 0.01)");
    cmd->add_option("--output,-o", opts.output,
                    "output file; relative paths resolve against CCA_OUTPUT_DIR; stdout if absent");
    cmd->add_option("--format", opts.format, "csv or json (command-specific default)");
}

void write_text(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    const auto path = cca::io::resolve_output(opts.output);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open output file " + path.string());
    os << text;
    if (!os) throw std::ios_base::failure("write failed for " + path.string());
}

std::string render_csv(const cca::io::CsvTable& table) {
    std::ostringstream os;
    cca::io::write_csv(os, table);
    return os.str();
}

std::string render_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

cca::lattice::LatticeSpec make_spec(int n, double omega_c, double hopping,
                                    cca::lattice::Boundary boundary) {
    cca::lattice::LatticeSpec spec;
    spec.n_sites = n;
    spec.omega_c = omega_c;
    spec.hopping = hopping;
    spec.boundary = boundary;
    return spec;
}

// ---------------------------------------------------------------- reflect --

struct ReflectOpts {
    CommonOpts common;
    std::string mode = "single";
    std::vector<std::string> k_texts;
    double lambda = 0.2;
    int d = 5;
    std::string lambda_sweep;
    std::string k_sweep;
};

int run_reflect(const ReflectOpts& opts) {
    const bool twin = opts.mode == "double";
    const auto spec = make_spec(21, opts.common.omega_c, opts.common.hopping,
                                cca::lattice::Boundary::periodic);

    std::vector<double> ks;
    for (const auto& text : opts.k_texts) ks.push_back(cca::io::parse_angle(text));
    if (ks.empty()) ks.push_back(cca::io::parse_angle("pi/2"));

    cca::io::CsvTable table;
    table.header = twin ? std::vector<std::string>{"swept", "k", "lambda0", "d", "R", "T",
                                                   "re_r", "im_r", "re_s", "im_s",
                                                   "re_A", "im_A", "re_B", "im_B"}
                        : std::vector<std::string>{"swept", "k", "lambda", "R", "T",
                                                   "re_r", "im_r", "re_s", "im_s"};

    const auto push_row = [&](double swept, double k, double lam,
                              const cca::scattering::ScatteringSolution& sol) {
        std::vector<std::string> row{format_double(swept), format_double(k), format_double(lam)};
        if (twin) row.push_back(std::to_string(opts.d));
        row.push_back(format_double(sol.R));
        row.push_back(format_double(sol.T));
        row.push_back(format_double(sol.r.real()));
        row.push_back(format_double(sol.r.imag()));
        row.push_back(format_double(sol.s.real()));
        row.push_back(format_double(sol.s.imag()));
        if (twin) {
            const auto [a, b] = sol.interior.value_or(
                std::pair<std::complex<double>, std::complex<double>>{{0.0, 0.0}, {0.0, 0.0}});
            row.push_back(format_double(a.real()));
            row.push_back(format_double(a.imag()));
            row.push_back(format_double(b.real()));
            row.push_back(format_double(b.imag()));
        }
        table.rows.push_back(std::move(row));
    };

    cca::scattering::SweepRequest req;
    req.mode = twin ? cca::scattering::SweepRequest::Mode::two_impurity
                    : cca::scattering::SweepRequest::Mode::single;
    req.d = opts.d;
    req.lambda = opts.lambda;

    if (!opts.lambda_sweep.empty()) {
        const auto sweep = cca::io::parse_sweep(opts.lambda_sweep);
        req.axis = {cca::scattering::SweepVariable::detuning, sweep.from, sweep.to, sweep.count};
        for (double k : ks) {
            req.k = k;
            for (const auto& row : cca::scattering::sweep(req, spec))
                push_row(row.swept, k, row.lambda, row.solution);
        }
    } else if (!opts.k_sweep.empty()) {
        const auto sweep = cca::io::parse_sweep(opts.k_sweep);
        req.axis = {cca::scattering::SweepVariable::wave_vector, sweep.from, sweep.to,
                    sweep.count};
        for (const auto& row : cca::scattering::sweep(req, spec))
            push_row(row.swept, row.solution.k, row.lambda, row.solution);
    } else {
        for (double k : ks) {
            const auto sol = twin
                                 ? cca::scattering::reflect_double(k, opts.lambda, opts.d, spec)
                                 : cca::scattering::reflect_single(k, opts.lambda, spec);
            push_row(k, k, opts.lambda, sol);
        }
    }

    write_text(opts.common, render_csv(table));
    return kExitOk;
}

// ------------------------------------------------------------------ bound --

struct BoundOpts {
    CommonOpts common;
    std::string mode = "single";
    double lambda = 0.2;
    int d = 5;
    int n_sites = 21;
    int window = -1;
    int samples = 801;
};

nlohmann::ordered_json bound_state_json(const cca::spectral::BoundStateSolution& state) {
    const double x = state.location == cca::spectral::BandSide::above_band ? std::numbers::pi : 0.0;
    auto j = cca::io::state_to_json(state.parity, state.energy, state.decay, x, state.profile);
    j["location"] = state.location == cca::spectral::BandSide::above_band ? "above_band"
                                                                          : "below_band";
    return j;
}

int run_bound(const BoundOpts& opts) {
    const auto spec = make_spec(opts.n_sites, opts.common.omega_c, opts.common.hopping,
                                cca::lattice::Boundary::periodic);

    if (opts.mode == "single") {
        const auto state = cca::spectral::bound_state_single(opts.lambda, spec, opts.window);
        write_text(opts.common, render_json(bound_state_json(state)));
        return kExitOk;
    }

    if (opts.mode == "double") {
        using cca::spectral::RootSign;
        using cca::spectral::XClass;
        const XClass x_class = opts.lambda < 0.0 ? XClass::x_even_pi : XClass::x_odd_pi;
        nlohmann::ordered_json out;
        out["schema_version"] = cca::io::kSchemaVersion;
        auto states = nlohmann::ordered_json::array();
        for (const RootSign sign : {RootSign::positive, RootSign::negative}) {
            const auto result = cca::spectral::quantization_solve({sign, x_class}, opts.lambda,
                                                                  opts.d, spec, opts.window);
            if (const auto* state = std::get_if<cca::spectral::BoundStateSolution>(&result)) {
                auto j = bound_state_json(*state);
                j["x"] = x_class == XClass::x_odd_pi ? std::numbers::pi : 0.0;
                states.push_back(std::move(j));
            } else {
                const auto& none = std::get<cca::spectral::NoState>(result);
                nlohmann::ordered_json j;
                j["state"] = "none";
                j["reason"] = none.reason == cca::spectral::NoState::Reason::zero_only_wrong_sign
                                  ? "zero_only_wrong_sign"
                                  : "zero_only_weak_detuning";
                states.push_back(std::move(j));
            }
        }
        out["states"] = std::move(states);
        write_text(opts.common, render_json(out));
        return kExitOk;
    }

    if (opts.mode == "poles") {
        const auto roots = cca::spectral::band_pole_roots(opts.lambda, spec);
        const double band_lo = spec.omega_c - 2.0 * spec.hopping;
        const double band_hi = spec.omega_c + 2.0 * spec.hopping;
        const double margin =
            std::abs(opts.lambda) * spec.omega_c + 2.0 * spec.hopping;
        cca::io::CsvTable table;
        table.header = {"kind", "omega", "f1"};
        const double lo = band_lo - margin, hi = band_hi + margin;
        for (int i = 0; i < opts.samples; ++i) {
            const double omega = lo + (hi - lo) * i / (opts.samples - 1);
            table.rows.push_back({"sample", format_double(omega),
                                  format_double(cca::spectral::band_pole_function(
                                      omega, opts.lambda, spec))});
        }
        for (const double root : roots)
            table.rows.push_back({"root", format_double(root), format_double(1.0)});
        write_text(opts.common, render_csv(table));
        return kExitOk;
    }

    throw CLI::ValidationError("--mode must be single, double, or poles");
}

// --------------------------------------------------------------- resonant --

struct ResonantOpts {
    CommonOpts common;
    int m = 2;
    int d = 5;
    std::string parity = "odd";
    std::optional<double> lambda0;
    double threshold = 50.0;
};

int run_resonant(const ResonantOpts& opts) {
    const auto spec = make_spec(21, opts.common.omega_c, opts.common.hopping,
                                cca::lattice::Boundary::periodic);
    const auto parity =
        opts.parity == "even" ? cca::spectral::Parity::even : cca::spectral::Parity::odd;
    const auto state =
        opts.lambda0 ? cca::spectral::resonant_state(opts.m, opts.d, parity, spec,
                                                     *opts.lambda0, opts.threshold)
                     : cca::spectral::resonant_state(opts.m, opts.d, parity, spec);
    auto j = cca::io::state_to_json(state.parity, state.energy, 0.0, state.x, state.profile);
    j["mode_index"] = state.mode_index;
    if (state.regime_ratio) j["regime_ratio"] = *state.regime_ratio;
    if (state.regime_ok) j["regime_ok"] = *state.regime_ok;
    write_text(opts.common, render_json(j));
    return kExitOk;
}

// ----------------------------------------------------------------- oracle --

struct OracleOpts {
    CommonOpts common;
    std::string task = "spectrum";
    int n_sites = 21;
    std::string boundary = "periodic";
    std::vector<std::string> impurity_texts;  // site:detuning
    std::optional<double> lambda;             // shortcut: one detuned cavity at 0
    std::optional<double> lambda0;            // shortcut: pair at +/-d
    int d = 5;
    std::string mode = "single";  // match task
    std::string k0_text = "pi/2";
    double sigma = 20.0;
    int launch = -250;
    double duration = 25000.0;
    int samples = 400;
    int window = -1;
};

cca::lattice::LatticeSpec oracle_spec(const OracleOpts& opts) {
    auto spec = make_spec(opts.n_sites, opts.common.omega_c, opts.common.hopping,
                          opts.boundary == "open" ? cca::lattice::Boundary::open
                                                  : cca::lattice::Boundary::periodic);
    for (const auto& text : opts.impurity_texts) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--impurity expects site:detuning");
        spec.impurities.push_back(
            {std::stoi(text.substr(0, colon)), std::stod(text.substr(colon + 1))});
    }
    if (opts.lambda) spec.impurities.push_back({0, *opts.lambda});
    if (opts.lambda0) {
        spec.impurities.push_back({-opts.d, *opts.lambda0});
        spec.impurities.push_back({opts.d, *opts.lambda0});
    }
    return spec;
}

int run_oracle(const OracleOpts& opts_in) {
    OracleOpts opts = opts_in;
    if (opts.task == "match") {  // the match task needs a detuned cavity to predict
        if (opts.mode == "single" && !opts.lambda && opts.impurity_texts.empty())
            opts.lambda = 0.2;
        if (opts.mode == "double" && !opts.lambda0 && opts.impurity_texts.empty())
            opts.lambda0 = -0.2;
    }
    const auto spec = oracle_spec(opts);

    if (opts.task == "spectrum") {
        const auto spectrum = cca::oracle::diagonalize(spec);
        cca::io::CsvTable table;
        table.header = {"index", "eigenvalue"};
        for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
            table.rows.push_back({std::to_string(i), format_double(spectrum.eigenvalues[i])});
        write_text(opts.common, render_csv(table));
        return kExitOk;
    }

    if (opts.task == "matrix") {
        const auto h = cca::lattice::build_hamiltonian(spec);
        cca::io::CsvTable table;
        table.header = {"row", "col", "value"};
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            for (Eigen::Index j = 0; j < h.cols(); ++j)
                if (h(i, j) != 0.0)
                    table.rows.push_back({std::to_string(i), std::to_string(j),
                                          format_double(h(i, j))});
        write_text(opts.common, render_csv(table));
        return kExitOk;
    }

    if (opts.task == "packet") {
        const double k0 = cca::io::parse_angle(opts.k0_text);
        const auto run = cca::oracle::evolve_packet(spec, k0, opts.sigma, opts.launch,
                                                    opts.duration, opts.samples);
        if (opts.common.format == "json") {
            nlohmann::ordered_json j;
            j["schema_version"] = cca::io::kSchemaVersion;
            j["k0"] = run.k0;
            j["width"] = run.width;
            j["launch_site"] = run.launch_site;
            j["T_measured"] = run.T_measured;
            j["R_measured"] = run.R_measured;
            j["residual_near_impurity"] = run.residual_near_impurity;
            j["measured_at"] = run.measured_at;
            write_text(opts.common, render_json(j));
        } else {
            cca::io::CsvTable table;
            table.header = {"t", "norm", "p_left", "p_region", "p_right"};
            for (const auto& s : run.record)
                table.rows.push_back({format_double(s.t), format_double(s.norm),
                                      format_double(s.p_left), format_double(s.p_region),
                                      format_double(s.p_right)});
            write_text(opts.common, render_csv(table));
        }
        return kExitOk;
    }

    if (opts.task == "match") {
        std::vector<cca::spectral::BoundStateSolution> predictions;
        const int window = opts.window >= 0 ? opts.window : (spec.n_sites - 1) / 2;
        if (opts.mode == "single") {
            predictions.push_back(
                cca::spectral::bound_state_single(opts.lambda.value_or(0.2), spec, window));
        } else {
            using cca::spectral::RootSign;
            using cca::spectral::XClass;
            const double lam0 = opts.lambda0.value_or(-0.2);
            const XClass x_class = lam0 < 0.0 ? XClass::x_even_pi : XClass::x_odd_pi;
            for (const RootSign sign : {RootSign::positive, RootSign::negative}) {
                const auto result =
                    cca::spectral::quantization_solve({sign, x_class}, lam0, opts.d, spec, window);
                if (const auto* state = std::get_if<cca::spectral::BoundStateSolution>(&result))
                    predictions.push_back(*state);
            }
        }
        const auto spectrum = cca::oracle::diagonalize(spec);
        const auto report = cca::oracle::match_bound_states(spectrum, predictions);
        nlohmann::ordered_json j;
        j["schema_version"] = cca::io::kSchemaVersion;
        j["all_pass"] = report.all_pass();
        auto rows = nlohmann::ordered_json::array();
        for (const auto& entry : report.entries) {
            nlohmann::ordered_json row;
            row["predicted_energy"] = entry.predicted_energy;
            row["matched_energy"] = entry.matched_energy;
            row["energy_error"] = entry.energy_error;
            row["fidelity"] = entry.fidelity;
            row["matched"] = entry.matched;
            row["pass"] = entry.pass;
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        write_text(opts.common, render_json(j));
        return kExitOk;
    }

    throw CLI::ValidationError("--task must be spectrum, matrix, packet, or match");
}

// --------------------------------------------------------------- hardware --

struct HardwareOpts {
    CommonOpts common;
    std::string task = "dispersion";
    double ej = 1.0;
    std::string flux_text = "0";
    double cs = 0.0;
    double length = 1.0;
    double c0 = 1.0;
    double l0 = 1.0;
    double phi0 = 1.0;
    int n_modes = 4;
    std::string flux_sweep;
    double ic = 1e-6;
    std::string phix_text = "0";
    std::string z_sweep = "-0.9:0.9:101";
    std::string omega_min = "4";
    std::string omega_max = "4.8";
    std::string omega_ref = "4";
};

cca::hardware::Rational parse_frequency(std::string_view text, bool& two_pi) {
    two_pi = false;
    std::string_view rest = text;
    if (rest.starts_with("2pi*")) {
        two_pi = true;
        rest.remove_prefix(4);
    }
    cca::hardware::Rational unit(1);
    const auto ends_with = [&](std::string_view suffix) { return rest.ends_with(suffix); };
    if (ends_with("GHz")) {
        unit = cca::hardware::Rational(1000000000);
        rest.remove_suffix(3);
    } else if (ends_with("MHz")) {
        unit = cca::hardware::Rational(1000000);
        rest.remove_suffix(3);
    } else if (ends_with("kHz")) {
        unit = cca::hardware::Rational(1000);
        rest.remove_suffix(3);
    } else if (ends_with("Hz")) {
        rest.remove_suffix(2);
    }
    return cca::hardware::parse_decimal(rest) * unit;
}

nlohmann::ordered_json rational_json(const cca::hardware::Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["approx"] = boost::rational_cast<double>(r);
    return j;
}

int run_hardware(const HardwareOpts& opts) {
    if (opts.task == "dispersion") {
        cca::hardware::HardwareParams params;
        params.josephson_energy = opts.ej;
        params.junction_capacitance = opts.cs;
        params.length = opts.length;
        params.capacitance_per_length = opts.c0;
        params.inductance_per_length = opts.l0;
        params.flux_quantum = opts.phi0;

        std::vector<double> fluxes;
        if (!opts.flux_sweep.empty()) {
            const auto sweep = cca::io::parse_sweep(opts.flux_sweep);
            for (int i = 0; i < sweep.count; ++i)
                fluxes.push_back(sweep.from + (sweep.to - sweep.from) * i / (sweep.count - 1));
        } else {
            fluxes.push_back(cca::io::parse_angle(opts.flux_text));
        }

        cca::io::CsvTable table;
        table.header = {"f", "branch", "u", "k", "residual"};
        for (const double f : fluxes) {
            params.reduced_flux = f;
            const auto result = cca::hardware::dispersion_roots(params, opts.n_modes);
            for (const auto& root : result.roots)
                table.rows.push_back({format_double(f), std::to_string(root.branch),
                                      format_double(root.u), format_double(root.k),
                                      format_double(root.residual)});
        }
        write_text(opts.common, render_csv(table));
        return kExitOk;
    }

    if (opts.task == "inductance") {
        const double phix = cca::io::parse_angle(opts.phix_text);
        const double ic_eff = cca::hardware::squid_critical_current(opts.ic, phix);
        const auto sweep = cca::io::parse_sweep(opts.z_sweep);
        cca::io::CsvTable table;
        table.header = {"z", "current", "L_eff"};
        for (int i = 0; i < sweep.count; ++i) {
            const double z = sweep.from + (sweep.to - sweep.from) * i / (sweep.count - 1);
            const double current = z * ic_eff;
            table.rows.push_back({format_double(z), format_double(current),
                                  format_double(cca::hardware::effective_inductance(
                                      current, opts.ic, phix,
                                      opts.phi0 > 0 ? opts.phi0 : cca::hardware::kFluxQuantum))});
        }
        write_text(opts.common, render_csv(table));
        return kExitOk;
    }

    if (opts.task == "detuning") {
        bool tp_min = false, tp_max = false, tp_ref = false;
        const auto lo = parse_frequency(opts.omega_min, tp_min);
        const auto hi = parse_frequency(opts.omega_max, tp_max);
        const auto ref = parse_frequency(opts.omega_ref, tp_ref);
        if (tp_min != tp_max || tp_min != tp_ref)
            throw CLI::ValidationError(
                "detuning: the 2pi* prefix must be used on all three frequencies or none");
        const auto range = cca::hardware::detuning_range(lo, hi, ref);
        nlohmann::ordered_json j;
        j["schema_version"] = cca::io::kSchemaVersion;
        j["lambda_min"] = rational_json(range.lo);
        j["lambda_max"] = rational_json(range.hi);
        write_text(opts.common, render_json(j));
        return kExitOk;
    }

    if (opts.task == "regime") {
        const auto scale =
            cca::hardware::hopping_scale_check(opts.common.hopping, opts.common.omega_c);
        nlohmann::ordered_json j;
        j["schema_version"] = cca::io::kSchemaVersion;
        j["ratio"] = scale.ratio;
        j["reference_regime"] = scale.reference_regime;
        write_text(opts.common, render_json(j));
        return kExitOk;
    }

    throw CLI::ValidationError("--task must be dispersion, inductance, detuning, or regime");
}

// ------------------------------------------------------------- verify-all --

int run_verify(std::uint64_t seed, const CommonOpts& common) {
    const auto results = cca::verify::run_all(seed, &std::cout);
    const bool ok = cca::verify::all_passed(results);
    std::cout << (ok ? "all criteria passed" : "CRITERIA FAILED") << std::endl;
    if (!common.output.empty()) {
        nlohmann::ordered_json j;
        j["schema_version"] = cca::io::kSchemaVersion;
        j["seed"] = seed;
        j["all_pass"] = ok;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json row;
            row["id"] = r.id;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["seconds"] = r.seconds;
            row["detail"] = r.detail;
            rows.push_back(std::move(row));
        }
        j["criteria"] = std::move(rows);
        write_text(common, render_json(j));
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-photon transport, bound states, and resonant states in a "
                 "coupled-cavity chain with one or two detuned cavities"};
    app.require_subcommand(1);
    app.set_config("--config", "", "plain-text key=value config file; flags override it");

    ReflectOpts reflect;
    auto* reflect_cmd = app.add_subcommand("reflect", "reflection/transmission sweeps (CSV)");
    add_common(reflect_cmd, reflect.common);
    reflect_cmd->add_option("--mode", reflect.mode, "single or double")
        ->check(CLI::IsMember({"single", "double"}));
    reflect_cmd->add_option("--k", reflect.k_texts,
                            "wave vector(s); accepts pi literals like pi/2, 0.2pi");
    reflect_cmd->add_option("--lambda,--lambda0", reflect.lambda, "detuning (default 0.2)");
    reflect_cmd->add_option("--d", reflect.d, "half separation of the cavity pair (default 5)");
    reflect_cmd->add_option("--lambda-sweep", reflect.lambda_sweep, "from:to:count");
    reflect_cmd->add_option("--k-sweep", reflect.k_sweep, "from:to:count (pi literals allowed)");

    BoundOpts bound;
    auto* bound_cmd = app.add_subcommand("bound", "bound states (JSON) and pole scans (CSV)");
    add_common(bound_cmd, bound.common);
    bound_cmd->add_option("--mode", bound.mode, "single, double, or poles")
        ->check(CLI::IsMember({"single", "double", "poles"}));
    bound_cmd->add_option("--lambda,--lambda0", bound.lambda, "detuning (default 0.2)");
    bound_cmd->add_option("--d", bound.d, "half separation (default 5)");
    bound_cmd->add_option("--N", bound.n_sites, "lattice size for the pole scan (default 21)");
    bound_cmd->add_option("--window", bound.window, "profile half-width (default: automatic)");
    bound_cmd->add_option("--samples", bound.samples, "pole-scan sample count (default 801)");

    ResonantOpts resonant;
    auto* resonant_cmd = app.add_subcommand("resonant", "confined resonant states (JSON)");
    add_common(resonant_cmd, resonant.common);
    resonant_cmd->add_option("--m", resonant.m, "mode index (default 2)");
    resonant_cmd->add_option("--d", resonant.d, "half separation (default 5)");
    resonant_cmd->add_option("--parity", resonant.parity, "odd or even")
        ->check(CLI::IsMember({"odd", "even"}));
    double resonant_lambda0 = 0.0;
    auto* lam_opt = resonant_cmd->add_option("--lambda0", resonant_lambda0,
                                             "detuning, enables the validity flag");
    resonant_cmd->add_option("--threshold", resonant.threshold,
                             "strong-detuning threshold for the validity flag (default 50)");

    OracleOpts oracle;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "dense spectrum, wavepacket runs, and match reports");
    add_common(oracle_cmd, oracle.common);
    oracle_cmd->add_option("--task", oracle.task, "spectrum, matrix, packet, or match")
        ->check(CLI::IsMember({"spectrum", "matrix", "packet", "match"}));
    oracle_cmd->add_option("--N", oracle.n_sites, "lattice size (default 21)");
    oracle_cmd->add_option("--boundary", oracle.boundary, "periodic or open")
        ->check(CLI::IsMember({"periodic", "open"}));
    oracle_cmd->add_option("--impurity", oracle.impurity_texts,
                           "site:detuning, repeatable");
    double oracle_lambda = 0.0, oracle_lambda0 = 0.0;
    auto* ol = oracle_cmd->add_option("--lambda", oracle_lambda, "one detuned cavity at j=0");
    auto* ol0 = oracle_cmd->add_option("--lambda0", oracle_lambda0,
                                       "detuned pair at j = +/-d");
    oracle_cmd->add_option("--d", oracle.d, "pair half separation (default 5)");
    oracle_cmd->add_option("--mode", oracle.mode, "match mode: single or double")
        ->check(CLI::IsMember({"single", "double"}));
    oracle_cmd->add_option("--k0", oracle.k0_text, "packet carrier wave vector (default pi/2)");
    oracle_cmd->add_option("--sigma", oracle.sigma, "packet width in sites (default 20)");
    oracle_cmd->add_option("--x0", oracle.launch, "packet launch site (default -250)");
    oracle_cmd->add_option("--duration", oracle.duration, "run length in 1/omega_c units");
    oracle_cmd->add_option("--samples", oracle.samples, "recorded samples (default 400)");
    oracle_cmd->add_option("--window", oracle.window, "prediction profile half-width");

    HardwareOpts hardware;
    auto* hardware_cmd =
        app.add_subcommand("hardware", "resonator dispersion, SQUID inductance, detuning range");
    add_common(hardware_cmd, hardware.common);
    hardware_cmd->add_option("--task", hardware.task,
                             "dispersion, inductance, detuning, or regime")
        ->check(CLI::IsMember({"dispersion", "inductance", "detuning", "regime"}));
    hardware_cmd->add_option("--ej", hardware.ej, "Josephson energy of one junction");
    hardware_cmd->add_option("--flux", hardware.flux_text, "reduced flux f (pi literals allowed)");
    hardware_cmd->add_option("--cs", hardware.cs, "junction capacitance C_s");
    hardware_cmd->add_option("--len", hardware.length, "resonator length l_0");
    hardware_cmd->add_option("--c0", hardware.c0, "capacitance per unit length");
    hardware_cmd->add_option("--l0", hardware.l0, "inductance per unit length");
    hardware_cmd->add_option("--phi0", hardware.phi0, "flux quantum (default 1, scaled units)");
    hardware_cmd->add_option("--n-modes", hardware.n_modes, "number of roots (default 4)");
    hardware_cmd->add_option("--flux-sweep", hardware.flux_sweep, "from:to:count over f");
    hardware_cmd->add_option("--ic", hardware.ic, "junction critical current");
    hardware_cmd->add_option("--phix", hardware.phix_text, "SQUID reduced flux phi_x");
    hardware_cmd->add_option("--z-sweep", hardware.z_sweep,
                             "bias sweep in I / I_c(phi_x) (default -0.9:0.9:101)");
    hardware_cmd->add_option("--omega-min", hardware.omega_min,
                             "lowest cavity frequency (decimal, optional 2pi*/unit suffix)");
    hardware_cmd->add_option("--omega-max", hardware.omega_max, "highest cavity frequency");
    hardware_cmd->add_option("--omega-ref", hardware.omega_ref, "reference frequency");

    CommonOpts verify_common;
    std::uint64_t seed = 20260810;
    auto* verify_cmd = app.add_subcommand("verify-all", "run the full verification suite");
    add_common(verify_cmd, verify_common);
    verify_cmd->add_option("--seed", seed, "seed for randomized checks (default 20260810)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (reflect_cmd->parsed()) return run_reflect(reflect);
        if (bound_cmd->parsed()) return run_bound(bound);
        if (resonant_cmd->parsed()) {
            if (lam_opt->count() > 0) resonant.lambda0 = resonant_lambda0;
            return run_resonant(resonant);
        }
        if (oracle_cmd->parsed()) {
            if (ol->count() > 0) oracle.lambda = oracle_lambda;
            if (ol0->count() > 0) oracle.lambda0 = oracle_lambda0;
            return run_oracle(oracle);
        }
        if (hardware_cmd->parsed()) return run_hardware(hardware);
        if (verify_cmd->parsed()) return run_verify(seed, verify_common);
    } catch (const cca::oracle::IncompleteRun& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIncompleteRun;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitOk;
}
