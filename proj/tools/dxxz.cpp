// Command-line front end: single-point evaluation, parameter sweeps,
// threshold search, figure-preset reproduction and oracle validation, all
// emitting deterministic CSV (12 significant digits, LF endings, '.'
// decimal separator).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dxxz/entanglement.hpp"
#include "dxxz/oracle.hpp"
#include "dxxz/rdm.hpp"
#include "dxxz/spectra.hpp"
#include "dxxz/transfer.hpp"
#include "dxxz/validate.hpp"

namespace {

constexpr const char* kVersion = "dxxz 0.1.0";

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

struct Params {
    double J = 1.0, Delta = 1.0, J1 = 1.0, h = 0.0, T = 1.0;
    double alpha = 0.0, gamma = 0.0, eta = 0.0;
    std::string N = "inf";

    dxxz::ChainSpec spec() const {
        dxxz::ChainSpec s;
        s.host = {J, Delta, J1, h};
        s.imp = {alpha, gamma, eta};
        s.thermal = dxxz::ThermalState::from_temperature(T);
        if (N == "inf") {
            s.geometry = dxxz::ThermodynamicLimit{};
        } else {
            s.geometry = dxxz::FiniteRing{std::stoi(N)};
        }
        return s;
    }

    std::string echo() const {
        std::ostringstream os;
        os << "J=" << J << " Delta=" << Delta << " J1=" << J1 << " h=" << h
           << " T=" << T << " alpha=" << alpha << " gamma=" << gamma
           << " eta=" << eta << " N=" << N;
        return os.str();
    }
};

void add_param_flags(CLI::App* cmd, Params& p, bool require_t = true) {
    cmd->set_help_flag("--help", "print help");  // frees -h / --h for the field
    cmd->add_option("--J", p.J, "XXZ exchange");
    cmd->add_option("--Delta", p.Delta, "zz anisotropy");
    cmd->add_option("--J1", p.J1, "Ising-Heisenberg coupling");
    cmd->add_option("--h", p.h, "magnetic field");
    if (require_t) cmd->add_option("--T", p.T, "temperature");
    cmd->add_option("--alpha", p.alpha, "impurity exchange strength");
    cmd->add_option("--gamma", p.gamma, "impurity anisotropy strength");
    cmd->add_option("--eta", p.eta, "impurity Ising-coupling strength");
    cmd->add_option("--N", p.N, "cell count (>= 3) or 'inf'");
}

struct Output {
    std::optional<std::string> path;
    std::ostringstream buf;

    void flush() {
        if (path) {
            std::ofstream f(*path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file");
            f << buf.str();
        } else {
            std::cout << buf.str();
        }
    }
};

struct RunRecord {
    Params p;
    dxxz::DimerState rho;
    double lambda_plus, lambda_minus;
    double c;
};

RunRecord evaluate(const Params& p) {
    const dxxz::ChainSpec spec = p.spec();
    const auto d = dxxz::decompose(spec);
    RunRecord rec;
    rec.p = p;
    rec.rho = dxxz::reduced_density(spec);
    const double restore = -d.beta * d.host.shift;
    rec.lambda_plus = std::exp(std::log(d.lambda_plus) + restore);
    rec.lambda_minus =
        d.lambda_minus == 0.0
            ? 0.0
            : (d.lambda_minus > 0 ? 1.0 : -1.0) *
                  std::exp(std::log(std::abs(d.lambda_minus)) + restore);
    rec.c = dxxz::concurrence_at(spec).c;
    return rec;
}

const char* kRecordHeader =
    "J,Delta,J1,h,T,alpha,gamma,eta,N,rho11,rho22,rho23,rho44,"
    "lambda_plus,lambda_minus,C";

void emit_record(std::ostream& os, const RunRecord& r) {
    const Params& p = r.p;
    os << num(p.J) << ',' << num(p.Delta) << ',' << num(p.J1) << ','
       << num(p.h) << ',' << num(p.T) << ',' << num(p.alpha) << ','
       << num(p.gamma) << ',' << num(p.eta) << ',' << p.N << ','
       << num(r.rho.rho11) << ',' << num(r.rho.rho22) << ','
       << num(r.rho.rho23) << ',' << num(r.rho.rho44) << ','
       << num(r.lambda_plus) << ',' << num(r.lambda_minus) << ','
       << num(r.c) << '\n';
}

// --- sweeps ---------------------------------------------------------------

struct SweepSpec {
    std::string variable;
    double start = 0.0, stop = 0.0;
    int steps = 0;
    bool log = false;

    double at(int i) const {
        const double t = static_cast<double>(i) / (steps - 1);
        if (log) {
            return start * std::pow(stop / start, t);
        }
        return start + (stop - start) * t;
    }
};

SweepSpec parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        throw CLI::ValidationError("--sweep", "expected var=start:stop:steps[:log]");
    }
    SweepSpec s;
    s.variable = text.substr(0, eq);
    static const std::vector<std::string> allowed = {
        "T", "h", "Delta", "J", "J1", "alpha", "gamma", "eta"};
    if (std::find(allowed.begin(), allowed.end(), s.variable) ==
        allowed.end()) {
        throw CLI::ValidationError("--sweep", "unknown variable " + s.variable);
    }
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(eq + 1));
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() < 3 || parts.size() > 4) {
        throw CLI::ValidationError("--sweep", "expected start:stop:steps[:log]");
    }
    s.start = std::stod(parts[0]);
    s.stop = std::stod(parts[1]);
    s.steps = std::stoi(parts[2]);
    if (parts.size() == 4) {
        if (parts[3] != "log") {
            throw CLI::ValidationError("--sweep", "scale must be 'log'");
        }
        s.log = true;
    }
    if (s.steps < 2) throw CLI::ValidationError("--sweep", "steps must be >= 2");
    if (s.start == s.stop) {
        throw CLI::ValidationError("--sweep", "start must differ from stop");
    }
    if (s.log && (s.start <= 0.0 || s.stop <= 0.0)) {
        throw CLI::ValidationError("--sweep", "log scale requires positive range");
    }
    return s;
}

void apply_variable(Params& p, const std::string& var, double value) {
    if (var == "T") p.T = value;
    else if (var == "h") p.h = value;
    else if (var == "Delta") p.Delta = value;
    else if (var == "J") p.J = value;
    else if (var == "J1") p.J1 = value;
    else if (var == "alpha") p.alpha = value;
    else if (var == "gamma") p.gamma = value;
    else if (var == "eta") p.eta = value;
}

// --- figure presets -------------------------------------------------------

struct FigurePreset {
    std::string sweep_var;
    SweepSpec sweep;
    std::string curve_var;          // per-curve parameter of the preset
    std::vector<double> curves;
    double delta;
    double fixed_h = 0.0;           // used when curve_var == "T"
    dxxz::ImpurityStrengths imp;
    std::string note;
};

FigurePreset figure_preset(const std::string& id) {
    FigurePreset f;
    f.imp = {0.0, 0.8, -0.8};
    if (id == "2a" || id == "2b") {
        f.sweep = {"T", 0.01, 3.0, 300, false};
        f.curve_var = "h";
        f.delta = id == "2a" ? 1.0 : 2.0;
        f.curves = id == "2a" ? std::vector<double>{0.5, 1.0}
                              : std::vector<double>{1.6, 2.4};
        f.note = "h list is a preset choice";
    } else if (id == "3a" || id == "3b") {
        f.sweep = {"Delta", 0.0, 3.0, 301, false};
        f.curve_var = "T";
        f.delta = 0.0;  // swept
        f.fixed_h = id == "3a" ? 1.2 : 2.5;
        f.curves = {0.1, 0.3, 0.5};
        f.note = "T list is a preset choice";
    } else if (id == "4a" || id == "4b") {
        f.sweep = {"h", 0.0, 3.0, 301, false};
        f.curve_var = "T";
        f.delta = id == "4a" ? 0.9 : 1.0;
        f.curves = {0.1, 0.3, 0.5};
        f.note = "T list is a preset choice";
    } else if (id == "5a" || id == "5b") {
        f.sweep = {"T", 0.01, 3.0, 300, false};
        f.curve_var = "h";
        f.delta = 2.0;
        f.curves = {1.6, 2.4};
        f.imp = id == "5a" ? dxxz::ImpurityStrengths{0.0, 0.0, -1.0}
                           : dxxz::ImpurityStrengths{-1.0, 0.0, 0.0};
        f.note = "none";
    } else {
        throw CLI::ValidationError("--figure", "unknown figure id " + id);
    }
    f.sweep_var = f.sweep.variable;
    return f;
}

void run_figure(Output& out, const std::string& id) {
    const FigurePreset f = figure_preset(id);
    out.buf << "# " << kVersion << " | figure=" << id << " J=1 J1=1"
            << " Delta=" << (f.sweep_var == "Delta" ? std::string("sweep")
                                                    : std::to_string(f.delta))
            << (f.curve_var == "T" ? " h=" + std::to_string(f.fixed_h) : "")
            << " alpha=" << f.imp.alpha << " gamma=" << f.imp.gamma
            << " eta=" << f.imp.eta << " N=inf | preset-choice: " << f.note
            << "\n";
    out.buf << f.sweep_var << ',' << f.curve_var << ",C_hom,C_imp\n";
    for (double curve : f.curves) {
        for (int i = 0; i < f.sweep.steps; ++i) {
            const double x = f.sweep.at(i);
            Params hom;
            hom.J = 1.0;
            hom.J1 = 1.0;
            hom.Delta = f.delta;
            if (f.curve_var == "h") {
                hom.h = curve;
            } else {
                hom.T = curve;
                hom.h = f.fixed_h;
            }
            apply_variable(hom, f.sweep_var, x);
            Params imp = hom;
            imp.alpha = f.imp.alpha;
            imp.gamma = f.imp.gamma;
            imp.eta = f.imp.eta;
            const double c_hom = dxxz::concurrence_at(hom.spec()).c;
            const double c_imp = dxxz::concurrence_at(imp.spec()).c;
            out.buf << num(x) << ',' << num(curve) << ',' << num(c_hom) << ','
                    << num(c_imp) << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for thermal entanglement of the isolated XXZ "
                 "dimer in an Ising-XXZ diamond chain with two impurities"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    std::string out_path;
    app.add_option("--out", out_path, "write CSV to FILE instead of stdout");

    Params p_point, p_sweep, p_thresh, p_spec;
    auto* point = app.add_subcommand("point", "evaluate one parameter set");
    add_param_flags(point, p_point);

    auto* sweep = app.add_subcommand("sweep", "1-D/2-D parameter sweep");
    add_param_flags(sweep, p_sweep);
    std::vector<std::string> sweep_texts;
    std::string figure_id;
    sweep->add_option("--sweep", sweep_texts,
                      "var=start:stop:steps[:log], up to twice");
    sweep->add_option("--figure", figure_id,
                      "figure preset: 2a|2b|3a|3b|4a|4b|5a|5b");

    auto* thresh = app.add_subcommand("threshold",
                                      "temperature where C first vanishes");
    add_param_flags(thresh, p_thresh, /*require_t=*/false);
    double t_max = 5.0, thr_tol = 1e-6;
    thresh->add_option("--Tmax", t_max, "search upper bound");
    thresh->add_option("--tol", thr_tol, "bisection tolerance");

    auto* validate = app.add_subcommand("validate",
                                        "oracle comparison battery");
    dxxz::ValidationOptions vopts;
    int validate_n = 6;
    validate->add_option("--seed", vopts.seed, "battery RNG seed");
    validate->add_option("--specs", vopts.specs_per_n, "specs per N");
    validate->add_option("--N", validate_n, "largest ring size (3..24)");
    validate->add_option("--tol", vopts.tol, "acceptance tolerance");
    validate->add_flag("--full-hilbert", vopts.full_hilbert,
                       "include the dense-diagonalization cross-check");
    validate->add_flag("--inject-fault", vopts.inject_fault)->group("");

    auto* spectrum = app.add_subcommand(
        "spectrum", "plaquette eigenenergies per edge configuration");
    add_param_flags(spectrum, p_spec, /*require_t=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    if (!out_path.empty()) out.path = out_path;

    try {
        if (point->parsed()) {
            out.buf << "# " << kVersion << " | point " << p_point.echo()
                    << "\n" << kRecordHeader << "\n";
            emit_record(out.buf, evaluate(p_point));
        } else if (sweep->parsed()) {
            if (!figure_id.empty()) {
                run_figure(out, figure_id);
            } else {
                if (sweep_texts.empty() || sweep_texts.size() > 2) {
                    std::cerr << "sweep: give --figure or 1-2 --sweep specs\n";
                    return 2;
                }
                std::vector<SweepSpec> specs;
                for (const auto& t : sweep_texts) {
                    specs.push_back(parse_sweep(t));
                }
                if (specs.size() == 2 &&
                    specs[0].variable == specs[1].variable) {
                    std::cerr << "sweep: variables must be distinct\n";
                    return 2;
                }
                out.buf << "# " << kVersion << " | sweep " << p_sweep.echo();
                for (const auto& s : specs) {
                    out.buf << " | " << s.variable << ":" << num(s.start)
                            << ".." << num(s.stop) << " steps=" << s.steps
                            << (s.log ? " log" : " linear");
                }
                out.buf << "\n" << kRecordHeader << "\n";
                const int outer = specs[0].steps;
                const int inner = specs.size() == 2 ? specs[1].steps : 1;
                for (int i = 0; i < outer; ++i) {
                    for (int j = 0; j < inner; ++j) {
                        Params p = p_sweep;
                        apply_variable(p, specs[0].variable, specs[0].at(i));
                        if (specs.size() == 2) {
                            apply_variable(p, specs[1].variable,
                                           specs[1].at(j));
                        }
                        emit_record(out.buf, evaluate(p));
                    }
                }
            }
        } else if (thresh->parsed()) {
            const auto res =
                dxxz::threshold_temperature(p_thresh.spec(), t_max, thr_tol);
            out.buf << "# " << kVersion << " | threshold " << p_thresh.echo()
                    << " Tmax=" << t_max << " tol=" << thr_tol << "\n";
            out.buf << "T_th,status,bracket_lo,bracket_hi,reentrant\n";
            const char* status =
                res.status == dxxz::ThresholdStatus::found
                    ? "found"
                    : res.status == dxxz::ThresholdStatus::never_entangled
                          ? "never-entangled"
                          : "entangled-at-Tmax";
            out.buf << (res.status == dxxz::ThresholdStatus::never_entangled
                            ? ""
                            : num(res.t_threshold))
                    << ',' << status << ',' << num(res.bracket_lo) << ','
                    << num(res.bracket_hi) << ','
                    << (res.reentrant ? 1 : 0) << '\n';
        } else if (validate->parsed()) {
            if (validate_n < 3 || validate_n > 24) {
                std::cerr << "validate: --N must be in [3,24]\n";
                return 2;
            }
            vopts.n_max = validate_n;
            vopts.n_min = std::min(3, validate_n);
            const auto rep = dxxz::run_validation(vopts);
            out.buf << "# " << kVersion << " | validate seed=" << vopts.seed
                    << " specs=" << vopts.specs_per_n << " N=3.." << vopts.n_max
                    << (vopts.full_hilbert ? " full-hilbert" : "") << "\n";
            out.buf << rep.summary << "\n";
            if (!rep.pass) out.buf << "worst: " << rep.worst_spec << "\n";
            out.flush();
            return rep.pass ? 0 : 1;
        } else if (spectrum->parsed()) {
            out.buf << "# " << kVersion << " | spectrum " << p_spec.echo()
                    << "\n";
            out.buf << "plaquette,mu_left,mu_right,eps1,eps2,eps3,eps4\n";
            const dxxz::CouplingSet host = {p_spec.J, p_spec.Delta, p_spec.J1,
                                            p_spec.h};
            const dxxz::CouplingSet imp = dxxz::effective_couplings(
                host, {p_spec.alpha, p_spec.gamma, p_spec.eta});
            for (const auto& [label, c] :
                 {std::pair{"host", host}, std::pair{"impurity", imp}}) {
                for (int l = 0; l < 2; ++l) {
                    for (int r = 0; r < 2; ++r) {
                        const auto s = dxxz::closed_form_energies(
                            c, dxxz::edge_spins(l, r));
                        out.buf << label << ',' << (l == 0 ? "+1/2" : "-1/2")
                                << ',' << (r == 0 ? "+1/2" : "-1/2");
                        for (double e : s.energies) out.buf << ',' << num(e);
                        out.buf << '\n';
                    }
                }
            }
        }
        out.flush();
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
