#include "synge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "synge/error.hpp"
#include "synge/io.hpp"

namespace synge::cli {

namespace {

struct Output {
    int code = kOk;
    std::string data;
};

struct Common {
    std::string in_path;
    std::string out_path;
    int threads = 1;
};

io::Json read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return io::read(in);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open input file '" + path + "'");
    return io::read(f);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open output file '" + path + "'");
    f << text;
    if (!f) throw InputError("failed writing output file '" + path + "'");
}

Output do_solve(const Common& opt, const GammaWindow& window, std::istream& in) {
    const RiemannInput input = io::parse_problem(read_input(opt.in_path, in), window);
    const RiemannSolution sol = solve(input);
    return {sol.vacuum ? kVacuum : kOk, io::dump(io::solution_json(sol)) + "\n"};
}

Output do_sample(const Common& opt, const GammaWindow& window, std::istream& in, double xi_min,
                 double xi_max, std::size_t n) {
    if (!(xi_max > xi_min)) throw InputError("--xi-max must exceed --xi-min");
    const RiemannInput input = io::parse_problem(read_input(opt.in_path, in), window);
    const RiemannSolution sol = solve(input);
    const std::vector<double> xs = linear_grid(xi_min, xi_max, n);
    std::vector<SampleResult> rows(xs.size());
    parallel_for(xs.size(), opt.threads, [&](std::size_t i) { rows[i] = sample(sol, xs[i]); });
    std::ostringstream out;
    out << "xi,rho,v,p,gamma,shat,region\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const FluidState& s = rows[i].state;
        out << io::csv_number(xs[i]) << ',' << io::csv_number(s.rho) << ',' << io::csv_number(s.v)
            << ',' << io::csv_number(s.p) << ',' << io::csv_number(s.gamma) << ','
            << io::csv_number(s.shat) << ',' << to_string(rows[i].region) << '\n';
    }
    return {kOk, out.str()};
}

std::vector<double> pressure_grid(double p_min, double p_max, std::size_t n,
                                  const std::string& spacing) {
    if (!(p_max > p_min)) throw InputError("--p-max must exceed --p-min");
    return spacing == "linear" ? linear_grid(p_min, p_max, n) : log_grid(p_min, p_max, n);
}

Output do_curves(const Common& opt, const Gas& gas, const Primitive& anchor_prim, int family,
                 double p_min, double p_max, std::size_t n, const std::string& spacing) {
    const FluidState anchor = state_from_primitive(gas, anchor_prim.rho, anchor_prim.v, anchor_prim.p);
    std::vector<double> grid = pressure_grid(p_min, p_max, n, spacing);
    if (anchor.p >= p_min && anchor.p <= p_max) {
        // Points within rounding of the anchor become the anchor itself.
        for (double& p : grid) {
            if (std::fabs(p - anchor.p) <= 1e-12 * anchor.p) p = anchor.p;
        }
        grid.push_back(anchor.p);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    const CurveTable table = wave_curve(gas, anchor, family_from_index(family), grid, opt.threads);
    std::ostringstream out;
    io::write_curve_csv(out, table);
    return {kOk, out.str()};
}

Output do_lambda(const GammaWindow& window, const std::string& gas_name, double g_min,
                 double g_max, std::size_t n) {
    if (!(g_max > g_min)) throw InputError("--gamma-max must exceed --gamma-min");
    const std::vector<double> gs = log_grid(g_min, g_max, n);
    const Gas mono(GasKind::Monatomic, Units{}, window);
    const Gas dia(GasKind::Diatomic, Units{}, window);
    for (double g : {g_min, g_max}) check_window(mono, g, "lambda grid");
    std::ostringstream out;
    if (gas_name == "both") {
        out << "gamma,lambda3_monatomic,lambda3_diatomic\n";
        for (double g : gs) {
            out << io::csv_number(g) << ',' << io::csv_number(rest_frame_speed(mono, g)) << ','
                << io::csv_number(rest_frame_speed(dia, g)) << '\n';
        }
    } else {
        const Gas& gas = gas_name == "monatomic" ? mono : dia;
        out << "gamma,lambda3\n";
        for (double g : gs) {
            out << io::csv_number(g) << ',' << io::csv_number(rest_frame_speed(gas, g)) << '\n';
        }
    }
    return {kOk, out.str()};
}

Output do_entropy(const Common& opt, const Gas& gas, const Primitive& anchor_prim, int family,
                  double p_min, double p_max, std::size_t n) {
    const FluidState anchor = state_from_primitive(gas, anchor_prim.rho, anchor_prim.v, anchor_prim.p);
    if (p_min <= 0) p_min = anchor.p;
    if (p_min < anchor.p) throw InputError("--p-min must not be below the anchor pressure");
    const std::vector<double> grid = pressure_grid(p_min, p_max, n, "log");
    const Family f = family_from_index(family);
    struct Row {
        double sbar, eta;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::size_t i) {
        const ShockPoint sp = shock_state(gas, anchor, f, grid[i]);
        // Physical order: the family 1 anchor is upstream on the left, the
        // family 3 anchor upstream on the right.
        const FluidState& left = f == Family::One ? anchor : sp.state;
        const FluidState& right = f == Family::One ? sp.state : anchor;
        rows[i] = {rest_frame_shock_speed(gas, left, sp.s) / gas.units.c,
                   entropy_production(gas, left, right, sp.s)};
    });
    std::ostringstream out;
    out << "s_bar,eta_hat\n";
    for (const Row& r : rows) out << io::csv_number(r.sbar) << ',' << io::csv_number(r.eta) << '\n';
    return {kOk, out.str()};
}

Output do_verify(const Common& opt, const std::string& gas_name, const VerifyGrid& grid,
                 const std::string& format) {
    const CheckReport report = run_checks(parse_gas_filter(gas_name), grid, opt.threads);
    std::string data = format == "json" ? io::dump(io::report_json(report)) + "\n"
                                        : format_table(report);
    return {report.all_passed() ? kOk : kFailure, data};
}

int error_exit(std::ostream& err, const char* kind, const std::string& message, int code,
               const GammaWindow* window = nullptr) {
    io::Json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    if (window) j["gamma_window"] = {window->lo, window->hi};
    err << io::dump(j, -1) << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact Riemann solver for relativistic Euler equations with Synge gases"};
    app.name("synge");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);

    Common opt;
    std::string gas_name = "monatomic";
    Primitive anchor{1.0, 0.0, 1.0};
    int family = 1;
    double p_min = 0, p_max = 0, xi_min = -1, xi_max = 1;
    double g_min = 1e-4, g_max = 1e3;
    std::size_t n = 0;
    std::string spacing = "log", format = "table";
    VerifyGrid vgrid;
    bool use_default = false, no_refine = false;

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "Output file (default: standard output)");
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
    };
    auto add_anchor = [&](CLI::App* sub) {
        sub->add_option("--gas", gas_name, "monatomic or diatomic")
            ->check(CLI::IsMember({"monatomic", "diatomic"}));
        sub->add_option("--rho", anchor.rho, "Anchor density")->check(CLI::PositiveNumber);
        sub->add_option("--v", anchor.v, "Anchor velocity in units of c");
        sub->add_option("--p", anchor.p, "Anchor pressure")->check(CLI::PositiveNumber);
        sub->add_option("--family", family, "Wave family, 1 or 3")->check(CLI::IsMember({1, 3}));
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a Riemann problem given as JSON");
    solve_cmd->add_option("--in", opt.in_path, "Problem JSON (default: standard input)");
    add_out(solve_cmd);

    CLI::App* sample_cmd = app.add_subcommand("sample", "Sample a solution on an xi grid");
    sample_cmd->add_option("--in", opt.in_path, "Solution or problem JSON (default: standard input)");
    sample_cmd->add_option("--xi-min", xi_min, "First xi = x/t")->required();
    sample_cmd->add_option("--xi-max", xi_max, "Last xi = x/t")->required();
    sample_cmd->add_option("--n", n, "Number of samples")->required()->check(CLI::Range(2, 10000000));
    add_out(sample_cmd);
    add_threads(sample_cmd);

    CLI::App* curves_cmd = app.add_subcommand("curves", "Tabulate a composite wave curve");
    add_anchor(curves_cmd);
    curves_cmd->add_option("--p-min", p_min, "Smallest pressure")->required()->check(CLI::PositiveNumber);
    curves_cmd->add_option("--p-max", p_max, "Largest pressure")->required()->check(CLI::PositiveNumber);
    curves_cmd->add_option("--n", n, "Grid points")->check(CLI::Range(2, 10000000));
    curves_cmd->add_option("--spacing", spacing, "log or linear")->check(CLI::IsMember({"log", "linear"}));
    add_out(curves_cmd);
    add_threads(curves_cmd);

    CLI::App* lambda_cmd = app.add_subcommand("lambda", "Rest-frame characteristic speed versus gamma");
    lambda_cmd->add_option("--gas", gas_name, "monatomic, diatomic or both")
        ->check(CLI::IsMember({"monatomic", "diatomic", "both"}));
    lambda_cmd->add_option("--gamma-min", g_min, "Smallest gamma")->check(CLI::PositiveNumber);
    lambda_cmd->add_option("--gamma-max", g_max, "Largest gamma")->check(CLI::PositiveNumber);
    lambda_cmd->add_option("--n", n, "Grid points")->check(CLI::Range(2, 10000000));
    add_out(lambda_cmd);

    CLI::App* entropy_cmd =
        app.add_subcommand("entropy-production", "Entropy production along a shock curve");
    add_anchor(entropy_cmd);
    entropy_cmd->add_option("--p-min", p_min, "Smallest downstream pressure (default: anchor p)")
        ->check(CLI::PositiveNumber);
    entropy_cmd->add_option("--p-max", p_max, "Largest downstream pressure")
        ->required()
        ->check(CLI::PositiveNumber);
    entropy_cmd->add_option("--n", n, "Grid points")->check(CLI::Range(2, 10000000));
    add_out(entropy_cmd);
    add_threads(entropy_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check the inequality catalog on a gamma grid");
    CLI::Option* def = verify_cmd->add_flag("--default", use_default, "Default grid, both gases");
    std::string verify_gas = "both";
    verify_cmd->add_option("--gas", verify_gas, "monatomic, diatomic or both")
        ->check(CLI::IsMember({"monatomic", "diatomic", "both"}))
        ->excludes(def);
    verify_cmd->add_option("--gamma-min", vgrid.gamma_min, "Smallest gamma")
        ->check(CLI::PositiveNumber)
        ->excludes(def);
    verify_cmd->add_option("--gamma-max", vgrid.gamma_max, "Largest gamma")
        ->check(CLI::PositiveNumber)
        ->excludes(def);
    verify_cmd->add_option("--points", vgrid.points, "Base grid points")
        ->check(CLI::Range(2, 100000000))
        ->excludes(def);
    verify_cmd->add_option("--spacing", spacing, "log or linear")
        ->check(CLI::IsMember({"log", "linear"}))
        ->excludes(def);
    verify_cmd->add_flag("--no-refine", no_refine, "Skip the split-point refinement")->excludes(def);
    verify_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    add_out(verify_cmd);
    add_threads(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        return error_exit(err, "usage", e.what(), kInput);
    }

    GammaWindow window;
    try {
        window = io::window_from_env();
    } catch (const InputError& e) {
        return error_exit(err, e.kind(), e.what(), kInput);
    }

    CLI::App* cmd = app.get_subcommands().front();
    try {
        Output result;
        const Gas gas(gas_name == "diatomic" ? GasKind::Diatomic : GasKind::Monatomic, Units{},
                      window);
        if (cmd == solve_cmd) {
            result = do_solve(opt, window, in);
        } else if (cmd == sample_cmd) {
            result = do_sample(opt, window, in, xi_min, xi_max, n);
        } else if (cmd == curves_cmd) {
            result = do_curves(opt, gas, anchor, family, p_min, p_max, n ? n : 201, spacing);
        } else if (cmd == lambda_cmd) {
            result = do_lambda(window, gas_name, g_min, g_max, n ? n : 1000);
        } else if (cmd == entropy_cmd) {
            result = do_entropy(opt, gas, anchor, family, p_min, p_max, n ? n : 50);
        } else {
            if (!use_default) {
                vgrid.spacing = spacing == "linear" ? Spacing::Linear : Spacing::Log;
                vgrid.refine = !no_refine;
            } else {
                vgrid = VerifyGrid{};
                verify_gas = "both";
            }
            result = do_verify(opt, verify_gas, vgrid, format);
        }

        if (opt.out_path.empty()) {
            out << result.data;
        } else {
            write_file(opt.out_path, result.data);
            io::Json meta;
            meta["command"] = cmd->get_name();
            meta["args"] = args;
            meta["version"] = kVersion;
            meta["gamma_window"] = {window.lo, window.hi};
            meta["exit_code"] = result.code;
            write_file(opt.out_path + ".meta.json", io::dump(meta) + "\n");
        }
        return result.code;
    } catch (const InputError& e) {
        return error_exit(err, e.kind(), e.what(), kInput);
    } catch (const DomainError& e) {
        return error_exit(err, e.kind(), e.what(), kDomain);
    } catch (const WindowError& e) {
        return error_exit(err, e.kind(), e.what(), kWindow, &window);
    } catch (const BracketError& e) {
        return error_exit(err, e.kind(), e.what(), kBracket);
    } catch (const ConvergenceError& e) {
        return error_exit(err, e.kind(), e.what(), kConvergence);
    } catch (const ToleranceError& e) {
        return error_exit(err, e.kind(), e.what(), kConvergence);
    } catch (const Error& e) {
        return error_exit(err, e.kind(), e.what(), kFailure);
    } catch (const std::exception& e) {
        return error_exit(err, "internal", e.what(), kFailure);
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace synge::cli
