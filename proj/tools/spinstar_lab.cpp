// spinstar_lab.cpp — command-line front end: trajectory sweeps, validation
// runs, and figure-data reproduction for the generalized spin-star model.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <spinstarlab/io.hpp>
#include <spinstarlab/spinstar.hpp>
#include <spinstarlab/validation.hpp>

namespace {

using namespace spinstarlab;

struct SweepOptions {
    int n = 100;
    double r = 1.0;
    double alpha_a = 1.0;
    std::string initial = "case1";
    double t_max = 1.0;
    int steps = 2000;
    std::string out;  // empty: stdout
    std::string format = "csv";
};

CentralPair pair_from_name(const std::string& name) {
    return name == "case2" ? kPairUpUp : kPairUpDown;
}

void add_sweep_options(CLI::App* cmd, SweepOptions& o) {
    cmd->add_option("--n", o.n, "bath size N")->check(CLI::PositiveNumber);
    cmd->add_option("--r", o.r, "coupling ratio alpha_B / alpha_A");
    cmd->add_option("--alpha-a", o.alpha_a, "coupling alpha_A (inverse time)");
    cmd->add_option("--initial", o.initial, "initial central pair: case1 = |1,-1>, case2 = |1,1>")
        ->check(CLI::IsMember({"case1", "case2"}));
    cmd->add_option("--t-max", o.t_max, "grid end in alpha_A t")->check(CLI::PositiveNumber);
    cmd->add_option("--steps", o.steps, "grid points")->check(CLI::Range(2, 1000000));
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "svg"}));
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    emit(os);
    if (!os.good()) throw std::runtime_error("write failed: " + path);
    std::cerr << "wrote " << path << '\n';
}

std::string svg_sibling(const std::string& csv_path) {
    if (csv_path.size() >= 4 && csv_path.substr(csv_path.size() - 4) == ".csv") {
        return csv_path.substr(0, csv_path.size() - 4) + ".svg";
    }
    return csv_path + ".svg";
}

std::vector<PlotSeries> sweep_series(const TimeSeries& ts) {
    std::vector<PlotSeries> out(5);
    out[0].label = "b";
    out[1].label = "d";
    out[2].label = "e";
    out[3].label = "cov_xx";
    out[4].label = "concurrence";
    for (std::size_t k = 0; k < ts.grid.size(); ++k) {
        for (auto& s : out) s.x.push_back(ts.grid[k]);
        out[0].y.push_back(ts.points[k].b);
        out[1].y.push_back(ts.points[k].d);
        out[2].y.push_back(ts.points[k].e);
        out[3].y.push_back(ts.points[k].cov_xx);
        out[4].y.push_back(ts.points[k].concurrence);
    }
    return out;
}

int run_sweep(Engine engine, const SweepOptions& o) {
    const SpinStarConfig cfg{o.n, o.alpha_a, o.r * o.alpha_a};
    const TimeSeries ts = trajectory(cfg, pair_from_name(o.initial), o.t_max, o.steps, engine);
    if (o.format == "svg") {
        char title[128];
        std::snprintf(title, sizeof(title), "spin star N=%d r=%g (%s)", o.n, o.r,
                      o.initial.c_str());
        write_file(o.out, [&](std::ostream& os) {
            write_svg_plot(os, title, "alpha_A t", sweep_series(ts));
        });
    } else {
        write_file(o.out, [&](std::ostream& os) { write_sweep_csv(os, ts); });
    }
    return 0;
}

int run_figure(int which, const SweepOptions& o) {
    const int n = 100;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::string title;

    if (which == 1) {
        title = "concurrence, up/down start, N=100";
        names = {"tau_a", "concurrence_r0.1", "concurrence_r1", "concurrence_r10"};
        columns.resize(4);
        for (double r : {0.1, 1.0, 10.0}) {
            const SpinStarConfig cfg{n, o.alpha_a, r * o.alpha_a};
            const TimeSeries ts =
                trajectory(cfg, kPairUpDown, o.t_max, o.steps, Engine::closed_form);
            if (columns[0].empty()) columns[0] = ts.grid;
            std::vector<double> conc;
            for (const auto& p : ts.points) conc.push_back(p.concurrence);
            if (r == 0.1) columns[1] = conc;
            if (r == 1.0) columns[2] = conc;
            if (r == 10.0) columns[3] = conc;
        }
    } else if (which == 2) {
        title = "exchange oscillation, N=100, r=1";
        const SpinStarConfig cfg{n, o.alpha_a, o.alpha_a};
        const TimeSeries ts = trajectory(cfg, kPairUpDown, o.t_max, o.steps, Engine::closed_form);
        names = {"tau_a", "concurrence", "p_up_down", "p_down_up"};
        columns.resize(4);
        columns[0] = ts.grid;
        for (const auto& p : ts.points) {
            columns[1].push_back(p.concurrence);
            columns[2].push_back(p.b);
            columns[3].push_back(p.d);
        }
    } else {
        title = "classical vs quantum correlations, up/up start, N=100, r=10";
        const SpinStarConfig cfg{n, o.alpha_a, 10.0 * o.alpha_a};
        const TimeSeries ts = trajectory(cfg, kPairUpUp, o.t_max, o.steps, Engine::sector);
        names = {"tau_a", "cov_xx", "concurrence"};
        columns.resize(3);
        columns[0] = ts.grid;
        for (const auto& p : ts.points) {
            columns[1].push_back(p.cov_xx);
            columns[2].push_back(p.concurrence);
        }
    }

    const std::string csv_path = o.out.empty() ? "fig" + std::to_string(which) + ".csv" : o.out;
    write_file(csv_path, [&](std::ostream& os) { write_table_csv(os, names, columns); });

    if (o.format == "svg") {
        std::vector<PlotSeries> series(names.size() - 1);
        for (std::size_t s = 0; s + 1 < names.size(); ++s) {
            series[s].label = names[s + 1];
            series[s].x = columns[0];
            series[s].y = columns[s + 1];
        }
        write_file(svg_sibling(csv_path),
                   [&](std::ostream& os) { write_svg_plot(os, title, "alpha_A t", series); });
    }
    return 0;
}

int run_validate() {
    const auto results = run_validation_suite();
    std::printf("%-12s %-14s %-7s %s\n", "deviation", "bound", "status", "check");
    for (const auto& check : results) {
        char bound[32];
        std::snprintf(bound, sizeof(bound), "%s %.1e", check.pass_below_tolerance ? "<=" : "> ",
                      check.tolerance);
        std::printf("%-12.3e %-14s %-7s %s\n", check.deviation, bound,
                    check.pass ? "PASS" : "FAIL", check.name.c_str());
    }
    const bool ok = all_passed(results);
    std::printf("%s\n", ok ? "all checks passed" : "VALIDATION FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized spin-star simulator: two central spins XY-coupled to a spin bath"};
    app.require_subcommand(1);

    SweepOptions opts;
    CLI::App* closed = app.add_subcommand("closed-form", "sample the exact closed-form solution");
    CLI::App* sector = app.add_subcommand("sector", "sample the reduced invariant-subspace engine");
    CLI::App* oracle = app.add_subcommand("oracle", "sample the brute-force full-space engine");
    add_sweep_options(closed, opts);
    add_sweep_options(sector, opts);
    add_sweep_options(oracle, opts);

    int which = 1;
    SweepOptions fig_opts;
    CLI::App* figure = app.add_subcommand("figure", "emit reference figure data");
    figure->add_option("--which", which, "figure number")->check(CLI::Range(1, 3));
    figure->add_option("--t-max", fig_opts.t_max, "grid end in alpha_A t")
        ->check(CLI::PositiveNumber);
    figure->add_option("--steps", fig_opts.steps, "grid points")->check(CLI::Range(2, 1000000));
    figure->add_option("--out", fig_opts.out, "output csv path (default: fig<which>.csv)");
    figure->add_option("--format", fig_opts.format, "csv, or svg to add a plot next to the csv")
        ->check(CLI::IsMember({"csv", "svg"}));

    CLI::App* validate = app.add_subcommand("validate", "run the cross-engine validation suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (closed->parsed()) return run_sweep(Engine::closed_form, opts);
        if (sector->parsed()) return run_sweep(Engine::sector, opts);
        if (oracle->parsed()) return run_sweep(Engine::oracle, opts);
        if (figure->parsed()) return run_figure(which, fig_opts);
        if (validate->parsed()) return run_validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
