#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "stirling/cycle.hpp"
#include "stirling/report_io.hpp"
#include "stirling/sweep.hpp"
#include "stirling/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

stirling::WorkingMedium parse_medium(const std::string& name) {
    if (name == "single") return stirling::WorkingMedium::single_spin();
    if (name == "coupled") return stirling::WorkingMedium::coupled_spins();
    throw std::invalid_argument("unknown medium '" + name + "' (use single or coupled)");
}

stirling::CostModel parse_cost(const std::string& text) {
    if (text == "none") return stirling::CostModel::none();
    if (text == "min-carnot") return stirling::CostModel::min_carnot();
    if (text.rfind("fixed:", 0) == 0) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(text.substr(6), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad fixed cost in '" + text + "'");
        }
        if (used != text.size() - 6)
            throw std::invalid_argument("bad fixed cost in '" + text + "'");
        return stirling::CostModel::fixed(value);
    }
    throw std::invalid_argument("unknown cost model '" + text +
                                "' (use none, min-carnot or fixed:<v>)");
}

// Shared parameter flags for the cycle and sweep subcommands.
struct ParamFlags {
    std::string medium = "single";
    double lambda1 = 0.0;
    double kappa = 0.0;
    double lambda2 = 0.0;
    double j = 0.0;
    double t_hot = 0.0;
    double t_cold = 0.0;
    std::string cost = "min-carnot";

    CLI::Option* lambda1_opt = nullptr;
    CLI::Option* kappa_opt = nullptr;
    CLI::Option* lambda2_opt = nullptr;
    CLI::Option* j_opt = nullptr;
    CLI::Option* t_hot_opt = nullptr;
    CLI::Option* t_cold_opt = nullptr;

    void add_to(CLI::App& app) {
        app.add_option("--medium", medium, "working medium: single or coupled")
            ->capture_default_str();
        lambda1_opt = app.add_option("--lambda1", lambda1, "field at points A and D");
        kappa_opt = app.add_option("--kappa", kappa,
                                   "sets lambda1 = kappa * lambda2 (alternative to --lambda1)");
        lambda2_opt = app.add_option("--lambda2", lambda2, "field at points B and C");
        j_opt = app.add_option("--j", j, "coupling strength (coupled medium)");
        t_hot_opt = app.add_option("--th", t_hot, "hot bath temperature");
        t_cold_opt = app.add_option("--tc", t_cold, "cold bath temperature");
        app.add_option("--cost", cost, "regeneration cost model: none, min-carnot, fixed:<v>")
            ->capture_default_str();
        kappa_opt->excludes(lambda1_opt);
    }

    bool has(const CLI::Option* opt) const { return opt != nullptr && opt->count() > 0; }

    stirling::CycleParams to_params(bool lambda1_required) const {
        stirling::CycleParams p;
        p.medium = parse_medium(medium);
        p.lambda2 = lambda2;
        p.j = j;
        p.t_hot = t_hot;
        p.t_cold = t_cold;
        p.cost_model = parse_cost(cost);
        if (has(kappa_opt)) {
            if (!has(lambda2_opt))
                throw std::invalid_argument("--kappa requires --lambda2");
            p.lambda1 = kappa * lambda2;
        } else if (has(lambda1_opt)) {
            p.lambda1 = lambda1;
        } else if (lambda1_required) {
            throw std::invalid_argument("provide --lambda1 or --kappa");
        }
        return p;
    }
};

void require_flags(const ParamFlags& flags,
                   std::initializer_list<std::pair<const CLI::Option*, const char*>> needed) {
    for (const auto& [opt, name] : needed)
        if (!flags.has(opt))
            throw std::invalid_argument(std::string("missing required flag ") + name);
}

int run_cycle_cmd(const ParamFlags& flags, const std::string& format) {
    require_flags(flags, {{flags.lambda2_opt, "--lambda2"},
                          {flags.t_hot_opt, "--th"},
                          {flags.t_cold_opt, "--tc"}});
    const stirling::CycleReport report = stirling::analyze(flags.to_params(true));
    if (format == "json")
        stirling::write_report_json(std::cout, report);
    else if (format == "csv")
        stirling::write_report_csv(std::cout, report);
    else
        stirling::write_report_kv(std::cout, report);
    return kExitOk;
}

struct SweepFlags {
    std::string knob = "kappa";
    double start = 0.0;
    double stop = 0.0;
    int steps = 181;
    std::string out_path;
    std::string format = "csv";
    bool plot = false;
    bool serial = false;
};

int run_sweep_cmd(const ParamFlags& flags, const SweepFlags& sf) {
    const auto knob = stirling::knob_from_string(sf.knob);
    if (!knob)
        throw std::invalid_argument("unknown knob '" + sf.knob +
                                    "' (kappa, j, lambda1, lambda2, th, tc)");

    // Everything except the swept knob must be pinned on the command line.
    using Need = std::pair<const CLI::Option*, const char*>;
    const Need need_l2{flags.lambda2_opt, "--lambda2"};
    const Need need_th{flags.t_hot_opt, "--th"};
    const Need need_tc{flags.t_cold_opt, "--tc"};
    const bool lambda1_given = flags.has(flags.lambda1_opt) || flags.has(flags.kappa_opt);
    switch (*knob) {
        case stirling::SweepKnob::Kappa:
        case stirling::SweepKnob::Lambda1:
            require_flags(flags, {need_l2, need_th, need_tc});
            break;
        case stirling::SweepKnob::J:
            require_flags(flags, {need_l2, need_th, need_tc});
            if (!lambda1_given)
                throw std::invalid_argument("missing required flag --lambda1 (or --kappa)");
            break;
        case stirling::SweepKnob::Lambda2:
            require_flags(flags, {need_th, need_tc});
            if (!flags.has(flags.lambda1_opt))
                throw std::invalid_argument("missing required flag --lambda1");
            break;
        case stirling::SweepKnob::THot:
            require_flags(flags, {need_l2, need_tc});
            if (!lambda1_given)
                throw std::invalid_argument("missing required flag --lambda1 (or --kappa)");
            break;
        case stirling::SweepKnob::TCold:
            require_flags(flags, {need_l2, need_th});
            if (!lambda1_given)
                throw std::invalid_argument("missing required flag --lambda1 (or --kappa)");
            break;
    }

    stirling::SweepSpec spec;
    spec.knob = *knob;
    spec.start = sf.start;
    spec.stop = sf.stop;
    spec.steps = sf.steps;
    spec.base = flags.to_params(false);

    if (sf.plot && sf.out_path.empty())
        throw std::invalid_argument("--plot requires --out");
    if (sf.plot && sf.format != "csv")
        throw std::invalid_argument("--plot requires --format csv");

    const std::vector<stirling::CycleReport> rows =
        sf.serial ? stirling::evaluate_serial(spec) : stirling::evaluate(spec);

    const auto write_rows = [&](std::ostream& out) {
        if (sf.format == "json")
            stirling::write_json(out, spec, rows);
        else
            stirling::write_csv(out, spec, rows);
    };

    if (sf.out_path.empty()) {
        write_rows(std::cout);
        return kExitOk;
    }
    std::ofstream out(sf.out_path);
    if (!out) throw IoError("cannot open output file " + sf.out_path);
    write_rows(out);
    out.flush();
    if (!out) throw IoError("failed writing output file " + sf.out_path);

    if (sf.plot) {
        const std::string script_path = sf.out_path + ".gp";
        std::ofstream script(script_path);
        if (!script) throw IoError("cannot open plot script " + script_path);
        script << stirling::plot_script(spec, sf.out_path);
        script.flush();
        if (!script) throw IoError("failed writing plot script " + script_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Stirling cycle thermodynamics for small spin media"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // cycle
    ParamFlags cycle_flags;
    std::string cycle_format = "kv";
    CLI::App* cycle_cmd = app.add_subcommand("cycle", "analyze a single cycle");
    cycle_flags.add_to(*cycle_cmd);
    cycle_cmd->add_option("--format", cycle_format, "output format: kv, csv or json")
        ->capture_default_str();
    cycle_cmd->callback([&] { exit_code = run_cycle_cmd(cycle_flags, cycle_format); });

    // sweep
    ParamFlags sweep_params;
    SweepFlags sweep_flags;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate cycles over a parameter grid");
    sweep_params.add_to(*sweep_cmd);
    sweep_cmd->add_option("--knob", sweep_flags.knob,
                          "swept parameter: kappa, j, lambda1, lambda2, th, tc")
        ->required();
    sweep_cmd->add_option("--start", sweep_flags.start, "first grid value")->required();
    sweep_cmd->add_option("--stop", sweep_flags.stop, "last grid value")->required();
    sweep_cmd->add_option("--steps", sweep_flags.steps, "number of grid points (>= 2)")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_flags.out_path, "output file (default: stdout)");
    sweep_cmd->add_option("--format", sweep_flags.format, "output format: csv or json")
        ->capture_default_str();
    sweep_cmd->add_flag("--plot", sweep_flags.plot,
                        "also write a gnuplot script next to --out");
    sweep_cmd->add_flag("--serial", sweep_flags.serial, "use the serial reference evaluator");
    sweep_cmd->callback([&] { exit_code = run_sweep_cmd(sweep_params, sweep_flags); });

    // verify
    stirling::VerifyOptions verify_options;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the numerical property suite");
    verify_cmd->add_option("--trials", verify_options.trials, "randomized identity trials")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_options.seed, "RNG seed")->capture_default_str();
    verify_cmd
        ->add_option("--grid-steps", verify_options.grid_steps,
                     "per-axis resolution of the cycle lattices")
        ->capture_default_str();
    verify_cmd->add_flag("--inject-fault", verify_options.inject_fault, "")->group("");
    verify_cmd->callback([&] {
        const auto results = stirling::run_property_suite(verify_options);
        const int failed = stirling::print_summary(std::cout, results);
        exit_code = failed == 0 ? kExitOk : kExitVerify;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
