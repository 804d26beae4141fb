// homc command-line front end: analyze higher-order Markov chains given as
// stochastic transition tensors in JSON form. Exit codes: 0 for any
// successfully computed report (cycles and initial-dependent limits
// included), 1 for input or validation problems, 2 when a size cap or an
// iteration budget cuts the computation short.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homc/classify.hpp"
#include "homc/io.hpp"
#include "homc/limits.hpp"
#include "homc/reduced.hpp"
#include "homc/simulate.hpp"
#include "homc/tensor.hpp"

namespace {

struct CommonOpts {
    std::string input;
    std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("input", c.input, "tensor JSON file")->required();
    cmd->add_option("-o,--output", c.output, "write the report here instead of stdout");
}

void add_caps(CLI::App* cmd, homc::Caps& caps) {
    cmd->add_option("--max-entries", caps.max_entries, "dense tensor entry cap");
    cmd->add_option("--max-reduced-dim", caps.max_reduced_dim, "reduced matrix side cap");
    cmd->add_option("--max-subset-states", caps.max_subset_states, "subset enumeration cap");
    cmd->add_option("--pattern-budget", caps.pattern_budget, "pattern trace step budget (0 = N^2+N)");
}

void write_report(const CommonOpts& c, const std::string& report) {
    if (c.output.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw homc::ArgumentError("cannot write file: " + c.output);
    out << report;
}

homc::MultiIndex parse_history_literal(const std::string& text) {
    homc::MultiIndex states;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            states.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw homc::ArgumentError("bad state literal \"" + part + "\" in history \"" + text + "\"");
        }
    }
    if (states.empty()) throw homc::ArgumentError("empty history literal");
    return states;
}

/// Point mass on the given oldest-first history (X_1, ..., X_{m-1}),
/// expressed in the most-recent-first joint convention.
homc::JointDistribution point_mass(const homc::MultiIndex& oldest_first, int order, int dim) {
    if (static_cast<int>(oldest_first.size()) != order - 1) {
        throw homc::ShapeError("history literal has " + std::to_string(oldest_first.size()) +
                               " states, expected m-1 = " + std::to_string(order - 1));
    }
    homc::MultiIndex recent_first(oldest_first.rbegin(), oldest_first.rend());
    const std::int64_t n_ctx = homc::checked_pow(dim, order - 1, std::numeric_limits<std::int64_t>::max());
    std::vector<double> probs(static_cast<std::size_t>(n_ctx), 0.0);
    probs[static_cast<std::size_t>(homc::to_linear(recent_first, dim) - 1)] = 1.0;
    return {std::move(probs)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of higher-order Markov chains given as stochastic transition tensors"};
    app.require_subcommand(1);

    homc::Caps caps;

    CommonOpts c_validate;
    double validate_tol = homc::kStochasticTol;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check stochasticity and report violations");
    add_common(cmd_validate, c_validate);
    add_caps(cmd_validate, caps);
    cmd_validate->add_option("--tol", validate_tol, "stochasticity tolerance");

    CommonOpts c_reduce;
    CLI::App* cmd_reduce = app.add_subcommand("reduce", "emit the reduced first-order transition matrix Q");
    add_common(cmd_reduce, c_reduce);
    add_caps(cmd_reduce, caps);

    CommonOpts c_power;
    std::int64_t power_k = 1;
    CLI::App* cmd_power = app.add_subcommand("power", "emit the k-step transition tensor");
    add_common(cmd_power, c_power);
    add_caps(cmd_power, caps);
    cmd_power->add_option("-k,--k", power_k, "step count (>= 0)")->required();

    CommonOpts c_classify;
    CLI::App* cmd_classify = app.add_subcommand("classify", "decide irreducibility, ergodicity, regularity");
    add_common(cmd_classify, c_classify);
    add_caps(cmd_classify, caps);

    CommonOpts c_limit;
    homc::LimitOptions limit_opts;
    CLI::App* cmd_limit = app.add_subcommand("limit", "classify the limit of the tensor power sequence");
    add_common(cmd_limit, c_limit);
    add_caps(cmd_limit, caps);
    cmd_limit->add_option("--tol", limit_opts.tol, "convergence tolerance");
    cmd_limit->add_option("--max-iter", limit_opts.max_iter, "iteration budget");
    cmd_limit->add_option("--window", limit_opts.window, "cycle-detection lookback");
    cmd_limit->add_option("--patience", limit_opts.patience, "stable steps before a general limit (0 = 2m)");

    CommonOpts c_evolve;
    std::int64_t evolve_steps = 1;
    std::string evolve_initial;
    std::string evolve_initial_file;
    CLI::App* cmd_evolve = app.add_subcommand("evolve", "marginal distributions x_m, x_{m+1}, ...");
    add_common(cmd_evolve, c_evolve);
    add_caps(cmd_evolve, caps);
    cmd_evolve->add_option("--steps", evolve_steps, "number of marginals to emit")->required();
    cmd_evolve->add_option("--initial", evolve_initial,
                           "starting history X_1,...,X_{m-1} as comma-separated states (oldest first)");
    cmd_evolve->add_option("--initial-file", evolve_initial_file,
                           "joint distribution JSON for (X_{m-1},...,X_1), most recent first");

    CommonOpts c_sim;
    std::int64_t sim_steps = 0;
    std::int64_t sim_burn_in = 0;
    std::uint64_t sim_seed = 0;
    std::string sim_initial;
    CLI::App* cmd_sim = app.add_subcommand("simulate", "sample one trajectory and its empirical distribution");
    add_common(cmd_sim, c_sim);
    add_caps(cmd_sim, caps);
    cmd_sim->add_option("--steps", sim_steps, "total trajectory length T (>= m-1)")->required();
    cmd_sim->add_option("--seed", sim_seed, "RNG seed")->required();
    cmd_sim->add_option("--burn-in", sim_burn_in, "positions to drop before counting frequencies");
    cmd_sim->add_option("--initial", sim_initial,
                        "starting history X_1,...,X_{m-1} as comma-separated states (oldest first)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_validate) {
            const homc::StochasticTensor t = homc::load_tensor(c_validate.input, caps);
            const homc::ValidationReport report = homc::validate(t, validate_tol);
            write_report(c_validate, homc::emit_validation(report));
            return report.valid() ? 0 : 1;
        }
        if (*cmd_reduce) {
            const homc::StochasticTensor t = homc::load_tensor(c_reduce.input, caps);
            write_report(c_reduce, homc::emit_reduced(homc::build_reduced(t, caps)));
            return 0;
        }
        if (*cmd_power) {
            const homc::StochasticTensor t = homc::load_tensor(c_power.input, caps);
            write_report(c_power, homc::emit_tensor(homc::kstep(t, power_k)));
            return 0;
        }
        if (*cmd_classify) {
            const homc::StochasticTensor t = homc::load_tensor(c_classify.input, caps);
            write_report(c_classify, homc::emit_classification(homc::classify(t, caps)));
            return 0;
        }
        if (*cmd_limit) {
            const homc::StochasticTensor t = homc::load_tensor(c_limit.input, caps);
            const homc::LimitOutcome outcome = homc::limit_tensor(t, limit_opts);
            if (outcome.kind == homc::LimitKind::RankOne) {
                const homc::StateDistribution pi_eigen =
                    homc::limiting_distribution_eig(t, limit_opts.tol, limit_opts.max_iter, caps);
                write_report(c_limit, homc::emit_limit_outcome(outcome, &pi_eigen));
            } else {
                write_report(c_limit, homc::emit_limit_outcome(outcome));
            }
            return outcome.kind == homc::LimitKind::Exhausted ? 2 : 0;
        }
        if (*cmd_evolve) {
            const homc::StochasticTensor t = homc::load_tensor(c_evolve.input, caps);
            if (evolve_initial.empty() == evolve_initial_file.empty()) {
                throw homc::ArgumentError("evolve needs exactly one of --initial / --initial-file");
            }
            const homc::JointDistribution y_init =
                evolve_initial.empty()
                    ? homc::load_joint(evolve_initial_file, t.order(), t.dim())
                    : point_mass(parse_history_literal(evolve_initial), t.order(), t.dim());
            const auto marginals = homc::evolve(t, y_init, evolve_steps, caps);
            write_report(c_evolve, homc::emit_evolution(marginals, t.order()));
            return 0;
        }
        if (*cmd_sim) {
            const homc::StochasticTensor t = homc::load_tensor(c_sim.input, caps);
            const homc::Trajectory traj =
                homc::sample_path(t, parse_history_literal(sim_initial), sim_steps, sim_seed);
            const homc::StateDistribution empirical = homc::empirical_distribution(traj, sim_burn_in);
            write_report(c_sim, homc::emit_simulation(traj, empirical, sim_burn_in));
            return 0;
        }
    } catch (const homc::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const homc::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const homc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
