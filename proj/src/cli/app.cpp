#include "persuade/cli/app.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "persuade/concav/solver.hpp"
#include "persuade/core/partition.hpp"
#include "persuade/core/simulate.hpp"
#include "persuade/core/value_table.hpp"
#include "persuade/densities/shape.hpp"
#include "persuade/error.hpp"
#include "persuade/io/density_spec.hpp"
#include "persuade/io/serialize.hpp"
#include "persuade/statics/conditions.hpp"
#include "persuade/statics/sweeps.hpp"

namespace persuade::cli {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Flags {
    std::string config_path;
    std::string out_dir;
    std::optional<std::size_t> grid_n;
    std::optional<std::uint64_t> seed;
    std::optional<double> p_s;
    std::optional<double> cost_level;
    std::optional<double> sigma0;
    std::optional<double> sigma1;
    std::optional<std::size_t> n_agents;
    std::vector<double> alphas;
    std::string order;
    std::string condition;
    std::string cost_spec;
    std::string prior_spec;
    std::string density_spec;
    std::string base_spec;
};

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(fmt::format("{} is not valid JSON: {}", what, e.what()));
    }
}

json load_config(const Flags& flags) {
    json cfg = json::object();
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) throw ValidationError(fmt::format("cannot read config {}", flags.config_path));
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = parse_json_text(buf.str(), "config " + flags.config_path);
        if (!cfg.is_object()) throw ValidationError("config must be a JSON object");
    }
    json& model = cfg["model"];
    if (model.is_null()) model = json::object();
    if (flags.p_s) model["p_s"] = *flags.p_s;
    if (flags.grid_n) model["grid_n"] = *flags.grid_n;
    if (!flags.cost_spec.empty() || !flags.prior_spec.empty()) {
        json joint = model.value("joint", json::object());
        joint["type"] = "product";
        if (!flags.cost_spec.empty()) joint["cost"] = parse_json_text(flags.cost_spec, "--cost");
        if (!flags.prior_spec.empty()) joint["prior"] = parse_json_text(flags.prior_spec, "--prior");
        model["joint"] = joint;
    }
    if (flags.seed) cfg["seed"] = *flags.seed;
    if (flags.cost_level) cfg["c"] = *flags.cost_level;
    if (flags.n_agents) cfg["n_agents"] = *flags.n_agents;
    if (!flags.alphas.empty()) cfg["alphas"] = flags.alphas;
    if (!flags.order.empty()) cfg["order"] = flags.order;
    if (!flags.condition.empty()) cfg["condition"] = flags.condition;
    if (!flags.density_spec.empty()) cfg["density"] = parse_json_text(flags.density_spec, "--density");
    if (!flags.base_spec.empty()) cfg["base"] = parse_json_text(flags.base_spec, "--base");
    if (flags.sigma0 || flags.sigma1) {
        json& policy = cfg["policy"];
        if (policy.is_null()) policy = json::object();
        if (flags.sigma0) policy["sigma0"] = *flags.sigma0;
        if (flags.sigma1) policy["sigma1"] = *flags.sigma1;
    }
    return cfg;
}

const json& require(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(fmt::format("config is missing \"{}\" in {}", key, where));
    return obj.at(key);
}

double require_number(const json& obj, const char* key, const char* where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) throw ValidationError(fmt::format("\"{}\" in {} must be a number", key, where));
    return v.get<double>();
}

std::uint64_t read_count(const json& cfg, const char* key, std::uint64_t fallback) {
    if (!cfg.contains(key)) return fallback;
    const json& v = cfg.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::uint64_t>();
    throw ValidationError(fmt::format("\"{}\" must be a nonnegative integer", key));
}

struct Model {
    Prior p_s;
    std::size_t grid_n;
    const json* spec;
};

std::size_t read_grid_n(const json& model) {
    std::size_t n = kDefaultGridNodes;
    if (model.contains("grid_n")) {
        if (!model.at("grid_n").is_number_unsigned())
            throw ValidationError("model.grid_n must be a positive integer");
        n = model.at("grid_n").get<std::size_t>();
    }
    if (n < kMinValueGrid)
        throw ValidationError(fmt::format("model.grid_n must be at least {}", kMinValueGrid));
    return n;
}

Model read_model(const json& cfg) {
    const json& model = cfg.at("model");
    const double ps = require_number(model, "p_s", "model");
    if (!(ps > 0.0 && ps < 1.0)) throw ValidationError("model.p_s must lie in (0,1)");
    return {Prior(ps), read_grid_n(model), &model};
}

JointDensityCP read_joint(const Model& m) {
    return io::joint_from_json(require(*m.spec, "joint", "model"), m.grid_n);
}

// Value table of the model: from the joint density, or directly from a
// virtual density when the model gives one.
ValueTable read_value_table(const Model& m) {
    if (m.spec->contains("virtual_density"))
        return value_table_from_virtual_density(
            io::density_from_json(m.spec->at("virtual_density"), m.grid_n));
    return build_value_table(read_joint(m), m.p_s, m.grid_n);
}

Policy read_policy(const json& cfg) {
    const json& p = require(cfg, "policy", "config");
    try {
        return Policy::make(require_number(p, "sigma0", "policy"), require_number(p, "sigma1", "policy"));
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
}

std::vector<GridDensity1D> read_chain(const json& cfg, std::size_t n) {
    const json& chain = require(cfg, "chain", "config");
    if (!chain.is_array() || chain.empty())
        throw ValidationError("\"chain\" must be a nonempty array of density specs");
    std::vector<GridDensity1D> out;
    for (const auto& spec : chain) out.push_back(io::density_from_json(spec, n));
    return out;
}

class Outputs {
public:
    explicit Outputs(std::string dir) : dir_(std::move(dir)) {}
    void write(const std::string& name, std::string_view content) const {
        if (!dir_.empty()) io::write_file_atomic(fs::path(dir_) / name, content);
    }
    void write_json(const std::string& name, const ordered_json& j) const {
        write(name, j.dump(2) + "\n");
    }

private:
    std::string dir_;
};

SolveOptions read_tolerances(const json& cfg) {
    SolveOptions opts;
    if (!cfg.contains("tolerances")) return opts;
    const json& t = cfg.at("tolerances");
    if (!t.is_object()) throw ValidationError("\"tolerances\" must be an object");
    if (t.contains("policy")) opts.policy_tolerance = require_number(t, "policy", "tolerances");
    if (t.contains("value")) opts.value_tolerance = require_number(t, "value", "tolerances");
    if (!(opts.policy_tolerance >= 0.0) || !(opts.value_tolerance >= 0.0))
        throw ValidationError("tolerances must be nonnegative");
    return opts;
}

ordered_json cmd_solve(const json& cfg, const Outputs& out) {
    const Model m = read_model(cfg);
    const ValueTable vt = read_value_table(m);
    const PersuasionSolution sol = solve(vt, m.p_s, read_tolerances(cfg));
    ordered_json summary = {{"command", "solve"}};
    summary.update(io::solution_json(sol));
    out.write("value_table.csv", io::value_table_csv(vt));
    const ReceiverPartition part = partition(sol.policy, m.grid_n);
    out.write("partition.csv", io::partition_csv(part));
    if (!m.spec->contains("virtual_density")) {
        const JointDensityCP f = read_joint(m);
        const PartitionMeasures pm = partition_measures(part, f);
        summary["measures"] = {{"never", io::round12(pm.never)},
                               {"compliers", io::round12(pm.compliers)},
                               {"always", io::round12(pm.always)}};
    }
    out.write_json("solution.json", summary);
    return summary;
}

ordered_json cmd_partition(const json& cfg, const Outputs& out) {
    const Model m = read_model(cfg);
    const Policy policy = read_policy(cfg);
    const JointDensityCP f = read_joint(m);
    const ReceiverPartition part = partition(policy, m.grid_n);
    const PartitionMeasures pm = partition_measures(part, f);
    const ordered_json payoff = io::payoff_json(policy, sender_payoff(policy, f, m.p_s), pm);
    out.write("partition.csv", io::partition_csv(part));
    out.write_json("payoff.json", payoff);
    ordered_json summary = {{"command", "partition"}};
    summary.update(payoff);
    return summary;
}

ordered_json sweep_summary(const char* command, const SweepResult& sweep, const Outputs& out) {
    out.write("sweep.csv", io::sweep_csv(sweep));
    const ordered_json verdict = io::verdict_json(sweep);
    out.write_json("verdict.json", verdict);
    ordered_json summary = {{"command", command}, {"rows", sweep.records.size()}};
    summary.update(verdict);
    return summary;
}

ordered_json cmd_sweep_polarization(const json& cfg, const Outputs& out) {
    const Model m = read_model(cfg);
    const GridDensity1D base = io::density_from_json(require(cfg, "base", "config"), m.grid_n);
    const json& alphas = require(cfg, "alphas", "config");
    if (!alphas.is_array() || alphas.empty())
        throw ValidationError("\"alphas\" must be a nonempty array of numbers");
    std::vector<double> a;
    for (const auto& x : alphas) {
        if (!x.is_number()) throw ValidationError("\"alphas\" must hold numbers");
        a.push_back(x.get<double>());
    }
    return sweep_summary("sweep-polarization", polarization_sweep(base, a, m.p_s), out);
}

ordered_json cmd_sweep_order(const json& cfg, const Outputs& out) {
    const Model m = read_model(cfg);
    const std::string order = cfg.value("order", "reversed_hazard");
    const auto chain = read_chain(cfg, m.grid_n);
    if (order == "reversed_hazard")
        return sweep_summary("sweep-order", popularity_sweep(chain, m.p_s), out);
    if (order == "hazard")
        return sweep_summary("sweep-order",
                             prior_shift_sweep(chain, require_number(cfg, "c", "config"), m.p_s),
                             out);
    throw ValidationError("\"order\" must be \"reversed_hazard\" or \"hazard\"");
}

ordered_json cmd_check_shape(const json& cfg, const Outputs& out) {
    ShapeClass shape;
    if (cfg.contains("density")) {
        const GridDensity1D d =
            io::density_from_json(cfg.at("density"), read_grid_n(cfg.at("model")));
        shape = classify_shape(d);
        out.write("density.csv", io::density_csv(d));
    } else {
        const Model m = read_model(cfg);
        const ValueTable vt = read_value_table(m);
        shape = classify_shape(vt.h());
        out.write("value_table.csv", io::value_table_csv(vt));
    }
    const ordered_json result = io::shape_json(shape);
    out.write_json("shape.json", result);
    ordered_json summary = {{"command", "check-shape"}};
    summary.update(result);
    return summary;
}

ordered_json cmd_check_condition(const json& cfg, const Outputs& out) {
    const Model m = read_model(cfg);
    const GridDensity1D priors = io::density_from_json(require(cfg, "density", "config"), m.grid_n);
    const double c = require_number(cfg, "c", "config");
    if (!(c > 0.0 && c < 1.0)) throw ValidationError("\"c\" must lie in (0,1)");
    const std::string which = cfg.value("condition", "both");
    ordered_json reports = ordered_json::array();
    if (which == "peakedness" || which == "both")
        reports.push_back(io::condition_json(check_peakedness_condition(priors, c, m.p_s)));
    if (which == "dippedness" || which == "both")
        reports.push_back(io::condition_json(check_dippedness_condition(priors, c, m.p_s)));
    if (reports.empty())
        throw ValidationError("\"condition\" must be \"peakedness\", \"dippedness\" or \"both\"");
    out.write_json("condition.json", reports);
    return {{"command", "check-condition"}, {"reports", reports}};
}

ordered_json cmd_simulate(const json& cfg, const Outputs& out) {
    const Model m = read_model(cfg);
    const Policy policy = read_policy(cfg);
    const JointDensityCP f = read_joint(m);
    const auto n_agents = read_count(cfg, "n_agents", 100000);
    const auto seed = read_count(cfg, "seed", 0);
    const SimulationResult sim = simulate_population(f, policy, m.p_s, n_agents, seed);
    const ordered_json result = io::simulation_json(sim, seed, sender_payoff(policy, f, m.p_s));
    out.write_json("simulation.json", result);
    ordered_json summary = {{"command", "simulate"}};
    summary.update(result);
    return summary;
}

std::string_view error_kind(const Error& e) {
    if (dynamic_cast<const ConsistencyError*>(&e)) return "ConsistencyError";
    if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const DegenerateInputError*>(&e)) return "DegenerateInputError";
    if (dynamic_cast<const PreconditionViolation*>(&e)) return "PreconditionViolation";
    if (dynamic_cast<const NotApplicableError*>(&e)) return "NotApplicableError";
    return "Error";
}

int report_error(std::ostream& out, std::string_view kind, std::string_view message, int code) {
    const ordered_json err = {{"error", {{"kind", kind}, {"message", message}}},
                              {"exit_code", code}};
    out << err.dump() << '\n';
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Partisan-media persuasion of heterogeneous receivers", "persuade"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    app.add_option("--config", flags.config_path, "JSON experiment config");
    app.add_option("--out", flags.out_dir, "Directory for output files");
    app.add_option("--grid-n", flags.grid_n, "Grid nodes on [0,1] (>= 201)");
    app.add_option("--seed", flags.seed, "Simulation seed");
    app.add_option("--ps", flags.p_s, "Sender prior p_s in (0,1)");
    app.add_option("--c", flags.cost_level, "Common cost for prior-shift sweeps and conditions");
    app.add_option("--sigma0", flags.sigma0, "Good-message probability in the bad state");
    app.add_option("--sigma1", flags.sigma1, "Good-message probability in the good state");
    app.add_option("--n-agents", flags.n_agents, "Simulated agents (>= 1000)");
    app.add_option("--alphas", flags.alphas, "Polarization exponents, ascending")->delimiter(',');
    app.add_option("--order", flags.order, "reversed_hazard or hazard");
    app.add_option("--condition", flags.condition, "peakedness, dippedness or both");
    app.add_option("--cost", flags.cost_spec, "Cost marginal spec (JSON)");
    app.add_option("--prior", flags.prior_spec, "Prior marginal spec (JSON)");
    app.add_option("--density", flags.density_spec, "Density spec (JSON) for checks");
    app.add_option("--base", flags.base_spec, "Base virtual density spec (JSON)");

    using Handler = ordered_json (*)(const json&, const Outputs&);
    const std::vector<std::pair<const char*, Handler>> commands = {
        {"solve", cmd_solve},
        {"partition", cmd_partition},
        {"sweep-polarization", cmd_sweep_polarization},
        {"sweep-order", cmd_sweep_order},
        {"check-shape", cmd_check_shape},
        {"check-condition", cmd_check_condition},
        {"simulate", cmd_simulate},
    };
    const std::vector<std::pair<const char*, const char*>> descriptions = {
        {"solve", "Optimal policy for the model"},
        {"partition", "Receiver partition and payoff under a policy"},
        {"sweep-polarization", "Bias along powers of a virtual density"},
        {"sweep-order", "Bias along a stochastically ordered chain"},
        {"check-shape", "Shape class of a density or of the model's virtual density"},
        {"check-condition", "Peakedness / dippedness conditions on a prior density"},
        {"simulate", "Monte Carlo population under a policy"},
    };
    for (const auto& [name, description] : descriptions) app.add_subcommand(name, description);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return report_error(out, "UsageError", e.what(), kExitConfigError);
    }

    try {
        const json cfg = load_config(flags);
        const Outputs outputs(flags.out_dir);
        for (const auto& [name, handler] : commands) {
            if (app.got_subcommand(name)) {
                out << handler(cfg, outputs).dump() << '\n';
                return kExitOk;
            }
        }
        return report_error(out, "UsageError", "no command given", kExitConfigError);
    } catch (const ConsistencyError& e) {
        return report_error(out, error_kind(e), e.what(), kExitConsistencyError);
    } catch (const Error& e) {
        return report_error(out, error_kind(e), e.what(), kExitConfigError);
    } catch (const json::exception& e) {
        return report_error(out, "ValidationError", e.what(), kExitConfigError);
    } catch (const fs::filesystem_error& e) {
        return report_error(out, "IoError", e.what(), kExitConfigError);
    } catch (const std::exception& e) {
        return report_error(out, "InternalError", e.what(), kExitUnexpected);
    }
}

}  // namespace persuade::cli
