#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "psolab/errors.hpp"
#include "psolab/experiment.hpp"
#include "psolab/fixture.hpp"
#include "psolab/objective.hpp"
#include "psolab/rng.hpp"
#include "psolab/run_csv.hpp"
#include "psolab/stats.hpp"
#include "psolab/stats_render.hpp"
#include "psolab/swarm.hpp"

namespace {

using namespace psolab;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;  // I/O or data errors
constexpr int kExitUsage = 2; // usage / configuration errors

swarm::Model model_from_name(const std::string& name)
{
    if (name == "full") return swarm::Model::Full;
    if (name == "cognition") return swarm::Model::Cognition;
    if (name == "social") return swarm::Model::Social;
    if (name == "selfless") return swarm::Model::Selfless;
    throw ConfigError("unknown model '" + name + "'");
}

struct RunOptions {
    std::string variant = "all";
    std::string model = "full";
    std::string objective = "schaffer_f6";
    std::size_t runs = 30;
    std::size_t particles = 30;
    std::size_t budget = 4000;
    double phi1 = 2.05;
    double phi2 = 2.05;
    double omega = 1.0;
    double threshold = 0.001;
    std::uint64_t seed = 0;
    std::string out = "runs.csv";

    bool phi1_given = false;
    bool phi2_given = false;
    bool seed_given = false;
};

int cmd_run(RunOptions opt)
{
    const swarm::Model model = model_from_name(opt.model);

    // A single attraction term defaults its dead learning rate to zero; an
    // explicit conflicting flag still fails validation below.
    if (model == swarm::Model::Cognition && !opt.phi2_given)
        opt.phi2 = 0.0;
    if ((model == swarm::Model::Social || model == swarm::Model::Selfless) &&
        !opt.phi1_given)
        opt.phi1 = 0.0;

    // The full model is only meaningful under constriction; surface the
    // domain requirement before any run starts.
    if (model == swarm::Model::Full) {
        try {
            swarm::constriction_coefficient(opt.phi1, opt.phi2);
        } catch (const std::domain_error& e) {
            throw ConfigError(e.what());
        }
    }

    const objective::Objective* obj = objective::find_objective(opt.objective);
    if (!obj) {
        std::string known;
        for (const objective::Objective& o : objective::all_objectives())
            known += " " + std::string(o.name);
        throw ConfigError("unknown objective '" + opt.objective + "' (known:" +
                          known + ")");
    }

    if (!opt.seed_given) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        opt.seed = splitmix64(static_cast<std::uint64_t>(now.count()));
    }

    swarm::SwarmConfig cfg;
    cfg.model = model;
    cfg.phi1 = opt.phi1;
    cfg.phi2 = opt.phi2;
    cfg.omega = opt.omega;
    cfg.swarm_size = opt.particles;
    cfg.dimension = obj->required_dimension != 0 ? obj->required_dimension : 2;
    cfg.budget = opt.budget;
    cfg.success_threshold = opt.threshold;

    std::vector<experiment::VariantSpec> specs;
    if (opt.variant == "all") {
        for (experiment::Variant v :
             {experiment::Variant::RS, experiment::Variant::RA,
              experiment::Variant::SS, experiment::Variant::SA})
            specs.push_back({v, model});
    } else {
        specs.push_back({experiment::variant_from_label(opt.variant), model});
    }

    std::cout << "objective   " << obj->name << " (dimension " << cfg.dimension
              << ")\n"
              << "model       " << to_string(model) << '\n'
              << "variants   ";
    for (const experiment::VariantSpec& spec : specs)
        std::cout << ' ' << experiment::label(spec.id);
    std::cout << '\n'
              << "particles   " << cfg.swarm_size << '\n'
              << "budget      " << cfg.budget << '\n'
              << "runs        " << opt.runs << '\n'
              << "phi1        " << cfg.phi1 << '\n'
              << "phi2        " << cfg.phi2 << '\n'
              << "omega       " << cfg.omega << '\n'
              << "chi         " << swarm::resolve_chi(cfg.phi1, cfg.phi2) << '\n'
              << "threshold   " << cfg.success_threshold << '\n'
              << "seed        " << opt.seed
              << (opt.seed_given ? "" : " (time-derived)") << "\n\n";

    const experiment::ExperimentResult result =
        experiment::run_experiment(cfg, *obj, specs, opt.runs, opt.seed);

    std::vector<experiment::RunRecord> records;
    for (const experiment::VariantSpec& spec : specs) {
        const experiment::VariantResult& vr =
            result.variants.at(std::string(experiment::label(spec.id)));
        std::cout << experiment::label(spec.id) << "  mean evaluations "
                  << vr.mean_evaluations << "  successes " << vr.successes << '/'
                  << vr.runs.size() << '\n';
        records.insert(records.end(), vr.runs.begin(), vr.runs.end());
    }

    run_csv::write_file(opt.out, std::move(records));
    std::cout << "\nwrote " << opt.out << " (" << specs.size() * opt.runs
              << " rows)\n";
    return kExitOk;
}

struct StatsOptions {
    std::string input;
    bool use_fixture = false;
    bool anova = false;
    std::vector<std::string> ttest_pairs;
    double alpha = 0.05;
    std::string format = "text";
};

int cmd_stats(const StatsOptions& opt)
{
    if (opt.use_fixture == !opt.input.empty())
        throw ConfigError("exactly one of --input and --fixture is required");
    if (!opt.anova && opt.ttest_pairs.empty())
        throw ConfigError("nothing to do: pass --anova and/or --ttest A,B");

    const std::vector<experiment::RunRecord> records =
        opt.use_fixture ? fixture::fixture_records()
                        : run_csv::read_file(opt.input);

    std::map<std::string, stats::SampleGroup> groups;
    for (const experiment::RunRecord& rec : records) {
        stats::SampleGroup& g = groups[rec.variant];
        g.label = rec.variant;
        g.values.push_back(static_cast<double>(rec.evaluations));
    }

    const bool json = opt.format == "json";
    nlohmann::json report;
    std::ostringstream text;

    if (opt.anova) {
        std::vector<stats::SampleGroup> all;
        for (const auto& [_, g] : groups)
            all.push_back(g);
        const stats::AnovaResult r = stats::anova_one_way(all, opt.alpha);
        if (json)
            report["anova"] = nlohmann::json::parse(stats::to_json(r));
        else
            text << stats::to_text(r) << '\n';
    }

    for (const std::string& pair : opt.ttest_pairs) {
        const std::size_t comma = pair.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == pair.size())
            throw ConfigError("--ttest expects two labels as A,B (got '" + pair +
                              "')");
        const std::string name_a = pair.substr(0, comma);
        const std::string name_b = pair.substr(comma + 1);
        for (const std::string& name : {name_a, name_b}) {
            if (!groups.contains(name))
                throw ConfigError("unknown group label '" + name + "'");
        }
        const stats::SampleGroup& a = groups.at(name_a);
        const stats::SampleGroup& b = groups.at(name_b);

        // The pipeline mirrors the usual manual procedure: a variance-ratio
        // gate decides whether the pooled test's assumption holds.
        const stats::FTestResult gate = stats::f_test_variance_ratio(a, b, opt.alpha);
        const stats::TTestResult t = gate.equal_variances
                                         ? stats::t_test_pooled(a, b, opt.alpha)
                                         : stats::t_test_welch(a, b, opt.alpha);
        if (json) {
            nlohmann::json entry;
            entry["pair"] = pair;
            entry["f_test"] = nlohmann::json::parse(stats::to_json(gate));
            entry["t_test"] = nlohmann::json::parse(stats::to_json(t));
            report["ttests"].push_back(std::move(entry));
        } else {
            text << stats::to_text(gate) << '\n' << stats::to_text(t) << '\n';
        }
    }

    if (json) {
        report["alpha"] = opt.alpha;
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << text.str();
    }
    return kExitOk;
}

int cmd_fixture(const std::string& out)
{
    run_csv::write_file(out, fixture::fixture_records());
    std::cout << "wrote " << out << " (120 rows)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"particle swarm laboratory: run seeded PSO campaigns and "
                 "analyze run records"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand(
        "run", "execute seeded PSO runs and write a run-record CSV");
    run->add_option("--variant", run_opt.variant, "variant to run")
        ->check(CLI::IsMember({"rs", "ra", "ss", "sa", "all"}))
        ->capture_default_str();
    run->add_option("--model", run_opt.model, "interaction model")
        ->check(CLI::IsMember({"full", "cognition", "social", "selfless"}))
        ->capture_default_str();
    run->add_option("--objective", run_opt.objective, "objective function")
        ->capture_default_str();
    run->add_option("--runs", run_opt.runs, "runs per variant")
        ->capture_default_str();
    run->add_option("--particles", run_opt.particles, "swarm size")
        ->capture_default_str();
    run->add_option("--budget", run_opt.budget, "evaluation budget per run")
        ->capture_default_str();
    auto* phi1_opt = run->add_option("--phi1", run_opt.phi1,
                                     "cognition learning rate")
                         ->capture_default_str();
    auto* phi2_opt = run->add_option("--phi2", run_opt.phi2,
                                     "social learning rate")
                         ->capture_default_str();
    run->add_option("--omega", run_opt.omega, "inertia weight")
        ->capture_default_str();
    run->add_option("--threshold", run_opt.threshold,
                    "fitness at or below this counts as success")
        ->capture_default_str();
    auto* seed_opt = run->add_option("--seed", run_opt.seed,
                                     "base seed (absent: derived from time)");
    run->add_option("--out", run_opt.out, "output CSV path")
        ->capture_default_str();

    StatsOptions stats_opt;
    CLI::App* stats = app.add_subcommand(
        "stats", "ANOVA and t-tests over run-record evaluations");
    stats->add_option("--input", stats_opt.input, "run-record CSV to analyze");
    stats->add_flag("--fixture", stats_opt.use_fixture,
                    "analyze the bundled reference dataset");
    stats->add_flag("--anova", stats_opt.anova, "one-way ANOVA across all groups");
    stats->add_option("--ttest", stats_opt.ttest_pairs,
                      "two-sample t-test on a pair of groups, as A,B (repeatable)");
    stats->add_option("--alpha", stats_opt.alpha, "significance level")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)))
        ->capture_default_str();
    stats->add_option("--format", stats_opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string fixture_out;
    CLI::App* fixture = app.add_subcommand(
        "fixture", "write the bundled reference dataset as a run-record CSV");
    fixture->add_option("--out", fixture_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    run_opt.phi1_given = phi1_opt->count() > 0;
    run_opt.phi2_given = phi2_opt->count() > 0;
    run_opt.seed_given = seed_opt->count() > 0;

    try {
        if (run->parsed())
            return cmd_run(std::move(run_opt));
        if (stats->parsed())
            return cmd_stats(stats_opt);
        if (fixture->parsed())
            return cmd_fixture(fixture_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CsvError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
