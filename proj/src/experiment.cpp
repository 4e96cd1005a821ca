#include "psolab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "psolab/errors.hpp"
#include "psolab/rng.hpp"

namespace psolab::experiment {

std::string_view label(Variant v)
{
    switch (v) {
    case Variant::RS: return "RS";
    case Variant::RA: return "RA";
    case Variant::SS: return "SS";
    case Variant::SA: return "SA";
    }
    return "?";
}

swarm::Topology topology_of(Variant v)
{
    return (v == Variant::RS || v == Variant::RA) ? swarm::Topology::Ring
                                                  : swarm::Topology::Star;
}

swarm::Schedule schedule_of(Variant v)
{
    return (v == Variant::RS || v == Variant::SS) ? swarm::Schedule::Synchronous
                                                  : swarm::Schedule::Asynchronous;
}

Variant variant_from_label(std::string_view s)
{
    std::string up(s);
    for (char& c : up)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == "RS") return Variant::RS;
    if (up == "RA") return Variant::RA;
    if (up == "SS") return Variant::SS;
    if (up == "SA") return Variant::SA;
    throw ConfigError("unknown variant '" + std::string(s) +
                      "' (expected one of rs, ra, ss, sa)");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view variant_label,
                          std::size_t run_index)
{
    const std::uint64_t variant_stream = splitmix64(base_seed ^ fnv1a64(variant_label));
    return splitmix64(variant_stream ^ static_cast<std::uint64_t>(run_index));
}

RunRecord run_single(swarm::SwarmConfig cfg, const objective::Objective& obj,
                     VariantSpec spec, std::uint64_t seed, std::size_t run_index)
{
    cfg.model = spec.model;
    cfg.topology = topology_of(spec.id);
    cfg.schedule = schedule_of(spec.id);
    cfg = swarm::finalized(cfg);
    if (cfg.budget < cfg.swarm_size)
        throw ConfigError("config: budget must cover one evaluation per particle (budget " +
                          std::to_string(cfg.budget) + " < swarm_size " +
                          std::to_string(cfg.swarm_size) + ")");
    if (obj.required_dimension != 0 && obj.required_dimension != cfg.dimension)
        throw ConfigError("config: objective '" + std::string(obj.name) +
                          "' requires dimension " + std::to_string(obj.required_dimension));

    const auto start = std::chrono::steady_clock::now();
    objective::BudgetedEvaluator ev(obj.fn, cfg.budget);
    swarm::Swarm s(cfg, seed);

    swarm::StepOutcome out = s.evaluate_initial(ev);
    while (!out.success && !out.exhausted)
        out = s.step(ev);
    const auto stop = std::chrono::steady_clock::now();

    RunRecord rec;
    rec.variant = std::string(label(spec.id));
    rec.run_index = run_index;
    rec.seed = seed;
    rec.evaluations = ev.used();
    rec.best_fitness = s.global_best().fitness;
    rec.success = out.success;
    rec.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

ExperimentResult run_experiment(const swarm::SwarmConfig& cfg,
                                const objective::Objective& obj,
                                const std::vector<VariantSpec>& specs,
                                std::size_t runs, std::uint64_t base_seed,
                                std::size_t workers)
{
    if (specs.empty())
        throw ConfigError("run_experiment: at least one variant is required");
    if (runs < 1)
        throw ConfigError("run_experiment: runs must be >= 1");
    {
        std::set<Variant> seen;
        for (const VariantSpec& spec : specs) {
            if (!seen.insert(spec.id).second)
                throw ConfigError("run_experiment: duplicate variant " +
                                  std::string(label(spec.id)));
        }
    }

    // One job per (variant, run); slots are preassigned so the records land
    // in deterministic order no matter which worker finishes first.
    const std::size_t jobs = specs.size() * runs;
    std::vector<RunRecord> slots(jobs);
    auto execute = [&](std::size_t job) {
        const VariantSpec& spec = specs[job / runs];
        const std::size_t run_index = job % runs + 1;
        const std::uint64_t seed = derive_seed(base_seed, label(spec.id), run_index);
        slots[job] = run_single(cfg, obj, spec, seed, run_index);
    };

    if (workers <= 1) {
        for (std::size_t job = 0; job < jobs; ++job)
            execute(job);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t job = next.fetch_add(1); job < jobs;
                 job = next.fetch_add(1)) {
                try {
                    execute(job);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const std::size_t n = std::min(workers, jobs);
        pool.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    ExperimentResult result;
    result.config = cfg;
    for (std::size_t v = 0; v < specs.size(); ++v) {
        VariantResult vr;
        vr.runs.assign(slots.begin() + static_cast<std::ptrdiff_t>(v * runs),
                       slots.begin() + static_cast<std::ptrdiff_t>((v + 1) * runs));
        vr.successes = 0;
        double total = 0.0;
        for (const RunRecord& rec : vr.runs) {
            total += static_cast<double>(rec.evaluations);
            vr.successes += rec.success ? 1 : 0;
        }
        vr.mean_evaluations = total / static_cast<double>(runs);
        result.variants.emplace(std::string(label(specs[v].id)), std::move(vr));
    }
    return result;
}

} // namespace psolab::experiment
