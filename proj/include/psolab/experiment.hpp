#ifndef PSOLAB_EXPERIMENT_HPP
#define PSOLAB_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "psolab/objective.hpp"
#include "psolab/swarm.hpp"

namespace psolab::experiment {

/// The four topology x schedule variants under study.
enum class Variant { RS, RA, SS, SA };

std::string_view label(Variant v);
swarm::Topology topology_of(Variant v);
swarm::Schedule schedule_of(Variant v);
/// Inverse of label(); throws psolab::ConfigError for unknown labels.
Variant variant_from_label(std::string_view s);

/// One cell of the experiment grid: variant plus the model it runs under.
struct VariantSpec {
    Variant id;
    swarm::Model model = swarm::Model::Full;
};

/// One run's outcome -- exactly one CSV row.
struct RunRecord {
    std::string variant;
    std::size_t run_index; ///< 1-based within the variant
    std::uint64_t seed;
    std::size_t evaluations; ///< budget actually consumed
    double best_fitness;
    bool success; ///< threshold reached within budget
    double runtime_ms;
};

struct VariantResult {
    std::vector<RunRecord> runs;
    double mean_evaluations;
    std::size_t successes;
};

struct ExperimentResult {
    std::map<std::string, VariantResult> variants; ///< keyed by variant label
    swarm::SwarmConfig config;
};

/// Per-run seed: mixes the base seed, the variant label and the 1-based run
/// index so no two cells of the grid share an RNG stream:
///   splitmix64(splitmix64(base ^ fnv1a64(label)) ^ run_index)
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view variant_label,
                          std::size_t run_index);

/// Executes one run: initial evaluations, then steps until success or
/// budget exhaustion. cfg is finalized here; its topology/schedule/model
/// are overridden from spec before finalization.
RunRecord run_single(swarm::SwarmConfig cfg, const objective::Objective& obj,
                     VariantSpec spec, std::uint64_t seed, std::size_t run_index);

/// The full grid: `runs` seeded runs of every variant in `specs`. Seeds come
/// from derive_seed so results are reproducible from base_seed alone.
/// workers > 1 distributes runs across threads; records land in the same
/// deterministic order either way. Duplicate variants are rejected.
ExperimentResult run_experiment(const swarm::SwarmConfig& cfg,
                                const objective::Objective& obj,
                                const std::vector<VariantSpec>& specs,
                                std::size_t runs, std::uint64_t base_seed,
                                std::size_t workers = 1);

} // namespace psolab::experiment

#endif // PSOLAB_EXPERIMENT_HPP
