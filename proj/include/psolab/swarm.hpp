#ifndef PSOLAB_SWARM_HPP
#define PSOLAB_SWARM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "psolab/objective.hpp"
#include "psolab/rng.hpp"

namespace psolab::swarm {

/// Which attraction terms participate in the velocity update.
enum class Model { Full, Cognition, Social, Selfless };

/// Who a particle consults for its social attractor.
enum class Topology { Ring, Star };

/// When personal/neighborhood bests become visible to other particles.
enum class Schedule { Synchronous, Asynchronous };

std::string_view to_string(Model m);
std::string_view to_string(Topology t);
std::string_view to_string(Schedule s);

struct Interval {
    double low;
    double high;
};

/// Complete description of one swarm run. Build one, pass it through
/// finalized() to resolve chi and check the invariants, then hand it to
/// Swarm or experiment::run_single.
struct SwarmConfig {
    Model model = Model::Full;
    Topology topology = Topology::Star;
    Schedule schedule = Schedule::Synchronous;

    double phi1 = 2.05;
    double phi2 = 2.05;
    double omega = 1.0;
    /// Constriction multiplier. 0 means "not yet resolved"; finalized()
    /// replaces it with resolve_chi(phi1, phi2).
    double chi = 0.0;

    std::size_t swarm_size = 30;
    std::size_t dimension = 2;
    /// One interval per dimension; empty means [-100, 100] everywhere.
    std::vector<Interval> bounds;

    std::size_t budget = 4000;
    double success_threshold = 0.001;
};

/// Clerc's constriction coefficient for phi = phi1 + phi2:
///   chi = 2 / |2 - phi - sqrt(phi^2 - 4 phi)|
/// Defined only for phi > 4; throws std::domain_error otherwise (the square
/// root goes complex).
double constriction_coefficient(double phi1, double phi2);

/// chi used by a run: the constriction coefficient when phi1 + phi2 > 4,
/// else 1 (reduced models with a single attraction term rarely reach it).
double resolve_chi(double phi1, double phi2);

/// Throws psolab::ConfigError when cfg violates any invariant:
/// model-dependent phi sign pattern, swarm size floor for the topology,
/// bounds/dimension agreement, chi consistent with resolve_chi.
void validate_config(const SwarmConfig& cfg);

/// Resolves chi, defaults the bounds, then validates. Returns the run-ready
/// config; every Swarm is constructed from a finalized config.
SwarmConfig finalized(SwarmConfig cfg);

struct Particle {
    std::vector<double> x; ///< position
    std::vector<double> v; ///< velocity
    std::vector<double> p; ///< personal best position
    double x_fitness;      ///< fitness at x (+inf until evaluated)
    double p_fitness;      ///< fitness at p (+inf until evaluated)
};

/// What one initialization phase or one step contributed to the run.
struct StepOutcome {
    std::size_t evaluations = 0;
    std::size_t moves = 0;
    bool success = false;
    bool exhausted = false;
};

/// One dimension of the velocity update:
///   chi * (omega*v + phi1*r1*(p - x) + phi2*r2*(g - x))
/// Pure; r1, r2 in [0, 1) are supplied by the caller.
double velocity_component(double v, double x, double p, double g,
                          const SwarmConfig& cfg, double r1, double r2);

/// Updates part.v in place against social attractor g_pos, drawing r1 then
/// r2 from rng for each dimension in order.
void update_velocity(Particle& part, std::span<const double> g_pos,
                     const SwarmConfig& cfg, RandomStream& rng);

/// x += v, every dimension. No clamping: particles may leave the bounds.
void move_particle(Particle& part);

/// Copies x into p when x strictly improves. Returns whether it did.
bool refresh_best(Particle& part);

struct BestView {
    std::size_t index;
    std::span<const double> position;
    double fitness;
};

/// The swarm: particles plus the RNG that animates them. Copyable, and a
/// copy replays bit-identically -- tests rely on snapshotting mid-run.
class Swarm {
public:
    /// Draws initial positions from cfg.bounds uniformly, particle-major /
    /// dimension-minor; velocities start at zero and p = x. cfg must have
    /// come through finalized(). No evaluations happen here.
    Swarm(const SwarmConfig& cfg, std::uint64_t seed);

    /// Evaluates every particle's initial position in index order, checking
    /// the success threshold after each evaluation. Call exactly once,
    /// before the first step().
    StepOutcome evaluate_initial(objective::BudgetedEvaluator& ev);

    /// One full sweep over the swarm under cfg.schedule. Synchronous sweeps
    /// compute every velocity from the bests frozen at entry; asynchronous
    /// sweeps let each particle's refreshed best influence later particles
    /// in the same sweep.
    StepOutcome step(objective::BudgetedEvaluator& ev);

    /// Best personal best visible to particle i under the topology and
    /// model; ties break toward the lowest index. Selfless excludes i
    /// itself from the candidates.
    BestView neighborhood_best(std::size_t i) const;

    /// Best personal best across the whole swarm (lowest index on ties).
    BestView global_best() const;

    const SwarmConfig& config() const noexcept { return cfg_; }
    const std::vector<Particle>& particles() const noexcept { return particles_; }
    RandomStream& rng() noexcept { return rng_; }

    /// How many times neighborhood_best has been consulted; instrumentation
    /// for schedule-semantics tests.
    std::size_t neighbor_query_count() const noexcept { return neighbor_queries_; }

private:
    StepOutcome step_synchronous(objective::BudgetedEvaluator& ev);
    StepOutcome step_asynchronous(objective::BudgetedEvaluator& ev);
    /// The attractor fed into update_velocity for particle i: its own p for
    /// Cognition, otherwise neighborhood_best(i).position.
    std::span<const double> social_target(std::size_t i) const;

    SwarmConfig cfg_;
    std::vector<Particle> particles_;
    RandomStream rng_;
    mutable std::size_t neighbor_queries_ = 0;
};

} // namespace psolab::swarm

#endif // PSOLAB_SWARM_HPP
