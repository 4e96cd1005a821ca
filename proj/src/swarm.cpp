#include "psolab/swarm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "psolab/errors.hpp"

namespace psolab::swarm {

namespace {

constexpr double kUnevaluated = std::numeric_limits<double>::infinity();

} // namespace

std::string_view to_string(Model m)
{
    switch (m) {
    case Model::Full: return "full";
    case Model::Cognition: return "cognition";
    case Model::Social: return "social";
    case Model::Selfless: return "selfless";
    }
    return "?";
}

std::string_view to_string(Topology t)
{
    return t == Topology::Ring ? "ring" : "star";
}

std::string_view to_string(Schedule s)
{
    return s == Schedule::Synchronous ? "synchronous" : "asynchronous";
}

double constriction_coefficient(double phi1, double phi2)
{
    const double phi = phi1 + phi2;
    if (!(phi > 4.0))
        throw std::domain_error(
            "constriction coefficient requires phi1 + phi2 > 4 (got " +
            std::to_string(phi) + ")");
    return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

double resolve_chi(double phi1, double phi2)
{
    return phi1 + phi2 > 4.0 ? constriction_coefficient(phi1, phi2) : 1.0;
}

void validate_config(const SwarmConfig& cfg)
{
    auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };

    if (!(std::isfinite(cfg.phi1) && cfg.phi1 >= 0.0))
        fail("phi1 must be finite and >= 0");
    if (!(std::isfinite(cfg.phi2) && cfg.phi2 >= 0.0))
        fail("phi2 must be finite and >= 0");
    if (!std::isfinite(cfg.omega))
        fail("omega must be finite");
    if (!(std::isfinite(cfg.success_threshold)))
        fail("success_threshold must be finite");

    switch (cfg.model) {
    case Model::Full:
        if (!(cfg.phi1 > 0.0 && cfg.phi2 > 0.0))
            fail("full model requires phi1 > 0 and phi2 > 0");
        break;
    case Model::Cognition:
        if (cfg.phi2 != 0.0)
            fail("cognition model requires phi2 = 0");
        break;
    case Model::Social:
    case Model::Selfless:
        if (cfg.phi1 != 0.0)
            fail("social and selfless models require phi1 = 0");
        break;
    }

    if (cfg.swarm_size < 1)
        fail("swarm_size must be >= 1");
    if (cfg.topology == Topology::Ring && cfg.swarm_size < 3)
        fail("ring topology requires swarm_size >= 3");
    if (cfg.model == Model::Selfless && cfg.swarm_size < 2)
        fail("selfless model requires swarm_size >= 2 (own index is excluded)");
    if (cfg.dimension < 1)
        fail("dimension must be >= 1");
    if (cfg.budget < 1)
        fail("budget must be >= 1");

    if (cfg.bounds.size() != cfg.dimension)
        fail("bounds must list one interval per dimension");
    for (const Interval& b : cfg.bounds) {
        if (!(std::isfinite(b.low) && std::isfinite(b.high) && b.low < b.high))
            fail("each bound must satisfy low < high with finite endpoints");
    }

    if (cfg.chi != resolve_chi(cfg.phi1, cfg.phi2))
        fail("chi is inconsistent with phi1 + phi2; build configs via finalized()");
}

SwarmConfig finalized(SwarmConfig cfg)
{
    cfg.chi = resolve_chi(cfg.phi1, cfg.phi2);
    if (cfg.bounds.empty())
        cfg.bounds.assign(cfg.dimension, Interval{-100.0, 100.0});
    validate_config(cfg);
    return cfg;
}

double velocity_component(double v, double x, double p, double g,
                          const SwarmConfig& cfg, double r1, double r2)
{
    return cfg.chi * (cfg.omega * v + cfg.phi1 * r1 * (p - x) +
                      cfg.phi2 * r2 * (g - x));
}

void update_velocity(Particle& part, std::span<const double> g_pos,
                     const SwarmConfig& cfg, RandomStream& rng)
{
    for (std::size_t d = 0; d < part.v.size(); ++d) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        part.v[d] = velocity_component(part.v[d], part.x[d], part.p[d], g_pos[d],
                                       cfg, r1, r2);
    }
}

void move_particle(Particle& part)
{
    for (std::size_t d = 0; d < part.x.size(); ++d)
        part.x[d] += part.v[d];
}

bool refresh_best(Particle& part)
{
    if (part.x_fitness < part.p_fitness) {
        part.p = part.x;
        part.p_fitness = part.x_fitness;
        return true;
    }
    return false;
}

Swarm::Swarm(const SwarmConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed)
{
    validate_config(cfg_);
    particles_.resize(cfg_.swarm_size);
    for (Particle& part : particles_) {
        part.x.resize(cfg_.dimension);
        for (std::size_t d = 0; d < cfg_.dimension; ++d)
            part.x[d] = rng_.uniform(cfg_.bounds[d].low, cfg_.bounds[d].high);
        part.v.assign(cfg_.dimension, 0.0);
        part.p = part.x;
        part.x_fitness = kUnevaluated;
        part.p_fitness = kUnevaluated;
    }
}

StepOutcome Swarm::evaluate_initial(objective::BudgetedEvaluator& ev)
{
    StepOutcome out;
    for (Particle& part : particles_) {
        const auto fitness = ev.evaluate(objective::Point(part.x));
        if (!fitness) {
            out.exhausted = true;
            return out;
        }
        ++out.evaluations;
        part.x_fitness = *fitness;
        refresh_best(part);
        if (part.x_fitness <= cfg_.success_threshold) {
            out.success = true;
            return out;
        }
    }
    out.exhausted = ev.exhausted();
    return out;
}

StepOutcome Swarm::step(objective::BudgetedEvaluator& ev)
{
    return cfg_.schedule == Schedule::Synchronous ? step_synchronous(ev)
                                                  : step_asynchronous(ev);
}

// Velocities all derive from the bests as they stood at entry; no refresh
// made below can influence a velocity until the next step. Moving is paired
// with evaluating so evaluation accounting stays exact when the budget (or
// the threshold) cuts the sweep short: a particle that cannot be evaluated
// is not moved either.
StepOutcome Swarm::step_synchronous(objective::BudgetedEvaluator& ev)
{
    StepOutcome out;
    for (std::size_t i = 0; i < particles_.size(); ++i)
        update_velocity(particles_[i], social_target(i), cfg_, rng_);
    for (Particle& part : particles_) {
        if (ev.exhausted()) {
            out.exhausted = true;
            return out;
        }
        move_particle(part);
        ++out.moves;
        part.x_fitness = *ev.evaluate(objective::Point(part.x));
        ++out.evaluations;
        refresh_best(part);
        if (part.x_fitness <= cfg_.success_threshold) {
            out.success = true;
            return out;
        }
    }
    out.exhausted = ev.exhausted();
    return out;
}

StepOutcome Swarm::step_asynchronous(objective::BudgetedEvaluator& ev)
{
    StepOutcome out;
    for (std::size_t i = 0; i < particles_.size(); ++i) {
        if (ev.exhausted()) {
            out.exhausted = true;
            return out;
        }
        Particle& part = particles_[i];
        update_velocity(part, social_target(i), cfg_, rng_);
        move_particle(part);
        ++out.moves;
        part.x_fitness = *ev.evaluate(objective::Point(part.x));
        ++out.evaluations;
        refresh_best(part);
        if (part.x_fitness <= cfg_.success_threshold) {
            out.success = true;
            return out;
        }
    }
    out.exhausted = ev.exhausted();
    return out;
}

std::span<const double> Swarm::social_target(std::size_t i) const
{
    if (cfg_.model == Model::Cognition)
        return particles_[i].p; // no social term; attractor is inert (phi2 = 0)
    return neighborhood_best(i).position;
}

BestView Swarm::neighborhood_best(std::size_t i) const
{
    ++neighbor_queries_;
    const std::size_t n = particles_.size();
    const bool exclude_self = cfg_.model == Model::Selfless;

    std::size_t best = n; // sentinel: no candidate yet
    auto consider = [&](std::size_t c) {
        if (exclude_self && c == i)
            return;
        if (best == n || particles_[c].p_fitness < particles_[best].p_fitness ||
            (particles_[c].p_fitness == particles_[best].p_fitness && c < best))
            best = c;
    };

    if (cfg_.topology == Topology::Ring) {
        consider((i + n - 1) % n);
        consider(i);
        consider((i + 1) % n);
    } else {
        for (std::size_t c = 0; c < n; ++c)
            consider(c);
    }
    return {best, particles_[best].p, particles_[best].p_fitness};
}

BestView Swarm::global_best() const
{
    std::size_t best = 0;
    for (std::size_t c = 1; c < particles_.size(); ++c) {
        if (particles_[c].p_fitness < particles_[best].p_fitness)
            best = c;
    }
    return {best, particles_[best].p, particles_[best].p_fitness};
}

} // namespace psolab::swarm
