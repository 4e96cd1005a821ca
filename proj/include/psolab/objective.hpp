#ifndef PSOLAB_OBJECTIVE_HPP
#define PSOLAB_OBJECTIVE_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psolab::objective {

/// A point in search space. Dimension is fixed at construction and every
/// coordinate is finite; violating either throws std::invalid_argument.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t d) const noexcept { return coords_[d]; }
    const std::vector<double>& coords() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

/// Schaffer F6, minimization, global minimum 0 at the origin:
///   f(x, y) = 0.5 + (sin^2(sqrt(x^2+y^2)) - 0.5) / (1 + 0.001 (x^2+y^2))^2
/// Range [0, 1). Requires dimension 2.
double schaffer_f6(const Point& p);

/// Sum of squared coordinates. Any dimension; smooth sanity objective.
double sphere(const Point& p);

using ObjectiveFn = std::function<double(const Point&)>;

/// A named objective as selected by CLI flags and configuration.
struct Objective {
    std::string_view name;
    ObjectiveFn fn;
    std::size_t required_dimension = 0; ///< 0 = any dimension
};

/// Registry lookup by identifier ("schaffer_f6", "sphere"). nullptr if unknown.
const Objective* find_objective(std::string_view name);

/// All registered objectives, for CLI help and validation.
std::span<const Objective> all_objectives();

/// The artifact's only gateway to fitness values: counts every evaluation
/// and refuses to evaluate once the budget is consumed.
///
/// Single-owner mutable state: exactly one run drives one evaluator.
class BudgetedEvaluator {
public:
    BudgetedEvaluator(ObjectiveFn objective, std::size_t budget)
        : objective_(std::move(objective)), budget_(budget) {}

    /// Evaluates the objective at p, consuming one unit of budget.
    /// Returns std::nullopt -- and consumes nothing -- once used == budget;
    /// the caller must terminate the run.
    std::optional<double> evaluate(const Point& p)
    {
        if (used_ >= budget_)
            return std::nullopt;
        const double fitness = objective_(p);
        ++used_;
        return fitness;
    }

    std::size_t used() const noexcept { return used_; }
    std::size_t budget() const noexcept { return budget_; }
    std::size_t remaining() const noexcept { return budget_ - used_; }
    bool exhausted() const noexcept { return used_ >= budget_; }

private:
    ObjectiveFn objective_;
    std::size_t used_ = 0;
    std::size_t budget_;
};

} // namespace psolab::objective

#endif // PSOLAB_OBJECTIVE_HPP
