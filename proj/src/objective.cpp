#include "psolab/objective.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace psolab::objective {

namespace {

void check_coords(const std::vector<double>& coords)
{
    if (coords.empty())
        throw std::invalid_argument("Point: dimension must be at least 1");
    for (double c : coords) {
        if (!std::isfinite(c))
            throw std::invalid_argument("Point: coordinates must be finite");
    }
}

} // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords))
{
    check_coords(coords_);
}

Point::Point(std::initializer_list<double> coords) : coords_(coords)
{
    check_coords(coords_);
}

double schaffer_f6(const Point& p)
{
    if (p.dim() != 2)
        throw std::invalid_argument("schaffer_f6: requires dimension 2");
    const double x = p[0];
    const double y = p[1];
    const double r2 = x * x + y * y;
    const double s = std::sin(std::sqrt(r2));
    const double denom = 1.0 + 0.001 * r2;
    return 0.5 + (s * s - 0.5) / (denom * denom);
}

double sphere(const Point& p)
{
    double sum = 0.0;
    for (double c : p.coords())
        sum += c * c;
    return sum;
}

namespace {

const std::array<Objective, 2> kObjectives = {{
    {"schaffer_f6", schaffer_f6, 2},
    {"sphere", sphere, 0},
}};

} // namespace

const Objective* find_objective(std::string_view name)
{
    for (const Objective& o : kObjectives) {
        if (o.name == name)
            return &o;
    }
    return nullptr;
}

std::span<const Objective> all_objectives()
{
    return kObjectives;
}

} // namespace psolab::objective
