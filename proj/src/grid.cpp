#include "fracnehari/grid.hpp"

#include <stdexcept>
#include <string>

namespace fracnehari {

Grid::Grid(double T, std::size_t n) : horizon(T), subintervals(n), step(T / static_cast<double>(n)) {
    if (!(T > 0.0)) throw std::invalid_argument("grid horizon T must be positive");
    if (n < 4) throw std::invalid_argument("grid needs at least 4 subintervals, got " + std::to_string(n));
}

std::vector<double> Grid::interior_nodes() const {
    std::vector<double> t(interior());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = node(i + 1);
    return t;
}

GridFunction::GridFunction(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.interior())
        throw std::invalid_argument("grid function needs one value per interior node");
}

GridFunction GridFunction::zeros(const Grid& g) {
    return GridFunction(g, std::vector<double>(g.interior(), 0.0));
}

bool GridFunction::is_zero() const {
    for (double v : values)
        if (v != 0.0) return false;
    return true;
}

} // namespace fracnehari
