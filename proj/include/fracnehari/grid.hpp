#pragma once

#include <cstddef>
#include <vector>

namespace fracnehari {

// Uniform grid on [0, T] with n subintervals, nodes t_i = i*h.
struct Grid {
    double horizon = 1.0;      // T
    std::size_t subintervals = 0; // n
    double step = 0.0;         // h = T/n

    Grid() = default;
    Grid(double T, std::size_t n); // validates T > 0, n >= 4

    std::size_t interior() const { return subintervals - 1; }
    double node(std::size_t i) const { return step * static_cast<double>(i); }
    // Interior nodes t_1 .. t_{n-1}.
    std::vector<double> interior_nodes() const;

    bool operator==(const Grid&) const = default;
};

// Values at interior nodes only; u(0) = u(T) = 0 is implicit and never stored.
struct GridFunction {
    Grid grid;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(Grid g, std::vector<double> v); // requires v.size() == g.interior()
    static GridFunction zeros(const Grid& g);

    bool is_zero() const;
};

} // namespace fracnehari
