#pragma once

#include "fracnehari/grid.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fracnehari {

enum class Side { left, right };

// Grunwald-Letnikov weights w_0..w_m: w_0 = 1, w_k = w_{k-1} * (1 - (alpha+1)/k).
// These are the signed binomial coefficients (-1)^k C(alpha, k).
std::vector<double> gl_weights(double alpha, std::size_t m);

// Dense triangular realization of the Riemann-Liouville derivative of order
// alpha on the interior nodes of a uniform grid. The left matrix has entries
// h^{-alpha} w_{i-j} for j <= i; the right matrix is its exact transpose, so
// discrete integration by parts holds by construction. Terms that would touch
// u_0 or u_n are dropped: both vanish in the underlying space.
struct FracOperator {
    double order = 1.0;
    Side side = Side::left;
    Grid grid;
    std::vector<double> matrix; // (n-1) x (n-1), row-major

    bool lower_triangular() const { return side == Side::left; }
    double entry(std::size_t r, std::size_t c) const { return matrix[r * grid.interior() + c]; }
};

FracOperator build_operator(const Grid& grid, double alpha, Side side);

// Samples of the fractional derivative at interior nodes: W * u.values.
std::vector<double> apply(const FracOperator& op, const GridFunction& u);
void apply(const FracOperator& op, std::span<const double> values, std::span<double> out);

// Rectangle-rule Riemann-Liouville fractional integral of order gamma > 0 of
// node samples (piecewise-constant density, exact kernel moments). Testing
// oracle for build_operator, not part of the solver hot path.
std::vector<double> rl_integral(std::span<const double> samples, double h, double gamma, Side side);

} // namespace fracnehari
