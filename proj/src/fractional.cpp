#include "fracnehari/fractional.hpp"

#include "fracnehari/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracnehari {

std::vector<double> gl_weights(double alpha, std::size_t m) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("fractional order must lie in (0, 1], got " + std::to_string(alpha));
    std::vector<double> w(m + 1);
    w[0] = 1.0;
    for (std::size_t k = 1; k <= m; ++k)
        w[k] = w[k - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(k));
    return w;
}

FracOperator build_operator(const Grid& grid, double alpha, Side side) {
    const std::size_t m = grid.interior();
    const std::vector<double> w = gl_weights(alpha, m - 1);
    // pow(h, 1.0) == h, so the classical limit produces exact 1/h entries.
    const double scale = 1.0 / std::pow(grid.step, alpha);

    FracOperator op;
    op.order = alpha;
    op.side = side;
    op.grid = grid;
    op.matrix.assign(m * m, 0.0);

    const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < mm; ++r) {
        double* row = op.matrix.data() + static_cast<std::size_t>(r) * m;
        if (side == Side::left) {
            for (std::size_t c = 0; c <= static_cast<std::size_t>(r); ++c)
                row[c] = scale * w[static_cast<std::size_t>(r) - c];
        } else {
            for (std::size_t c = static_cast<std::size_t>(r); c < m; ++c)
                row[c] = scale * w[c - static_cast<std::size_t>(r)];
        }
    }
    return op;
}

std::vector<double> apply(const FracOperator& op, const GridFunction& u) {
    if (!(u.grid == op.grid))
        throw std::invalid_argument("operator and grid function live on different grids");
    std::vector<double> out(u.values.size());
    apply(op, u.values, out);
    return out;
}

void apply(const FracOperator& op, std::span<const double> values, std::span<double> out) {
    const std::size_t m = op.grid.interior();
    if (values.size() != m || out.size() != m)
        throw std::invalid_argument("operator/vector dimension mismatch");
    kernels::matvec_tri(op.matrix, m, values, out, op.lower_triangular());
}

std::vector<double> rl_integral(std::span<const double> samples, double h, double gamma, Side side) {
    if (!(gamma > 0.0))
        throw std::domain_error("fractional integral order must be positive, got " + std::to_string(gamma));
    if (!(h > 0.0)) throw std::domain_error("step must be positive");

    const std::size_t m = samples.size();
    std::vector<double> out(m, 0.0);
    if (m == 0) return out;

    // Exact moments of the kernel (t-s)^{gamma-1}/Gamma(gamma) over one cell.
    std::vector<double> c(m, 0.0);
    for (std::size_t k = 1; k < m; ++k)
        c[k] = std::pow(static_cast<double>(k), gamma) - std::pow(static_cast<double>(k - 1), gamma);
    const double scale = std::pow(h, gamma) / std::tgamma(gamma + 1.0);

    const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < mm; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        const std::size_t reach = side == Side::left ? ii : m - 1 - ii;
        double acc = 0.0;
        for (std::size_t k = 1; k <= reach; ++k)
            acc += c[k] * (side == Side::left ? samples[ii - k] : samples[ii + k]);
        out[ii] = scale * acc;
    }
    return out;
}

} // namespace fracnehari
