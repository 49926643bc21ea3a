#include "fracnehari/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>

namespace fracnehari::kernels {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};

constexpr std::size_t kSolveBlock = 64;
} // namespace

void set_execution(Exec mode) noexcept { g_exec.store(mode, std::memory_order_relaxed); }
Exec execution() noexcept { return g_exec.load(std::memory_order_relaxed); }

double pairwise_sum(std::span<const double> v) {
    return pairwise_map_sum(0, v.size(), [&](std::size_t i) { return v[i]; });
}

void matvec_tri_serial(std::span<const double> w, std::size_t m,
                       std::span<const double> x, std::span<double> y, bool lower) {
    for (std::size_t r = 0; r < m; ++r) {
        const double* row = w.data() + r * m;
        const std::size_t c0 = lower ? 0 : r;
        const std::size_t c1 = lower ? r + 1 : m;
        double acc = 0.0;
        for (std::size_t c = c0; c < c1; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

void matvec_tri_parallel(std::span<const double> w, std::size_t m,
                         std::span<const double> x, std::span<double> y, bool lower) {
    const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < mm; ++r) {
        const double* row = w.data() + static_cast<std::size_t>(r) * m;
        const std::size_t c0 = lower ? 0 : static_cast<std::size_t>(r);
        const std::size_t c1 = lower ? static_cast<std::size_t>(r) + 1 : m;
        double acc = 0.0;
        for (std::size_t c = c0; c < c1; ++c) acc += row[c] * x[c];
        y[static_cast<std::size_t>(r)] = acc;
    }
}

void matvec_tri(std::span<const double> w, std::size_t m,
                std::span<const double> x, std::span<double> y, bool lower) {
    if (execution() == Exec::parallel)
        matvec_tri_parallel(w, m, x, y, lower);
    else
        matvec_tri_serial(w, m, x, y, lower);
}

void solve_lower_serial(std::span<const double> w, std::size_t m, std::span<double> x) {
    for (std::size_t r = 0; r < m; ++r) {
        const double* row = w.data() + r * m;
        double acc = x[r];
        for (std::size_t c = 0; c < r; ++c) acc -= row[c] * x[c];
        x[r] = acc / row[r];
    }
}

void solve_lower_parallel(std::span<const double> w, std::size_t m, std::span<double> x) {
    for (std::size_t k0 = 0; k0 < m; k0 += kSolveBlock) {
        const std::size_t k1 = std::min(m, k0 + kSolveBlock);
        for (std::size_t r = k0; r < k1; ++r) {
            const double* row = w.data() + r * m;
            double acc = x[r];
            for (std::size_t c = k0; c < r; ++c) acc -= row[c] * x[c];
            x[r] = acc / row[r];
        }
        const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
        for (std::int64_t r = static_cast<std::int64_t>(k1); r < mm; ++r) {
            const double* row = w.data() + static_cast<std::size_t>(r) * m;
            double acc = x[static_cast<std::size_t>(r)];
            for (std::size_t c = k0; c < k1; ++c) acc -= row[c] * x[c];
            x[static_cast<std::size_t>(r)] = acc;
        }
    }
}

void solve_lower(std::span<const double> w, std::size_t m, std::span<double> x) {
    if (execution() == Exec::parallel)
        solve_lower_parallel(w, m, x);
    else
        solve_lower_serial(w, m, x);
}

void solve_upper_serial(std::span<const double> w, std::size_t m, std::span<double> x) {
    for (std::size_t rr = m; rr-- > 0;) {
        const double* row = w.data() + rr * m;
        double acc = x[rr];
        for (std::size_t c = rr + 1; c < m; ++c) acc -= row[c] * x[c];
        x[rr] = acc / row[rr];
    }
}

void solve_upper_parallel(std::span<const double> w, std::size_t m, std::span<double> x) {
    for (std::size_t k1 = m; k1 > 0;) {
        const std::size_t k0 = k1 >= kSolveBlock ? k1 - kSolveBlock : 0;
        for (std::size_t rr = k1; rr-- > k0;) {
            const double* row = w.data() + rr * m;
            double acc = x[rr];
            for (std::size_t c = rr + 1; c < k1; ++c) acc -= row[c] * x[c];
            x[rr] = acc / row[rr];
        }
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(k0); ++r) {
            const double* row = w.data() + static_cast<std::size_t>(r) * m;
            double acc = x[static_cast<std::size_t>(r)];
            for (std::size_t c = k0; c < k1; ++c) acc -= row[c] * x[c];
            x[static_cast<std::size_t>(r)] = acc;
        }
        k1 = k0;
    }
}

void solve_upper(std::span<const double> w, std::size_t m, std::span<double> x) {
    if (execution() == Exec::parallel)
        solve_upper_parallel(w, m, x);
    else
        solve_upper_serial(w, m, x);
}

double sum_abs_pow(std::span<const double> v, double p) {
    if (execution() == Exec::parallel && v.size() >= 256) {
        std::vector<double> terms(v.size());
        const std::int64_t nn = static_cast<std::int64_t>(v.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < nn; ++i)
            terms[static_cast<std::size_t>(i)] = std::pow(std::fabs(v[static_cast<std::size_t>(i)]), p);
        return pairwise_sum(terms);
    }
    return pairwise_map_sum(0, v.size(), [&](std::size_t i) { return std::pow(std::fabs(v[i]), p); });
}

double dot(std::span<const double> a, std::span<const double> b) {
    return pairwise_map_sum(0, a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

double norm2(std::span<const double> v) {
    return std::sqrt(pairwise_map_sum(0, v.size(), [&](std::size_t i) { return v[i] * v[i]; }));
}

double sup_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

void phi_p(std::span<const double> v, double p, std::span<double> out) {
    const std::int64_t nn = static_cast<std::int64_t>(v.size());
    if (execution() == Exec::parallel && v.size() >= 256) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < nn; ++i) {
            const double s = v[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = s == 0.0 ? 0.0 : std::copysign(std::pow(std::fabs(s), p - 1.0), s);
        }
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double s = v[i];
        out[i] = s == 0.0 ? 0.0 : std::copysign(std::pow(std::fabs(s), p - 1.0), s);
    }
}

} // namespace fracnehari::kernels
