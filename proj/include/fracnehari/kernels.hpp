#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracnehari::kernels {

// Runtime switch between the OpenMP kernels and the serial reference path.
// Both paths perform the same floating-point operations in the same order,
// so results are bit-identical; the tests assert exact equality.
enum class Exec { serial, parallel };

void set_execution(Exec mode) noexcept;
Exec execution() noexcept;

// Fixed-shape pairwise reduction. The tree depends only on the index range,
// never on thread count, which keeps every reduction reproducible.
template <class F>
double pairwise_map_sum(std::size_t lo, std::size_t hi, F&& term) {
    if (hi - lo <= 32) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_map_sum(lo, mid, term) + pairwise_map_sum(mid, hi, term);
}

double pairwise_sum(std::span<const double> v);

// Dense m-by-m triangular matvec, y = W x. Row sums run in ascending column
// order on both paths.
void matvec_tri_serial(std::span<const double> w, std::size_t m,
                       std::span<const double> x, std::span<double> y, bool lower);
void matvec_tri_parallel(std::span<const double> w, std::size_t m,
                         std::span<const double> x, std::span<double> y, bool lower);
void matvec_tri(std::span<const double> w, std::size_t m,
                std::span<const double> x, std::span<double> y, bool lower);

// In-place dense triangular solves, W x = b with x aliased to b.
// The parallel variant uses blocked column updates; each row accumulates in
// ascending column order, matching the serial substitution bit for bit.
void solve_lower_serial(std::span<const double> w, std::size_t m, std::span<double> x);
void solve_lower_parallel(std::span<const double> w, std::size_t m, std::span<double> x);
void solve_lower(std::span<const double> w, std::size_t m, std::span<double> x);
void solve_upper_serial(std::span<const double> w, std::size_t m, std::span<double> x);
void solve_upper_parallel(std::span<const double> w, std::size_t m, std::span<double> x);
void solve_upper(std::span<const double> w, std::size_t m, std::span<double> x);

// sum_i |v_i|^p
double sum_abs_pow(std::span<const double> v, double p);
// sum_i a_i b_i
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double sup_abs(std::span<const double> v);

// out_i = |v_i|^{p-2} v_i, with 0 at v_i = 0
void phi_p(std::span<const double> v, double p, std::span<double> out);

} // namespace fracnehari::kernels
