#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qtherm/errors.hpp"

namespace qtherm {
namespace detail {

template <typename T>
double abs_of(const T& v) {
    return std::abs(v);
}

// In-place LU with partial pivoting on a row-major n x n matrix.
// Returns the pivot permutation; throws PhysicsGuard on (near-)singularity.
template <typename T>
std::vector<int> lu_factor(std::vector<T>& a, int n, double singular_tol) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    double scale = 0.0;
    for (const T& v : a) scale = std::max(scale, abs_of(v));
    if (scale == 0.0) throw PhysicsGuard("linear solve: zero matrix");
    const double tol = singular_tol * scale;

    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = abs_of(a[static_cast<std::size_t>(k) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double cand = abs_of(a[static_cast<std::size_t>(i) * n + k]);
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best <= tol)
            throw PhysicsGuard("linear solve: singular system (degenerate solution space)");
        perm[static_cast<std::size_t>(k)] = pivot;
        if (pivot != k)
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(k) * n + j],
                          a[static_cast<std::size_t>(pivot) * n + j]);

        const T pivval = a[static_cast<std::size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            T& lik = a[static_cast<std::size_t>(i) * n + k];
            lik = lik / pivval;
            const T m = lik;
            if (m == T(0)) continue;
            const T* krow = a.data() + static_cast<std::size_t>(k) * n;
            T* irow = a.data() + static_cast<std::size_t>(i) * n;
            for (int j = k + 1; j < n; ++j) irow[j] -= m * krow[j];
        }
    }
    return perm;
}

template <typename T>
void lu_solve_inplace(const std::vector<T>& lu, const std::vector<int>& perm, int n,
                      std::vector<T>& b) {
    for (int k = 0; k < n; ++k)
        if (perm[static_cast<std::size_t>(k)] != k)
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
    for (int i = 1; i < n; ++i) {
        T s = b[static_cast<std::size_t>(i)];
        const T* row = lu.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < i; ++j) s -= row[j] * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(i)] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        T s = b[static_cast<std::size_t>(i)];
        const T* row = lu.data() + static_cast<std::size_t>(i) * n;
        for (int j = i + 1; j < n; ++j) s -= row[j] * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(i)] = s / row[i];
    }
}

}  // namespace detail

// Solve a x = b for dense row-major a (n x n), destroying neither input.
// One step of iterative refinement keeps residuals near machine level
// even for the larger population-block systems.
template <typename T>
std::vector<T> solve_dense(const std::vector<T>& a, const std::vector<T>& b, int n,
                           double singular_tol = 1e-13) {
    std::vector<T> lu = a;
    const std::vector<int> perm = detail::lu_factor(lu, n, singular_tol);

    std::vector<T> x = b;
    detail::lu_solve_inplace(lu, perm, n, x);

    // refinement: r = b - a x, x += solve(a, r)
    std::vector<T> r = b;
    for (int i = 0; i < n; ++i) {
        T s = T(0);
        const T* row = a.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] -= s;
    }
    detail::lu_solve_inplace(lu, perm, n, r);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
    return x;
}

}  // namespace qtherm
