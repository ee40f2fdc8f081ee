#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qtherm/errors.hpp"
#include "qtherm/matrix.hpp"

namespace qtherm {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns; m = V diag(eigenvalues) V^dagger
};

namespace detail {

// One complex Jacobi rotation zeroing a(p,q). The phase of a(p,q) is
// absorbed first so the 2x2 block becomes real symmetric, then the
// classic tangent formula applies. Updates a (full matrix) and
// accumulates the rotation into v.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    const Complex phase = apq / abs_apq;  // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // R = I except R(p,p)=c, R(p,q)=s, R(q,p)=-s*conj(phase), R(q,q)=c*conj(phase);
    // a <- R^dagger a R, v <- v R.
    const Complex rqp = -s * std::conj(phase);
    const Complex rqq = c * std::conj(phase);
    const int d = a.dim();

    for (int k = 0; k < d; ++k) {  // columns: a <- a R
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + rqp * akq;
        a(k, q) = s * akp + rqq * akq;
    }
    for (int k = 0; k < d; ++k) {  // rows: a <- R^dagger a
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + std::conj(rqp) * aqk;
        a(q, k) = s * apk + std::conj(rqq) * aqk;
    }
    for (int k = 0; k < d; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + rqp * vkq;
        v(k, q) = s * vkp + rqq * vkq;
    }
    // enforce exact zeros / real diagonal on the eliminated pair
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
}

inline double offdiagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi diagonalization for Hermitian matrices. Converges when the
// off-diagonal Frobenius norm drops below 1e-12 * ||m||_F; at most 100
// sweeps. Adequate and robust for the dimensions this library uses.
inline EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
    if (!m.all_finite()) throw InvalidInput("hermitian_eigen: non-finite entries");
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > 1e-10 * scale)
        throw InvalidInput("hermitian_eigen: matrix is not Hermitian within tolerance");

    const int d = m.dim();
    ComplexMatrix a = m;
    a.hermitize();  // remove sub-tolerance asymmetry before iterating
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double norm = a.frobenius_norm();
    const double threshold = 1e-12 * norm;
    if (norm > 0.0) {
        for (int sweep = 0; sweep < 100; ++sweep) {
            if (detail::offdiagonal_frobenius(a) < threshold) break;
            for (int p = 0; p < d - 1; ++p)
                for (int q = p + 1; q < d; ++q) detail::jacobi_rotate(a, v, p, q);
        }
    }

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(d)), ComplexMatrix(d)};
    for (int j = 0; j < d; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)],
                                                         order[static_cast<std::size_t>(j)])
                                                           .real();
        for (int i = 0; i < d; ++i) out.eigenvectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

// Eigenvalues only (same algorithm; kept separate so hot paths read clearly).
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigen(m).eigenvalues;
}

}  // namespace qtherm
