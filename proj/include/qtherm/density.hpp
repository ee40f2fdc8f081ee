#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "qtherm/eigen.hpp"
#include "qtherm/errors.hpp"
#include "qtherm/matrix.hpp"

namespace qtherm {

struct StateTolerances {
    double hermiticity = 1e-12;
    double trace = 1e-10;
    double positivity = 1e-10;  // eigenvalues >= -positivity
};

// Trace-one positive-semidefinite Hermitian state. Construction goes
// through validated() so an instance always satisfies the invariants at
// the tolerances it was built with.
class DensityMatrix {
public:
    static DensityMatrix validated(ComplexMatrix m, const StateTolerances& tol = {}) {
        if (!m.all_finite()) throw InvalidInput("DensityMatrix: non-finite entries");
        const double herm = m.hermiticity_defect();
        if (herm > tol.hermiticity) {
            std::ostringstream msg;
            msg << "DensityMatrix: hermiticity defect " << herm << " exceeds " << tol.hermiticity;
            throw InvalidInput(msg.str());
        }
        const Complex tr = m.trace();
        const double trace_err = std::abs(tr - Complex(1.0, 0.0));
        if (trace_err > tol.trace) {
            std::ostringstream msg;
            msg << "DensityMatrix: trace deviates from 1 by " << trace_err;
            throw InvalidInput(msg.str());
        }
        ComplexMatrix h = m;
        h.hermitize();
        const std::vector<double> evals = hermitian_eigenvalues(h);
        if (evals.front() < -tol.positivity) {
            std::ostringstream msg;
            msg << "DensityMatrix: negative eigenvalue " << evals.front();
            throw InvalidInput(msg.str());
        }
        return DensityMatrix(std::move(h));
    }

    const ComplexMatrix& matrix() const { return rho_; }
    int dim() const { return rho_.dim(); }

    double population(int k) const { return rho_(k, k).real(); }

private:
    explicit DensityMatrix(ComplexMatrix m) : rho_(std::move(m)) {}

    ComplexMatrix rho_;
};

// rho = exp(-H/T) / Tr exp(-H/T), via eigendecomposition with the largest
// exponent factored out so low temperatures cannot overflow.
inline DensityMatrix gibbs_state(const ComplexMatrix& hamiltonian, double temperature) {
    if (!(temperature > 0.0)) throw InvalidInput("gibbs_state: temperature must be positive");
    const EigenDecomposition eig = hermitian_eigen(hamiltonian);
    const int d = hamiltonian.dim();

    const double lambda_min = eig.eigenvalues.front();
    std::vector<double> weights(static_cast<std::size_t>(d));
    double z = 0.0;
    for (int i = 0; i < d; ++i) {
        weights[static_cast<std::size_t>(i)] =
            std::exp(-(eig.eigenvalues[static_cast<std::size_t>(i)] - lambda_min) / temperature);
        z += weights[static_cast<std::size_t>(i)];
    }

    ComplexMatrix rho(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < d; ++k)
                s += eig.eigenvectors(i, k) * (weights[static_cast<std::size_t>(k)] / z) *
                     std::conj(eig.eigenvectors(j, k));
            rho(i, j) = s;
        }
    rho.hermitize();
    return DensityMatrix::validated(std::move(rho));
}

// S = -sum lambda ln lambda in nats; eigenvalues clamped to [0,1] first,
// with the 0 ln 0 = 0 convention.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.matrix())) {
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) s -= lambda * std::log(lambda);
    }
    return s;
}

// (1/2) sum |eigenvalues(a - b)|
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    ComplexMatrix diff = a.matrix();
    diff -= b.matrix();
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(diff)) s += std::abs(lambda);
    return 0.5 * s;
}

// Tr(rho n) for a state expressed in the Fock basis.
inline double mean_fock_occupation(const DensityMatrix& rho) {
    double s = 0.0;
    for (int k = 0; k < rho.dim(); ++k) s += k * rho.population(k);
    return s;
}

}  // namespace qtherm
