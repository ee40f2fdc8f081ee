#pragma once

#include <cmath>

#include "qtherm/errors.hpp"
#include "qtherm/matrix.hpp"

namespace qtherm {

// Number of retained Fock levels 0..levels-1 of a truncated oscillator.
struct FockTruncation {
    int levels;

    explicit FockTruncation(int d) : levels(d) {
        if (d < 2) throw InvalidInput("FockTruncation: need at least 2 levels");
    }
};

struct LadderOperators {
    ComplexMatrix a;       // annihilation: a(k-1, k) = sqrt(k)
    ComplexMatrix a_dag;   // creation
    ComplexMatrix number;  // a_dag a = diag(0 .. d-1)
};

inline LadderOperators fock_operators(FockTruncation trunc) {
    const int d = trunc.levels;
    LadderOperators ops{ComplexMatrix(d), ComplexMatrix(d), ComplexMatrix(d)};
    for (int k = 1; k < d; ++k) {
        const double s = std::sqrt(static_cast<double>(k));
        ops.a(k - 1, k) = s;
        ops.a_dag(k, k - 1) = s;
    }
    for (int k = 0; k < d; ++k) ops.number(k, k) = static_cast<double>(k);
    return ops;
}

}  // namespace qtherm
