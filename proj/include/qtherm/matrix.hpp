#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qtherm/errors.hpp"

namespace qtherm {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Dimensions stay small (a few
// tens for full states, a couple thousand for diagonal-only work), so
// dense storage is the simplest thing that is fast enough.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim) : dim_(dim) {
        if (dim < 1) throw InvalidInput("ComplexMatrix: dimension must be positive");
        data_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& entries) {
        ComplexMatrix m(static_cast<int>(entries.size()));
        for (int i = 0; i < m.dim_; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& entries) {
        ComplexMatrix m(static_cast<int>(entries.size()));
        for (int i = 0; i < m.dim_; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }

    Complex* row(int i) { return data_.data() + static_cast<std::size_t>(i) * dim_; }
    const Complex* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * dim_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    Complex trace() const {
        Complex t(0.0, 0.0);
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool all_finite() const {
        for (const Complex& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    // max entry of |m - m^dagger|
    double hermiticity_defect() const {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    // replace by (m + m^dagger)/2
    void hermitize() {
        for (int i = 0; i < dim_; ++i) {
            (*this)(i, i) = Complex((*this)(i, i).real(), 0.0);
            for (int j = i + 1; j < dim_; ++j) {
                Complex avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
                (*this)(i, j) = avg;
                (*this)(j, i) = std::conj(avg);
            }
        }
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        check_same_dim(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        check_same_dim(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }

    ComplexMatrix& operator*=(Complex scale) {
        for (Complex& z : data_) z *= scale;
        return *this;
    }

    void set_zero() { data_.assign(data_.size(), Complex(0.0, 0.0)); }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

private:
    void check_same_dim(const ComplexMatrix& other) const {
        if (other.dim_ != dim_) throw InvalidInput("ComplexMatrix: dimension mismatch");
    }

    int dim_;
    std::vector<Complex> data_;
};

// out = a * b, reusing out's storage.
inline void multiply_into(ComplexMatrix& out, const ComplexMatrix& a, const ComplexMatrix& b) {
    const int d = a.dim();
    if (b.dim() != d || out.dim() != d) throw InvalidInput("multiply_into: dimension mismatch");
    out.set_zero();
    for (int i = 0; i < d; ++i) {
        const Complex* arow = a.row(i);
        Complex* orow = out.row(i);
        for (int k = 0; k < d; ++k) {
            const Complex aik = arow[k];
            if (aik == Complex(0.0, 0.0)) continue;
            const Complex* brow = b.row(k);
            for (int j = 0; j < d; ++j) orow[j] += aik * brow[j];
        }
    }
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim());
    multiply_into(out, a, b);
    return out;
}

// y += alpha * x
inline void add_scaled(ComplexMatrix& y, Complex alpha, const ComplexMatrix& x) {
    const int d = y.dim();
    if (x.dim() != d) throw InvalidInput("add_scaled: dimension mismatch");
    for (int i = 0; i < d; ++i) {
        Complex* yrow = y.row(i);
        const Complex* xrow = x.row(i);
        for (int j = 0; j < d; ++j) yrow[j] += alpha * xrow[j];
    }
}

// Re Tr(a * b) without forming the product.
inline double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int d = a.dim();
    if (b.dim() != d) throw InvalidInput("real_trace_product: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        const Complex* arow = a.row(i);
        for (int k = 0; k < d; ++k) s += (arow[k] * b(k, i)).real();
    }
    return s;
}

}  // namespace qtherm
