#pragma once

// Dense operator oracles. These matrices exist to validate the phase-space
// algebra at desk scale (n <= 10); production paths never multiply matrices.
// The scalar is either std::complex<double> or RatComplex, so the same oracle
// code runs in floating point and in exact rational arithmetic.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lambdaloc/pauli.hpp"
#include "lambdaloc/rational.hpp"

namespace lambdaloc {

inline constexpr int kDenseLimit = 10;  // refuse matrices beyond 2^10 x 2^10

struct RatComplex {
    Rational re{0};
    Rational im{0};

    RatComplex() = default;
    RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit RatComplex(int v) : re(v), im(0) {}

    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    RatComplex& operator+=(const RatComplex& o) { re += o.re; im += o.im; return *this; }
    friend bool operator==(const RatComplex& a, const RatComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline RatComplex conj(const RatComplex& c) { return {c.re, -c.im}; }

template <class C>
struct ComplexOps;

template <>
struct ComplexOps<std::complex<double>> {
    using Real = double;
    static std::complex<double> from_int(int v) { return {double(v), 0.0}; }
    static std::complex<double> i_power(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }
    static double real(const std::complex<double>& c) { return c.real(); }
    static double abs2(const std::complex<double>& c) { return std::norm(c); }
};

template <>
struct ComplexOps<RatComplex> {
    using Real = Rational;
    static RatComplex from_int(int v) { return RatComplex(v); }
    static RatComplex i_power(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {Rational(1), Rational(0)};
            case 1: return {Rational(0), Rational(1)};
            case 2: return {Rational(-1), Rational(0)};
            default: return {Rational(0), Rational(-1)};
        }
    }
    static Rational real(const RatComplex& c) { return c.re; }
    static Rational abs2(const RatComplex& c) { return c.re * c.re + c.im * c.im; }
};

template <class C>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, C{}) {}

    static Matrix identity(int dim) {
        Matrix m(dim, dim);
        for (int i = 0; i < dim; ++i) m(i, i) = ComplexOps<C>::from_int(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    C& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const C& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const C& v = x(i, k);
                for (int j = 0; j < y.cols_; ++j) out(i, j) += v * y(k, j);
            }
        return out;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out = x;
        for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out = x;
        for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] - y.a_[i];
        return out;
    }

    Matrix scaled(const C& s) const {
        Matrix out = *this;
        for (auto& v : out.a_) v = v * s;
        return out;
    }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = conj((*this)(i, j));
        return out;
    }

    C trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        C t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<C> a_;
};

using DenseOperator = Matrix<std::complex<double>>;
using ExactOperator = Matrix<RatComplex>;

// Kronecker product with qubit 1 in the least significant bit: kron(A, B)
// puts A on the high bits and B on the low bits.
template <class C>
Matrix<C> kron(const Matrix<C>& a, const Matrix<C>& b) {
    Matrix<C> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// T_a acting on (C^2)^{otimes n}: entry rule (X^x Z^z)|b> = (-1)^{z.b} |b^x>,
// global phase i^{x.z}.
template <class C = std::complex<double>>
Matrix<C> pauli_matrix(const PauliPoint& a) {
    if (a.n > kDenseLimit) throw std::invalid_argument("dense oracle limited to n <= 10");
    const int dim = 1 << a.n;
    Matrix<C> m(dim, dim);
    const C phase = ComplexOps<C>::i_power(std::popcount(a.xbits & a.zbits));
    for (int b = 0; b < dim; ++b) {
        const int sign = parity(a.zbits & uint32_t(b)) ? -1 : 1;
        m(b ^ int(a.xbits), b) = phase * ComplexOps<C>::from_int(sign);
    }
    return m;
}

// Trace out one qubit (1-based); output dimension halves.
template <class C>
Matrix<C> partial_trace_qubit(const Matrix<C>& m, int n, int qubit) {
    if (m.rows() != (1 << n)) throw std::invalid_argument("dimension mismatch in partial trace");
    const int bit = qubit - 1;
    const int dim_out = 1 << (n - 1);
    const uint32_t low = (1u << bit) - 1u;
    auto expand = [&](int r, int v) {  // insert bit value v at position `bit`
        return int((uint32_t(r) & low) | (uint32_t(v) << bit) | ((uint32_t(r) & ~low) << 1));
    };
    Matrix<C> out(dim_out, dim_out);
    for (int i = 0; i < dim_out; ++i)
        for (int j = 0; j < dim_out; ++j)
            out(i, j) = m(expand(i, 0), expand(j, 0)) + m(expand(i, 1), expand(j, 1));
    return out;
}

inline double max_abs_diff(const DenseOperator& x, const DenseOperator& y) {
    double worst = 0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) worst = std::max(worst, std::abs(x(i, j) - y(i, j)));
    return worst;
}

inline bool exact_equal(const ExactOperator& x, const ExactOperator& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (!(x(i, j) == y(i, j))) return false;
    return true;
}

inline double hermiticity_defect(const DenseOperator& m) {
    return max_abs_diff(m, m.adjoint());
}

}  // namespace lambdaloc
