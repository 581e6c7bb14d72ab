#pragma once

// The universal operator representation: a trace-one Hermitian operator A is
// stored as its full table of Pauli expectations e_a = Tr(T_a A), a in E_n.
// Exact-rational tables drive the polytope combinatorics; double tables carry
// the irrational magic-state inputs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lambdaloc/dense.hpp"
#include "lambdaloc/pauli.hpp"
#include "lambdaloc/rational.hpp"

namespace lambdaloc {

inline constexpr int kTableLimit = 7;  // full 4^n tables refuse larger n

inline uint32_t table_size(int n) {
    if (n < 0 || n > kTableLimit) throw std::invalid_argument("expectation table limited to n <= 7");
    return 1u << (2 * n);
}

template <class S>
struct Expectation {
    int n = 0;
    std::vector<S> e;  // indexed by PauliPoint::index(); e[0] must stay 1

    Expectation() : e(1, S(1)) {}
    explicit Expectation(int nq) : n(nq), e(table_size(nq), S(0)) { e[0] = S(1); }

    const S& at(const PauliPoint& a) const { return e[a.index()]; }
    S& at(const PauliPoint& a) { return e[a.index()]; }

    friend bool operator==(const Expectation& a, const Expectation& b) {
        return a.n == b.n && a.e == b.e;
    }
};

using RatExpectation = Expectation<Rational>;
using DblExpectation = Expectation<double>;

// CLI-facing value that remembers which numeric mode a file was written in.
using AnyExpectation = std::variant<RatExpectation, DblExpectation>;

inline DblExpectation to_double_expectation(const RatExpectation& a) {
    DblExpectation out(a.n);
    for (uint32_t i = 0; i < a.e.size(); ++i) out.e[i] = to_double(a.e[i]);
    return out;
}

inline DblExpectation to_double_expectation(const AnyExpectation& a) {
    if (std::holds_alternative<DblExpectation>(a)) return std::get<DblExpectation>(a);
    return to_double_expectation(std::get<RatExpectation>(a));
}

inline int expectation_n(const AnyExpectation& a) {
    return std::visit([](const auto& v) { return v.n; }, a);
}

template <class S>
Expectation<S> maximally_mixed(int n) {
    return Expectation<S>(n);
}

// The single-qubit vertices A^{rst} = (1 + (-1)^r X + (-1)^s Y + (-1)^t Z)/2.
inline RatExpectation eight_state(int r, int s, int t) {
    RatExpectation a(1);
    a.e[pauli_x(1, 1).index()] = r ? -1 : 1;
    a.e[pauli_y(1, 1).index()] = s ? -1 : 1;
    a.e[pauli_z(1, 1).index()] = t ? -1 : 1;
    return a;
}

template <class C, class S>
Matrix<C> to_matrix(const Expectation<S>& a) {
    const int dim = 1 << a.n;
    Matrix<C> m(dim, dim);
    for (uint32_t idx = 0; idx < a.e.size(); ++idx) {
        const S& coeff = a.e[idx];
        if (ScalarTraits<S>::is_zero(coeff) && idx != 0) continue;
        const PauliPoint p = PauliPoint::from_index(a.n, idx);
        const C phase = ComplexOps<C>::i_power(std::popcount(p.xbits & p.zbits));
        for (int b = 0; b < dim; ++b) {
            const int sign = parity(p.zbits & uint32_t(b)) ? -1 : 1;
            C term = phase * ComplexOps<C>::from_int(sign);
            if constexpr (std::is_same_v<C, RatComplex>) {
                term = term * RatComplex{Rational(coeff), Rational(0)};
            } else {
                term = term * C(ScalarTraits<S>::approx(coeff), 0.0);
            }
            m(b ^ int(p.xbits), b) += term;
        }
    }
    const C scale = [&] {
        if constexpr (std::is_same_v<C, RatComplex>) {
            return RatComplex{Rational(1, 1 << a.n), Rational(0)};
        } else {
            return C(1.0 / dim, 0.0);
        }
    }();
    return m.scaled(scale);
}

inline DenseOperator to_matrix(const DblExpectation& a) { return to_matrix<std::complex<double>>(a); }
inline ExactOperator to_exact_matrix(const RatExpectation& a) { return to_matrix<RatComplex>(a); }

// e_a = Tr(T_a M). Requires a Hermitian trace-one input (1e-10 in doubles,
// exact in rationals).
inline DblExpectation from_matrix(const DenseOperator& m, int n) {
    if (m.rows() != (1 << n)) throw std::invalid_argument("matrix dimension mismatch");
    if (hermiticity_defect(m) > 1e-10) throw std::invalid_argument("from_matrix: input not Hermitian");
    if (std::abs(m.trace() - std::complex<double>(1, 0)) > 1e-10)
        throw std::invalid_argument("from_matrix: input trace is not one");
    DblExpectation out(n);
    const int dim = 1 << n;
    for (uint32_t idx = 0; idx < out.e.size(); ++idx) {
        const PauliPoint p = PauliPoint::from_index(n, idx);
        const auto phase = ComplexOps<std::complex<double>>::i_power(std::popcount(p.xbits & p.zbits));
        // Tr(T_a M) = sum_b <b| T_a M |b>; T_a sends |b> to phase*(-1)^{z.b}|b^x>.
        std::complex<double> tr = 0;
        for (int b = 0; b < dim; ++b) {
            const int sign = parity(p.zbits & uint32_t(b)) ? -1 : 1;
            tr += phase * std::complex<double>(sign, 0) * m(b, b ^ int(p.xbits));
        }
        out.e[idx] = tr.real();
    }
    return out;
}

inline RatExpectation from_exact_matrix(const ExactOperator& m, int n) {
    if (m.rows() != (1 << n)) throw std::invalid_argument("matrix dimension mismatch");
    if (!exact_equal(m, m.adjoint())) throw std::invalid_argument("from_matrix: input not Hermitian");
    if (!(m.trace() == RatComplex(1))) throw std::invalid_argument("from_matrix: input trace is not one");
    RatExpectation out(n);
    const int dim = 1 << n;
    for (uint32_t idx = 0; idx < out.e.size(); ++idx) {
        const PauliPoint p = PauliPoint::from_index(n, idx);
        const RatComplex phase = ComplexOps<RatComplex>::i_power(std::popcount(p.xbits & p.zbits));
        RatComplex tr{};
        for (int b = 0; b < dim; ++b) {
            const int sign = parity(p.zbits & uint32_t(b)) ? -1 : 1;
            tr += phase * RatComplex{Rational(sign), Rational(0)} * m(b, b ^ int(p.xbits));
        }
        if (!(tr.im == 0)) throw std::logic_error("expectation of Hermitian operator not real");
        out.e[idx] = tr.re;
    }
    return out;
}

template <class S>
Expectation<S> tensor(const Expectation<S>& a, const Expectation<S>& b) {
    Expectation<S> out(a.n + b.n);
    const uint32_t na = a.n, nb = b.n;
    for (uint32_t ia = 0; ia < a.e.size(); ++ia) {
        const uint32_t ax = ia & ((1u << na) - 1u), az = ia >> na;
        for (uint32_t ib = 0; ib < b.e.size(); ++ib) {
            const uint32_t bx = ib & ((1u << nb) - 1u), bz = ib >> nb;
            const uint32_t x = ax | (bx << na);
            const uint32_t z = az | (bz << na);
            out.e[x | (z << (na + nb))] = a.e[ia] * b.e[ib];
        }
    }
    return out;
}

enum class CliffordGen { H, S };

// Signed permutation of the expectation table induced by conjugation with a
// single-qubit Clifford generator: H swaps x<->z and flips the y sign, S maps
// x->y, y->-x, z->z.
template <class S>
Expectation<S> local_clifford_action(const Expectation<S>& a, int qubit, CliffordGen g) {
    if (qubit < 1 || qubit > a.n) throw std::invalid_argument("qubit index out of range");
    Expectation<S> out(a.n);
    const uint32_t bit = 1u << (qubit - 1);
    for (uint32_t idx = 0; idx < a.e.size(); ++idx) {
        uint32_t x = idx & ((1u << a.n) - 1u), z = idx >> a.n;
        const uint32_t xb = x & bit, zb = z & bit;
        int sign = 1;
        if (g == CliffordGen::H) {
            if (xb && zb) sign = -1;                           // y -> -y
            x = (x & ~bit) | (zb ? bit : 0);                   // swap x,z at the qubit
            z = (z & ~bit) | (xb ? bit : 0);
        } else {
            if (xb && !zb) z |= bit;                           // x -> y
            else if (xb && zb) { z &= ~bit; sign = -1; }       // y -> -x
        }
        const uint32_t nidx = x | (z << a.n);
        out.e[nidx] = sign < 0 ? S(0) - a.e[idx] : a.e[idx];
    }
    return out;
}

// perm[i-1] is the 1-based output position of input qubit i.
template <class S>
Expectation<S> permute_qubits(const Expectation<S>& a, const std::vector<int>& perm) {
    if (int(perm.size()) != a.n) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(a.n, false);
    for (int p : perm) {
        if (p < 1 || p > a.n || seen[p - 1]) throw std::invalid_argument("not a permutation");
        seen[p - 1] = true;
    }
    Expectation<S> out(a.n);
    for (uint32_t idx = 0; idx < a.e.size(); ++idx) {
        const uint32_t x = idx & ((1u << a.n) - 1u), z = idx >> a.n;
        uint32_t nx = 0, nz = 0;
        for (int q = 0; q < a.n; ++q) {
            const int target = perm[q] - 1;
            if ((x >> q) & 1u) nx |= 1u << target;
            if ((z >> q) & 1u) nz |= 1u << target;
        }
        out.e[nx | (nz << a.n)] = a.e[idx];
    }
    return out;
}

// Canonical string key for dedup of exact tables: sorted nonzero entries.
inline std::string canonical_key(const RatExpectation& a) {
    std::string key = std::to_string(a.n);
    for (uint32_t i = 1; i < a.e.size(); ++i) {
        if (a.e[i] == 0) continue;
        key += '|';
        key += std::to_string(i);
        key += ':';
        key += format_rational(a.e[i]);
    }
    return key;
}

}  // namespace lambdaloc
