#pragma once

// Isotropic subspaces of E_n, value assignments, stabilizer projectors and
// their probabilistic sandwich rule, plus enumeration of the local and full
// stabilizer state families.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lambdaloc/dense.hpp"
#include "lambdaloc/expectation.hpp"
#include "lambdaloc/f2.hpp"
#include "lambdaloc/pauli.hpp"
#include "lambdaloc/rational.hpp"

namespace lambdaloc {

struct IsotropicSubspace {
    int n = 0;
    std::vector<uint32_t> basis;  // RREF-canonical packed points

    int dim() const { return int(basis.size()); }
    std::string key() const;
};

// A value assignment s on an isotropic subspace, stored as the bits on the
// canonical basis; s extends to the span by s(a+b) = s(a)+s(b)+beta(a,b).
struct ValueAssignment {
    IsotropicSubspace subspace;
    std::vector<uint8_t> bits;

    int evaluate(uint32_t point) const;
    int evaluate(const PauliPoint& a) const { return evaluate(a.index()); }
};

struct StabilizerProjector {
    ValueAssignment assignment;

    int n() const { return assignment.subspace.n; }
    int dim() const { return assignment.subspace.dim(); }
    std::string key() const;
};

bool is_isotropic(int n, const std::vector<uint32_t>& points);
bool is_local_isotropic(int n, const std::vector<uint32_t>& points);

inline bool is_isotropic(const std::vector<PauliPoint>& points) {
    if (points.empty()) return true;
    std::vector<uint32_t> idx;
    for (const auto& p : points) idx.push_back(p.index());
    return is_isotropic(points.front().n, idx);
}

inline bool is_local_isotropic(const std::vector<PauliPoint>& points) {
    if (points.empty()) return true;
    std::vector<uint32_t> idx;
    for (const auto& p : points) idx.push_back(p.index());
    return is_local_isotropic(points.front().n, idx);
}

// Canonicalize to the RREF basis, translating assignment bits along row
// operations. Throws if the claimed basis is not isotropic or not independent.
StabilizerProjector make_projector(int n, std::vector<uint32_t> basis, std::vector<uint8_t> bits);

inline StabilizerProjector make_projector(const std::vector<PauliPoint>& basis,
                                          const std::vector<uint8_t>& bits) {
    std::vector<uint32_t> idx;
    for (const auto& p : basis) idx.push_back(p.index());
    return make_projector(basis.empty() ? 0 : basis.front().n, idx, bits);
}

// The full span with extended assignment values, 2^k entries, element 0 first.
std::vector<std::pair<uint32_t, uint8_t>> span_with_values(const ValueAssignment& va);

// Tr(Pi_I^s A) = 2^{-k} sum_{a in I} (-1)^{s(a)} e_a.
template <class S>
S projector_expectation(const StabilizerProjector& p, const Expectation<S>& a) {
    if (p.n() != a.n) throw std::invalid_argument("projector_expectation: dimension mismatch");
    S acc(0);
    for (const auto& [idx, val] : span_with_values(p.assignment))
        acc = val ? acc - a.e[idx] : acc + a.e[idx];
    if constexpr (ScalarTraits<S>::exact) {
        return acc / (1 << p.dim());
    } else {
        return acc / double(1 << p.dim());
    }
}

// Dense oracle rendering Pi_I^s = prod_b (1 + (-1)^{s(b)} T_b)/2.
template <class C = std::complex<double>>
Matrix<C> projector_matrix(const StabilizerProjector& p) {
    const int dim = 1 << p.n();
    Matrix<C> m = Matrix<C>::identity(dim);
    for (size_t i = 0; i < p.assignment.subspace.basis.size(); ++i) {
        const PauliPoint b = PauliPoint::from_index(p.n(), p.assignment.subspace.basis[i]);
        Matrix<C> t = pauli_matrix<C>(b);
        if (p.assignment.bits[i]) t = t.scaled(ComplexOps<C>::from_int(-1));
        Matrix<C> factor = Matrix<C>::identity(dim) + t;
        m = m * factor;
    }
    // scale by 2^-k
    if constexpr (std::is_same_v<C, RatComplex>) {
        return m.scaled(RatComplex{Rational(1, 1 << p.dim()), Rational(0)});
    } else {
        return m.scaled(C(1.0 / (1 << p.dim()), 0.0));
    }
}

// Symplectic complement I^perp = {a : [a,b]=0 for all b in I}.
std::vector<uint32_t> perp(int n, const std::vector<uint32_t>& basis);

inline std::vector<uint32_t> perp(const IsotropicSubspace& I) { return perp(I.n, I.basis); }

struct SandwichResult {
    Rational coefficient;                       // |I^perp cap J| / |J|, or 0
    std::optional<StabilizerProjector> projector;  // absent when the result is zero
};

// Pi_I^s Pi_J^r Pi_I^s = delta * (|I^perp cap J|/|J|) * Pi_{I + I^perp cap J}^{s*r}.
SandwichResult sandwich(const StabilizerProjector& P, const StabilizerProjector& Q);

// All maximal local isotropics (one axis per qubit) times all assignments:
// 2^n * 3^n states. Canonical order: axis choice, then sign vector.
std::vector<StabilizerProjector> enumerate_local_stabilizer_states(int n);

// All maximal isotropic subspaces of E_n (n <= 3), canonically ordered.
std::vector<IsotropicSubspace> enumerate_maximal_isotropics(int n);

// All stabilizer states: maximal isotropics times assignments (n <= 3).
std::vector<StabilizerProjector> enumerate_stabilizer_states(int n);

}  // namespace lambdaloc
