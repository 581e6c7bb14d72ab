#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambdaloc {

// Pauli axis of a single-qubit component. Numeric values match the (x,z) bit
// pair packed as x | z<<1.
enum class Axis : uint8_t { I = 0, X = 1, Y = 3, Z = 2 };

inline char axis_char(Axis a) {
    switch (a) {
        case Axis::I: return '0';
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    return '?';
}

// A point of the phase space E_n = Z_2^n x Z_2^n labeling the Pauli operator
// T_a up to phase. Qubit 1 lives in the least significant bit of each block.
struct PauliPoint {
    int n = 0;
    uint32_t xbits = 0;
    uint32_t zbits = 0;

    PauliPoint() = default;
    PauliPoint(int nq, uint32_t x, uint32_t z) : n(nq), xbits(x), zbits(z) {
        if (nq < 0 || nq > 15) throw std::invalid_argument("qubit count out of range");
        const uint32_t mask = nq == 0 ? 0u : ((1u << nq) - 1u);
        if ((x & ~mask) || (z & ~mask)) throw std::invalid_argument("pauli bits exceed qubit count");
    }

    // Packed table index x | z<<n, the canonical coordinate order.
    uint32_t index() const { return xbits | (zbits << n); }

    static PauliPoint from_index(int n, uint32_t idx) {
        const uint32_t mask = n == 0 ? 0u : ((1u << n) - 1u);
        return PauliPoint(n, idx & mask, (idx >> n) & mask);
    }

    bool is_zero() const { return xbits == 0 && zbits == 0; }

    Axis axis(int qubit) const {  // qubit is 1-based
        const uint32_t x = (xbits >> (qubit - 1)) & 1u;
        const uint32_t z = (zbits >> (qubit - 1)) & 1u;
        return static_cast<Axis>(x | (z << 1));
    }

    friend PauliPoint operator+(const PauliPoint& a, const PauliPoint& b) {
        if (a.n != b.n) throw std::invalid_argument("pauli point dimension mismatch");
        return PauliPoint(a.n, a.xbits ^ b.xbits, a.zbits ^ b.zbits);
    }

    friend bool operator==(const PauliPoint& a, const PauliPoint& b) {
        return a.n == b.n && a.xbits == b.xbits && a.zbits == b.zbits;
    }
};

inline PauliPoint pauli_x(int n, int qubit) { return PauliPoint(n, 1u << (qubit - 1), 0); }
inline PauliPoint pauli_y(int n, int qubit) { return PauliPoint(n, 1u << (qubit - 1), 1u << (qubit - 1)); }
inline PauliPoint pauli_z(int n, int qubit) { return PauliPoint(n, 0, 1u << (qubit - 1)); }

inline PauliPoint pauli_axis(int n, int qubit, Axis a) {
    switch (a) {
        case Axis::I: return PauliPoint(n, 0, 0);
        case Axis::X: return pauli_x(n, qubit);
        case Axis::Y: return pauli_y(n, qubit);
        case Axis::Z: return pauli_z(n, qubit);
    }
    throw std::invalid_argument("bad axis");
}

inline int parity(uint32_t v) { return std::popcount(v) & 1; }

// Symplectic form [a,b]: 1 iff T_a and T_b anticommute.
inline int symplectic_form(const PauliPoint& a, const PauliPoint& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli point dimension mismatch");
    return parity(a.xbits & b.zbits) ^ parity(a.zbits & b.xbits);
}

// Phase convention T_a = i^(a_X . a_Z mod 4) X^{a_X} Z^{a_Z}. For commuting
// a,b the product is T_a T_b = (-1)^{beta(a,b)} T_{a+b}; the exponent below is
// integer bookkeeping on that convention, no matrices involved.
inline int beta(const PauliPoint& a, const PauliPoint& b) {
    if (symplectic_form(a, b) != 0) throw std::invalid_argument("beta undefined for anticommuting pair");
    const int pa = std::popcount(a.xbits & a.zbits);
    const int pb = std::popcount(b.xbits & b.zbits);
    const int pab = std::popcount((a.xbits ^ b.xbits) & (a.zbits ^ b.zbits));
    const int cross = std::popcount(a.zbits & b.xbits);
    const int phase = ((pa + pb - pab + 2 * cross) % 4 + 4) % 4;
    // [a,b]=0 forces the phase to be real.
    if (phase % 2 != 0) throw std::logic_error("beta phase not real");
    return (phase / 2) & 1;
}

inline int weight(const PauliPoint& a) {
    return std::popcount(a.xbits | a.zbits);
}

struct LocalComponent {
    int qubit;  // 1-based
    Axis axis;
};

inline std::vector<LocalComponent> local_decomposition(const PauliPoint& a) {
    std::vector<LocalComponent> out;
    out.reserve(a.n);
    for (int q = 1; q <= a.n; ++q) out.push_back({q, a.axis(q)});
    return out;
}

// A point is local when it is supported on a single qubit.
inline bool is_local(const PauliPoint& a) { return weight(a) == 1; }

inline bool locally_commutes(const PauliPoint& a, const PauliPoint& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli point dimension mismatch");
    for (int q = 0; q < a.n; ++q) {
        const uint32_t ax = (a.xbits >> q) & 1u, az = (a.zbits >> q) & 1u;
        const uint32_t bx = (b.xbits >> q) & 1u, bz = (b.zbits >> q) & 1u;
        if ((ax & bz) ^ (az & bx)) return false;
    }
    return true;
}

// Index-level helpers used by the bitset-based phase-space code. Indices pack
// a point as x | z<<n.
inline int symplectic_form_idx(int n, uint32_t i, uint32_t j) {
    const uint32_t mask = n == 0 ? 0u : ((1u << n) - 1u);
    const uint32_t ix = i & mask, iz = (i >> n) & mask;
    const uint32_t jx = j & mask, jz = (j >> n) & mask;
    return parity(ix & jz) ^ parity(iz & jx);
}

inline int beta_idx(int n, uint32_t i, uint32_t j) {
    return beta(PauliPoint::from_index(n, i), PauliPoint::from_index(n, j));
}

inline bool locally_commutes_idx(int n, uint32_t i, uint32_t j) {
    const uint32_t mask = n == 0 ? 0u : ((1u << n) - 1u);
    const uint32_t ix = i & mask, iz = (i >> n) & mask;
    const uint32_t jx = j & mask, jz = (j >> n) & mask;
    return ((ix & jz) ^ (iz & jx)) == 0;
}

inline int weight_idx(int n, uint32_t i) {
    const uint32_t mask = n == 0 ? 0u : ((1u << n) - 1u);
    return std::popcount((i & mask) | ((i >> n) & mask));
}

inline std::string bitstring(uint32_t bits, int n) {
    std::string s(n, '0');
    for (int q = 0; q < n; ++q)
        if ((bits >> q) & 1u) s[q] = '1';
    return s;
}

inline uint32_t parse_bitstring(const std::string& s) {
    uint32_t v = 0;
    for (size_t q = 0; q < s.size(); ++q) {
        if (s[q] == '1')
            v |= 1u << q;
        else if (s[q] != '0')
            throw std::invalid_argument("bad bitstring: '" + s + "'");
    }
    return v;
}

// Short human-readable form, e.g. "x1+y3" ("0" for the identity point).
inline std::string pauli_str(const PauliPoint& a) {
    std::string s;
    for (int q = 1; q <= a.n; ++q) {
        const Axis ax = a.axis(q);
        if (ax == Axis::I) continue;
        if (!s.empty()) s += '+';
        s += axis_char(ax);
        s += std::to_string(q);
    }
    return s.empty() ? "0" : s;
}

}  // namespace lambdaloc
