#pragma once

// Small GF(2) linear algebra on bit-packed rows. Rows are points of E_n
// packed as x | z<<n (at most 30 bits), so plain word operations suffice.

#include <cstdint>
#include <vector>

namespace lambdaloc {

inline int f2_lowest_bit(uint32_t v) { return __builtin_ctz(v); }

// In-place reduced row echelon form; returns pivot columns. Zero rows are
// dropped and surviving rows are sorted by pivot column.
inline std::vector<int> f2_rref(std::vector<uint32_t>& rows) {
    std::vector<int> pivots;
    size_t rank = 0;
    for (int col = 0; col < 32 && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && !((rows[sel] >> col) & 1u)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

inline int f2_rank(std::vector<uint32_t> rows) {
    f2_rref(rows);
    return int(rows.size());
}

// Reduce v against an RREF basis; returns the remainder (0 iff v in the span).
inline uint32_t f2_reduce(const std::vector<uint32_t>& rref_rows, const std::vector<int>& pivots, uint32_t v) {
    for (size_t i = 0; i < rref_rows.size(); ++i)
        if ((v >> pivots[i]) & 1u) v ^= rref_rows[i];
    return v;
}

inline bool f2_in_span(const std::vector<uint32_t>& basis, uint32_t v) {
    std::vector<uint32_t> rows = basis;
    auto pivots = f2_rref(rows);
    return f2_reduce(rows, pivots, v) == 0;
}

// Basis of {v in F_2^dim : parity(v & f) = 0 for every functional f}.
inline std::vector<uint32_t> f2_nullspace(std::vector<uint32_t> functionals, int dim) {
    auto pivots = f2_rref(functionals);
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<uint32_t> basis;
    for (int col = 0; col < dim; ++col) {
        if (is_pivot[col]) continue;
        uint32_t v = 1u << col;
        for (size_t i = 0; i < functionals.size(); ++i)
            if ((functionals[i] >> col) & 1u) v |= 1u << pivots[i];
        basis.push_back(v);
    }
    return basis;
}

// Basis of span(a) intersect span(b), both inside F_2^dim.
inline std::vector<uint32_t> f2_intersection(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b, int dim) {
    // v in span(a) iff v satisfies every functional orthogonal to a.
    auto constraints_of = [dim](const std::vector<uint32_t>& rows) {
        return f2_nullspace(rows, dim);  // dot-orthogonal complement
    };
    std::vector<uint32_t> cons = constraints_of(a);
    // Solve within b-coordinates: coefficient vectors lambda with
    // parity(c & sum lambda_j b_j) = 0 for all c.
    std::vector<uint32_t> reduced;
    for (uint32_t c : cons) {
        uint32_t functional = 0;
        for (size_t j = 0; j < b.size(); ++j)
            if (__builtin_popcount(c & b[j]) & 1) functional |= 1u << j;
        reduced.push_back(functional);
    }
    std::vector<uint32_t> lambda_basis = f2_nullspace(reduced, int(b.size()));
    std::vector<uint32_t> out;
    for (uint32_t lam : lambda_basis) {
        uint32_t v = 0;
        for (size_t j = 0; j < b.size(); ++j)
            if ((lam >> j) & 1u) v ^= b[j];
        if (v) out.push_back(v);
    }
    f2_rref(out);
    return out;
}

// Swap the x and z blocks; [a,b] = dot(a, swap_blocks(b, n)).
inline uint32_t f2_symplectic_partner(uint32_t v, int n) {
    const uint32_t mask = n == 0 ? 0u : ((1u << n) - 1u);
    return ((v & mask) << n) | ((v >> n) & mask);
}

}  // namespace lambdaloc
