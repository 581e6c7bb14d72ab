#include "lambdaloc/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lambdaloc {

std::string IsotropicSubspace::key() const {
    std::string k = std::to_string(n);
    for (uint32_t row : basis) {
        k += ':';
        k += std::to_string(row);
    }
    return k;
}

std::string StabilizerProjector::key() const {
    std::string k = assignment.subspace.key();
    for (uint8_t b : assignment.bits) {
        k += ';';
        k += char('0' + b);
    }
    return k;
}

bool is_isotropic(int n, const std::vector<uint32_t>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (symplectic_form_idx(n, points[i], points[j])) return false;
    return true;
}

bool is_local_isotropic(int n, const std::vector<uint32_t>& points) {
    if (!is_isotropic(n, points)) return false;
    // Local commutation of basis elements does not imply it for the span,
    // so check all spanned pairs.
    std::vector<uint32_t> span{0};
    std::vector<uint32_t> rows = points;
    f2_rref(rows);
    for (uint32_t r : rows) {
        const size_t sz = span.size();
        for (size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ r);
    }
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = i + 1; j < span.size(); ++j)
            if (!locally_commutes_idx(n, span[i], span[j])) return false;
    return true;
}

StabilizerProjector make_projector(int n, std::vector<uint32_t> basis, std::vector<uint8_t> bits) {
    if (basis.size() != bits.size()) throw std::invalid_argument("basis/bits length mismatch");
    if (!is_isotropic(n, basis)) throw std::invalid_argument("basis is not isotropic");
    // Gauss-Jordan with value bookkeeping: adding row j into row i updates
    // s(r_i) <- s(r_i) + s(r_j) + beta(r_i, r_j).
    const size_t m = basis.size();
    size_t rank = 0;
    for (int col = 0; col < 2 * n && rank < m; ++col) {
        size_t sel = rank;
        while (sel < m && !((basis[sel] >> col) & 1u)) ++sel;
        if (sel == m) continue;
        std::swap(basis[rank], basis[sel]);
        std::swap(bits[rank], bits[sel]);
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || !((basis[r] >> col) & 1u)) continue;
            bits[r] = uint8_t((bits[r] + bits[rank] + beta_idx(n, basis[r], basis[rank])) & 1);
            basis[r] ^= basis[rank];
        }
        ++rank;
    }
    if (rank != m) throw std::invalid_argument("basis is not linearly independent");
    StabilizerProjector p;
    p.assignment.subspace = IsotropicSubspace{n, std::move(basis)};
    p.assignment.bits = std::move(bits);
    return p;
}

std::vector<std::pair<uint32_t, uint8_t>> span_with_values(const ValueAssignment& va) {
    std::vector<std::pair<uint32_t, uint8_t>> span{{0u, 0u}};
    const int n = va.subspace.n;
    for (size_t i = 0; i < va.subspace.basis.size(); ++i) {
        const uint32_t b = va.subspace.basis[i];
        const uint8_t sb = va.bits[i];
        const size_t sz = span.size();
        for (size_t k = 0; k < sz; ++k) {
            const auto [p, v] = span[k];
            span.emplace_back(p ^ b, uint8_t((v + sb + beta_idx(n, p, b)) & 1));
        }
    }
    return span;
}

int ValueAssignment::evaluate(uint32_t point) const {
    const int n = subspace.n;
    uint32_t acc = 0;
    int val = 0;
    uint32_t rem = point;
    for (size_t i = 0; i < subspace.basis.size(); ++i) {
        const uint32_t row = subspace.basis[i];
        const int pivot = f2_lowest_bit(row);
        if ((rem >> pivot) & 1u) {
            val = (val + bits[i] + beta_idx(n, acc, row)) & 1;
            acc ^= row;
            rem ^= row;
        }
    }
    if (rem != 0) throw std::invalid_argument("point outside the subspace span");
    return val;
}

std::vector<uint32_t> perp(int n, const std::vector<uint32_t>& basis) {
    std::vector<uint32_t> functionals;
    for (uint32_t b : basis) functionals.push_back(f2_symplectic_partner(b, n));
    auto out = f2_nullspace(functionals, 2 * n);
    f2_rref(out);
    return out;
}

SandwichResult sandwich(const StabilizerProjector& P, const StabilizerProjector& Q) {
    const int n = P.n();
    if (n != Q.n()) throw std::invalid_argument("sandwich: dimension mismatch");
    const auto& I = P.assignment.subspace.basis;
    const auto& J = Q.assignment.subspace.basis;

    // delta: s and r must agree on I cap J.
    const auto IJ = f2_intersection(I, J, 2 * n);
    for (uint32_t v : IJ)
        if (P.assignment.evaluate(v) != Q.assignment.evaluate(v)) return {Rational(0), std::nullopt};

    const auto Ip = perp(n, I);
    auto M = f2_intersection(Ip, J, 2 * n);  // I^perp cap J
    const Rational coeff = Rational(1, 1 << (int(J.size()) - int(M.size())));

    // K = I + M with assignment s*(r|_M): value on a+b (a in I, b in M) is
    // s(a) + r(b) + beta(a, b).
    std::vector<uint32_t> kbasis = I;
    std::vector<uint8_t> kbits = P.assignment.bits;
    std::vector<uint32_t> current = I;
    auto pivots = f2_rref(current);
    for (uint32_t b : M) {
        if (f2_reduce(current, pivots, b) == 0) continue;
        kbasis.push_back(b);
        kbits.push_back(uint8_t(Q.assignment.evaluate(b)));
        current.push_back(b);
        pivots = f2_rref(current);
    }
    // Elements of M commute with all of I, so the combined basis stays
    // isotropic and make_projector's beta bookkeeping produces s*r.
    return {coeff, make_projector(n, std::move(kbasis), std::move(kbits))};
}

std::vector<StabilizerProjector> enumerate_local_stabilizer_states(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("local stabilizer enumeration limited to 1 <= n <= 7");
    std::vector<StabilizerProjector> out;
    std::vector<int> axes(n, 0);
    const Axis axis_of[3] = {Axis::X, Axis::Y, Axis::Z};
    while (true) {
        std::vector<uint32_t> basis;
        for (int q = 1; q <= n; ++q) basis.push_back(pauli_axis(n, q, axis_of[axes[q - 1]]).index());
        for (uint32_t signs = 0; signs < (1u << n); ++signs) {
            std::vector<uint8_t> bits(n);
            for (int q = 0; q < n; ++q) bits[q] = (signs >> q) & 1u;
            out.push_back(make_projector(n, basis, bits));
        }
        int q = 0;
        while (q < n && axes[q] == 2) axes[q++] = 0;
        if (q == n) break;
        ++axes[q];
    }
    return out;
}

std::vector<IsotropicSubspace> enumerate_maximal_isotropics(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("maximal isotropic enumeration limited to n <= 3");
    std::set<std::string> seen;
    std::vector<IsotropicSubspace> out;
    const uint32_t npoints = 1u << (2 * n);

    // Depth-first extension of commuting independent sets with canonical-form
    // dedup at every level.
    auto recurse = [&](auto&& self, const std::vector<uint32_t>& basis) -> void {
        if (int(basis.size()) == n) {
            IsotropicSubspace I{n, basis};
            if (seen.insert(I.key()).second) out.push_back(std::move(I));
            return;
        }
        std::vector<uint32_t> rows = basis;
        auto pivots = f2_rref(rows);
        for (uint32_t a = 1; a < npoints; ++a) {
            if (f2_reduce(rows, pivots, a) == 0) continue;
            bool commutes = true;
            for (uint32_t b : basis)
                if (symplectic_form_idx(n, a, b)) { commutes = false; break; }
            if (!commutes) continue;
            std::vector<uint32_t> next = basis;
            next.push_back(a);
            auto canon = next;
            f2_rref(canon);
            IsotropicSubspace probe{n, canon};
            if (int(canon.size()) < n && !seen.insert(probe.key()).second) continue;
            self(self, canon);
        }
    };
    recurse(recurse, {});
    std::sort(out.begin(), out.end(),
              [](const IsotropicSubspace& a, const IsotropicSubspace& b) { return a.basis < b.basis; });
    return out;
}

std::vector<StabilizerProjector> enumerate_stabilizer_states(int n) {
    std::vector<StabilizerProjector> out;
    for (const auto& I : enumerate_maximal_isotropics(n)) {
        for (uint32_t signs = 0; signs < (1u << n); ++signs) {
            std::vector<uint8_t> bits(n);
            for (int q = 0; q < n; ++q) bits[q] = (signs >> q) & 1u;
            out.push_back(make_projector(n, I.basis, bits));
        }
    }
    // Deduplicate by canonical form; distinct (I, signs) pairs give distinct
    // projectors, but keep the guard for safety.
    std::set<std::string> seen;
    std::vector<StabilizerProjector> dedup;
    for (auto& p : out)
        if (seen.insert(p.key()).second) dedup.push_back(std::move(p));
    return dedup;
}

}  // namespace lambdaloc
