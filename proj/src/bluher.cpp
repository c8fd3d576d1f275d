// bluher.cpp

#include "apn/bluher.hpp"

namespace apn {

std::vector<Elt> BluherSet::members() const {
    std::vector<Elt> out;
    out.reserve(size_);
    const std::uint64_t n = std::uint64_t{1} << m_;
    for (Elt A = 0; A < n; ++A)
        if (contains(A)) out.push_back(A);
    return out;
}

BluherSet build_bluher_set(const FieldCtx& F, const SubfieldView& V, unsigned r) {
    const unsigned m = F.m();
    if (std::gcd(static_cast<std::uint64_t>(r % m), static_cast<std::uint64_t>(m)) != 1)
        throw std::invalid_argument("build_bluher_set: gcd(r, m) must be 1");
    const unsigned rr = r % m;
    BluherSet S(m, r);
    for (Elt a = 2; a < F.size(); ++a) { // 0 and 1 are cubes
        if (V.is_cube(a)) continue;
        const Elt ainv_r = F.pow2k(a, m - rr);      // a^(2^-r)
        const Elt ap1 = a ^ 1;                      // a + 1, nonzero
        const Elt num = F.mul(a, F.mul(F.pow2k(ap1, rr), F.pow2k(ap1, m - rr)));
        const Elt s = a ^ ainv_r;                   // nonzero: s = 0 forces a in {0,1}
        const Elt den = F.mul(F.pow2k(s, rr), s);
        S.insert(F.mul(num, F.inv(den)));
    }
    return S;
}

std::optional<Elt> projective_root(const FieldCtx& F, Elt A, unsigned r) {
    for (Elt x = 0; x < F.size(); ++x)
        if ((F.mul(F.pow2k(x, r), x) ^ x ^ A) == 0) return x;
    return std::nullopt;
}

bool is_permutation_L(const FieldCtx& F, Elt A, unsigned r) {
    const unsigned m = F.m();
    // Columns of the GF(2)-linear map; rank m means trivial kernel.
    std::vector<std::uint64_t> rows(m, 0);
    for (unsigned j = 0; j < m; ++j) {
        const Elt e = Elt{1} << j;
        const Elt col = F.pow2k(e, (2 * r) % m) ^ F.pow2k(e, r % m) ^ F.mul(A, e);
        for (unsigned i = 0; i < m; ++i)
            if ((col >> i) & 1) rows[i] |= std::uint64_t{1} << j;
    }
    unsigned rank = 0;
    for (unsigned col = 0; col < m; ++col) {
        unsigned piv = rank;
        while (piv < m && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == m) continue;
        std::swap(rows[rank], rows[piv]);
        for (unsigned i = rank + 1; i < m; ++i)
            if ((rows[i] >> col) & 1) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank == m;
}

const char* to_string(ZeroPath p) {
    switch (p) {
        case ZeroPath::bluher: return "bluher";
        case ZeroPath::degenerate_direct: return "degenerate-direct";
        case ZeroPath::factor_shortcut: return "factor-shortcut";
    }
    return "?";
}

FastZero has_zero_fast(const FieldCtx& F, const SubfieldView& V, const BluherSet& S, const FamilyParams& p) {
    if (p.c == 0) throw std::invalid_argument("has_zero_fast: c = 0 routes to construct_zero_c0");
    const unsigned m = F.m();
    const unsigned rr = p.r % m;
    const Elt cpow = F.mul(F.pow2k(p.c, rr), F.inv(p.c)); // c^(2^r - 1)
    const Elt bpow = F.pow2k(p.b, rr);                    // b^(2^r)

    for (Elt u : V.mu()) {
        const Elt den_base = F.mul(u, cpow) ^ bpow;
        if (den_base == 0) {
            // The projective reduction assumes a nonzero denominator;
            // decide this u by scanning its equation directly.
            bool found = false;
            for (Elt x = 0; x < F.size() && !found; ++x) {
                const Elt xr = F.pow2k(x, rr);
                found = (F.mul(p.c, F.mul(xr, x)) ^ F.mul(p.b, xr) ^ F.mul(u, x) ^ 1) == 0;
            }
            if (found) return {true, u, ZeroPath::degenerate_direct};
            continue;
        }
        const Elt ub_c = F.mul(u, p.b) ^ p.c;
        if (ub_c == 0) {
            // c x^(2^r+1) + b x^(2^r) + (c/b) x + 1 = (b x^(2^r) + 1)((c/b) x + 1),
            // root x = b/c.
            return {true, u, ZeroPath::factor_shortcut};
        }
        const Elt den = F.mul(F.pow2k(den_base, m - rr), den_base); // den_base^(2^-r + 1)
        const Elt A = F.mul(F.mul(ub_c, cpow), F.inv(den));
        if (!S.contains(A)) return {true, u, ZeroPath::bluher};
    }
    return {};
}

} // namespace apn
