// orbits.cpp

#include "apn/orbits.hpp"

namespace apn {

std::pair<Elt, Elt> act_on_pair(const FieldCtx& F, const SubfieldView& V, unsigned r, Elt b, Elt c, Elt u,
                                unsigned k) {
    if (!V.in_mu(u)) throw std::invalid_argument("act_on_pair: u = 0x" + to_hex(u) + " is not in mu_{q+1}");
    const unsigned m = F.m();
    k %= m;
    const Elt bprime = F.mul(F.pow2k(b, k), F.pow2k(u, (k + r) % m));
    const Elt u_exp = F.mul(F.pow2k(u, r % m), u); // u^(2^r + 1)
    const Elt cprime = F.mul(F.pow2k(c, k), F.pow2k(u_exp, k));
    return {bprime, cprime};
}

OrbitPartition partition(const FieldCtx& F, const SubfieldView& V, unsigned r) {
    const unsigned m = F.m();
    const std::uint64_t n = F.size();
    OrbitPartition part;
    part.m_ = m;
    part.r_ = r;
    part.index_.assign(n, ~std::uint32_t{0});

    // The generating maps compose to generating maps, so one application
    // of every (u, k) from an unassigned b yields its whole orbit. Scanning
    // b in ascending order makes each first-seen b its class minimum.
    for (Elt b = 0; b < n; ++b) {
        if (part.index_[b] != ~std::uint32_t{0}) continue;
        const auto rep_idx = static_cast<std::uint32_t>(part.reps_.size());
        part.reps_.push_back(b);
        std::uint64_t size = 0;
        for (unsigned k = 0; k < m; ++k) {
            const Elt bk = F.pow2k(b, k);
            for (Elt u : V.mu()) {
                const Elt member = F.mul(bk, F.pow2k(u, (k + r) % m));
                if (part.index_[member] == ~std::uint32_t{0}) {
                    part.index_[member] = rep_idx;
                    ++size;
                }
            }
        }
        part.sizes_.push_back(size);
    }
    return part;
}

} // namespace apn
