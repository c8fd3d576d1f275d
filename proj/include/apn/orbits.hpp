// orbits.hpp
//
// Search-space reduction: the maps b -> b^(2^k) u^(2^(r+k)) (u in mu_{q+1},
// k mod m) form a group, so their orbits B_b partition GF(2^m). Sweeping
// one representative per class over all c covers every b.

#ifndef APN_ORBITS_HPP
#define APN_ORBITS_HPP

#include "apn/subfield.hpp"

#include <utility>

namespace apn {

class OrbitPartition {
public:
    unsigned m() const { return m_; }
    unsigned r() const { return r_; }
    const std::vector<Elt>& representatives() const { return reps_; }       // ascending
    const std::vector<std::uint64_t>& class_sizes() const { return sizes_; } // parallel to reps

    Elt class_of(Elt b) const { return reps_[index_[b]]; }
    std::size_t class_index_of(Elt b) const { return index_[b]; }

private:
    friend OrbitPartition partition(const FieldCtx&, const SubfieldView&, unsigned);
    unsigned m_ = 0, r_ = 0;
    std::vector<Elt> reps_;
    std::vector<std::uint64_t> sizes_;
    std::vector<std::uint32_t> index_; // b -> position in reps_
};

// The paired action of the substitution x -> u x^(2^-k):
//   (b, c) -> (b^(2^k) u^(2^(k+r)), c^(2^k) u^(2^k (2^r+1))).
// Zero counts of P are invariant under it. u must lie in mu_{q+1}.
std::pair<Elt, Elt> act_on_pair(const FieldCtx& F, const SubfieldView& V, unsigned r, Elt b, Elt c, Elt u,
                                unsigned k);

// Orbit partition of all b under the action above; the representative of
// a class is its minimal-encoding member.
OrbitPartition partition(const FieldCtx& F, const SubfieldView& V, unsigned r);

} // namespace apn

#endif
