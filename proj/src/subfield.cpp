// subfield.cpp

#include "apn/subfield.hpp"

#include <algorithm>

namespace apn {

SubfieldView SubfieldView::build(const FieldCtx& F) {
    if (F.m() % 2 != 0) throw std::invalid_argument("SubfieldView: m must be even, got " + std::to_string(F.m()));
    SubfieldView v;
    v.F_ = &F;
    v.half_ = F.m() / 2;
    v.q_ = std::uint64_t{1} << v.half_;
    v.third_root_exponent_ = F.order() / 3;

    // mu_{q+1} = { g^(j(q-1)) : j = 0..q }, the unique subgroup of order q+1.
    v.mu_.reserve(v.q_ + 1);
    const Elt step = F.pow(F.generator(), v.q_ - 1);
    Elt cur = 1;
    for (std::uint64_t j = 0; j <= v.q_; ++j) {
        v.mu_.push_back(cur);
        cur = F.mul(cur, step);
    }
    std::sort(v.mu_.begin(), v.mu_.end());

    v.subfield_.reserve(v.q_);
    for (Elt x = 0; x < F.size(); ++x)
        if (F.pow2k(x, v.half_) == x) v.subfield_.push_back(x);

    for (Elt x = 2;; ++x) {
        if (F.pow2k(x, v.half_) != x) {
            v.xi_ = x;
            break;
        }
    }
    return v;
}

std::pair<Elt, Elt> SubfieldView::polar_decompose(Elt b) const {
    if (b == 0) throw std::domain_error("polar_decompose: b must be nonzero");
    const Elt t = F_->sqrt(norm_membership(b).norm); // norm = t^2 for t in F_q^*
    const Elt u = F_->mul(b, F_->inv(t));
    return {u, t};
}

} // namespace apn
