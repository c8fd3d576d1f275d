// subfield.hpp
//
// The F_q inside F_{q^2} = GF(2^m) for even m, q = 2^(m/2): the norm map,
// the (q+1)-th roots of unity mu_{q+1}, the basis element xi with
// {1, xi} an F_q-basis, and cube testing (3 divides 2^m - 1 for even m).

#ifndef APN_SUBFIELD_HPP
#define APN_SUBFIELD_HPP

#include "apn/field.hpp"

#include <utility>
#include <vector>

namespace apn {

struct NormInfo {
    Elt norm;         // x^(q+1), always in F_q
    bool in_subfield; // x^q == x
};

class SubfieldView {
public:
    static SubfieldView build(const FieldCtx& F); // m must be even

    const FieldCtx& field() const { return *F_; }
    std::uint64_t q() const { return q_; }
    unsigned half() const { return half_; }
    Elt xi() const { return xi_; }
    std::uint64_t third_root_exponent() const { return third_root_exponent_; }

    // Ascending by encoding, size q+1.
    const std::vector<Elt>& mu() const { return mu_; }
    // All of F_q, ascending, size q.
    const std::vector<Elt>& subfield_elements() const { return subfield_; }

    bool in_subfield(Elt x) const { return F_->pow2k(x, half_) == x; }
    bool in_mu(Elt u) const { return u != 0 && F_->pow(u, q_ + 1) == 1; }

    NormInfo norm_membership(Elt x) const {
        return {F_->mul(F_->pow2k(x, half_), x), in_subfield(x)};
    }

    // Unique b = u*t with u in mu_{q+1}, t in F_q^*; t is the square root
    // of the norm b^(q+1). b = 0 is a domain error.
    std::pair<Elt, Elt> polar_decompose(Elt b) const;

    bool is_cube(Elt x) const { return x == 0 || F_->pow(x, third_root_exponent_) == 1; }

private:
    const FieldCtx* F_ = nullptr; // must outlive the view
    std::uint64_t q_ = 0;
    unsigned half_ = 0;
    Elt xi_ = 0;
    std::uint64_t third_root_exponent_ = 0;
    std::vector<Elt> mu_;
    std::vector<Elt> subfield_;
};

} // namespace apn

#endif
