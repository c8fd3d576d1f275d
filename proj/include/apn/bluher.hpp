// bluher.hpp
//
// No-root detection for projective polynomials x^(2^r+1) + x + A over
// GF(2^m). The BluherSet tabulates every A with no root, generated by
//   A = a (a+1)^(2^r + 2^-r) / (a + a^(2^-r))^(2^r+1),  a a non-cube;
// membership is the hot lookup of the fast sweep. The linear-scan root
// finder is the independent oracle, and the linearized polynomial
// L_A(x) = x^(2^2r) + x^(2^r) + A x gives a third, rank-based route.

#ifndef APN_BLUHER_HPP
#define APN_BLUHER_HPP

#include "apn/family.hpp"
#include "apn/subfield.hpp"

#include <optional>

namespace apn {

class BluherSet {
public:
    BluherSet(unsigned m, unsigned r) : m_(m), r_(r), bits_((std::size_t{1} << m) / 64 + 1, 0) {}

    unsigned m() const { return m_; }
    unsigned r() const { return r_; }

    bool contains(Elt A) const { return (bits_[A >> 6] >> (A & 63)) & 1; }
    std::uint64_t size() const { return size_; }
    std::vector<Elt> members() const; // ascending

    void insert(Elt A) {
        std::uint64_t& w = bits_[A >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (A & 63);
        size_ += !(w & bit);
        w |= bit;
    }

private:
    unsigned m_, r_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

// All A for which x^(2^r+1) + x + A has no root; Theta(2^m).
BluherSet build_bluher_set(const FieldCtx& F, const SubfieldView& V, unsigned r);

// Smallest root of x^(2^r+1) + x + A by linear scan, or nullopt.
std::optional<Elt> projective_root(const FieldCtx& F, Elt A, unsigned r);

// Whether L_A(x) = x^(2^2r) + x^(2^r) + A x has trivial kernel
// (GF(2)-rank m), i.e. is a permutation of the field.
bool is_permutation_L(const FieldCtx& F, Elt A, unsigned r);

enum class ZeroPath { bluher, degenerate_direct, factor_shortcut };
const char* to_string(ZeroPath p);

struct FastZero {
    bool has_zero = false;
    std::optional<Elt> witness_u; // first u in ascending mu order with a root
    std::optional<ZeroPath> path;
};

// Decide whether P_{c,b} has a zero without scanning the field: for each
// u in mu_{q+1}, reduce c x^(2^r+1) + b x^(2^r) + u x + 1 = 0 to the
// projective form and consult the BluherSet. Degenerate u (vanishing
// denominator) falls back to a direct scan of that one equation; u b = c
// makes the equation factor with the explicit root b/c. c = 0 is a
// routing error (the constructive c = 0 path applies instead).
FastZero has_zero_fast(const FieldCtx& F, const SubfieldView& V, const BluherSet& S, const FamilyParams& p);

} // namespace apn

#endif
