// family.hpp
//
// The bivariate family f_{b,c,r} on F_{2^m} x F_{2^m} and the polynomial
//   P_{c,b}(X) = (c X^(2^r+1) + b X^(2^r) + 1)^(q+1) + X^(q+1),  q = 2^(m/2),
// whose zero set decides the APN property. Provides the brute-force
// zero-count oracle, the direct difference-distribution check, and the
// constructive zero for c = 0.

#ifndef APN_FAMILY_HPP
#define APN_FAMILY_HPP

#include "apn/field.hpp"
#include "apn/subfield.hpp"

#include <numeric>
#include <utility>

namespace apn {

struct FamilyParams {
    unsigned m = 0;
    unsigned r = 0;
    Elt b = 0;
    Elt c = 0;

    // Validity window: m even, gcd(r, m) = 1, 1 <= r < m/2. Evaluation is
    // allowed outside the window; reports must carry the flag.
    bool in_window() const {
        return m % 2 == 0 && r >= 1 && 2 * r < m &&
               std::gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(m)) == 1;
    }
};

// f_{b,c,r}(x, y) = (xy, x^(2^r+1) + x^(2^(r+m/2)) y^(2^(m/2)) + b x y^(2^r) + c y^(2^r+1))
std::pair<Elt, Elt> eval_f(const FieldCtx& F, const FamilyParams& p, Elt x, Elt y);

// P_{c,b}(x); the value always lies in F_q (it is a sum of two norms).
Elt eval_P(const FieldCtx& F, const FamilyParams& p, Elt x);

struct ZeroCount {
    std::uint64_t count = 0;
    std::vector<Elt> witnesses; // ascending, capped
};

// Exact zero count of P over all of GF(2^m); Theta(2^m) evaluations.
ZeroCount count_zeros_P(const FieldCtx& F, const FamilyParams& p, std::size_t witness_cap = 16);

struct DifferentialReport {
    unsigned uniformity = 0;
    bool exact = true; // false when early exit stopped at "not APN" (uniformity >= 4)
    std::pair<Elt, Elt> witness_direction{0, 0};
    std::pair<Elt, Elt> witness_output{0, 0};
};

struct DdtOptions {
    bool early_exit = true;
    unsigned threads = 1;
    unsigned cap_n = 24; // refuse 2m > cap_n unless force
    bool force = false;
};

// Exact differential uniformity of f_{b,c,r} on F_{2^m} x F_{2^m}; in
// early-exit mode, stops as soon as any count exceeds 2 and reports the
// smallest offending direction. Theta(2^(4m)) time naively.
DifferentialReport differential_uniformity(const FieldCtx& F, const FamilyParams& p,
                                           const DdtOptions& opt = {});

// A zero of P_{0,b} built along the Artin-Schreier chain: polar-decompose
// b, strip the 2^r-power, solve y^(2^r) + y = tbar^(-2^r), and undo the
// substitutions. The output is validated against eval_P; on a validation
// miss (which would mean a mis-transcribed chain) a linear scan supplies
// the zero and *used_fallback is set. b = 0 returns the mu_{q+1} witness 1.
Elt construct_zero_c0(const FieldCtx& F, const SubfieldView& V, Elt b, unsigned r,
                      bool* used_fallback = nullptr);

} // namespace apn

#endif
