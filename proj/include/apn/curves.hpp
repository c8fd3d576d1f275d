// curves.hpp
//
// The plane-curve route to the same zero counts: D_{b,c,r} is the curve
// over F_q cut out by writing x = x0 + xi x1 in P_{c,b}(x) = 0 with
// x0, x1 in F_q, and its affine point count must equal the zero count of
// P. The guaranteed-point threshold compares q - 1 against
// (d-1)(d-2) sqrt(q), d = 2^(r+1) + 2, in exact integer arithmetic.

#ifndef APN_CURVES_HPP
#define APN_CURVES_HPP

#include "apn/family.hpp"
#include "apn/subfield.hpp"

#include <cstdint>
#include <string>

namespace apn {

struct CurveSpec {
    FamilyParams params;
    Elt xi = 0;
    unsigned degree = 0; // 2^(r+1) + 2, the total degree of the defining polynomial
    // cached conjugates of the coefficients
    Elt bq = 0, cq = 0, xiq = 0;
};

CurveSpec make_curve(const FieldCtx& F, const SubfieldView& V, const FamilyParams& p);

// Defining polynomial of D_{b,c,r} at (x0, x1) in F_q x F_q; equals
// eval_P(x0 + xi x1). Inputs outside F_q are rejected.
Elt eval_D(const FieldCtx& F, const SubfieldView& V, const CurveSpec& spec, Elt x0, Elt x1);

// The decoupled model C_{b,c,r}: (c X^(2^r+1) + b X^(2^r) + 1) *
// (c^q Y^(2^r+1) + b^q Y^(2^r) + 1) + XY. Satisfies eval_C(x, x^q) = eval_P(x).
Elt eval_C(const FieldCtx& F, const FamilyParams& p, Elt X, Elt Y);

// Exact number of (x0, x1) in F_q^2 on D_{b,c,r}; Theta(2^m) evaluations.
std::uint64_t count_affine_points(const FieldCtx& F, const SubfieldView& V, const CurveSpec& spec,
                                  unsigned threads = 1);

// Integer Aubry-Perret window for the affine count, two infinite points
// already subtracted from the lower end:
//   [q - 1 - floor(W), q + 1 + floor(W)],  W = (d-1)(d-2) sqrt(q).
struct ApWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};
ApWindow aubry_perret_window(unsigned m, unsigned r);
bool in_ap_window(unsigned m, unsigned r, std::uint64_t affine_count);

struct GuaranteeInfo {
    bool guaranteed = false;      // q - 1 > (d-1)(d-2) sqrt(q), exact
    bool paper_threshold = false; // r < m/8 - 1, i.e. 8(r+1) < m; implies guaranteed
    std::string lhs;              // (q-1)^2, decimal
    std::string rhs;              // (d-1)^2 (d-2)^2 q, decimal
};

// Decided by the squared comparison (q-1)^2 > (d-1)^2 (d-2)^2 q so that
// the irrational sqrt(q) of m = 2 (mod 4) never enters; exact for any
// even m (arbitrary-precision integers).
GuaranteeInfo guaranteed_point(unsigned m, unsigned r);

} // namespace apn

#endif
