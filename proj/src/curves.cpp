// curves.cpp

#include "apn/curves.hpp"
#include "apn/parallel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace apn {

using boost::multiprecision::cpp_int;

CurveSpec make_curve(const FieldCtx& F, const SubfieldView& V, const FamilyParams& p) {
    if (p.m != F.m() || p.m % 2 != 0) throw std::invalid_argument("make_curve: params/field mismatch");
    CurveSpec spec;
    spec.params = p;
    spec.xi = V.xi();
    if (p.r + 1 >= 32) throw std::invalid_argument("make_curve: r too large");
    spec.degree = (1u << (p.r + 1)) + 2;
    const unsigned half = V.half();
    spec.bq = F.pow2k(p.b, half);
    spec.cq = F.pow2k(p.c, half);
    spec.xiq = F.pow2k(V.xi(), half);
    return spec;
}

namespace {

inline Elt factor_at(const FieldCtx& F, Elt c, Elt b, unsigned r, Elt s) {
    const Elt sr = F.pow2k(s, r);
    return F.mul(c, F.mul(sr, s)) ^ F.mul(b, sr) ^ 1;
}

} // namespace

Elt eval_D(const FieldCtx& F, const SubfieldView& V, const CurveSpec& spec, Elt x0, Elt x1) {
    if (!V.in_subfield(x0) || !V.in_subfield(x1))
        throw std::invalid_argument("eval_D: coordinates must lie in F_q");
    const auto& p = spec.params;
    const Elt s = x0 ^ F.mul(spec.xi, x1);
    const Elt sc = x0 ^ F.mul(spec.xiq, x1); // the conjugate s^q
    return F.mul(factor_at(F, p.c, p.b, p.r, s), factor_at(F, spec.cq, spec.bq, p.r, sc)) ^ F.mul(s, sc);
}

Elt eval_C(const FieldCtx& F, const FamilyParams& p, Elt X, Elt Y) {
    if (p.m % 2 != 0) throw std::invalid_argument("eval_C: m must be even");
    const unsigned half = p.m / 2;
    const Elt bq = F.pow2k(p.b, half);
    const Elt cq = F.pow2k(p.c, half);
    return F.mul(factor_at(F, p.c, p.b, p.r, X), factor_at(F, cq, bq, p.r, Y)) ^ F.mul(X, Y);
}

std::uint64_t count_affine_points(const FieldCtx& F, const SubfieldView& V, const CurveSpec& spec,
                                  unsigned threads) {
    const auto& fq = V.subfield_elements();
    const auto& p = spec.params;
    std::vector<std::uint64_t> partial(resolve_threads(threads), 0);
    // x0-stripes; sum-reduction in chunk order.
    parallel_chunks(fq.size(), static_cast<unsigned>(partial.size()),
                    [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
                        std::uint64_t cnt = 0;
                        for (std::uint64_t i = lo; i < hi; ++i) {
                            const Elt x0 = fq[i];
                            for (const Elt x1 : fq) {
                                const Elt s = x0 ^ F.mul(spec.xi, x1);
                                const Elt sc = x0 ^ F.mul(spec.xiq, x1);
                                const Elt v = F.mul(factor_at(F, p.c, p.b, p.r, s),
                                                    factor_at(F, spec.cq, spec.bq, p.r, sc)) ^
                                              F.mul(s, sc);
                                cnt += v == 0;
                            }
                        }
                        partial[chunk] = cnt;
                    });
    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

namespace {

void window_bounds(unsigned m, unsigned r, cpp_int& lo, cpp_int& hi) {
    if (m % 2 != 0 || m < 2 || r < 1) throw std::invalid_argument("aubry_perret_window: need even m, r >= 1");
    const cpp_int q = cpp_int{1} << (m / 2);
    const cpp_int d = (cpp_int{1} << (r + 1)) + 2;
    const cpp_int w = sqrt((d - 1) * (d - 1) * (d - 2) * (d - 2) * q); // floor((d-1)(d-2) sqrt(q))
    lo = q - 1 - w;
    hi = q + 1 + w;
}

std::int64_t clamp_i64(const cpp_int& v) {
    static const cpp_int lo = std::numeric_limits<std::int64_t>::min();
    static const cpp_int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo) return std::numeric_limits<std::int64_t>::min();
    if (v > hi) return std::numeric_limits<std::int64_t>::max();
    return v.convert_to<std::int64_t>();
}

} // namespace

ApWindow aubry_perret_window(unsigned m, unsigned r) {
    cpp_int lo, hi;
    window_bounds(m, r, lo, hi);
    return {clamp_i64(lo), clamp_i64(hi)};
}

bool in_ap_window(unsigned m, unsigned r, std::uint64_t affine_count) {
    cpp_int lo, hi;
    window_bounds(m, r, lo, hi);
    const cpp_int n = affine_count;
    return lo <= n && n <= hi;
}

GuaranteeInfo guaranteed_point(unsigned m, unsigned r) {
    if (m % 2 != 0 || m < 2) throw std::invalid_argument("guaranteed_point: m must be even and >= 2");
    if (r < 1) throw std::invalid_argument("guaranteed_point: r must be >= 1");
    const cpp_int q = cpp_int{1} << (m / 2);
    const cpp_int d = (cpp_int{1} << (r + 1)) + 2;
    const cpp_int lhs = (q - 1) * (q - 1);
    const cpp_int rhs = (d - 1) * (d - 1) * (d - 2) * (d - 2) * q;
    GuaranteeInfo info;
    info.guaranteed = lhs > rhs; // q and q-1 are coprime, so equality never occurs
    info.paper_threshold = 8 * (static_cast<std::uint64_t>(r) + 1) < m;
    info.lhs = lhs.str();
    info.rhs = rhs.str();
    return info;
}

} // namespace apn
