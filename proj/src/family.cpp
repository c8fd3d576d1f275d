// family.cpp

#include "apn/family.hpp"
#include "apn/parallel.hpp"

#include <atomic>
#include <cstring>

namespace apn {

namespace {

void require_even_m(const FieldCtx& F, const FamilyParams& p) {
    if (p.m != F.m()) throw std::invalid_argument("params.m does not match the field");
    if (p.m % 2 != 0) throw std::invalid_argument("f_{b,c,r} needs even m");
}

// Inverse of a mod n (gcd(a, n) = 1); n = 1 yields 0.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t t = 0, newt = 1;
    std::int64_t rr = static_cast<std::int64_t>(n), newr = static_cast<std::int64_t>(a % n);
    while (newr != 0) {
        const std::int64_t qq = rr / newr;
        t -= qq * newt;
        std::swap(t, newt);
        rr -= qq * newr;
        std::swap(rr, newr);
    }
    if (rr != 1) throw std::logic_error("inv_mod: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

} // namespace

std::pair<Elt, Elt> eval_f(const FieldCtx& F, const FamilyParams& p, Elt x, Elt y) {
    require_even_m(F, p);
    const unsigned half = p.m / 2;
    const Elt xr = F.pow2k(x, p.r);
    const Elt yr = F.pow2k(y, p.r);
    Elt f2 = F.mul(xr, x);
    f2 ^= F.mul(F.pow2k(x, (p.r + half) % p.m), F.pow2k(y, half));
    f2 ^= F.mul(p.b, F.mul(x, yr));
    f2 ^= F.mul(p.c, F.mul(yr, y));
    return {F.mul(x, y), f2};
}

Elt eval_P(const FieldCtx& F, const FamilyParams& p, Elt x) {
    require_even_m(F, p);
    const unsigned half = p.m / 2;
    const Elt xr = F.pow2k(x, p.r);
    const Elt inner = F.mul(p.c, F.mul(xr, x)) ^ F.mul(p.b, xr) ^ 1;
    return F.mul(F.pow2k(inner, half), inner) ^ F.mul(F.pow2k(x, half), x);
}

ZeroCount count_zeros_P(const FieldCtx& F, const FamilyParams& p, std::size_t witness_cap) {
    ZeroCount zc;
    for (Elt x = 0; x < F.size(); ++x) {
        if (eval_P(F, p, x) == 0) {
            ++zc.count;
            if (zc.witnesses.size() < witness_cap) zc.witnesses.push_back(x);
        }
    }
    return zc;
}

DifferentialReport differential_uniformity(const FieldCtx& F, const FamilyParams& p, const DdtOptions& opt) {
    require_even_m(F, p);
    const unsigned n = 2 * p.m;
    if (n > opt.cap_n && !opt.force)
        throw std::invalid_argument("differential_uniformity: 2m = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(opt.cap_n) + " (use force)");

    const std::uint64_t dom = std::uint64_t{1} << n;
    const Elt lomask = F.size() - 1;
    std::vector<std::uint32_t> lut(dom);
    for (std::uint64_t idx = 0; idx < dom; ++idx) {
        const auto [f1, f2] = eval_f(F, p, idx >> p.m, idx & lomask);
        lut[idx] = static_cast<std::uint32_t>((f1 << p.m) | f2);
    }

    struct Best {
        unsigned count = 0;
        std::uint64_t dir = 0, target = 0;
    };
    const unsigned threads = resolve_threads(opt.threads);
    std::vector<Best> best(threads > 1 ? threads : 1);
    std::vector<Best> flagged(best.size()); // count == 0 means not flagged
    std::atomic<std::uint64_t> min_flagged{~std::uint64_t{0}};

    parallel_chunks(dom - 1, best.size(), [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint16_t> hist(dom);
        Best b;
        for (std::uint64_t d = lo + 1; d <= hi; ++d) { // directions are 1..dom-1
            if (d >= min_flagged.load(std::memory_order_relaxed)) break;
            std::memset(hist.data(), 0, dom * sizeof(std::uint16_t));
            unsigned dmax = 0;
            std::uint64_t dtarget = 0;
            bool over = false;
            for (std::uint64_t x = 0; x < dom; ++x) {
                const std::uint64_t t = lut[x] ^ lut[x ^ d];
                const unsigned cnt = ++hist[t];
                if (cnt > dmax) {
                    dmax = cnt;
                    dtarget = t;
                }
                if (opt.early_exit && cnt > 2) {
                    flagged[chunk] = {cnt, d, t};
                    over = true;
                    break;
                }
            }
            if (over) {
                std::uint64_t prev = min_flagged.load();
                while (d < prev && !min_flagged.compare_exchange_weak(prev, d)) {
                }
                break;
            }
            if (dmax > b.count) b = {dmax, d, dtarget};
        }
        best[chunk] = b;
    });

    DifferentialReport rep;
    const std::uint64_t flag_dir = min_flagged.load();
    if (flag_dir != ~std::uint64_t{0}) {
        // Counts come in pairs {x, x+a}: a mid-scan 3 means a final count >= 4.
        Best w;
        for (const auto& f : flagged)
            if (f.count > 0 && f.dir == flag_dir) w = f;
        rep.uniformity = 4;
        rep.exact = false;
        rep.witness_direction = {w.dir >> p.m, w.dir & lomask};
        rep.witness_output = {w.target >> p.m, w.target & lomask};
        return rep;
    }
    Best g;
    for (const auto& b : best) {
        if (b.count > g.count || (b.count == g.count && b.count > 0 && b.dir < g.dir)) g = b;
    }
    rep.uniformity = g.count;
    rep.exact = true;
    rep.witness_direction = {g.dir >> p.m, g.dir & lomask};
    rep.witness_output = {g.target >> p.m, g.target & lomask};
    return rep;
}

Elt construct_zero_c0(const FieldCtx& F, const SubfieldView& V, Elt b, unsigned r, bool* used_fallback) {
    if (used_fallback) *used_fallback = false;
    if (b == 0) return 1; // P_{0,0} vanishes exactly on mu_{q+1}
    const unsigned m = F.m();
    const unsigned rr = r % m;
    if (rr == 0 || std::gcd(static_cast<std::uint64_t>(rr), static_cast<std::uint64_t>(m)) != 1)
        throw std::invalid_argument("construct_zero_c0: gcd(r, m) must be 1");

    // b = u't; x -> b^(-2^-r) x with u = u'^(2^-r) turns b x^(2^r) + u x + 1 = 0
    // into x^(2^r) + t' x + 1 = 0, t' = t^(-2^-r). Strip t' with tbar^(2^r-1) = t'
    // (the map is invertible on F_q^* since gcd(2^r - 1, q - 1) = 1), leaving
    // y^(2^r) + y = tbar^(-2^r), an Artin-Schreier equation with trace-0 rhs.
    const auto [u1, t] = V.polar_decompose(b);
    (void)u1;
    const Elt tprime = F.pow2k(F.inv(t), m - rr);
    const std::uint64_t q1 = V.q() - 1;
    const std::uint64_t e = inv_mod(((std::uint64_t{1} << rr) - 1) % (q1 ? q1 : 1), q1);
    const Elt tbar = q1 == 1 ? 1 : F.pow(tprime, e);
    const Elt d = F.pow2k(F.inv(tbar), rr);
    const auto y = solve_artin_schreier(F, rr, d);
    if (!y) throw std::logic_error("construct_zero_c0: trace obstruction on a subfield element");
    const Elt x = F.mul(F.pow2k(F.inv(b), m - rr), F.mul(tbar, *y));

    const FamilyParams p{m, r, b, 0};
    if (eval_P(F, p, x) == 0) return x;

    if (used_fallback) *used_fallback = true;
    for (Elt cand = 1; cand < F.size(); ++cand)
        if (eval_P(F, p, cand) == 0) return cand;
    throw std::logic_error("construct_zero_c0: P_{0,b} has no zero at all");
}

} // namespace apn
