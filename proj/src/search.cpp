// search.cpp

#include "apn/search.hpp"
#include "apn/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>

namespace apn {

const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::fast: return "fast";
        case SweepMode::direct: return "direct";
        case SweepMode::both: return "both";
    }
    return "?";
}

SweepMode parse_sweep_mode(std::string_view s) {
    if (s == "fast") return SweepMode::fast;
    if (s == "direct") return SweepMode::direct;
    if (s == "both") return SweepMode::both;
    throw std::invalid_argument("mode must be fast, direct or both");
}

namespace {

void require_window(unsigned m, unsigned r) {
    if (m % 2 != 0 || m < 4) throw std::invalid_argument("m must be even and >= 4");
    if (r < 1 || 2 * r >= m) throw std::invalid_argument("r must satisfy 1 <= r < m/2");
    if (std::gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(m)) != 1)
        throw std::invalid_argument("gcd(r, m) must be 1");
}

FieldCtx make_field(unsigned m, const std::optional<std::uint64_t>& modulus) {
    return modulus ? FieldCtx(m, *modulus, kDefaultTableCap) : FieldCtx(m);
}

C0Report sweep_c0_impl(const FieldCtx& F, const SubfieldView& V, unsigned r) {
    C0Report rep;
    rep.m = F.m();
    rep.r = r;
    rep.checked = F.size();
    {
        // b = 0: P is 1 + x^(q+1), vanishing exactly on mu_{q+1}.
        const FamilyParams p{F.m(), r, 0, 0};
        rep.max_attempts = 1;
        if (eval_P(F, p, construct_zero_c0(F, V, 0, r)) != 0) ++rep.failures;
    }
    for (Elt b = 1; b < F.size(); ++b) {
        bool fb = false;
        const Elt x = construct_zero_c0(F, V, b, r, &fb);
        if (fb) {
            ++rep.fallbacks;
            rep.max_attempts = 2;
        }
        if (eval_P(F, FamilyParams{F.m(), r, b, 0}, x) != 0) ++rep.failures;
    }
    return rep;
}

} // namespace

C0Report sweep_c0(unsigned m, unsigned r, std::optional<std::uint64_t> modulus) {
    require_window(m, r);
    const FieldCtx F = make_field(m, modulus);
    const SubfieldView V = SubfieldView::build(F);
    return sweep_c0_impl(F, V, r);
}

SearchReport verify_conjecture(unsigned m, unsigned r, const SearchOptions& opt) {
    require_window(m, r);
    if (m > 22) throw std::invalid_argument("m > 22 is beyond the toolkit horizon");
    if (m > 16 && !opt.force)
        throw std::invalid_argument("m = " + std::to_string(m) + " is a long-running sweep; pass force");

    const auto t0 = std::chrono::steady_clock::now();
    const FieldCtx F = make_field(m, opt.modulus);
    const SubfieldView V = SubfieldView::build(F);
    const BluherSet S = build_bluher_set(F, V, r);
    const OrbitPartition part = partition(F, V, r);
    const auto& reps = part.representatives();

    SearchReport rep;
    rep.m = m;
    rep.r = r;
    rep.modulus = F.modulus();
    rep.xi = V.xi();
    rep.generator = F.generator();
    rep.evidence_mode = opt.mode;
    rep.orbit_classes = reps.size();

    const std::uint64_t ccount = F.size() - 1; // c = 1 .. 2^m - 1
    const std::uint64_t total = reps.size() * ccount;
    const unsigned threads = resolve_threads(opt.threads);

    std::vector<std::vector<Witness>> found(threads);
    std::vector<std::uint64_t> mm(threads, 0);
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mtx;
    auto last_tick = t0;

    parallel_chunks(total, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local_done = 0;
        for (std::uint64_t g = lo; g < hi; ++g) {
            const Elt b = reps[g / ccount];
            const Elt c = 1 + (g % ccount);
            const FamilyParams p{m, r, b, c};
            bool zero;
            std::uint64_t zeros = 0;
            switch (opt.mode) {
                case SweepMode::fast:
                    zero = has_zero_fast(F, V, S, p).has_zero;
                    break;
                case SweepMode::direct:
                    zeros = count_zeros_P(F, p).count;
                    zero = zeros > 0;
                    break;
                case SweepMode::both: {
                    const bool fast = has_zero_fast(F, V, S, p).has_zero;
                    zeros = count_zeros_P(F, p).count;
                    zero = zeros > 0;
                    if (fast != zero) ++mm[chunk];
                    break;
                }
            }
            if (!zero) {
                // Candidate APN pair; no claim rests on the fast path alone.
                if (opt.mode == SweepMode::fast) zeros = count_zeros_P(F, p).count;
                if (zeros == 0) found[chunk].push_back(Witness{b, c, 0, 0, false});
            }
            if (opt.progress && ++local_done % 65536 == 0) {
                done += 65536;
                std::lock_guard<std::mutex> lock(progress_mtx);
                const auto now = std::chrono::steady_clock::now();
                if (now - last_tick > std::chrono::seconds(2)) {
                    last_tick = now;
                    std::fprintf(stderr, "verify-conjecture m=%u r=%u: %llu/%llu pairs\n", m, r,
                                 static_cast<unsigned long long>(done.load()),
                                 static_cast<unsigned long long>(total));
                }
            }
        }
    });

    for (unsigned t = 0; t < threads; ++t) {
        rep.mismatches += mm[t];
        rep.witnesses.insert(rep.witnesses.end(), found[t].begin(), found[t].end());
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end(),
              [](const Witness& a, const Witness& b) { return std::tie(a.b, a.c) < std::tie(b.b, b.c); });

    if (2 * m <= opt.ddt_cap_n) {
        for (Witness& w : rep.witnesses) {
            const auto d = differential_uniformity(F, FamilyParams{m, r, w.b, w.c},
                                                   DdtOptions{true, threads, opt.ddt_cap_n, false});
            w.uniformity = d.uniformity;
            w.ddt_checked = true;
        }
    }

    rep.c0 = sweep_c0_impl(F, V, r);
    rep.pairs_checked = total + F.size(); // the c = 0 line covers every b once
    rep.conjecture_holds = rep.witnesses.empty();
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

AuditReport equivalence_audit(unsigned m, unsigned r, const AuditOptions& opt) {
    require_window(m, r);
    if (2 * m > 16) throw std::invalid_argument("equivalence_audit: 2m <= 16 required (direct DDT)");

    const FieldCtx F = make_field(m, opt.modulus);
    const SubfieldView V = SubfieldView::build(F);

    AuditReport rep;
    rep.m = m;
    rep.r = r;
    rep.modulus = F.modulus();
    rep.xi = V.xi();
    rep.exhaustive = opt.exhaustive.value_or(m <= 4);

    std::vector<std::pair<Elt, Elt>> pairs;
    if (rep.exhaustive) {
        pairs.reserve(F.size() * F.size());
        for (Elt b = 0; b < F.size(); ++b)
            for (Elt c = 0; c < F.size(); ++c) pairs.emplace_back(b, c);
    } else {
        // Every pair with zero count 0 (fast scan over the full grid) ...
        const BluherSet S = build_bluher_set(F, V, r);
        for (Elt b = 0; b < F.size(); ++b)
            for (Elt c = 1; c < F.size(); ++c)
                if (!has_zero_fast(F, V, S, FamilyParams{m, r, b, c}).has_zero) pairs.emplace_back(b, c);
        // ... plus `samples` random pairs from the whole grid.
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<Elt> dist(0, F.size() - 1);
        for (std::uint64_t i = 0; i < opt.samples; ++i) pairs.emplace_back(dist(rng), dist(rng));
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    rep.pairs = pairs.size();

    const unsigned threads = resolve_threads(opt.threads);
    std::vector<AuditReport> partial(threads);
    parallel_chunks(pairs.size(), threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
        AuditReport& acc = partial[chunk];
        for (std::uint64_t i = lo; i < hi; ++i) {
            const FamilyParams p{m, r, pairs[i].first, pairs[i].second};
            const bool nozero = count_zeros_P(F, p).count == 0;
            const bool apn = differential_uniformity(F, p, DdtOptions{true, 1, 16, false}).uniformity == 2;
            if (apn && nozero) ++acc.apn_nozero;
            else if (apn && !nozero) ++acc.apn_zero;
            else if (!apn && nozero) ++acc.nonapn_nozero;
            else ++acc.nonapn_zero;
        }
    });
    for (const auto& acc : partial) {
        rep.apn_nozero += acc.apn_nozero;
        rep.apn_zero += acc.apn_zero;
        rep.nonapn_nozero += acc.nonapn_nozero;
        rep.nonapn_zero += acc.nonapn_zero;
    }
    return rep;
}

nlohmann::json to_json(const Witness& w, unsigned m, unsigned r) {
    nlohmann::json j{{"type", "witness"}, {"m", m},       {"r", r},
                     {"b", to_hex(w.b)},  {"c", to_hex(w.c)}, {"zeros", w.zeros}};
    if (w.ddt_checked) j["uniformity"] = w.uniformity;
    return j;
}

nlohmann::json to_json(const SearchReport& rep) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back(to_json(w, rep.m, rep.r));
    return {{"type", "summary"},
            {"m", rep.m},
            {"r", rep.r},
            {"modulus", to_hex(rep.modulus)},
            {"xi", to_hex(rep.xi)},
            {"generator", to_hex(rep.generator)},
            {"verdict", rep.conjecture_holds ? "conjecture-holds" : "apn-witnesses-found"},
            {"pairs_checked", rep.pairs_checked},
            {"orbit_classes", rep.orbit_classes},
            {"witnesses", witnesses},
            {"evidence_mode", to_string(rep.evidence_mode)},
            {"mismatches", rep.mismatches},
            {"c0_failures", rep.c0.failures},
            {"c0_fallbacks", rep.c0.fallbacks},
            {"wall_time", rep.wall_time}};
}

nlohmann::json to_json(const C0Report& rep) {
    return {{"type", "c0-sweep"},   {"m", rep.m},
            {"r", rep.r},           {"checked", rep.checked},
            {"failures", rep.failures}, {"fallbacks", rep.fallbacks},
            {"max_attempts", rep.max_attempts}};
}

nlohmann::json to_json(const AuditReport& rep) {
    return {{"type", "audit"},
            {"m", rep.m},
            {"r", rep.r},
            {"modulus", to_hex(rep.modulus)},
            {"xi", to_hex(rep.xi)},
            {"exhaustive", rep.exhaustive},
            {"pairs", rep.pairs},
            {"apn_nozero", rep.apn_nozero},
            {"nonapn_zero", rep.nonapn_zero},
            {"apn_zero", rep.apn_zero},
            {"nonapn_nozero", rep.nonapn_nozero},
            {"diagonal", rep.diagonal()}};
}

} // namespace apn
