// search.hpp
//
// The verification harness: orbit-reduced sweeps over (b, c) with the
// fast no-zero detector, the constructive c = 0 sweep, the
// APN <-> zero-count equivalence audit, and JSON report emission.

#ifndef APN_SEARCH_HPP
#define APN_SEARCH_HPP

#include "apn/bluher.hpp"
#include "apn/curves.hpp"
#include "apn/family.hpp"
#include "apn/orbits.hpp"

#include <json.hpp>

#include <optional>

namespace apn {

enum class SweepMode { fast, direct, both };
const char* to_string(SweepMode m);
SweepMode parse_sweep_mode(std::string_view s);

struct Witness {
    Elt b = 0, c = 0;
    std::uint64_t zeros = 0;    // re-validated with the direct oracle, always 0
    unsigned uniformity = 0;    // from the direct DDT when it ran
    bool ddt_checked = false;
};

struct C0Report {
    unsigned m = 0, r = 0;
    std::uint64_t checked = 0;   // b values exercised, including b = 0
    std::uint64_t failures = 0;  // returned x with eval_P(x) != 0; must be 0
    std::uint64_t fallbacks = 0; // constructive chain missed, linear scan used
    unsigned max_attempts = 0;   // 1 when the chain always lands
};

struct SearchReport {
    unsigned m = 0, r = 0;
    std::uint64_t modulus = 0;
    Elt xi = 0, generator = 0;
    bool conjecture_holds = false;
    std::uint64_t pairs_checked = 0;
    std::uint64_t orbit_classes = 0;
    std::vector<Witness> witnesses; // sorted by (b, c)
    SweepMode evidence_mode = SweepMode::fast;
    std::uint64_t mismatches = 0; // fast/direct disagreements in mode both; must be 0
    C0Report c0;
    double wall_time = 0.0;
};

struct SearchOptions {
    SweepMode mode = SweepMode::fast;
    unsigned threads = 0; // 0: APN_HORIZON_THREADS, then hardware
    std::optional<std::uint64_t> modulus;
    bool force = false;      // unlock the long-running m in {18, 20, 22}
    unsigned ddt_cap_n = 24; // witness DDT re-validation cap on n = 2m
    bool progress = false;   // periodic line on stderr
};

// Sweep every orbit representative b against every c != 0, plus the c = 0
// line; any pair without a P-zero is re-validated directly and reported
// as an APN witness. Deterministic given (m, r, modulus, xi).
SearchReport verify_conjecture(unsigned m, unsigned r, const SearchOptions& opt = {});

// Constructive zero of P_{0,b} for every b != 0 (mu witness for b = 0).
C0Report sweep_c0(unsigned m, unsigned r, std::optional<std::uint64_t> modulus = {});

struct AuditOptions {
    std::uint64_t samples = 500; // sampled mode: random pairs on top of all zero pairs
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::optional<bool> exhaustive; // default: exhaustive exactly when m <= 4
    std::optional<std::uint64_t> modulus;
};

struct AuditReport {
    unsigned m = 0, r = 0;
    std::uint64_t modulus = 0;
    Elt xi = 0;
    bool exhaustive = false;
    std::uint64_t pairs = 0;
    // confusion matrix: APN means direct uniformity 2, nozero means count_zeros_P = 0
    std::uint64_t apn_nozero = 0, nonapn_zero = 0;  // diagonal
    std::uint64_t apn_zero = 0, nonapn_nozero = 0;  // must stay 0
    bool diagonal() const { return apn_zero == 0 && nonapn_nozero == 0; }
};

// Empirical check of the APN <-> "P has no zero" equivalence by direct
// DDT against the direct zero count. Exhaustive over all (b, c) for
// m <= 4; otherwise `samples` random pairs plus every pair with zero
// count 0. Requires 2m <= 16.
AuditReport equivalence_audit(unsigned m, unsigned r, const AuditOptions& opt = {});

nlohmann::json to_json(const Witness& w, unsigned m, unsigned r);
nlohmann::json to_json(const SearchReport& rep);
nlohmann::json to_json(const C0Report& rep);
nlohmann::json to_json(const AuditReport& rep);

} // namespace apn

#endif
