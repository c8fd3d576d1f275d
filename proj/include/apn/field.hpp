// field.hpp
//
// Exact arithmetic in GF(2^m), 2 <= m <= 63, in a polynomial basis.
// An element is one machine word: bit i is the coefficient of z^i.
// Two multiply kernels are provided: log/antilog tables (built when the
// field is small enough) and shift-and-reduce. Tests cross-check them.

#ifndef APN_FIELD_HPP
#define APN_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apn {

using Elt = std::uint64_t;

// Hex encoding used everywhere elements or moduli cross a process boundary.
std::string to_hex(std::uint64_t v);
std::uint64_t parse_hex(std::string_view s); // accepts an optional 0x prefix

// Polynomials over GF(2), word-encoded like field elements.
namespace gf2x {

int degree(std::uint64_t p); // -1 for the zero polynomial

// a*b mod f, reducing as the product is accumulated; deg f <= 63.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

} // namespace gf2x

// Rabin test: z^(2^m) = z mod f and gcd(z^(2^(m/p)) + z, f) = 1 for
// every prime p | m.
bool is_irreducible(std::uint64_t poly);

// Smallest word encoding of an irreducible degree-m polynomial. Cached.
std::uint64_t find_irreducible(unsigned m);

inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

class FieldCtx {
public:
    // Canonical modulus (smallest irreducible of degree m).
    explicit FieldCtx(unsigned m, std::uint64_t table_cap = kDefaultTableCap);
    // Explicit modulus; validated for degree and irreducibility.
    FieldCtx(unsigned m, std::uint64_t modulus, std::uint64_t table_cap);

    unsigned m() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    Elt generator() const { return generator_; }
    std::uint64_t size() const { return size_; }   // 2^m
    std::uint64_t order() const { return order_; } // 2^m - 1
    bool log_tables_present() const { return tables_; }

    Elt add(Elt a, Elt b) const { return a ^ b; }

    Elt mul(Elt a, Elt b) const {
        if (tables_) {
            if (a == 0 || b == 0) return 0;
            return exp_[std::uint64_t{log_[a]} + log_[b]];
        }
        return mul_schoolbook(a, b);
    }

    // Shift-and-reduce kernel; never consults the tables.
    Elt mul_schoolbook(Elt a, Elt b) const;

    Elt sqr(Elt a) const { return mul(a, a); }

    // Multiplicative inverse; inverting 0 is a domain error.
    Elt inv(Elt a) const;

    // x^(2^k); k is reduced mod m, so pow2k(x, m - k) realizes x^(2^-k).
    Elt pow2k(Elt x, unsigned k) const;

    Elt pow(Elt x, std::uint64_t e) const;

    // Squaring is a bijection in characteristic 2: sqrt(x) = x^(2^(m-1)).
    Elt sqrt(Elt x) const { return pow2k(x, m_ - 1); }

    // Absolute trace onto GF(2).
    int trace(Elt x) const;

private:
    void init(unsigned m, std::uint64_t modulus, std::uint64_t table_cap);

    unsigned m_ = 0;
    std::uint64_t modulus_ = 0;
    Elt generator_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t order_ = 0;
    bool tables_ = false;
    std::vector<std::uint32_t> log_; // log_[x] for x != 0, base generator_
    std::vector<std::uint32_t> exp_; // exp_[i] = g^i, doubled to skip a mod
};

// Solve beta^(2^r) + beta = d. Requires gcd(r, m) = 1; solvable exactly
// when trace(d) = 0, in which case the two roots are beta and beta + 1
// and the smaller encoding is returned.
std::optional<Elt> solve_artin_schreier(const FieldCtx& F, unsigned r, Elt d);

} // namespace apn

#endif
