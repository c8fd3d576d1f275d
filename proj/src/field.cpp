// field.cpp

#include "apn/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace apn {

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    if (v == 0) return "0";
    char buf[16];
    int n = 0;
    while (v) {
        buf[n++] = digits[v & 0xf];
        v >>= 4;
    }
    std::string s;
    s.reserve(n);
    while (n) s.push_back(buf[--n]);
    return s;
}

std::uint64_t parse_hex(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.empty() || s.size() > 16) throw std::invalid_argument("bad hex value: '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw std::invalid_argument("bad hex value: '" + std::string(s) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

namespace gf2x {

int degree(std::uint64_t p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    const int df = degree(f);
    const std::uint64_t top = std::uint64_t{1} << df;
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= f;
    }
    return acc;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        while (da >= db && a) {
            a ^= b << (da - db);
            da = degree(a);
        }
        std::swap(a, b);
    }
    return a;
}

} // namespace gf2x

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t acc = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return acc;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool is_irreducible(std::uint64_t poly) {
    const int m = gf2x::degree(poly);
    if (m < 1) return false;
    if (m == 1) return true;             // z and z+1
    if ((poly & 1) == 0) return false;   // divisible by z
    // z^(2^m) mod poly via m squarings of z.
    std::uint64_t t = 2;
    for (int i = 0; i < m; ++i) t = gf2x::mulmod(t, t, poly);
    if (t != 2) return false;
    for (unsigned p : prime_divisors(static_cast<unsigned>(m))) {
        std::uint64_t s = 2;
        for (unsigned i = 0; i < static_cast<unsigned>(m) / p; ++i) s = gf2x::mulmod(s, s, poly);
        if (gf2x::gcd(s ^ 2u, poly) != 1) return false;
    }
    return true;
}

std::uint64_t find_irreducible(unsigned m) {
    if (m < 2 || m > 63) throw std::invalid_argument("find_irreducible: need 2 <= m <= 63");
    static std::map<unsigned, std::uint64_t> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    const std::uint64_t base = std::uint64_t{1} << m;
    for (std::uint64_t low = 1;; low += 2) { // constant term must be 1
        std::uint64_t cand = base | low;
        if (is_irreducible(cand)) {
            std::lock_guard<std::mutex> lock(mtx);
            cache[m] = cand;
            return cand;
        }
    }
}

FieldCtx::FieldCtx(unsigned m, std::uint64_t table_cap) { init(m, find_irreducible(m), table_cap); }

FieldCtx::FieldCtx(unsigned m, std::uint64_t modulus, std::uint64_t table_cap) {
    if (gf2x::degree(modulus) != static_cast<int>(m))
        throw std::invalid_argument("modulus 0x" + to_hex(modulus) + " does not have degree " + std::to_string(m));
    if (!is_irreducible(modulus))
        throw std::invalid_argument("modulus 0x" + to_hex(modulus) + " is reducible");
    init(m, modulus, table_cap);
}

void FieldCtx::init(unsigned m, std::uint64_t modulus, std::uint64_t table_cap) {
    if (m < 2 || m > 63) throw std::invalid_argument("FieldCtx: need 2 <= m <= 63");
    m_ = m;
    modulus_ = modulus;
    size_ = std::uint64_t{1} << m;
    order_ = size_ - 1;

    // Smallest generator of the multiplicative group.
    const auto factors = prime_factors_u64(order_);
    auto pow_nt = [&](Elt x, std::uint64_t e) {
        Elt acc = 1;
        while (e) {
            if (e & 1) acc = mul_schoolbook(acc, x);
            x = mul_schoolbook(x, x);
            e >>= 1;
        }
        return acc;
    };
    for (Elt g = 2;; ++g) {
        bool ok = true;
        for (std::uint64_t p : factors) {
            if (pow_nt(g, order_ / p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = g;
            break;
        }
    }

    if (size_ <= table_cap) {
        tables_ = true;
        exp_.resize(2 * order_);
        log_.resize(size_);
        Elt cur = 1;
        for (std::uint64_t i = 0; i < order_; ++i) {
            exp_[i] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_schoolbook(cur, generator_);
        }
        std::copy(exp_.begin(), exp_.begin() + static_cast<std::ptrdiff_t>(order_),
                  exp_.begin() + static_cast<std::ptrdiff_t>(order_));
    }
}

Elt FieldCtx::mul_schoolbook(Elt a, Elt b) const {
    const std::uint64_t top = std::uint64_t{1} << m_;
    Elt acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus_;
    }
    return acc;
}

Elt FieldCtx::inv(Elt a) const {
    if (a == 0) throw std::domain_error("inverse of 0 in GF(2^" + std::to_string(m_) + ")");
    if (tables_) return exp_[order_ - log_[a]];
    return pow(a, order_ - 1);
}

Elt FieldCtx::pow2k(Elt x, unsigned k) const {
    k %= m_;
    if (x == 0 || k == 0) return x;
    if (tables_) return exp_[(std::uint64_t{log_[x]} << k) % order_];
    Elt t = x;
    for (unsigned i = 0; i < k; ++i) t = mul_schoolbook(t, t);
    return t;
}

Elt FieldCtx::pow(Elt x, std::uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    if (tables_) {
        const std::uint64_t le = (e % order_) * log_[x]; // both < 2^24 for table-backed fields
        return exp_[le % order_];
    }
    Elt acc = 1;
    while (e) {
        if (e & 1) acc = mul_schoolbook(acc, x);
        x = mul_schoolbook(x, x);
        e >>= 1;
    }
    return acc;
}

int FieldCtx::trace(Elt x) const {
    Elt acc = x, t = x;
    for (unsigned i = 1; i < m_; ++i) {
        t = sqr(t);
        acc ^= t;
    }
    return static_cast<int>(acc); // 0 or 1 for every x
}

std::optional<Elt> solve_artin_schreier(const FieldCtx& F, unsigned r, Elt d) {
    const unsigned m = F.m();
    if (std::gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(m)) != 1)
        throw std::invalid_argument("solve_artin_schreier: gcd(r, m) must be 1");
    if (F.trace(d) != 0) return std::nullopt;

    // Rows of the augmented system for x |-> x^(2^r) + x; bit m holds the rhs.
    std::vector<std::uint64_t> rows(m, 0);
    for (unsigned j = 0; j < m; ++j) {
        const Elt col = F.pow2k(Elt{1} << j, r) ^ (Elt{1} << j);
        for (unsigned i = 0; i < m; ++i)
            if ((col >> i) & 1) rows[i] |= std::uint64_t{1} << j;
    }
    for (unsigned i = 0; i < m; ++i) rows[i] |= ((d >> i) & 1) << m;

    // Gauss-Jordan; the kernel is {0, 1}, so exactly one column stays free.
    std::vector<int> pivot_col(m, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < m && rank < m; ++col) {
        unsigned piv = rank;
        while (piv < m && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == m) continue;
        std::swap(rows[rank], rows[piv]);
        for (unsigned i = 0; i < m; ++i)
            if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (unsigned i = rank; i < m; ++i)
        if ((rows[i] >> m) & 1) return std::nullopt; // unreachable when trace(d) = 0

    Elt beta = 0; // free variable set to 0
    for (unsigned i = 0; i < rank; ++i)
        if ((rows[i] >> m) & 1) beta |= Elt{1} << pivot_col[i];
    return std::min(beta, beta ^ 1);
}

} // namespace apn
