#include "dstm/fields.hpp"

namespace dstm {

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    // cpp_int's string constructor accepts "" as zero, so guard emptiness
    // ourselves on both sides of the slash.
    auto to_int = [&](const std::string& part) {
        if (part.empty() || part == "-" || part == "+")
            fail_input("malformed rational literal '" + s + "'");
        try {
            return Int(part);
        } catch (const std::runtime_error&) {
            fail_input("malformed rational literal '" + s + "'");
        }
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(to_int(s));
    Int num = to_int(s.substr(0, slash));
    Int den = to_int(s.substr(slash + 1));
    if (den == 0) fail_input("zero denominator in '" + s + "'");
    return make_rational(num, den);
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin bases for all n < 3.3e24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t sample_prime(Rng& rng, int bits) {
    require(bits >= 31 && bits <= 62, "prime bit size must be in [31, 62]");
    const uint64_t lo = 1ull << (bits - 1);
    while (true) {
        uint64_t c = lo + rng.below(lo);
        c |= 1;
        if (is_prime_u64(c)) return c;
    }
}

PrimeField::Elem PrimeField::from_rational(const Rational& r) const {
    const Int qi(q);
    Int num = numerator(r) % qi;
    if (num < 0) num += qi;
    Int den = denominator(r) % qi;
    require(den != 0, "denominator divisible by the field characteristic");
    Elem n = static_cast<Elem>(num.convert_to<uint64_t>());
    Elem d = static_cast<Elem>(den.convert_to<uint64_t>());
    return div(n, d);
}

} // namespace dstm
