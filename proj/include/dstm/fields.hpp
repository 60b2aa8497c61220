#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dstm/error.hpp"
#include "dstm/rng.hpp"

namespace dstm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's (num, den) constructor rejects negative denominators;
// normalize the sign before constructing.
inline Rational make_rational(Int num, Int den) {
    require(den != 0, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

// "num/den" in lowest terms with positive denominator, e.g. "-2/1".
std::string rational_str(const Rational& r);

// Accepts "n", "-n", "n/d" with optional sign on either part.
Rational parse_rational(const std::string& s);

bool is_prime_u64(uint64_t n);

// Random prime with exactly `bits` bits (so > 2^(bits-1)); bits in [31, 62].
uint64_t sample_prime(Rng& rng, int bits);

// Exact rational arithmetic. Field objects are stateless context handles
// passed alongside the data they operate on; PrimeField carries its modulus
// the same way, which keeps scalars as plain machine words.
struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const {
        require(b != 0, "division by zero");
        return a / b;
    }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    // Small integer entries; ample for exercising exact paths.
    Elem sample(Rng& rng) const { return Elem(rng.range(-9, 9)); }
    std::string str(const Elem& a) const { return rational_str(a); }
};

// GF(q) for prime q. Values live in [0, q); products go through 128-bit
// intermediates, good for q up to 2^62.
struct PrimeField {
    using Elem = uint64_t;

    uint64_t q;

    explicit PrimeField(uint64_t modulus) : q(modulus) {
        require(is_prime_u64(modulus), "modulus must be prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(q);
        if (r < 0) r += static_cast<long long>(q);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= q ? s - q : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % q);
    }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        require(a != 0, "inverse of zero");
        return pow(a, q - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem neg(Elem a) const { return a ? q - a : 0; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem sample(Rng& rng) const { return rng.below(q); }
    std::string str(Elem a) const { return std::to_string(a); }

    // Reduction of a rational with denominator coprime to q.
    Elem from_rational(const Rational& r) const;
};

} // namespace dstm
