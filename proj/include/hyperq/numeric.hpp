#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace hyperq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// x^e for integer e; e < 0 requires x invertible (|x| = 1).
inline Int pow_int(Int x, long e) {
    if (e < 0) {
        if (x == 1) return 1;
        if (x == -1) return (e % 2 == 0) ? 1 : -1;
        throw std::domain_error("pow_int: negative exponent of non-unit");
    }
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

inline Rat pow_rat(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    if (inv && x == 0) throw std::domain_error("pow_rat: 1/0");
    unsigned long n = inv ? -(unsigned long)e : (unsigned long)e;
    Rat b = x, r = 1;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return inv ? Rat(1) / r : r;
}

// Deterministic seeded RNG used for all randomized checks; seeds are logged
// in report provenance so every verdict is reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        std::uniform_int_distribution<std::int64_t> d(lo, hi);
        return d(gen_);
    }
    // Nonzero rational with small numerator/denominator.
    Rat rat(std::int64_t lo = -20, std::int64_t hi = 20) {
        Int n = 0;
        while (n == 0) n = int_in(lo, hi);
        Int d = int_in(1, 12);
        return Rat(n, d);
    }
    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Error taxonomy shared by all modules; `code` maps onto CLI exit codes
// (2 = invalid/non-smooth input, 3 = unsupported structure, 1 = check failed).
struct Error : std::runtime_error {
    int code;
    explicit Error(const std::string& what, int c = 2) : std::runtime_error(what), code(c) {}
};

}  // namespace hyperq
