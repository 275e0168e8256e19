#include "chordcycles/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "chordcycles/errors.hpp"

namespace chordcycles {

namespace {

long long isqrt(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(long long n) {
    if (n < 0) return false;
    long long r = isqrt(n);
    return r * r == n;
}

// Legendre: n is a sum of three squares iff n != 4^a (8b + 7).
bool is_three_square(long long n) {
    while (n % 4 == 0 && n > 0) n /= 4;
    return n % 8 != 7;
}

// Largest-first representation n = a^2 + b^2 with a >= b >= 0, if any.
bool two_square(long long n, long long& a, long long& b) {
    for (long long x = isqrt(n); x * x * 2 >= n; --x) {
        long long rest = n - x * x;
        if (is_square(rest)) {
            a = x;
            b = isqrt(rest);
            return true;
        }
    }
    return false;
}

void verify_square_terms(const SquareDecomposition& d, std::size_t count) {
    if (d.terms.size() != count) throw std::logic_error("square decomposition term count");
    long long sum = 0;
    for (long long t : d.terms) {
        if (t <= d.floor_c) throw std::logic_error("square decomposition floor violated");
        sum += t * t;
    }
    if (sum != d.target) throw std::logic_error("square decomposition sum mismatch");
}

// The fallback regimes stay desk-scale; anything bigger belongs to the
// constructive path.
constexpr long long kFallbackLimit = 2'000'000;

std::uint64_t pack_state(long long terms, long long rem, long long cap) {
    return (static_cast<std::uint64_t>(terms) << 56) |
           (static_cast<std::uint64_t>(rem) << 16) | static_cast<std::uint64_t>(cap);
}

// Exhaustive search for `terms` squares, each base in [lo, cap], summing to
// rem; bases non-increasing, largest-first. Failed states are memoized.
bool square_fallback_scan(long long rem, int terms, long long lo, long long cap,
                          std::unordered_set<std::uint64_t>& dead, std::vector<long long>& out) {
    if (terms == 0) return rem == 0;
    if (rem < terms * lo * lo) return false;
    cap = std::min(cap, isqrt(rem - (terms - 1) * lo * lo));
    if (cap < lo) return false;
    if (rem > terms * cap * cap) return false;
    std::uint64_t key = pack_state(terms, rem, cap);
    if (dead.count(key)) return false;
    for (long long b = cap; b >= lo; --b) {
        if (rem - b * b > (terms - 1) * b * b) break;  // smaller b only gets worse
        out.push_back(b);
        if (square_fallback_scan(rem - b * b, terms - 1, lo, b, dead, out)) return true;
        out.pop_back();
    }
    dead.insert(key);
    return false;
}

long long pronic_cap(long long rem) {
    long long a = isqrt(rem);
    while (a > 0 && a * (a + 1) > rem) --a;
    while ((a + 1) * (a + 2) <= rem) ++a;
    return a;
}

bool pronic_fallback_scan(long long rem, int terms, long long lo, long long cap,
                          std::unordered_set<std::uint64_t>& dead, std::vector<long long>& out) {
    if (terms == 0) return rem == 0;
    if (rem < terms * lo * (lo + 1)) return false;
    cap = std::min(cap, pronic_cap(rem - (terms - 1) * lo * (lo + 1)));
    if (cap < lo) return false;
    if (rem > terms * cap * (cap + 1)) return false;
    std::uint64_t key = pack_state(terms, rem, cap);
    if (dead.count(key)) return false;
    for (long long b = cap; b >= lo; --b) {
        if (rem - b * (b + 1) > (terms - 1) * b * (b + 1)) break;
        out.push_back(b);
        if (pronic_fallback_scan(rem - b * (b + 1), terms - 1, lo, b, dead, out)) return true;
        out.pop_back();
    }
    dead.insert(key);
    return false;
}

}  // namespace

std::array<long long, 4> four_squares(long long n) {
    if (n < 0) throw std::invalid_argument("four_squares needs a non-negative integer");
    for (long long x1 = isqrt(n); x1 >= 0; --x1) {
        long long r1 = n - x1 * x1;
        if (!is_three_square(r1)) continue;
        for (long long x2 = std::min(x1, isqrt(r1)); x2 >= 0; --x2) {
            long long r2 = r1 - x2 * x2;
            long long a, b;
            if (two_square(r2, a, b) && a <= x2) return {x1, x2, a, b};
        }
    }
    throw std::logic_error("four squares theorem violated");  // unreachable
}

std::array<long long, 5> five_squares_f(long long x, long long c) {
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    if (c < 1) throw std::invalid_argument("c must be at least 1");
    std::array<long long, 5> bases;
    if (x > c) {
        bases = {x, 30 * c, 24 * c, 32 * c, 4 * c + 1};
    } else if (x % 2 == 0) {
        long long hi = (50 * c + x) / 2, lo = (50 * c - x) / 2;
        bases = {hi, hi, lo, lo, 4 * c + 1};
    } else {
        long long hi = (4 * c + 1 + x) / 2, lo = (4 * c + 1 - x) / 2;
        bases = {hi, hi, lo, lo, 50 * c};
    }
    long long f = x * x + 2500 * c * c + (4 * c + 1) * (4 * c + 1);
    long long sum = 0;
    for (long long b : bases) {
        if (b <= c) throw std::logic_error("five_squares_f produced a base <= c");
        sum += b * b;
    }
    if (sum != f) throw std::logic_error("five_squares_f identity mismatch");
    return bases;
}

long long twenty_squares_threshold(long long c) {
    return 4 * (2500 * c * c + (4 * c + 1) * (4 * c + 1));
}

SquareDecomposition twenty_squares_above(long long k, long long c) {
    if (c < 0) throw std::invalid_argument("c must be non-negative");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    SquareDecomposition d;
    d.target = k;
    d.floor_c = c;
    if (c >= 1 && k >= twenty_squares_threshold(c)) {
        auto xs = four_squares(k - twenty_squares_threshold(c));
        for (long long x : xs) {
            auto five = five_squares_f(x, c);
            d.terms.insert(d.terms.end(), five.begin(), five.end());
        }
        verify_square_terms(d, 20);
        return d;
    }
    // Fallback regime (c == 0 or below the constructive threshold).
    if (k > kFallbackLimit)
        throw DecompositionInfeasible("k=" + std::to_string(k) +
                                      " exceeds the bounded fallback search limit");
    std::unordered_set<std::uint64_t> dead;
    if (!square_fallback_scan(k, 20, c + 1, isqrt(std::max<long long>(k, 0)), dead, d.terms))
        throw DecompositionInfeasible("no representation of " + std::to_string(k) +
                                      " as 20 squares above " + std::to_string(c) + "^2");
    verify_square_terms(d, 20);
    return d;
}

long long eighty_pronic_threshold(long long c) {
    return 4 * twenty_squares_threshold(c + 1);
}

PronicDecomposition eighty_pronic(long long k, long long c) {
    if (c < 0) throw std::invalid_argument("c must be non-negative");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (k % 4 != 0) throw std::invalid_argument("k must be divisible by 4");
    PronicDecomposition d;
    d.target = k;
    d.floor_c = c;
    if (k >= eighty_pronic_threshold(c)) {
        SquareDecomposition inner = twenty_squares_above(k / 4, c + 1);
        // 4a^2 = 2 (a(a+1) + a(a-1)): each even square splits into four
        // pronic terms a, a-1, a, a-1.
        for (long long x : inner.terms) {
            d.terms.push_back(x);
            d.terms.push_back(x - 1);
            d.terms.push_back(x);
            d.terms.push_back(x - 1);
        }
    } else {
        if (k > kFallbackLimit)
            throw DecompositionInfeasible("k=" + std::to_string(k) +
                                          " exceeds the bounded fallback search limit");
        std::unordered_set<std::uint64_t> dead;
        if (!pronic_fallback_scan(k, 80, c, pronic_cap(std::max<long long>(k, 0)), dead, d.terms))
            throw DecompositionInfeasible("no representation of " + std::to_string(k) +
                                          " as 80 pronic terms with floor " + std::to_string(c));
    }
    if (d.terms.size() != 80) throw std::logic_error("pronic decomposition term count");
    long long sum = 0;
    for (long long a : d.terms) {
        if (a < c) throw std::logic_error("pronic decomposition floor violated");
        sum += a * (a + 1);
    }
    if (sum != k) throw std::logic_error("pronic decomposition sum mismatch");
    return d;
}

}  // namespace chordcycles
