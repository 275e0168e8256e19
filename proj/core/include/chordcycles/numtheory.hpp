#pragma once

#include <array>
#include <vector>

namespace chordcycles {

// Certified additive representation: sum of terms[i]^2 == target and every
// term is strictly greater than floor_c.
struct SquareDecomposition {
    long long target = 0;
    long long floor_c = 0;
    std::vector<long long> terms;
};

// Sum of terms[i] * (terms[i] + 1) == target, exactly 80 terms, each >= floor_c.
struct PronicDecomposition {
    long long target = 0;
    long long floor_c = 0;
    std::vector<long long> terms;
};

// n = a^2 + b^2 + c^2 + d^2 with non-negative bases, sorted descending,
// lexicographically largest-first.
std::array<long long, 4> four_squares(long long n);

// Five bases, each > c, whose squares sum to f(x) = x^2 + 2500c^2 + (4c+1)^2.
// Branches: x > c uses (x, 30c, 24c, 32c, 4c+1); x <= c even splits
// 2((50c+x)/2)^2 + 2((50c-x)/2)^2 + (4c+1)^2; x <= c odd splits
// 2((4c+1+x)/2)^2 + 2((4c+1-x)/2)^2 + (50c)^2. Requires x >= 0, c >= 1.
std::array<long long, 5> five_squares_f(long long x, long long c);

// Constructive threshold 4 * (2500c^2 + (4c+1)^2).
long long twenty_squares_threshold(long long c);

// k as a sum of exactly 20 squares, all larger than c^2. Constructive for
// k >= twenty_squares_threshold(c) and c >= 1; bounded exhaustive fallback
// below the threshold (and for c == 0), which may throw
// DecompositionInfeasible.
SquareDecomposition twenty_squares_above(long long k, long long c);

// Constructive threshold 4 * twenty_squares_threshold(c + 1).
long long eighty_pronic_threshold(long long c);

// k (divisible by 4) as a sum of exactly 80 pronic terms a_i(a_i+1) with
// a_i >= c. Constructive via twenty_squares_above(k/4, c+1) and the identity
// 4a^2 = 2(a(a+1) + a(a-1)); bounded exhaustive fallback below threshold.
PronicDecomposition eighty_pronic(long long k, long long c);

}  // namespace chordcycles
