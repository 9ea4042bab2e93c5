#pragma once

// Independent test oracles. Everything here is deliberately implemented by a
// different route than the library code it checks: brute-force enumeration,
// classical alternative characterizations, or plain direct summation.

#include "hps/mpoly.hpp"
#include "hps/rational.hpp"

#include <random>
#include <vector>

namespace oracles {

// Count set partitions of {0..n-1} by number of blocks, with the first r
// elements required to land in pairwise distinct blocks. Result[k] is the
// number of partitions into exactly k blocks, i.e. the r-Stirling number
// {n,k}_r (plain Stirling for r <= 1). Elements are placed in order, so an
// element below r may never join an existing block.
inline std::vector<hps::Int> partition_counts(int n, int r) {
    std::vector<hps::Int> by_k(static_cast<std::size_t>(n) + 1, hps::Int(0));
    // state: number of blocks opened so far; recursion over elements.
    struct Rec {
        int n, r;
        std::vector<hps::Int>& by_k;
        void place(int next, int nblocks) {
            if (next == n) {
                by_k[static_cast<std::size_t>(nblocks)] += 1;
                return;
            }
            if (next >= r)
                for (int b = 0; b < nblocks; ++b) place(next + 1, nblocks);  // join any block
            place(next + 1, nblocks + 1);                                    // open a new block
        }
    } rec{n, r, by_k};
    if (n == 0)
        by_k[0] = 1;
    else
        rec.place(0, 0);
    return by_k;
}

// Hermite polynomials by the Rodrigues-style route: track P_n with
// (d/dx)^n e^{-x^2} = P_n(x) e^{-x^2}, i.e. P_0 = 1, P_{n+1} = P_n' - 2x P_n,
// and H_n = (-1)^n P_n. Completely independent of the three-term recurrence.
inline std::vector<hps::MPoly> hermite_rodrigues(int nmax) {
    using hps::MPoly;
    using hps::Rational;
    const MPoly X = MPoly::variable(hps::Symbol::x);
    std::vector<MPoly> H;
    MPoly P(1);
    for (int n = 0; n <= nmax; ++n) {
        H.push_back(n % 2 == 0 ? P : -P);
        // derivative in x, term by term
        MPoly dP;
        for (const auto& [m, c] : P.terms()) {
            unsigned e = m[hps::Symbol::x];
            if (e == 0) continue;
            hps::Monomial lower = m;
            lower.e[0] = e - 1;
            dP += MPoly::term(c * Rational(static_cast<long>(e)), lower);
        }
        P = dP - X * 2 * P;
    }
    return H;
}

// Deterministic random rational/sequence helpers shared by property tests.
inline hps::Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return hps::Rational(num(rng), den(rng));
}

inline std::vector<hps::Rational> random_sequence(std::mt19937_64& rng, int length) {
    std::vector<hps::Rational> v;
    v.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) v.push_back(random_rational(rng));
    return v;
}

}  // namespace oracles
