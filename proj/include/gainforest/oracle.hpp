#pragma once

#include <string>
#include <vector>

#include "gainforest/gain_graph.hpp"

namespace gainforest {

// Exact rational on 128-bit integers; desk-scale interpolation stays far
// inside the representable range.
struct Fraction {
    __int128 num = 0;
    __int128 den = 1;

    Fraction() = default;
    Fraction(long long n);  // NOLINT(google-explicit-constructor)
    Fraction(__int128 n, __int128 d);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    friend bool operator==(const Fraction&, const Fraction&) = default;

    bool is_integer() const { return den == 1; }
    long long as_integer() const;
};

std::string to_string(const Fraction& f);

// Monic integer polynomial, coefficients[k] multiplies q^k.
struct CharPoly {
    std::vector<long long> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    long long evaluate(long long q) const;
};

bool is_admissible_prime(const GainGraph& g, long long q);
// The `count` smallest primes above the admissibility bound.
std::vector<long long> admissible_primes(const GainGraph& g, int count);

// Points x in (Z/q)^n with x_j - x_i != g (mod q) for every edge g(i,j).
long long count_points_mod_q(const GainGraph& g, long long q);

// Exact interpolation of the point counts at n+1 admissible primes.
CharPoly char_poly(const GainGraph& g);
CharPoly char_poly(const GainGraph& g, const std::vector<long long>& primes);

// (-1)^n * chi(-1).
long long region_count(const GainGraph& g);

// The displayed closed form (1 / (n 2^{n-1})) * sum_k C(n,k) k^{n-1},
// reported as a diagnostic next to brute-force counts, never asserted.
Fraction linial_formula(int n);

}  // namespace gainforest
