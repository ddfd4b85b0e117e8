#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrc/report.hpp"
#include "rrc/scalar.hpp"

namespace rrc {

// One component (n, m, k, r) of a modular embedding of the (n, m, infinity)
// triangle group, with N = nm - mk - nr > 0 (hyperbolicity).
struct Signature {
    long n, m, k, r;

    long N() const { return n * m - m * k - n * r; }
    bool operator==(const Signature&) const = default;
};

// Validates n, m >= 2, k, r >= 1 and k/n + r/m < 1.
Signature make_signature(long n, long m, long k, long r);

/*
 * Signatures of the embedding components for the (n, m) triangle, by the
 * Galois-fold enumeration: for each residue u coprime to 2 lcm(n, m) taken
 * modulo sign, k' folds u to [1, n) modulo 2n and r' is whichever of
 * fold_m(u), m - fold_m(u) keeps k'/n + r'/m < 1. Exactly one choice must
 * be hyperbolic; anything else is an error, never a guess. The list is
 * deduplicated with (1,1) first, then ordered by (r, k).
 */
std::vector<Signature> candidate_embeddings(long n, long m);

// Pure weights (2n/N, 2m/N) of the two modular generators.
std::pair<Rational, Rational> generator_weights(const Signature& sig);

// Representative of x modulo 1 in [0, 1).
Rational mod1(const Rational& x);

// A pure weight w supports forms only when w N is a nonnegative multiple
// of 2 gcd(n, m).
bool admissible_weight(const Signature& sig, const Rational& w);

/*
 * Dimension of the forms of pure weight w: zero when inadmissible, else
 * with g = gcd(n,m), n' = n/g, m' = m/g and T = wN/2g the count is
 * 1 + floor(T/n'm') when the fractional part of T/n'm' is a/n' + b/m' for
 * some nonnegative integers a, b, and floor(T/n'm') otherwise.
 */
long dim_pure_weight(const Signature& sig, const Rational& w);

// All (a, b) in Z>=0^2 with 2an + 2bm = wN, ordered by a. Independent
// enumeration; agrees with dim_pure_weight by construction of the theory.
std::vector<std::pair<long, long>> monomial_basis(const Signature& sig, const Rational& w);

/*
 * Multiplier system values at the elliptic generator S, as rational
 * rotation numbers v(S) = exp(2 pi i rot): rot(Q) = -k/N and
 * rot(R) = -(m-r)/N, both reduced into [0, 1).
 */
std::pair<Rational, Rational> multipliers(const Signature& sig);

// Rotation of the monomial Q^a R^b, a rot(Q) + b rot(R) mod 1.
Rational monomial_rotation(const Signature& sig, long a, long b);

// Total weighted zero count sum_j w_j N_j / (2 m n) of a form of pure
// weight (w_1, ..., w_h) across the embedding components.
Rational valence_degree(const std::vector<Signature>& sigs,
                        const std::vector<Rational>& weights);

/*
 * The value 2 cos(pi p / q) kept exact: a rational number when the reduced
 * denominator is 1, 2 or 3, otherwise an opaque symbol carrying its monic
 * minimal polynomial over Q (ascending coefficients), obtained by folding
 * the cyclotomic polynomial of e^(i pi p / q).
 */
struct CosSymbol {
    long p, q;
    std::optional<Rational> value;
    std::vector<Rational> minpoly;

    std::string str() const;
};
CosSymbol cos_symbol(long p, long q);

// Generators of the triangle reflection group:
//   S = (-s, 1; -1, 0), T = (1, s + t; 0, 1)
// with s = 2cos(pi k/n) and t = 2cos(pi r/m).
struct GroupGenerators {
    CosSymbol s;
    CosSymbol t;
};
GroupGenerators group_generators(const Signature& sig);

// Rotation number of a word in the generators, composed additively from
// (letter, exponent) pairs; the parabolic T carries rotation zero.
Rational word_rotation(const Rational& rot_s,
                       const std::vector<std::pair<char, long>>& word);

// Cocycle consistency of the multipliers along the level-two word
// G = S^-2 T^-2 S^-1: both v_Q(G) and v_R(G) must be trivial.
Report cocycle_check(const Signature& sig);

}  // namespace rrc
