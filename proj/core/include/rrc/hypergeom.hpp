#pragma once

#include "rrc/graded.hpp"
#include "rrc/scalar.hpp"
#include "rrc/series.hpp"

namespace rrc {

// Parameters of the Gauss hypergeometric equation
//   z(1-z) y'' + (gamma - (alpha+beta+1) z) y' - alpha beta y = 0.
struct HGParams {
    Rational alpha, beta, gamma;
};

// Coefficients of the projective normal form y'' = Q(z) y with
//   Q(z) = a/z^2 + b/(z-1)^2 + c/(z(z-1)).
struct QFormParams {
    Rational a, b, c;
};

// F(alpha, beta; gamma; z) with coefficients (alpha)_n (beta)_n /
// ((gamma)_n n!), truncated below the order. gamma must not be a
// nonpositive integer.
PuiseuxSeries hg_series(const HGParams& p, long order);

/*
 * Angle parameters of the uniformizer of a (n, m) triangle signature with
 * cone data (k, r): alpha = (1 + r/m - k/n)/2, beta = (1 - k/n - r/m)/2,
 * gamma = 1. Requires n, m >= 2, k, r >= 1 and hyperbolicity
 * k/n + r/m < 1.
 */
HGParams triangle_params(long n, long m, long k, long r);

// a = gamma(gamma-2)/4, b = ((alpha+beta-gamma)^2 - 1)/4,
// c = (gamma(alpha+beta-gamma+1) - 2 alpha beta)/2.
QFormParams qform_params(const HGParams& p);

// Solution y = z^(gamma/2) (1-z)^((alpha+beta-gamma+1)/2) F of the normal
// form y'' = Q(z) y.
PuiseuxSeries qform_solution(const HGParams& p, long order);

/*
 * Frobenius data at the logarithmic point gamma = 1: y0 = F(alpha,beta;1;z)
 * and the tail h of the second solution y0 log z + h, with
 *   h_n = y0_n sum_{j<n} (1/(alpha+j) + 1/(beta+j) - 2/(1+j)).
 * h satisfies z(1-z)h'' + (1-(alpha+beta+1)z)h' - alpha beta h
 *   = (alpha+beta) y0 - 2(1-z) y0'.
 */
struct FrobeniusPair {
    PuiseuxSeries y0;
    PuiseuxSeries h;
};
FrobeniusPair frobenius_pair(const HGParams& p, long order);

// Normalized nome z exp(h/y0); valuation 1 with leading coefficient 1.
PuiseuxSeries nome_series(const HGParams& p, long order);

/*
 * Symmetric weight-2 triple attached to a normal form: generators X, Y, Z
 * of weight 2 with D V = V^2 + s for each of them, where
 *   s = a(X-Y)^2 + b(X-Z)^2 + c(X-Y)(X-Z).
 * delta sends every generator to -1; together with the Euler field this
 * realizes the standard sl2 relations.
 */
struct OhyamaField {
    SpecPtr spec;
    Derivation d;
    Derivation delta;
    GradedPoly s;
};
OhyamaField ohyama_field(const QFormParams& qp);

}  // namespace rrc
