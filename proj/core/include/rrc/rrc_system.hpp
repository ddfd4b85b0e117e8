#pragma once

#include <string>
#include <vector>

#include "rrc/graded.hpp"
#include "rrc/report.hpp"
#include "rrc/scalar.hpp"
#include "rrc/series.hpp"
#include "rrc/triangle.hpp"

namespace rrc {

/*
 * Differential system attached to a signature.  Generators are P, Q, R
 * with weights 2, 2n/N, 2m/N; when r > 1 the ideal inverse Qinv of Q is
 * adjoined so every right hand side stays polynomial.
 */
struct TriangleRRC {
    Signature sig;
    RRCSystem sys;

    bool laurent() const { return sys.spec->rank() == 4; }
};

TriangleRRC build_system(const Signature& sig);

// Constant solution (P, Q, R[, Qinv]) annihilating every image.
std::vector<Scalar> fixed_point(const TriangleRRC& trrc);

// For Laurent systems: the ideal (Q Qinv - 1) is differential.
Report laurent_ideal_check(const TriangleRRC& trrc);

/*
 * Truncated series solution.  The derivation acts as dscale * d/dx where
 * x is the named coordinate; for q-expansions dscale = q, giving q d/dq.
 */
struct SeriesSolution {
    Signature sig;
    std::string coordinate;
    PuiseuxSeries P, Q, R;
    PuiseuxSeries dscale;

    PuiseuxSeries apply_d(const PuiseuxSeries& f) const { return dscale * f.derive(); }
};

// Solution by hypergeometric quotients on the cut plane coordinate z.
SeriesSolution solve_z(const Signature& sig, long order);

// Expansion in the nome of the (k, r) = (1, 1) signature at the cusp.
SeriesSolution solve_q(long n, long m, long order);

// Substitute q -> c q in a q-coordinate solution.
SeriesSolution rescale_solution(const SeriesSolution& sol, const Scalar& c);

// Residuals D t - image(t) for every generator of the system.
Report verify_system(const TriangleRRC& trrc, const SeriesSolution& sol);

// Exact z-coordinate relations: Q^m - R^n = z Q^m and R^(nN) = Q^(mN) (1-z)^N.
Report hauptmodul_check(const SeriesSolution& sol);

/*
 * Inversion relations for a family of signatures sharing (n, m): each
 * hypergeometric square is a power of its own Q, and the later members
 * are powers of the first member's generators up to Q-form gauge.
 */
Report verify_inversion(const std::vector<Signature>& family, long order);

/*
 * Orbit series X = y y', Y = X - y^2/z, Z = X + y^2/(1-z) satisfy
 * D V = V^2 + s with the common inhomogeneity s, and recover the
 * solution of solve_z.
 */
Report ohyama_roundtrip(const Signature& sig, long order);

}  // namespace rrc
