#pragma once

#include <string>
#include <vector>

#include "rrc/graded.hpp"
#include "rrc/report.hpp"
#include "rrc/scalar.hpp"
#include "rrc/series.hpp"

namespace rrc {

// Divisor-sum Eisenstein series of weight k in {2, 4, 6}, constant term 1.
PuiseuxSeries eisenstein(long k, long order);

// Normalized cusp form (E4^3 - E6^2)/1728.
PuiseuxSeries delta(long order);

/*
 * Jacobi theta constants.  With nome 1 the exponent grid is n^2 for
 * theta3 and (n + 1/2)^2 for theta2; a nome of 1/2 stretches every
 * exponent by 2, giving the theta series of the squared variable.
 */
PuiseuxSeries theta(int which, long order, const Rational& nome = Rational(1));

// theta f - (k/12) E2 f for a truncated expansion of weight k on nome 1.
PuiseuxSeries serre_derivative(const PuiseuxSeries& f, const Rational& k);

struct CatalogForm {
    std::string name;
    Rational weight;
    Rational nome;
    PuiseuxSeries series;
};

// Named forms E2, E4, E6, DELTA, THETA2, THETA3 on a common nome.
CatalogForm catalog_form(const std::string& name, long order,
                         const Rational& nome = Rational(1));
const std::vector<std::string>& catalog_names();

// Forms may be combined only when their nomes agree.
void require_same_nome(const CatalogForm& a, const CatalogForm& b);

/*
 * Theta-constant model of the (3, 3, 1, 1) system on the half nome:
 * P = E2(x)/6, Q = theta3^4 + 2 sqrt(-3) theta3^2 theta2^2 + theta2^4,
 * R its conjugate, all theta constants taken at x, the square of the
 * expansion variable.  Checks the differential system, the tabulated
 * leading coefficients, both symmetrizations, and the identifications
 * Q R = E4(x) and (Q + R)/2 = theta3(x)^4 + theta2(x)^4.
 */
Report verify_33(long order);

// Bigraded model with two quasi-modular directions attached to (2, 5).
struct BigradedSystem {
    RRCSystem sys;
    std::size_t p1, p2;
    GradedPoly phi2;
};
BigradedSystem s25_system();

}  // namespace rrc
