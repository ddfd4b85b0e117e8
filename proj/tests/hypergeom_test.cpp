#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rrc/errors.hpp>
#include <rrc/graded.hpp>
#include <rrc/hypergeom.hpp>
#include <rrc/series.hpp>

using namespace rrc;

namespace {

Rational pochhammer(const Rational& x, long n) {
    Rational acc(1);
    for (long j = 0; j < n; ++j) acc *= x + j;
    return acc;
}

// Residual of the Gauss equation, zero for a genuine solution.
PuiseuxSeries gauss_residual(const HGParams& p, const PuiseuxSeries& y) {
    PuiseuxSeries z = PuiseuxSeries::x();
    PuiseuxSeries one = PuiseuxSeries::one();
    PuiseuxSeries dy = y.derive(), ddy = dy.derive();
    return z * (one - z) * ddy +
           (PuiseuxSeries::monomial(Scalar(p.gamma), make_rational(0)) -
            z.scaled(Scalar(p.alpha + p.beta + 1))) *
               dy -
           y.scaled(Scalar(p.alpha * p.beta));
}

}  // namespace

TEST_CASE("hypergeometric coefficients and equation") {
    HGParams p{make_rational(1, 3), make_rational(1, 4), make_rational(5, 6)};
    PuiseuxSeries f = hg_series(p, 20);
    for (long n = 0; n < 12; ++n) {
        Rational expected = pochhammer(p.alpha, n) * pochhammer(p.beta, n) /
                            (pochhammer(p.gamma, n) * pochhammer(Rational(1), n));
        CHECK(f.coeff(n) == Scalar(expected));
    }
    CHECK(gauss_residual(p, f).is_zero());

    // gamma = beta collapses to the binomial series (1-z)^(-alpha).
    HGParams collapse{make_rational(1, 2), make_rational(1, 3), make_rational(1, 3)};
    PuiseuxSeries lhs = hg_series(collapse, 20);
    PuiseuxSeries base = PuiseuxSeries::one(Prec(make_rational(20))) -
                         PuiseuxSeries::monomial(Scalar(1), make_rational(1));
    CHECK(lhs == base.pow_rat(-1, 2));

    CHECK_THROWS_AS(hg_series({make_rational(1), make_rational(1), make_rational(0)}, 5),
                    std::domain_error);
    CHECK_THROWS_AS(hg_series({make_rational(1), make_rational(1), make_rational(-2)}, 5),
                    std::domain_error);
}

TEST_CASE("triangle signatures give angle parameters") {
    HGParams p23 = triangle_params(2, 3, 1, 1);
    CHECK(p23.alpha == make_rational(5, 12));
    CHECK(p23.beta == make_rational(1, 12));
    CHECK(p23.gamma == 1);

    HGParams p33 = triangle_params(3, 3, 1, 1);
    CHECK(p33.alpha == make_rational(1, 2));
    CHECK(p33.beta == make_rational(1, 6));

    HGParams p25 = triangle_params(2, 5, 1, 2);
    CHECK(p25.alpha == make_rational(9, 20));
    CHECK(p25.beta == make_rational(1, 20));

    CHECK_THROWS_AS(triangle_params(2, 2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(triangle_params(3, 3, 2, 2), std::domain_error);
    CHECK_THROWS_AS(triangle_params(1, 5, 1, 1), std::domain_error);
}

TEST_CASE("normal form coefficients") {
    QFormParams q = qform_params(triangle_params(2, 3, 1, 1));
    CHECK(q.a == make_rational(-1, 4));
    CHECK(q.b == make_rational(-3, 16));
    CHECK(q.c == make_rational(31, 144));

    // gamma = 1 always contributes a = -1/4.
    QFormParams q25 = qform_params(triangle_params(2, 5, 1, 2));
    CHECK(q25.a == make_rational(-1, 4));
}

TEST_CASE("normal form solution satisfies y'' = Q y") {
    for (auto sig : {std::array<long, 4>{2, 3, 1, 1}, std::array<long, 4>{2, 5, 1, 2},
                     std::array<long, 4>{3, 3, 1, 1}}) {
        HGParams p = triangle_params(sig[0], sig[1], sig[2], sig[3]);
        QFormParams qp = qform_params(p);
        PuiseuxSeries y = qform_solution(p, 25);
        PuiseuxSeries z = PuiseuxSeries::x();
        PuiseuxSeries one = PuiseuxSeries::one();
        PuiseuxSeries zz = z * z, omz = one - z;
        // z^2 (1-z)^2 y'' = (a (1-z)^2 + b z^2 - c z(1-z)) y.
        PuiseuxSeries lhs = zz * omz * omz * y.derive().derive();
        PuiseuxSeries rhs = ((omz * omz).scaled(Scalar(qp.a)) + zz.scaled(Scalar(qp.b)) -
                             (z * omz).scaled(Scalar(qp.c))) *
                            y;
        INFO("signature ", sig[0], " ", sig[1], " ", sig[2], " ", sig[3]);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("logarithmic partner and nome") {
    HGParams p = triangle_params(2, 3, 1, 1);
    FrobeniusPair fp = frobenius_pair(p, 30);

    CHECK(fp.h.coeff(0) == Scalar(0));
    CHECK(fp.h.coeff(1) == Scalar(make_rational(31, 72)));

    // Inhomogeneous equation picked up by the log derivative terms.
    PuiseuxSeries z = PuiseuxSeries::x();
    PuiseuxSeries one = PuiseuxSeries::one();
    auto log_residual = [&](const HGParams& pp, const FrobeniusPair& f) {
        PuiseuxSeries lhs = z * (one - z) * f.h.derive().derive() +
                            (one - z.scaled(Scalar(pp.alpha + pp.beta + 1))) * f.h.derive() -
                            f.h.scaled(Scalar(pp.alpha * pp.beta));
        PuiseuxSeries rhs = f.y0.scaled(Scalar(pp.alpha + pp.beta)) -
                            ((one - z) * f.y0.derive()).scaled(Scalar(2));
        return lhs - rhs;
    };
    CHECK(log_residual(p, fp).is_zero());

    HGParams p25 = triangle_params(2, 5, 1, 2);
    CHECK(log_residual(p25, frobenius_pair(p25, 30)).is_zero());

    PuiseuxSeries q = nome_series(p, 25);
    CHECK(q.valuation() == make_rational(1));
    CHECK(q.coeff(1) == Scalar(1));
    CHECK(q.coeff(2) == Scalar(make_rational(31, 72)));

    CHECK_THROWS_AS(frobenius_pair({make_rational(1, 2), make_rational(1, 6),
                                    make_rational(2)},
                                   10),
                    std::domain_error);
}

TEST_CASE("symmetric weight-2 triple closes under sl2") {
    QFormParams qp = qform_params(triangle_params(2, 3, 1, 1));
    OhyamaField field = ohyama_field(qp);

    CHECK(field.s.homogeneous_of(make_rational(4)));
    Report rep = sl2_check(field.d, euler_field(field.spec), field.delta);
    INFO(rep.str());
    CHECK(rep.ok());

    // delta annihilates the quadratic residue element.
    CHECK(field.delta.apply(field.s).is_zero());
}
