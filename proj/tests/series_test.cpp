#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "rrc/series.hpp"

using namespace rrc;

namespace {

PuiseuxSeries geometric(long order) {
    // 1/(1-x) to the requested order, built directly.
    std::map<long, Scalar> t;
    for (long e = 0; e < order; ++e) t.emplace(e, Scalar(1));
    return PuiseuxSeries::from_raw(1, std::move(t), Prec(Rational(order)));
}

PuiseuxSeries random_series(std::mt19937& rng, long order, bool with_quad = false) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::map<long, Scalar> t;
    for (long e = 0; e < order; ++e) {
        Scalar c(make_rational(num(rng), den(rng)));
        if (with_quad && num(rng) > 5) c += Scalar::sqrt_of(-3).pow(1) * Scalar(num(rng));
        if (!c.is_zero()) t.emplace(e, c);
    }
    return PuiseuxSeries::from_raw(1, std::move(t), Prec(Rational(order)));
}

}  // namespace

TEST_CASE("geometric series inverse") {
    PuiseuxSeries g = PuiseuxSeries::one(Prec(Rational(20))) -
                      PuiseuxSeries::x(Prec(Rational(20)));
    PuiseuxSeries inv = PuiseuxSeries::one(Prec(Rational(20))) / g;
    CHECK(inv == geometric(20));
    for (long e = 0; e < 20; ++e) CHECK(inv.coeff(Rational(e)) == Scalar(1));
}

TEST_CASE("binomial root oracle") {
    // Independent oracle: (1+x)^(1/3) has coefficients C(1/3, k).
    PuiseuxSeries f = (PuiseuxSeries::one() + PuiseuxSeries::x()).truncated(Rational(16));
    PuiseuxSeries r = f.nth_root(3);
    for (long k = 0; k < 16; ++k)
        CHECK(r.coeff(Rational(k)) == Scalar(binomial_coeff(make_rational(1, 3), k)));
    CHECK((r * r * r) == f);
}

TEST_CASE("catalan reversion oracle") {
    // Independent oracle: revert(x - x^2) = sum_k C_{k-1} x^k with the
    // Catalan recurrence C_n = sum C_i C_{n-1-i}.
    std::vector<Rational> cat{Rational(1)};
    for (long n = 1; n < 14; ++n) {
        Rational s(0);
        for (long i = 0; i < n; ++i) s += cat[i] * cat[n - 1 - i];
        cat.push_back(s);
    }
    PuiseuxSeries f = (PuiseuxSeries::x() - PuiseuxSeries::x().pow_int(2)).truncated(Rational(15));
    PuiseuxSeries g = revert(f);
    for (long k = 1; k < 15; ++k) CHECK(g.coeff(Rational(k)) == Scalar(cat[k - 1]));
    CHECK(compose(f, g) == PuiseuxSeries::x(Prec(Rational(15))));
    CHECK(compose(g, f) == PuiseuxSeries::x(Prec(Rational(15))));
}

TEST_CASE("mercator log oracle") {
    PuiseuxSeries f = (PuiseuxSeries::one() + PuiseuxSeries::x()).truncated(Rational(14));
    PuiseuxSeries l = f.log();
    for (long k = 1; k < 14; ++k) {
        Rational expect = make_rational(k % 2 ? 1 : -1, k);
        CHECK(l.coeff(Rational(k)) == Scalar(expect));
    }
    CHECK(l.exp() == f);
}

TEST_CASE("exponential coefficients") {
    PuiseuxSeries e = PuiseuxSeries::x(Prec(Rational(10))).exp();
    Rational inv_fact(1);
    for (long k = 1; k < 10; ++k) {
        inv_fact /= k;
        CHECK(e.coeff(Rational(k)) == Scalar(inv_fact));
    }
}

TEST_CASE("precision semantics") {
    PuiseuxSeries f = geometric(10);
    CHECK_THROWS_AS(f.coeff(Rational(10)), PrecisionError);
    CHECK_NOTHROW(f.coeff(Rational(9)));
    CHECK((f * f).precision() == Prec(Rational(10)));
    CHECK(f.derive().precision() == Prec(Rational(9)));
    CHECK(f.theta().precision() == Prec(Rational(10)));

    // Division shifts precision by the divisor valuation rules.
    PuiseuxSeries num = PuiseuxSeries::x(Prec(Rational(8))).pow_int(2).truncated(Rational(8));
    PuiseuxSeries den = PuiseuxSeries::x();
    CHECK((num / den).precision() == Prec(Rational(7)));

    // Root precision: prec - (n-1)/n * valuation.
    PuiseuxSeries g =
        (PuiseuxSeries::x().pow_int(2) + PuiseuxSeries::x().pow_int(3)).truncated(Rational(10));
    CHECK(g.nth_root(2).precision() == Prec(Rational(9)));

    // Equality compares below joint precision only.
    PuiseuxSeries a = geometric(3), b = geometric(7);
    CHECK(a == b);
    PuiseuxSeries c = b + PuiseuxSeries::monomial(Scalar(5), Rational(2), Prec(Rational(7)));
    CHECK_FALSE(a == c);
}

TEST_CASE("puiseux grids") {
    PuiseuxSeries h = PuiseuxSeries::monomial(Scalar(1), make_rational(1, 4));
    CHECK(h.denom() == 4);
    CHECK((h * h).valuation() == make_rational(1, 2));
    CHECK((h * h).denom() == 4);
    PuiseuxSeries hh = h * h;
    hh.reduce_grid();
    CHECK(hh.denom() == 2);

    // sqrt(x^2 (1+x)) = x (1+x)^(1/2).
    PuiseuxSeries f =
        (PuiseuxSeries::x().pow_int(2) * (PuiseuxSeries::one() + PuiseuxSeries::x()))
            .truncated(Rational(12));
    PuiseuxSeries r = f.nth_root(2);
    CHECK(r.valuation() == Rational(1));
    for (long k = 0; k < 8; ++k)
        CHECK(r.coeff(Rational(k + 1)) == Scalar(binomial_coeff(make_rational(1, 2), k)));

    // Fractional derivative: d/dx x^(1/2) = (1/2) x^(-1/2).
    PuiseuxSeries half = PuiseuxSeries::monomial(Scalar(1), make_rational(1, 2));
    PuiseuxSeries d = half.derive();
    CHECK(d.coeff(make_rational(-1, 2)) == Scalar(make_rational(1, 2)));
}

TEST_CASE("compose paths") {
    // Monomial inner with coefficient: exponents scale, coefficients power up.
    PuiseuxSeries outer = PuiseuxSeries::monomial(Scalar(3), make_rational(1, 2));
    PuiseuxSeries inner = PuiseuxSeries::monomial(Scalar(4), Rational(1));
    PuiseuxSeries c = compose(outer, inner);
    CHECK(c.coeff(make_rational(1, 2)) == Scalar(6));  // 3 * 4^(1/2)

    // Horner path on integer exponents.
    PuiseuxSeries f = (PuiseuxSeries::one() + PuiseuxSeries::x()).pow_int(5);
    PuiseuxSeries g = PuiseuxSeries::monomial(Scalar(2), Rational(1), Prec(Rational(9)));
    PuiseuxSeries fg = compose(f, g);
    for (long k = 0; k <= 5; ++k)
        CHECK(fg.coeff(Rational(k)) ==
              Scalar(binomial_coeff(make_rational(5), k) * Rational(1 << k)));

    // Negative exponents run through the inverse-power shift.
    PuiseuxSeries lau = PuiseuxSeries::monomial(Scalar(1), Rational(-2)) + PuiseuxSeries::one();
    PuiseuxSeries t2 = PuiseuxSeries::monomial(Scalar(1), Rational(1), Prec(Rational(6)));
    PuiseuxSeries lg = compose(lau, t2);
    CHECK(lg.coeff(Rational(-2)) == Scalar(1));
    CHECK(lg.coeff(Rational(0)) == Scalar(1));
}

TEST_CASE("ring identities on random series") {
    std::mt19937 rng(0x5eed);
    for (int round = 0; round < 6; ++round) {
        PuiseuxSeries f = random_series(rng, 12), g = random_series(rng, 12),
                      h = random_series(rng, 12);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        // Leibniz for both derivations.
        CHECK((f * g).theta() == f.theta() * g + f * g.theta());
        CHECK((f * g).derive() == f.derive() * g + f * g.derive());
        // Division undoes multiplication when the divisor has a unit head.
        PuiseuxSeries u = PuiseuxSeries::one(Prec(Rational(12))) + g.mul_monomial(Scalar(1), Rational(1));
        CHECK((f * u) / u == f);
    }
}

TEST_CASE("quadratic coefficients in series") {
    Scalar w = Scalar::sqrt_of(-3);
    PuiseuxSeries f = PuiseuxSeries::one(Prec(Rational(8))) +
                      PuiseuxSeries::x(Prec(Rational(8))).scaled(w);
    // (1 + w x)(1 - w x) = 1 + 3 x^2 for w = sqrt(-3).
    PuiseuxSeries fc = PuiseuxSeries::one(Prec(Rational(8))) +
                       PuiseuxSeries::x(Prec(Rational(8))).scaled(-w);
    PuiseuxSeries p = f * fc;
    CHECK(p.coeff(Rational(0)) == Scalar(1));
    CHECK(p.coeff(Rational(1)) == Scalar(0));
    CHECK(p.coeff(Rational(2)) == Scalar(3));
}

TEST_CASE("json round trips") {
    PuiseuxSeries f =
        (PuiseuxSeries::x().pow_int(2) + PuiseuxSeries::x().pow_int(3)).truncated(Rational(10));
    std::string j = series_to_json(f);
    PuiseuxSeries back = series_from_json(j);
    CHECK(series_to_json(back) == j);
    CHECK(back == f);

    // Fractional grid, quadratic coefficients, negative exponents, inf prec.
    PuiseuxSeries g = PuiseuxSeries::monomial(Scalar::sqrt_of(-3), make_rational(-1, 2)) +
                      PuiseuxSeries::monomial(Scalar(make_rational(1, 2), make_rational(2, 7), -3),
                                              make_rational(3, 4));
    std::string jg = series_to_json(g);
    CHECK(series_from_json(jg) == g);
    CHECK(series_to_json(series_from_json(jg)) == jg);
    CHECK(jg.find("\"prec\":\"inf\"") != std::string::npos);

    CHECK_THROWS_AS(series_from_json("{"), ParseError);
    CHECK_THROWS_AS(series_from_json("{\"denom\":0,\"prec\":\"1\",\"terms\":[]}"), ParseError);
}
