#include "rrc/hypergeom.hpp"

#include "rrc/errors.hpp"

namespace rrc {

namespace {

bool nonpositive_integer(const Rational& x) {
    return x.get_den() == 1 && x.get_num() <= 0;
}

// (1-z)^e for rational e, exact head, truncated below the order.
PuiseuxSeries one_minus_z_pow(const Rational& e, long order) {
    PuiseuxSeries base =
        PuiseuxSeries::one(Prec(make_rational(order))) -
        PuiseuxSeries::monomial(Scalar(1), make_rational(1));
    return base.pow_rat(e.get_num().get_si(), e.get_den().get_si());
}

}  // namespace

PuiseuxSeries hg_series(const HGParams& p, long order) {
    if (nonpositive_integer(p.gamma))
        throw std::domain_error("hypergeometric series undefined at nonpositive integer gamma");
    PuiseuxSeries f = PuiseuxSeries::zero(Prec(make_rational(order)));
    Rational c(1);
    for (long n = 0; n < order; ++n) {
        if (c != 0) f += PuiseuxSeries::monomial(Scalar(c), make_rational(n));
        c *= (p.alpha + n) * (p.beta + n);
        c /= (p.gamma + n) * (n + 1);
    }
    return f;
}

HGParams triangle_params(long n, long m, long k, long r) {
    if (n < 2 || m < 2 || k < 1 || r < 1)
        throw std::domain_error("signature requires n, m >= 2 and k, r >= 1");
    Rational kn = make_rational(k, n), rm = make_rational(r, m);
    if (!(kn + rm < 1)) throw std::domain_error("signature is not hyperbolic");
    return {(1 + rm - kn) / 2, (1 - kn - rm) / 2, Rational(1)};
}

QFormParams qform_params(const HGParams& p) {
    Rational s = p.alpha + p.beta - p.gamma;
    return {p.gamma * (p.gamma - 2) / 4, (s * s - 1) / 4,
            (p.gamma * (s + 1) - 2 * p.alpha * p.beta) / 2};
}

PuiseuxSeries qform_solution(const HGParams& p, long order) {
    Rational e = (p.alpha + p.beta - p.gamma + 1) / 2;
    PuiseuxSeries head = PuiseuxSeries::monomial(Scalar(1), p.gamma / 2);
    return head * one_minus_z_pow(e, order) * hg_series(p, order);
}

FrobeniusPair frobenius_pair(const HGParams& p, long order) {
    if (p.gamma != 1) throw std::domain_error("logarithmic pair requires gamma = 1");
    PuiseuxSeries y0 = hg_series(p, order);
    PuiseuxSeries h = PuiseuxSeries::zero(Prec(make_rational(order)));
    Rational tail(0);
    for (long n = 1; n < order; ++n) {
        long j = n - 1;
        tail += Rational(1) / (p.alpha + j) + Rational(1) / (p.beta + j) -
                make_rational(2, 1 + j);
        Scalar c = y0.coeff(n) * Scalar(tail);
        if (!c.is_zero()) h += PuiseuxSeries::monomial(c, make_rational(n));
    }
    return {std::move(y0), std::move(h)};
}

PuiseuxSeries nome_series(const HGParams& p, long order) {
    FrobeniusPair fp = frobenius_pair(p, order);
    return (fp.h / fp.y0).exp().mul_monomial(Scalar(1), make_rational(1));
}

OhyamaField ohyama_field(const QFormParams& qp) {
    SpecPtr spec = make_spec({"X", "Y", "Z"},
                             {make_rational(2), make_rational(2), make_rational(2)});
    GradedPoly x = GradedPoly::generator(spec, 0);
    GradedPoly y = GradedPoly::generator(spec, 1);
    GradedPoly z = GradedPoly::generator(spec, 2);
    GradedPoly xy = x - y, xz = x - z;
    GradedPoly s = (xy * xy).scaled(Scalar(qp.a)) + (xz * xz).scaled(Scalar(qp.b)) +
                   (xy * xz).scaled(Scalar(qp.c));
    Derivation d(spec, {x * x + s, y * y + s, z * z + s}, make_rational(2));
    GradedPoly minus_one = GradedPoly::constant(spec, Scalar(-1));
    Derivation delta(spec, {minus_one, minus_one, minus_one}, make_rational(-2));
    return {spec, std::move(d), std::move(delta), std::move(s)};
}

}  // namespace rrc
