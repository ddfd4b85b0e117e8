#include "rrc/rrc_system.hpp"

#include <algorithm>

#include "rrc/errors.hpp"
#include "rrc/hypergeom.hpp"

namespace rrc {

namespace {

std::string prec_str(const Prec& p) {
    return p ? to_string(*p) : std::string("inf");
}

// (1 - x)^(num/den) as a series of the given precision.
PuiseuxSeries one_minus_x_pow(long num, long den, const Prec& prec) {
    PuiseuxSeries base = PuiseuxSeries::one(prec) - PuiseuxSeries::x(prec);
    return base.pow_rat(num, den);
}

}  // namespace

TriangleRRC build_system(const Signature& sig) {
    long n = sig.n, m = sig.m, k = sig.k, r = sig.r, N = sig.N();
    if (k > 1)
        throw ShapeError("inverse powers of R are not supported (k > 1)");
    auto [wq, wr] = generator_weights(sig);
    bool laurent = r > 1;
    std::vector<std::string> names{"P", "Q", "R"};
    std::vector<Rational> weights{Rational(2), wq, wr};
    if (laurent) {
        names.push_back("Qinv");
        weights.push_back(-wq);
    }
    SpecPtr spec = make_spec(names, weights);
    GradedPoly P = GradedPoly::generator(spec, 0);
    GradedPoly Q = GradedPoly::generator(spec, 1);
    GradedPoly R = GradedPoly::generator(spec, 2);
    auto qpow = [&](long e) {
        if (e >= 0) return Q.pow(e);
        return GradedPoly::generator(spec, 3).pow(-e);
    };
    Rational c1 = make_rational(N, 2 * n * m);
    GradedPoly img_p =
        P * P + (qpow(m - 2 * r) * R.pow(n - 2 * k)).scaled(Scalar(Rational(-c1 * c1)));
    GradedPoly img_q = (P * Q).scaled(Scalar(make_rational(2 * n, N))) +
                       (R.pow(n - k) * qpow(1 - r)).scaled(Scalar(make_rational(-1, m)));
    GradedPoly img_r = (P * R).scaled(Scalar(make_rational(2 * m, N))) +
                       (Q.pow(m - r) * R.pow(1 - k)).scaled(Scalar(make_rational(-1, n)));
    RRCSystem sys;
    sys.spec = spec;
    sys.t1 = 0;
    sys.images = {img_p, img_q, img_r};
    if (laurent) {
        GradedPoly U = GradedPoly::generator(spec, 3);
        sys.images.push_back((P * U).scaled(Scalar(make_rational(-2 * n, N))) +
                             (R.pow(n - k) * U.pow(r + 1)).scaled(Scalar(make_rational(1, m))));
    }
    return {sig, sys};
}

std::vector<Scalar> fixed_point(const TriangleRRC& trrc) {
    std::vector<Scalar> point{Scalar(make_rational(trrc.sig.N(), 2 * trrc.sig.n * trrc.sig.m)),
                              Scalar(1), Scalar(1)};
    if (trrc.laurent()) point.emplace_back(1);
    return point;
}

Report laurent_ideal_check(const TriangleRRC& trrc) {
    Report rep;
    if (!trrc.laurent()) {
        rep.add("laurent ideal", true, "system is polynomial, nothing to check");
        return rep;
    }
    const SpecPtr& spec = trrc.sys.spec;
    GradedPoly Q = GradedPoly::generator(spec, 1);
    GradedPoly R = GradedPoly::generator(spec, 2);
    GradedPoly U = GradedPoly::generator(spec, 3);
    GradedPoly rel = Q * U - GradedPoly::constant(spec, Scalar(1));
    GradedPoly lhs = trrc.sys.derivation().apply(rel);
    GradedPoly rhs = (R.pow(trrc.sig.n - trrc.sig.k) * U.pow(trrc.sig.r))
                         .scaled(Scalar(make_rational(1, trrc.sig.m))) *
                     rel;
    rep.add("D(Q Qinv - 1) in (Q Qinv - 1)", lhs == rhs);
    return rep;
}

SeriesSolution solve_z(const Signature& sig, long order) {
    long work = order + 4;
    Prec prec{Rational(work)};
    HGParams p = triangle_params(sig.n, sig.m, sig.k, sig.r);
    PuiseuxSeries F = hg_series(p, work);
    PuiseuxSeries y = qform_solution(p, work);
    long N = sig.N();
    PuiseuxSeries Q = F.pow_rat(2 * sig.n, N);
    PuiseuxSeries R = F.pow_rat(2 * sig.m, N) * one_minus_x_pow(1, sig.n, prec);
    PuiseuxSeries y2 = y * y;
    PuiseuxSeries delta = Q.pow_int(sig.m) - R.pow_int(sig.n);
    PuiseuxSeries P =
        (y2 * delta.derive() / delta).scaled(Scalar(make_rational(N, 2 * sig.n * sig.m)));
    Rational cut(order);
    return {sig, "z", P.truncated(cut), Q.truncated(cut), R.truncated(cut),
            y2.truncated(cut)};
}

SeriesSolution solve_q(long n, long m, long order) {
    Signature sig = make_signature(n, m, 1, 1);
    long work = order + n + m + 4;
    HGParams p = triangle_params(n, m, 1, 1);
    PuiseuxSeries t = revert(nome_series(p, work));
    PuiseuxSeries th = t.theta();
    PuiseuxSeries omt = PuiseuxSeries::one(t.precision()) - t;
    long N = sig.N();
    PuiseuxSeries Q = (th.pow_int(n) / (t.pow_int(n) * omt.pow_int(n - 1))).pow_rat(1, N);
    PuiseuxSeries R = (th.pow_int(m) / (t.pow_int(m) * omt)).pow_rat(1, N);
    PuiseuxSeries delta = Q.pow_int(m) - R.pow_int(n);
    PuiseuxSeries P = (delta.theta() / delta).scaled(Scalar(make_rational(N, 2 * n * m)));
    Rational cut(order);
    return {sig, "q", P.truncated(cut), Q.truncated(cut), R.truncated(cut),
            PuiseuxSeries::x(Prec{cut})};
}

SeriesSolution rescale_solution(const SeriesSolution& sol, const Scalar& c) {
    if (sol.coordinate != "q")
        throw std::domain_error("only q-coordinate solutions can be rescaled");
    auto sub = [&](const PuiseuxSeries& f) {
        // An exact monomial inner keeps the substitution termwise.
        return compose(f, PuiseuxSeries::monomial(c, Rational(1), Prec{}));
    };
    // q d/dq is invariant under q -> c q, so dscale stays the coordinate.
    return {sol.sig, sol.coordinate, sub(sol.P), sub(sol.Q), sub(sol.R), sol.dscale};
}

Report verify_system(const TriangleRRC& trrc, const SeriesSolution& sol) {
    if (!(trrc.sig == sol.sig))
        throw std::domain_error("solution and system have different signatures");
    std::vector<PuiseuxSeries> vals{sol.P, sol.Q, sol.R};
    if (trrc.laurent()) vals.push_back(PuiseuxSeries::one(sol.Q.precision()) / sol.Q);
    Report rep;
    for (std::size_t j = 0; j < vals.size(); ++j) {
        PuiseuxSeries res = sol.apply_d(vals[j]) - trrc.sys.images[j].eval(vals);
        rep.add("D[" + trrc.sys.spec->names[j] + "] residual", res.is_zero(),
                "through order " + prec_str(res.precision()));
    }
    return rep;
}

Report hauptmodul_check(const SeriesSolution& sol) {
    if (sol.coordinate != "z")
        throw std::domain_error("hauptmodul relations live on the z coordinate");
    long n = sol.sig.n, m = sol.sig.m, N = sol.sig.N();
    Report rep;
    PuiseuxSeries qm = sol.Q.pow_int(m);
    PuiseuxSeries delta = qm - sol.R.pow_int(n);
    rep.add("Q^m - R^n = z Q^m",
            delta == qm * PuiseuxSeries::x(delta.precision()));
    rep.add("R^(nN) = Q^(mN) (1-z)^N",
            sol.R.pow_int(n * N) ==
                sol.Q.pow_int(m * N) * one_minus_x_pow(N, 1, sol.Q.precision()));
    return rep;
}

Report verify_inversion(const std::vector<Signature>& family, long order) {
    if (family.empty()) throw std::domain_error("empty signature family");
    long n = family.front().n, m = family.front().m;
    for (const Signature& sig : family)
        if (sig.n != n || sig.m != m)
            throw std::domain_error("inversion family must share (n, m)");
    long work = order + 4;
    std::vector<PuiseuxSeries> F, y, Q;
    for (const Signature& sig : family) {
        HGParams p = triangle_params(sig.n, sig.m, sig.k, sig.r);
        F.push_back(hg_series(p, work));
        y.push_back(qform_solution(p, work));
        Q.push_back(F.back().pow_rat(2 * n, sig.N()));
    }
    Report rep;
    auto tag = [](const Signature& s) {
        return " (" + std::to_string(s.n) + "," + std::to_string(s.m) + "," +
               std::to_string(s.k) + "," + std::to_string(s.r) + ")";
    };
    for (std::size_t j = 0; j < family.size(); ++j)
        rep.add("F^2 = Q^(N/n)" + tag(family[j]),
                F[j] * F[j] == Q[j].pow_rat(family[j].N(), n));
    if (family.size() > 1) {
        Prec prec{Rational(work)};
        PuiseuxSeries R1 =
            F.front().pow_rat(2 * m, family.front().N()) * one_minus_x_pow(1, n, prec);
        PuiseuxSeries y1sq = y.front() * y.front();
        for (std::size_t j = 1; j < family.size(); ++j) {
            // Cross-multiplied to keep everything polynomial in the series ring.
            PuiseuxSeries lhs = F[j] * F[j] * y1sq;
            PuiseuxSeries rhs = Q.front().pow_rat(family[j].N() + n * (family[j].r - 1), n) *
                                R1.pow_int(family[j].k - 1) * (y[j] * y[j]);
            rep.add("F^2 y_1^2 = Q_1^(N/n+r-1) R_1^(k-1) y^2" + tag(family[j]), lhs == rhs);
        }
    }
    return rep;
}

Report ohyama_roundtrip(const Signature& sig, long order) {
    long work = order + 4;
    Prec prec{Rational(work)};
    HGParams p = triangle_params(sig.n, sig.m, sig.k, sig.r);
    QFormParams qp = qform_params(p);
    PuiseuxSeries y = qform_solution(p, work);
    PuiseuxSeries y2 = y * y;
    PuiseuxSeries X = y * y.derive();
    PuiseuxSeries Y = X - y2.mul_monomial(Scalar(1), Rational(-1));
    PuiseuxSeries Z = X + y2 / (PuiseuxSeries::one(prec) - PuiseuxSeries::x(prec));
    PuiseuxSeries xy = X - Y, xz = X - Z;
    PuiseuxSeries s = (xy * xy).scaled(Scalar(qp.a)) + (xz * xz).scaled(Scalar(qp.b)) +
                      (xy * xz).scaled(Scalar(qp.c));
    Report rep;
    // s z^2 (1-z)^2 = y^4 (a (1-z)^2 + b z^2 - c z (1-z)) ties s to the potential.
    PuiseuxSeries zs = PuiseuxSeries::x(prec);
    PuiseuxSeries omz = PuiseuxSeries::one(prec) - zs;
    rep.add("s = y^4 Qpot(z)",
            s * zs * zs * omz * omz ==
                y2 * y2 *
                    ((omz * omz).scaled(Scalar(qp.a)) + (zs * zs).scaled(Scalar(qp.b)) -
                     (zs * omz).scaled(Scalar(qp.c))));
    const char* names[] = {"X", "Y", "Z"};
    const PuiseuxSeries* orbit[] = {&X, &Y, &Z};
    for (int i = 0; i < 3; ++i) {
        PuiseuxSeries res = y2 * orbit[i]->derive() - (*orbit[i] * *orbit[i] + s);
        rep.add(std::string("D ") + names[i] + " = " + names[i] + "^2 + s", res.is_zero(),
                "through order " + prec_str(res.precision()));
    }
    long n = sig.n, m = sig.m, k = sig.k, r = sig.r, N = sig.N();
    PuiseuxSeries zy = Z - Y;
    PuiseuxSeries Pser = (X.scaled(Scalar(Rational(n * (m - r)))) +
                          Y.scaled(Scalar(Rational(m * k + n * r))) +
                          Z.scaled(Scalar(Rational(m * (n - k)))))
                             .scaled(Scalar(make_rational(1, 2 * n * m)));
    PuiseuxSeries Qser = (xy.pow_int(k) * zy.pow_int(n - k)).pow_rat(1, N);
    PuiseuxSeries Rser = (xy.pow_int(m - r) * zy.pow_int(r)).pow_rat(1, N);
    SeriesSolution sol = solve_z(sig, order);
    rep.add("P recovered", Pser == sol.P);
    rep.add("Q recovered", Qser == sol.Q);
    rep.add("R recovered", Rser == sol.R);
    return rep;
}

}  // namespace rrc
