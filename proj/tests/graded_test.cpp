#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rrc/errors.hpp>
#include <rrc/graded.hpp>

using namespace rrc;

namespace {

SpecPtr classical_spec() {
    return make_spec({"P", "Q", "R"}, {make_rational(2), make_rational(4), make_rational(6)});
}

// Normalized Eisenstein system: the images of q d/dq on P = E2/12, Q = E4,
// R = E6.
RRCSystem classical_system() {
    SpecPtr spec = classical_spec();
    return {spec,
            0,
            {GradedPoly::parse(spec, "P^2 - 1/144*Q"),
             GradedPoly::parse(spec, "4*P*Q - 1/3*R"),
             GradedPoly::parse(spec, "6*P*R - 1/2*Q^2")}};
}

}  // namespace

TEST_CASE("polynomial construction and printing") {
    SpecPtr spec = classical_spec();

    GradedPoly p = GradedPoly::parse(spec, "P^2 - 1/144*Q");
    GradedPoly built = GradedPoly::generator(spec, 0).pow(2) -
                       GradedPoly::generator(spec, 1).scaled(Scalar(make_rational(1, 144)));
    CHECK(p == built);

    CHECK(GradedPoly::parse(spec, p.str()) == p);
    CHECK(GradedPoly::parse(spec, "0").is_zero());
    CHECK(GradedPoly::zero(spec).str() == "0");
    CHECK(GradedPoly::constant(spec, Scalar(-1)).str() == "-1");

    GradedPoly q = GradedPoly::parse(spec, "Q^3 - R^2");
    CHECK(GradedPoly::parse(spec, q.str()) == q);
    CHECK(q.str() == GradedPoly::parse(spec, q.str()).str());

    GradedPoly quad = GradedPoly::parse(spec, "(1+sqrt(-3))*Q + 1/2*sqrt(5)*R - sqrt(5)*P");
    CHECK(GradedPoly::parse(spec, quad.str()) == quad);

    CHECK_THROWS_AS(GradedPoly::parse(spec, "P + X"), ParseError);
    CHECK_THROWS_AS(GradedPoly::parse(spec, "P ^ 1/2"), ParseError);
    CHECK_THROWS_AS(GradedPoly::parse(spec, "P Q"), ParseError);
    CHECK_THROWS_AS(GradedPoly::parse(spec, "2*(P"), ParseError);
}

TEST_CASE("grading and derivatives") {
    SpecPtr spec = classical_spec();
    GradedPoly p = GradedPoly::parse(spec, "P^2 - 1/144*Q");
    CHECK(p.is_homogeneous());
    CHECK(p.weight() == 4);
    CHECK(p.homogeneous_of(make_rational(4)));

    GradedPoly disc = GradedPoly::parse(spec, "Q^3 - R^2");
    CHECK(disc.weight() == 12);

    GradedPoly mixed = GradedPoly::parse(spec, "Q + R");
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_THROWS_AS(mixed.weight(), ShapeError);
    CHECK(GradedPoly::zero(spec).homogeneous_of(make_rational(7)));

    CHECK(disc.partial(1) == GradedPoly::parse(spec, "3*Q^2"));
    CHECK(disc.partial(2) == GradedPoly::parse(spec, "-2*R"));
    CHECK(disc.partial(0).is_zero());
    CHECK(disc.depends_on(1));
    CHECK_FALSE(disc.depends_on(0));
}

TEST_CASE("evaluation on series and scalars") {
    SpecPtr spec = make_spec({"u", "v"}, {make_rational(1), make_rational(2)});
    GradedPoly p = GradedPoly::parse(spec, "u^2*v - 3*v");

    PuiseuxSeries x = PuiseuxSeries::x();
    PuiseuxSeries one_plus = PuiseuxSeries::one() + x;
    PuiseuxSeries value = p.eval({x, one_plus});
    // x^2 (1+x) - 3(1+x) = -3 - 3x + x^2 + x^3.
    CHECK(value.coeff(0) == Scalar(-3));
    CHECK(value.coeff(1) == Scalar(-3));
    CHECK(value.coeff(2) == Scalar(1));
    CHECK(value.coeff(3) == Scalar(1));
    CHECK(value.coeff(4) == Scalar(0));

    CHECK(p.eval_scalar({Scalar(2), Scalar(5)}) == Scalar(5));
    CHECK_THROWS_AS(p.eval_scalar({Scalar(1)}), ShapeError);
}

TEST_CASE("derivations satisfy Leibniz and Jacobi") {
    SpecPtr spec = classical_spec();
    auto poly = [&](const char* s) { return GradedPoly::parse(spec, s); };

    Derivation d(spec, {poly("P^2 - 1/144*Q"), poly("4*P*Q - 1/3*R"), poly("6*P*R - 1/2*Q^2")},
                 make_rational(2));
    Derivation e(spec, {poly("Q"), poly("P*Q + R"), poly("Q^2")}, make_rational(4));
    Derivation f(spec, {poly("1"), poly("P^2"), poly("P*Q - 7*R")}, make_rational(0));

    GradedPoly a = poly("P*Q - 2*R");
    GradedPoly b = poly("Q^3 - R^2 + P^6");
    CHECK(d.apply(a * b) == d.apply(a) * b + a * d.apply(b));
    CHECK(e.apply(a * b) == e.apply(a) * b + a * e.apply(b));

    // Bracket of derivations against its defining action.
    Derivation de = lie_bracket(d, e);
    CHECK(de.apply(a) == d.apply(e.apply(a)) - e.apply(d.apply(a)));
    CHECK(de.shift() == make_rational(6));

    auto zero_derivation = [](const Derivation& g) {
        for (const auto& img : g.images())
            if (!img.is_zero()) return false;
        return true;
    };
    Derivation jac1 = lie_bracket(lie_bracket(d, e), f);
    Derivation jac2 = lie_bracket(lie_bracket(e, f), d);
    Derivation jac3 = lie_bracket(lie_bracket(f, d), e);
    Derivation sum(spec,
                   {jac1.images()[0] + jac2.images()[0] + jac3.images()[0],
                    jac1.images()[1] + jac2.images()[1] + jac3.images()[1],
                    jac1.images()[2] + jac2.images()[2] + jac3.images()[2]},
                   jac1.shift());
    CHECK(zero_derivation(sum));
}

TEST_CASE("differential Serre shape and sl2 structure") {
    RRCSystem sys = classical_system();
    CHECK(rrc_shape_check(sys).ok());
    CHECK(sl2_check(sys).ok());

    // Wrong multiplier coefficient: 5PQ instead of 4PQ breaks [D,delta] = W.
    RRCSystem bad1 = sys;
    bad1.images[1] = GradedPoly::parse(sys.spec, "5*P*Q - 1/3*R");
    Report r1 = sl2_check(bad1);
    CHECK_FALSE(r1.ok());
    CHECK_FALSE(r1.checks[0].ok);

    // Inhomogeneous remainder breaks [W,D] = 2D but not [D,delta] = W.
    RRCSystem bad2 = sys;
    bad2.images[1] = GradedPoly::parse(sys.spec, "4*P*Q - 1/3*R + Q");
    Report r2 = sl2_check(bad2);
    CHECK(r2.checks[0].ok);
    CHECK_FALSE(r2.checks[1].ok);
    CHECK_FALSE(rrc_shape_check(bad2).ok());

    // Remainder with a t1 factor fails the shape test.
    RRCSystem bad3 = sys;
    bad3.images[2] = GradedPoly::parse(sys.spec, "6*P*R - 1/2*Q^2 + P^3");
    CHECK_FALSE(rrc_shape_check(bad3).ok());
}

TEST_CASE("canonical pair round trip") {
    RRCSystem sys = classical_system();
    CanonicalPair pair = canonical_from_rrc(sys);

    CHECK(pair.spec->names == std::vector<std::string>{"Q", "R"});
    CHECK(pair.partial.images()[0] == GradedPoly::parse(pair.spec, "-1/3*R"));
    CHECK(pair.partial.images()[1] == GradedPoly::parse(pair.spec, "-1/2*Q^2"));
    CHECK(pair.phi == GradedPoly::parse(pair.spec, "-1/144*Q"));

    RRCSystem back = extend_algebra(pair, "P");
    CHECK(*back.spec == *sys.spec);
    CHECK(back.t1 == sys.t1);
    for (std::size_t i = 0; i < 3; ++i) CHECK(back.images[i] == sys.images[i]);

    // Starting from a fresh weight-2 datum instead of a system.
    SpecPtr base = make_spec({"A"}, {make_rational(6)});
    CanonicalPair fresh{base,
                        Derivation(base, {GradedPoly::zero(base)}, make_rational(2)),
                        GradedPoly::zero(base)};
    RRCSystem ext = extend_algebra(fresh, "t");
    CHECK(rrc_shape_check(ext).ok());
    CanonicalPair again = canonical_from_rrc(ext);
    CHECK(*again.spec == *base);
    CHECK(again.partial.images()[0].is_zero());
    CHECK(again.phi.is_zero());
}

TEST_CASE("system text round trip") {
    RRCSystem sys = classical_system();
    std::string text = system_to_text(sys);
    RRCSystem parsed = system_from_text(text);
    CHECK(*parsed.spec == *sys.spec);
    CHECK(parsed.t1 == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(parsed.images[i] == sys.images[i]);
    CHECK(system_to_text(parsed) == text);

    RRCSystem commented = system_from_text("# classical normalization\n" + text + "\n");
    CHECK(*commented.spec == *sys.spec);

    CHECK_THROWS_AS(system_from_text(""), ParseError);
    CHECK_THROWS_AS(system_from_text("P = P^2"), ParseError);
}

TEST_CASE("bigraded system text and Serre shape") {
    const char* text =
        "P1 : (2,0) = P1^2 - 9/400*Q2^3*B^4\n"
        "P2 : (0,2) = P2^2*B^2*Q2 - 1/400*Q2^2*B^2\n"
        "B : (1,-3) = P1*B - 3*P2*B^3*Q2\n"
        "Q2 : (0,4) = 4*P2*B^2*Q2^2 - 1/5*R2*B^2\n"
        "R2 : (0,10) = 10*P2*B^2*Q2*R2 - 1/2*Q2^4*B^2\n";
    RRCSystem sys = system_from_text(text);
    CHECK(sys.spec->bigraded());
    // Canonical reprint is stable even though it reorders terms.
    CHECK(system_to_text(system_from_text(system_to_text(sys))) == system_to_text(sys));

    GradedPoly phi2 = GradedPoly::parse(sys.spec, "B^2*Q2");
    CHECK(phi2.homogeneous_of(make_rational(2), 0));
    CHECK(phi2.homogeneous_of(make_rational(-2), 1));
    CHECK(bigraded_serre_check(sys, 0, 1, phi2).ok());

    // Wrong companion element spoils the linear part of every non-P line.
    GradedPoly wrong = GradedPoly::parse(sys.spec, "B^2*Q2 + P1*B^2*Q2");
    CHECK_FALSE(bigraded_serre_check(sys, 0, 1, wrong).ok());

    // Tampered remainder weight is caught.
    RRCSystem bad = sys;
    bad.images[3] = GradedPoly::parse(sys.spec, "4*P2*B^2*Q2^2 - 1/5*R2*B^2 + Q2");
    CHECK_FALSE(bigraded_serre_check(bad, 0, 1, phi2).ok());
}
